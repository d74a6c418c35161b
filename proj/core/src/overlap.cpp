#include "biaslab/overlap.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "biaslab/interval.hpp"
#include "biaslab/parallel.hpp"

namespace biaslab {

namespace {

// Degree of v over the edge set `es` (as adjacency within a shared subgraph).
int degree_in(int n, EdgeSet es, Vertex v) {
  int d = 0;
  EdgeSet rest = es;
  while (rest) {
    EdgeIndex e = std::countr_zero(rest);
    rest &= rest - 1;
    auto [a, b] = edge_endpoints(n, e);
    if (a == v || b == v) ++d;
  }
  return d;
}

VertexSet vertices_of_edges(int n, EdgeSet es) {
  VertexSet s = 0;
  EdgeSet rest = es;
  while (rest) {
    EdgeIndex e = std::countr_zero(rest);
    rest &= rest - 1;
    auto [a, b] = edge_endpoints(n, e);
    s |= (VertexSet{1} << (a - 1)) | (VertexSet{1} << (b - 1));
  }
  return s;
}

// Walks the edge set from `start`, consuming edges; returns the vertex
// sequence visited. Used to trace shared paths and symmetric differences.
std::vector<Vertex> walk_from(int n, EdgeSet& es, Vertex start) {
  std::vector<Vertex> seq{start};
  Vertex cur = start;
  bool advanced = true;
  while (advanced) {
    advanced = false;
    EdgeSet rest = es;
    while (rest) {
      EdgeIndex e = std::countr_zero(rest);
      rest &= rest - 1;
      auto [a, b] = edge_endpoints(n, e);
      if (a == cur || b == cur) {
        cur = (a == cur) ? b : a;
        es &= ~(EdgeSet{1} << e);
        seq.push_back(cur);
        advanced = true;
        break;
      }
    }
  }
  return seq;
}

}  // namespace

bool cycles_adjacent(int n, const Cycle& a, const Cycle& b) {
  if (a == b) throw std::invalid_argument("cycles_adjacent needs distinct cycles");
  EdgeSet shared = a.edges & b.edges;
  if (shared == 0) return false;

  // The shared edges must form one path: no vertex of degree > 2, exactly two
  // endpoints, connected. |shared| < min length, so a shared cycle is
  // impossible, but the checks below would reject one anyway.
  VertexSet shared_path_vertices = vertices_of_edges(n, shared);
  Vertex endpoint = 0;
  int endpoints = 0;
  for (Vertex v = 1; v <= n; ++v) {
    if (!(shared_path_vertices & (VertexSet{1} << (v - 1)))) continue;
    int d = degree_in(n, shared, v);
    if (d > 2) return false;
    if (d == 1) {
      ++endpoints;
      endpoint = v;
    }
  }
  if (endpoints != 2) return false;
  EdgeSet scratch = shared;
  walk_from(n, scratch, endpoint);
  if (scratch != 0) return false;  // disconnected shared edges

  // No shared vertex may fall outside the shared path.
  return (a.vertex_set() & b.vertex_set()) == shared_path_vertices;
}

Cycle third_cycle(int n, const Cycle& a, const Cycle& b) {
  if (!cycles_adjacent(n, a, b))
    throw std::invalid_argument("third_cycle needs theta-adjacent cycles");
  EdgeSet diff = a.edges ^ b.edges;
  auto [u, v] = edge_endpoints(n, std::countr_zero(diff));
  (void)v;
  EdgeSet scratch = diff;
  std::vector<Vertex> seq = walk_from(n, scratch, u);
  // closed walk: first == last
  seq.pop_back();
  return canonical_cycle(n, seq);
}

bool OverlapGraph::has_edge(CycleId a, CycleId b) const {
  auto row = neighbors_of(a);
  return std::binary_search(row.begin(), row.end(), b);
}

namespace {

std::vector<CycleId> extension_neighbors(const CycleCatalog& cat,
                                         const Cycle& c) {
  const int n = cat.n();
  const int k = c.length();
  std::vector<CycleId> out;
  std::vector<Vertex> outside;
  VertexSet on_cycle = c.vertex_set();
  for (Vertex v = 1; v <= n; ++v)
    if (!(on_cycle & (VertexSet{1} << (v - 1)))) outside.push_back(v);

  std::vector<Vertex> candidate;
  // Subpath of c: `len` edges starting at position s. The neighbour is the
  // subpath plus an arc through outside vertices joining its endpoints
  // (direct edge allowed only when it is not an edge of c).
  for (int s = 0; s < k; ++s) {
    for (int len = 1; len <= k - 1; ++len) {
      std::vector<Vertex> path(len + 1);
      for (int i = 0; i <= len; ++i) path[i] = c.vertices[(s + i) % k];

      // arcs: ordered tuples of distinct outside vertices, read from the
      // subpath's last vertex back to its first
      std::vector<int> pick;
      auto emit = [&](std::span<const Vertex> arc) {
        if (arc.empty()) {
          // direct closing edge; skip if it lies on c (that rebuilds c)
          if (len == k - 1) return;
          if (len == 1) return;  // would duplicate the single shared edge
        }
        candidate.assign(path.begin(), path.end());
        candidate.insert(candidate.end(), arc.begin(), arc.end());
        Cycle cand = canonical_cycle(n, candidate);
        out.push_back(cat.require(cand));
      };

      // iterative enumeration of ordered tuples over `outside`
      std::vector<Vertex> arc;
      std::vector<std::size_t> stack{0};
      std::vector<bool> used(outside.size(), false);
      emit(arc);
      while (!stack.empty()) {
        std::size_t& i = stack.back();
        while (i < outside.size() && used[i]) ++i;
        if (i >= outside.size()) {
          stack.pop_back();
          if (!arc.empty()) {
            used[std::find(outside.begin(), outside.end(), arc.back()) -
                 outside.begin()] = false;
            arc.pop_back();
            if (!stack.empty()) ++stack.back();
          }
          continue;
        }
        arc.push_back(outside[i]);
        used[i] = true;
        emit(arc);
        stack.push_back(0);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

OverlapGraph build_overlap(const CycleCatalog& catalog, BuildMethod method,
                           int size_cap, int threads) {
  if (catalog.n() > size_cap)
    throw std::length_error("overlap graph construction refused: n exceeds cap");
  const std::size_t V = catalog.size();
  OverlapGraph g;
  g.catalog = &catalog;
  g.offsets.assign(V + 1, 0);

  std::vector<std::vector<CycleId>> rows(V);
  const int n = catalog.n();

  if (method == BuildMethod::pairwise) {
    parallel_for(0, V, threads, [&](std::size_t i) {
      const Cycle& ci = catalog[static_cast<CycleId>(i)];
      for (std::size_t j = 0; j < V; ++j) {
        if (i == j) continue;
        const Cycle& cj = catalog[static_cast<CycleId>(j)];
        if ((ci.edges & cj.edges) == 0) continue;
        if (cycles_adjacent(n, ci, cj))
          rows[i].push_back(static_cast<CycleId>(j));
      }
    });
  } else {
    parallel_for(0, V, threads, [&](std::size_t i) {
      rows[i] = extension_neighbors(catalog, catalog[static_cast<CycleId>(i)]);
    });
  }

  std::uint64_t total = 0;
  for (std::size_t i = 0; i < V; ++i) {
    total += rows[i].size();
    g.offsets[i + 1] = total;
  }
  g.neighbors.reserve(total);
  for (auto& r : rows)
    g.neighbors.insert(g.neighbors.end(), r.begin(), r.end());
  g.edge_count = total / 2;
  return g;
}

void for_each_theta_triple(
    const OverlapGraph& g,
    const std::function<void(CycleId, CycleId, CycleId)>& fn) {
  const auto& cat = *g.catalog;
  const int n = cat.n();
  for (CycleId i = 0; i < g.vertex_count(); ++i) {
    for (CycleId j : g.neighbors_of(i)) {
      if (j <= i) continue;
      CycleId t = cat.require(third_cycle(n, cat[i], cat[j]));
      // each theta emitted from its two smallest cycles only
      if (t > j) fn(i, j, t);
    }
  }
}

std::vector<std::array<CycleId, 3>> theta_triples(const OverlapGraph& g) {
  std::vector<std::array<CycleId, 3>> out;
  for_each_theta_triple(g, [&](CycleId a, CycleId b, CycleId c) {
    out.push_back({a, b, c});
  });
  return out;
}

std::vector<CycleId> third_ids(const OverlapGraph& g) {
  const auto& cat = *g.catalog;
  const int n = cat.n();
  std::vector<CycleId> t(g.neighbors.size());
  for (CycleId i = 0; i < g.vertex_count(); ++i) {
    for (std::uint64_t p = g.offsets[i]; p < g.offsets[i + 1]; ++p) {
      CycleId j = g.neighbors[p];
      if (j < i) continue;  // mirror below
      t[p] = cat.require(third_cycle(n, cat[i], cat[j]));
    }
  }
  // copy values onto the mirrored slots
  for (CycleId i = 0; i < g.vertex_count(); ++i) {
    for (std::uint64_t p = g.offsets[i]; p < g.offsets[i + 1]; ++p) {
      CycleId j = g.neighbors[p];
      if (j >= i) continue;
      auto row = g.neighbors_of(j);
      auto it = std::lower_bound(row.begin(), row.end(), i);
      t[p] = t[g.offsets[j] + (it - row.begin())];
    }
  }
  return t;
}

OverlapStats compute_sn_and_bounds(int n) {
  if (n < 3) throw std::out_of_range("compute_sn_and_bounds needs n >= 3");
  OverlapStats s;
  s.n = n;
  Rational sum = 0;
  for (int k = 0; k <= n - 3; ++k)
    sum += Rational(1, factorial(static_cast<unsigned>(k)) * (n - k));
  s.cycle_sum = sum;
  Rational vc = Rational(factorial(static_cast<unsigned>(n)), 2) * sum;
  if (denominator(vc) != 1)
    throw std::logic_error("vertex count identity broke: non-integer result");
  s.vertex_count = numerator(vc);

  if (n >= 5) {
    s.bounds_checked = true;
    Interval e = Interval::euler_e();
    // e/n < cycle_sum  <=>  e < n * cycle_sum
    s.sum_lower_ok = e.definitely_lt(Rational(n) * sum);
    // cycle_sum < e/n + 5/n^2  <=>  n * cycle_sum - 5/n < e
    s.sum_upper_ok = e.definitely_gt(Rational(n) * sum - Rational(5, n));
    // (e/2)(n-1)! < V  <=>  e < 2V/(n-1)!
    Rational fact_nm1(factorial(static_cast<unsigned>(n - 1)));
    s.count_lower_ok = e.definitely_lt(Rational(2) * s.vertex_count / fact_nm1);
    s.count_upper_ok = s.vertex_count < 2 * factorial(static_cast<unsigned>(n - 1));
  }
  return s;
}

OverlapStats stats_of(const OverlapGraph& g) {
  OverlapStats s = compute_sn_and_bounds(std::max(g.catalog->n(), 3));
  if (s.vertex_count != Integer(g.vertex_count()))
    throw std::logic_error("overlap graph vertex count disagrees with the series");
  s.edge_count = g.edge_count;
  return s;
}

}  // namespace biaslab
