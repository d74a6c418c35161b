#include "biaslab/cycles.hpp"

#include <algorithm>
#include <stdexcept>

namespace biaslab {

VertexSet Cycle::vertex_set() const {
  VertexSet s = 0;
  for (Vertex v : vertices) s |= VertexSet{1} << (v - 1);
  return s;
}

static EdgeSet edges_of_sequence(int n, std::span<const Vertex> seq) {
  EdgeSet e = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    Vertex a = seq[i];
    Vertex b = seq[(i + 1) % seq.size()];
    e |= edge_bit(n, a, b);
  }
  return e;
}

Cycle canonical_cycle(int n, std::span<const Vertex> seq) {
  const std::size_t k = seq.size();
  if (k < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  VertexSet seen = 0;
  std::size_t min_pos = 0;
  for (std::size_t i = 0; i < k; ++i) {
    Vertex v = seq[i];
    if (v < 1 || v > n) throw std::out_of_range("vertex out of range [1, n]");
    VertexSet bit = VertexSet{1} << (v - 1);
    if (seen & bit) throw std::invalid_argument("repeated vertex in cycle");
    seen |= bit;
    if (v < seq[min_pos]) min_pos = i;
  }

  // Rotate the minimum vertex to the front, then pick the direction whose
  // second vertex is smaller; the two neighbours of the minimum are distinct,
  // so that single comparison decides lexicographic order.
  Cycle c;
  c.vertices.resize(k);
  Vertex fwd = seq[(min_pos + 1) % k];
  Vertex bwd = seq[(min_pos + k - 1) % k];
  if (fwd < bwd) {
    for (std::size_t i = 0; i < k; ++i) c.vertices[i] = seq[(min_pos + i) % k];
  } else {
    for (std::size_t i = 0; i < k; ++i)
      c.vertices[i] = seq[(min_pos + k - i) % k];
  }
  c.edges = edges_of_sequence(n, c.vertices);
  return c;
}

bool cycle_less(const Cycle& a, const Cycle& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  return a.vertices < b.vertices;
}

Integer cycle_count_by_length(int n, int k) {
  if (k < 3 || k > n) throw std::out_of_range("cycle length must be in [3, n]");
  return factorial(static_cast<unsigned>(n)) /
         (Integer(2) * k * factorial(static_cast<unsigned>(n - k)));
}

CycleCatalog CycleCatalog::enumerate(int n) {
  if (n > max_supported_n) throw std::out_of_range("n exceeds supported cap");
  CycleCatalog cat;
  cat.n_ = n;
  if (n >= 3) {
    // For each vertex subset S, fix min(S) first and keep the orientations
    // with second vertex < last vertex: each cycle on S appears exactly once
    // and already in canonical form.
    for (VertexSet mask = 0; mask < (VertexSet{1} << n); ++mask) {
      int k = std::popcount(mask);
      if (k < 3) continue;
      std::vector<Vertex> members;
      for (Vertex v = 1; v <= n; ++v)
        if (mask & (VertexSet{1} << (v - 1))) members.push_back(v);
      std::vector<Vertex> rest(members.begin() + 1, members.end());
      std::vector<Vertex> seq(k);
      seq[0] = members[0];
      do {
        if (rest.front() > rest.back()) continue;
        std::copy(rest.begin(), rest.end(), seq.begin() + 1);
        Cycle c;
        c.vertices = seq;
        c.edges = edges_of_sequence(n, seq);
        cat.cycles_.push_back(std::move(c));
      } while (std::next_permutation(rest.begin(), rest.end()));
    }
    std::sort(cat.cycles_.begin(), cat.cycles_.end(), cycle_less);
  }

  cat.length_first_.assign(static_cast<std::size_t>(std::max(n, 3)) + 2, 0);
  for (std::size_t id = 0; id < cat.cycles_.size(); ++id) {
    // length_first_[k] = first id of length >= k
    int len = cat.cycles_[id].length();
    for (int k = len + 1; k < static_cast<int>(cat.length_first_.size()); ++k)
      cat.length_first_[k] = static_cast<CycleId>(id + 1);
  }
  return cat;
}

std::pair<CycleId, CycleId> CycleCatalog::length_range(int k) const {
  if (k < 3 || k >= static_cast<int>(length_first_.size()))
    return {static_cast<CycleId>(size()), static_cast<CycleId>(size())};
  return {length_first_[k], length_first_[k + 1]};
}

std::optional<CycleId> CycleCatalog::find(const Cycle& c) const {
  auto it = std::lower_bound(cycles_.begin(), cycles_.end(), c, cycle_less);
  if (it == cycles_.end() || !(*it == c)) return std::nullopt;
  return static_cast<CycleId>(it - cycles_.begin());
}

CycleId CycleCatalog::require(const Cycle& c) const {
  auto id = find(c);
  if (!id) throw std::logic_error("cycle not present in catalog");
  return *id;
}

std::vector<CycleId> CycleCatalog::hamilton_ids() const {
  auto [first, last] = hamilton_range();
  std::vector<CycleId> ids;
  ids.reserve(last - first);
  for (CycleId id = first; id < last; ++id) ids.push_back(id);
  return ids;
}

std::pair<CycleId, CycleId> CycleCatalog::hamilton_range() const {
  if (n_ < 3) return {0, 0};
  return length_range(n_);
}

}  // namespace biaslab
