#include "biaslab/bias.hpp"

#include <algorithm>
#include <stdexcept>

#include "biaslab/rng.hpp"

namespace biaslab {

std::vector<CycleId> ids_of(const IdSet& s) {
  std::vector<CycleId> out;
  out.reserve(s.count());
  for_each_id(s, [&](CycleId i) { out.push_back(i); });
  return out;
}

IdSet set_of(std::size_t universe, const std::vector<CycleId>& ids) {
  IdSet s(universe);
  for (CycleId i : ids) {
    if (i >= universe) throw std::out_of_range("cycle id out of range");
    s.set(i);
  }
  return s;
}

BiasSet BiasSet::empty(const CycleCatalog& cat) {
  return BiasSet{&cat, IdSet(cat.size())};
}

BiasSet BiasSet::of_ids(const CycleCatalog& cat,
                        const std::vector<CycleId>& ids) {
  return BiasSet{&cat, set_of(cat.size(), ids)};
}

bool is_biased_clique(const BiasSet& b, const OverlapGraph& g) {
  const auto& cat = *g.catalog;
  const int n = cat.n();
  bool ok = true;
  for (auto i = b.members.find_first(); ok && i != IdSet::npos;
       i = b.members.find_next(i)) {
    for (CycleId j : g.neighbors_of(static_cast<CycleId>(i))) {
      if (j <= i || !b.members.test(j)) continue;
      CycleId t = cat.require(
          third_cycle(n, cat[static_cast<CycleId>(i)], cat[j]));
      if (!b.members.test(t)) {
        ok = false;
        break;
      }
    }
  }
  return ok;
}

bool is_biased_graph(const SimpleGraph& G, const BiasSet& b,
                     const OverlapGraph& g) {
  if (G.n != g.catalog->n())
    throw std::invalid_argument("graph and catalog order mismatch");
  for_each_id(b.members, [&](CycleId i) {
    if (((*g.catalog)[i].edges & ~G.edges) != 0)
      throw std::invalid_argument("balanced cycle uses a non-edge of G");
  });
  return is_biased_clique(b, g);
}

std::uint64_t spanned_edges(const BiasSet& b, const OverlapGraph& g) {
  std::uint64_t count = 0;
  for_each_id(b.members, [&](CycleId i) {
    for (CycleId j : g.neighbors_of(i))
      if (j > i && b.members.test(j)) ++count;
  });
  return count;
}

bool is_scarce(const BiasSet& b, const OverlapGraph& g) {
  return spanned_edges(b, g) == 0;
}

namespace {

// Maximum stable set of the overlap graph == maximum clique of its
// complement; branch and bound with greedy colouring bounds on the
// complement (each colour class admits at most one clique vertex).
class StableSetSolver {
 public:
  explicit StableSetSolver(const OverlapGraph& g) : V_(g.vertex_count()) {
    comp_.assign(V_, IdSet(V_));
    for (CycleId i = 0; i < V_; ++i) {
      comp_[i].set();
      comp_[i].reset(i);
      for (CycleId j : g.neighbors_of(i)) comp_[i].reset(j);
    }
  }

  std::size_t solve_size(std::vector<CycleId>* witness) {
    best_ = 0;
    witness_ = witness;
    enumerate_ = false;
    IdSet P(V_);
    P.set();
    current_.clear();
    if (V_ > 0) expand(P);
    return best_;
  }

  void enumerate_optima(std::size_t target, std::size_t cap,
                        std::vector<std::vector<CycleId>>& out,
                        std::uint64_t& total) {
    best_ = target;
    enumerate_ = true;
    cap_ = cap;
    out_ = &out;
    total_ = 0;
    if (target == 0) {
      out.push_back({});
      total = 1;
      return;
    }
    IdSet P(V_);
    P.set();
    current_.clear();
    expand(P);
    total = total_;
  }

 private:
  void expand(const IdSet& P) {
    if (enumerate_ && current_.size() == best_) {
      ++total_;
      if (out_->size() < cap_) out_->push_back(current_);
      return;
    }
    if (P.none()) {
      if (!enumerate_ && current_.size() > best_) {
        best_ = current_.size();
        if (witness_) *witness_ = current_;
      }
      return;
    }

    // greedy colouring of the complement-induced subgraph
    std::vector<std::pair<int, CycleId>> order;
    order.reserve(P.count());
    IdSet remaining = P;
    int colour = 0;
    while (remaining.any()) {
      ++colour;
      IdSet cls = remaining;
      while (cls.any()) {
        auto v = cls.find_first();
        order.emplace_back(colour, static_cast<CycleId>(v));
        remaining.reset(v);
        cls.reset(v);
        cls -= comp_[v];
      }
    }

    IdSet candidates = P;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      auto [c, v] = *it;
      std::size_t reach = current_.size() + static_cast<std::size_t>(c);
      if (enumerate_ ? (reach < best_) : (reach <= best_)) return;
      current_.push_back(v);
      IdSet next = candidates;
      next &= comp_[v];
      expand(next);
      current_.pop_back();
      candidates.reset(v);
    }
  }

  std::size_t V_;
  std::vector<IdSet> comp_;
  std::size_t best_ = 0;
  bool enumerate_ = false;
  std::size_t cap_ = 0;
  std::vector<CycleId> current_;
  std::vector<CycleId>* witness_ = nullptr;
  std::vector<std::vector<CycleId>>* out_ = nullptr;
  std::uint64_t total_ = 0;
};

}  // namespace

MisResult max_stable_set(const OverlapGraph& g, MisMode mode, std::size_t cap) {
  MisResult r;
  StableSetSolver solver(g);
  std::vector<CycleId> witness;
  r.size = solver.solve_size(mode == MisMode::size_only ? nullptr : &witness);
  if (mode == MisMode::one_witness && r.size > 0) {
    std::sort(witness.begin(), witness.end());
    r.optima.push_back(std::move(witness));
  } else if (mode == MisMode::all_optima) {
    solver.enumerate_optima(r.size, cap, r.optima, r.optimum_count);
    for (auto& o : r.optima) std::sort(o.begin(), o.end());
    std::sort(r.optima.begin(), r.optima.end());
    r.truncated = r.optimum_count > cap;
  }
  return r;
}

namespace {

class CliqueCounter {
 public:
  CliqueCounter(const OverlapGraph& g,
                const std::function<void(const IdSet&)>& cb)
      : g_(g), thirds_(third_ids(g)), cb_(cb) {
    V_ = g.vertex_count();
    members_.resize(V_);
    forced_.assign(V_, 0);
  }

  Integer run() {
    count_ = 0;
    if (V_ == 0) {
      count_ = 1;  // the empty bias set
      if (cb_) cb_(members_);
      return count_;
    }
    rec(0);
    return count_;
  }

 private:
  void rec(CycleId i) {
    if (i == static_cast<CycleId>(V_)) {
      ++count_;
      if (cb_) cb_(members_);
      return;
    }
    if (!forced_[i]) rec(i + 1);

    // membership of i: every pair (j, i) of members forces its third cycle
    bool consistent = true;
    std::vector<CycleId> newly_forced;
    for (std::uint64_t p = g_.offsets[i]; p < g_.offsets[i + 1]; ++p) {
      CycleId j = g_.neighbors[p];
      if (j >= i || !members_.test(j)) continue;
      CycleId t = thirds_[p];
      if (t < i && !members_.test(t)) {
        consistent = false;
        break;
      }
      if (t > i && !forced_[t]) {
        forced_[t] = 1;
        newly_forced.push_back(t);
      }
    }
    if (consistent) {
      members_.set(i);
      rec(i + 1);
      members_.reset(i);
    }
    for (CycleId t : newly_forced) forced_[t] = 0;
  }

  const OverlapGraph& g_;
  std::vector<CycleId> thirds_;
  const std::function<void(const IdSet&)>& cb_;
  std::size_t V_ = 0;
  IdSet members_;
  std::vector<char> forced_;
  Integer count_ = 0;
};

}  // namespace

Integer count_biased_cliques(const OverlapGraph& g, int n_cap,
                             const std::function<void(const IdSet&)>& callback) {
  if (g.catalog->n() > n_cap)
    throw std::length_error("biased clique counting refused: n exceeds cap");
  CliqueCounter counter(g, callback);
  return counter.run();
}

Integer count_biased_graphs(int n) {
  if (n > 4) throw std::length_error("biased graph counting refused: n > 4");
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  // below 3 vertices there are no cycles: every graph carries only the
  // empty bias set
  if (n < 3) return Integer(1) << pair_count(n);

  CycleCatalog cat = CycleCatalog::enumerate(n);
  OverlapGraph omega = build_overlap(cat);
  auto triples = theta_triples(omega);

  const int m = pair_count(n);
  Integer total = 0;
  for (EdgeSet graph_mask = 0; graph_mask < (EdgeSet{1} << m); ++graph_mask) {
    std::vector<CycleId> in_graph;
    for (CycleId id = 0; id < cat.size(); ++id)
      if ((cat[id].edges & ~graph_mask) == 0) in_graph.push_back(id);

    const std::size_t c = in_graph.size();
    for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << c); ++sub) {
      IdSet b(cat.size());
      for (std::size_t t = 0; t < c; ++t)
        if ((sub >> t) & 1) b.set(in_graph[t]);
      bool ok = true;
      for (const auto& tri : triples) {
        int hits = b.test(tri[0]) + b.test(tri[1]) + b.test(tri[2]);
        if (hits == 2) {
          ok = false;
          break;
        }
      }
      if (ok) ++total;
    }
  }
  return total;
}

BiasSet sample_bias(const CycleCatalog& cat, const OverlapGraph* g,
                    BiasModel model, double p, std::uint64_t seed,
                    std::uint64_t stream) {
  BiasSet b = BiasSet::empty(cat);
  Rng rng(seed, stream);
  if (model == BiasModel::hamilton_coin) {
    std::uint64_t threshold = bernoulli_threshold(p);
    auto [first, last] = cat.hamilton_range();
    for (CycleId id = first; id < last; ++id)
      if (rng.bernoulli(threshold)) b.members.set(id);
  } else {
    if (g == nullptr)
      throw std::invalid_argument("greedy_stable needs the overlap graph");
    std::vector<CycleId> order(cat.size());
    for (CycleId i = 0; i < cat.size(); ++i) order[i] = i;
    for (std::size_t i = order.size(); i > 1; --i)
      std::swap(order[i - 1],
                order[rng.uniform_below(static_cast<std::uint32_t>(i))]);
    for (CycleId v : order) {
      bool free = true;
      for (CycleId u : g->neighbors_of(v)) {
        if (b.members.test(u)) {
          free = false;
          break;
        }
      }
      if (free) b.members.set(v);
    }
  }
  return b;
}

SupersatReport supersat_report(const BiasSet& b, const OverlapGraph& g) {
  SupersatReport r;
  r.n = g.catalog->n();
  r.set_size = b.size();
  Rational half_fact(factorial(static_cast<unsigned>(std::max(r.n - 1, 0))), 2);
  r.alpha = Rational(r.set_size) / half_fact - 1;
  r.alpha_in_regime = r.alpha > Rational(100, Integer(r.n) * r.n);
  r.spanned = spanned_edges(b, g);
  if (r.n >= 12)
    r.asserted_bound =
        r.alpha / 4 * Rational(factorial(static_cast<unsigned>(r.n)));
  return r;
}

}  // namespace biaslab
