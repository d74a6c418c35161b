#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "biaslab/bigint.hpp"
#include "biaslab/overlap.hpp"

namespace biaslab {

using IdSet = boost::dynamic_bitset<std::uint64_t>;

template <typename Fn>
void for_each_id(const IdSet& s, Fn&& fn) {
  for (auto i = s.find_first(); i != IdSet::npos; i = s.find_next(i))
    fn(static_cast<CycleId>(i));
}

std::vector<CycleId> ids_of(const IdSet& s);
IdSet set_of(std::size_t universe, const std::vector<CycleId>& ids);

// A candidate set of balanced cycles, as a dense id set over a catalog.
struct BiasSet {
  const CycleCatalog* catalog = nullptr;
  IdSet members;

  static BiasSet empty(const CycleCatalog& cat);
  static BiasSet of_ids(const CycleCatalog& cat, const std::vector<CycleId>& ids);
  std::size_t size() const { return members.count(); }
};

// True iff no theta triple carries exactly two members: for every adjacent
// pair inside the set, the third cycle of their theta is a member too.
bool is_biased_clique(const BiasSet& b, const OverlapGraph& g);

// Theta property over the cycles of G. Throws if some member cycle uses a
// non-edge of G; otherwise equivalent to the clique check, since a theta of
// the complete graph containing two cycles of G lies inside G.
bool is_biased_graph(const SimpleGraph& G, const BiasSet& b,
                     const OverlapGraph& g);

std::uint64_t spanned_edges(const BiasSet& b, const OverlapGraph& g);
bool is_scarce(const BiasSet& b, const OverlapGraph& g);

enum class MisMode { size_only, one_witness, all_optima };

struct MisResult {
  std::size_t size = 0;
  std::vector<std::vector<CycleId>> optima;  // empty in size_only mode
  std::uint64_t optimum_count = 0;           // filled in all_optima mode
  bool truncated = false;                    // optima list hit the cap
};

// Exact maximum stable set by branch and bound with greedy colouring bounds.
MisResult max_stable_set(const OverlapGraph& g, MisMode mode,
                         std::size_t cap = 10000);

// Exact count of bias sets satisfying the theta property, by backtracking
// over ids in catalog order with forced-membership propagation. The optional
// callback sees every such set. Guarded to n <= n_cap (default 5).
Integer count_biased_cliques(
    const OverlapGraph& g, int n_cap = 5,
    const std::function<void(const IdSet&)>& callback = nullptr);

// Sum over all 2^C(n,2) graphs G on [n] of the number of theta-valid bias
// sets over the cycles of G. Guarded to n <= 4.
Integer count_biased_graphs(int n);

enum class BiasModel { hamilton_coin, greedy_stable };

// hamilton_coin: each Hamilton cycle joins independently with probability p.
// greedy_stable: maximal stable set grown along a seeded random id order.
// Both outputs are scarce, hence biased cliques. Deterministic in
// (seed, stream) on every platform.
BiasSet sample_bias(const CycleCatalog& cat, const OverlapGraph* g,
                    BiasModel model, double p, std::uint64_t seed,
                    std::uint64_t stream = 0);

// Supersaturation measurement: threshold (1+alpha) * (n-1)!/2 against |B| and
// the spanned-edge count. The lemma's inequality is asymptotic (n >= 12), so
// desk-scale runs only report; `asserted_bound` is set when n >= 12.
struct SupersatReport {
  int n = 0;
  std::size_t set_size = 0;
  Rational alpha;          // |B| / ((n-1)!/2) - 1
  bool alpha_in_regime = false;  // alpha > (10/n)^2
  std::uint64_t spanned = 0;
  std::optional<Rational> asserted_bound;  // (alpha/4) n! when n >= 12
};

SupersatReport supersat_report(const BiasSet& b, const OverlapGraph& g);

}  // namespace biaslab
