#pragma once

#include <array>
#include <optional>
#include <vector>

#include "biaslab/bias.hpp"

namespace biaslab {

// Machinery for the map sending a biased clique to a scarce one by removing
// the smallest and largest cycle of every fully balanced theta triple, and
// for the inverse reconstruction it admits.
struct CompressionScheme {
  const CycleCatalog* catalog = nullptr;
  int threshold = 0;  // floor(2(n+1)/3): max length of a "short" cycle
  IdSet short_set;    // ids of cycles of length <= threshold
  std::size_t r = 0;  // |short_set|
  std::vector<std::array<CycleId, 3>> triples;  // all theta triples, ids ascending
  // triples regrouped by largest member, for the forcing scan
  std::vector<std::uint32_t> by_largest_offsets;       // size V+1
  std::vector<std::array<CycleId, 3>> by_largest;      // same triples, regrouped
};

// Builds short set and triple table; checks that every triple's smallest
// cycle is short.
CompressionScheme build_scheme(const CycleCatalog& catalog,
                               const OverlapGraph& g);

// Exact arithmetic for the short-cycle count and its closed-form bound
// (n-1)! n^2 / (6 floor(n/3)!): computable without a catalog.
Integer short_cycle_count(int n);
Rational short_cycle_bound(int n);

// Removes the smallest and largest cycle of every triple fully inside b.
// Requires a biased clique; the scarce postcondition is asserted.
BiasSet compress(const BiasSet& b, const CompressionScheme& scheme,
                 const OverlapGraph& g);

// Rebuilds the unique preimage with scarce part `scarce` and short part `x`:
// short cycles come from x; a long cycle joins when it is in `scarce` or
// some triple ending at it has both earlier cycles already in. Returns
// nullopt unless the result validates (compresses back to `scarce`, meets x
// on the short set, and is a biased clique).
std::optional<BiasSet> reconstruct(const BiasSet& scarce, const IdSet& x,
                                   const CompressionScheme& scheme,
                                   const OverlapGraph& g);

}  // namespace biaslab
