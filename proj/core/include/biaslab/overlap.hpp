#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "biaslab/bigint.hpp"
#include "biaslab/cycles.hpp"

namespace biaslab {

// True iff the two distinct cycles lie in a common theta-subgraph:
// their shared edges are nonempty and form a single path whose vertex set is
// exactly the shared vertex set. Throws if the cycles are equal.
bool cycles_adjacent(int n, const Cycle& a, const Cycle& b);

// The third cycle of the theta formed by two adjacent cycles; its edge set is
// the symmetric difference of the inputs'. Throws if not adjacent.
Cycle third_cycle(int n, const Cycle& a, const Cycle& b);

// Overlap graph on catalog ids, compressed-row adjacency, neighbours sorted.
struct OverlapGraph {
  const CycleCatalog* catalog = nullptr;
  std::vector<std::uint64_t> offsets;  // size V+1
  std::vector<CycleId> neighbors;      // size 2E
  std::uint64_t edge_count = 0;

  std::size_t vertex_count() const { return offsets.empty() ? 0 : offsets.size() - 1; }
  std::span<const CycleId> neighbors_of(CycleId id) const {
    return {neighbors.data() + offsets[id],
            neighbors.data() + offsets[id + 1]};
  }
  std::size_t degree(CycleId id) const {
    return offsets[id + 1] - offsets[id];
  }
  bool has_edge(CycleId a, CycleId b) const;
};

enum class BuildMethod { pairwise, extension };

// Both methods produce identical graphs; `pairwise` tests all id pairs,
// `extension` generates each neighbour of a cycle directly from a shared
// subpath plus a completion arc through outside vertices.
OverlapGraph build_overlap(const CycleCatalog& catalog,
                           BuildMethod method = BuildMethod::pairwise,
                           int size_cap = 9, int threads = 1);

// Calls fn once per theta triple (a, b, c), ids ascending.
void for_each_theta_triple(
    const OverlapGraph& g,
    const std::function<void(CycleId, CycleId, CycleId)>& fn);

std::vector<std::array<CycleId, 3>> theta_triples(const OverlapGraph& g);

// For each CSR slot (i -> j), the id of the third cycle of their theta.
std::vector<CycleId> third_ids(const OverlapGraph& g);

struct OverlapStats {
  int n = 0;
  Integer vertex_count;                     // (n!/2) * cycle_sum, exact
  std::optional<std::uint64_t> edge_count;  // known only from a built graph
  Rational cycle_sum;                       // sum_{k=0}^{n-3} 1/(k! (n-k))

  // Rigorous checks, evaluated for n >= 5 with outward-rounded e:
  //   e/n < cycle_sum < e/n + 5/n^2
  //   (e/2)(n-1)! < vertex_count < 2(n-1)!
  bool bounds_checked = false;
  bool sum_lower_ok = false;
  bool sum_upper_ok = false;
  bool count_lower_ok = false;
  bool count_upper_ok = false;
  bool bounds_ok() const {
    return sum_lower_ok && sum_upper_ok && count_lower_ok && count_upper_ok;
  }
};

// Pure arithmetic; works far beyond enumeration scale (n up to hundreds).
OverlapStats compute_sn_and_bounds(int n);

// Stats of a built graph; cross-checks the vertex count identity.
OverlapStats stats_of(const OverlapGraph& g);

}  // namespace biaslab
