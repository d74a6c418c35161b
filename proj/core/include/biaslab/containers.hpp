#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "biaslab/bias.hpp"
#include "biaslab/interval.hpp"

namespace biaslab {

// Parameters of the container step. Defaults follow the closed forms
//   alpha = 2 sqrt(log n / n)
//   s     = 4 (n-1)! / sqrt(n log n)
//   a     = (1 + 2 sqrt(log n / n)) (n-1)!/2
// (binary logarithm), evaluated as outward-rounded 256-bit enclosures.
// The size comparison |A| > a is decided against the enclosure, so exact
// overrides get exact semantics and the defaults are pinned to 2^-250.
// Overrides exist because the size-bound regime needs n >= 12, while the
// structural guarantees tested here hold for every a.
struct ContainerParams {
  int n = 0;
  Interval alpha;
  Interval s;
  Interval a;
  std::optional<Rational> a_override;

  static ContainerParams defaults(int n);
  static ContainerParams with_a(int n, const Rational& a_value);

  bool size_exceeds_a(std::size_t k) const;
};

struct ContainerStepRecord {
  int rule = 0;         // 1 = stop, 2 = pivot kept (in K), 3 = pivot dropped
  CycleId pivot = 0;    // meaningful for rules 2 and 3
  std::uint64_t a_size_after = 0;
};

struct ContainerTrace {
  std::vector<ContainerStepRecord> steps;
  std::size_t fixed_point_index = 0;  // i0
  IdSet fingerprint;                  // S_{i0}
  IdSet container;                    // A_{i0}
  bool trivial_stop = false;          // stopped at step 0 (|V| <= a)
  // populated only when run_containers(..., record_full = true)
  std::vector<std::pair<IdSet, IdSet>> full_sets;
};

// Member of A with maximum degree in the induced subgraph, ties broken by
// smallest id. Throws on empty A.
CycleId select_pivot(const IdSet& A, const OverlapGraph& g);

// One application of the step function:
//   |A| <= a                -> (S, A)
//   pivot in K              -> (S + pivot, A - neighbours(pivot))
//   otherwise               -> (S, A - pivot)
// Neighbourhood removal keeps the pivot itself in A.
std::pair<IdSet, IdSet> container_step(const IdSet& S, const IdSet& A,
                                       const IdSet& K,
                                       const ContainerParams& params,
                                       const OverlapGraph& g);

// Iterates the step from (empty, V) with knowledge set K until the pair
// stops changing. For a scarce K the container contains K, and rerunning
// with the fingerprint as knowledge reproduces the same trace.
ContainerTrace run_containers(const IdSet& K, const OverlapGraph& g,
                              const ContainerParams& params,
                              bool record_full = false);

}  // namespace biaslab
