#pragma once

#include <optional>
#include <span>
#include <vector>

#include "biaslab/bigint.hpp"
#include "biaslab/edge.hpp"

namespace biaslab {

using CycleId = std::uint32_t;

// A cycle of K_n in canonical form: the vertex sequence that is
// lexicographically least over all rotations and reflections. It starts at
// the minimum vertex and continues toward the smaller of its two neighbours.
struct Cycle {
  std::vector<Vertex> vertices;
  EdgeSet edges = 0;

  int length() const { return static_cast<int>(vertices.size()); }
  VertexSet vertex_set() const;

  friend bool operator==(const Cycle&, const Cycle&) = default;
};

// Normalizes an arbitrary vertex sequence describing a cycle. Throws on
// repeated vertices, length < 3, or labels outside [1, n].
Cycle canonical_cycle(int n, std::span<const Vertex> seq);

// Total order: (length, canonical sequence lexicographic).
bool cycle_less(const Cycle& a, const Cycle& b);

// Exact count of k-cycles in K_n: n! / (2 k (n-k)!). Throws unless
// 3 <= k <= n.
Integer cycle_count_by_length(int n, int k);

// All cycles of K_n in the canonical total order; ids are positions in this
// list and are the stable external names for cycles. n < 3 gives an empty
// catalog.
class CycleCatalog {
 public:
  static CycleCatalog enumerate(int n);

  int n() const { return n_; }
  std::size_t size() const { return cycles_.size(); }
  const Cycle& operator[](CycleId id) const { return cycles_[id]; }
  const std::vector<Cycle>& cycles() const { return cycles_; }

  // [first, last) of ids with the given length.
  std::pair<CycleId, CycleId> length_range(int k) const;

  std::optional<CycleId> find(const Cycle& c) const;
  CycleId require(const Cycle& c) const;  // throws if absent

  // Ids of the length-n cycles (the tail of the catalog).
  std::vector<CycleId> hamilton_ids() const;
  std::pair<CycleId, CycleId> hamilton_range() const;

 private:
  int n_ = 0;
  std::vector<Cycle> cycles_;
  std::vector<CycleId> length_first_;  // index: length k (0..n+1)
};

}  // namespace biaslab
