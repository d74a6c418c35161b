#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace biaslab {

// Vertices are the labels 1..n. Edges of K_n get a dense index: the rank of
// (u, v), u < v, in lexicographic order of pairs. Edge sets are one machine
// word; this caps n at 11 (C(11,2) = 55 bits), far above the enumeration
// guards used anywhere in the library.
using Vertex = int;
using EdgeIndex = int;
using EdgeSet = std::uint64_t;
using VertexSet = std::uint32_t;  // bit v-1 for vertex v

inline constexpr int max_supported_n = 11;

int pair_count(int n);  // n(n-1)/2

EdgeIndex edge_index(int n, Vertex u, Vertex v);
std::pair<Vertex, Vertex> edge_endpoints(int n, EdgeIndex e);

struct EdgeId {
  Vertex u;  // u < v
  Vertex v;
  EdgeIndex index;
};

EdgeId make_edge(int n, Vertex u, Vertex v);

inline EdgeSet edge_bit(int n, Vertex u, Vertex v) {
  return EdgeSet{1} << edge_index(n, u, v);
}

struct SimpleGraph {
  int n = 0;
  EdgeSet edges = 0;

  static SimpleGraph complete(int n);
  static SimpleGraph empty(int n);

  bool has_edge(Vertex u, Vertex v) const;
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  int edge_count() const;
  std::vector<EdgeId> edge_list() const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;
};

}  // namespace biaslab
