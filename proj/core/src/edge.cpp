#include "biaslab/edge.hpp"

#include <bit>
#include <stdexcept>

namespace biaslab {

int pair_count(int n) { return n * (n - 1) / 2; }

static void check_vertex(int n, Vertex v) {
  if (v < 1 || v > n) throw std::out_of_range("vertex out of range [1, n]");
}

EdgeIndex edge_index(int n, Vertex u, Vertex v) {
  check_vertex(n, u);
  check_vertex(n, v);
  if (u == v) throw std::invalid_argument("loops are not edges");
  if (u > v) std::swap(u, v);
  // rank of (u, v) among pairs in lexicographic order, 0-based
  return (u - 1) * n - u * (u - 1) / 2 + (v - u - 1);
}

std::pair<Vertex, Vertex> edge_endpoints(int n, EdgeIndex e) {
  if (e < 0 || e >= pair_count(n)) throw std::out_of_range("edge index");
  int u = 1;
  int row = n - 1;  // pairs with first endpoint u
  while (e >= row) {
    e -= row;
    ++u;
    --row;
  }
  return {u, u + 1 + e};
}

EdgeId make_edge(int n, Vertex u, Vertex v) {
  EdgeIndex idx = edge_index(n, u, v);
  if (u > v) std::swap(u, v);
  return EdgeId{u, v, idx};
}

SimpleGraph SimpleGraph::complete(int n) {
  if (n > max_supported_n) throw std::out_of_range("n exceeds supported cap");
  SimpleGraph g;
  g.n = n;
  if (n >= 2) g.edges = (EdgeSet{1} << pair_count(n)) - 1;
  return g;
}

SimpleGraph SimpleGraph::empty(int n) {
  if (n > max_supported_n) throw std::out_of_range("n exceeds supported cap");
  return SimpleGraph{n, 0};
}

bool SimpleGraph::has_edge(Vertex u, Vertex v) const {
  return (edges >> edge_index(n, u, v)) & 1;
}

void SimpleGraph::add_edge(Vertex u, Vertex v) { edges |= edge_bit(n, u, v); }

void SimpleGraph::remove_edge(Vertex u, Vertex v) {
  edges &= ~edge_bit(n, u, v);
}

int SimpleGraph::edge_count() const { return std::popcount(edges); }

std::vector<EdgeId> SimpleGraph::edge_list() const {
  std::vector<EdgeId> out;
  EdgeSet rest = edges;
  while (rest) {
    EdgeIndex e = std::countr_zero(rest);
    rest &= rest - 1;
    auto [u, v] = edge_endpoints(n, e);
    out.push_back(EdgeId{u, v, e});
  }
  return out;
}

}  // namespace biaslab
