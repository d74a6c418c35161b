#pragma once

#include <span>
#include <vector>

#include "biaslab/bigint.hpp"

namespace biaslab {

// Finitely generated abelian group given by moduli: 0 stands for an infinite
// cyclic factor, q >= 1 for the integers mod q. Elements are integer vectors
// reduced componentwise.
struct AbelianGroup {
  std::vector<Integer> moduli;

  using Element = std::vector<Integer>;

  static AbelianGroup trivial() { return AbelianGroup{{}}; }
  static AbelianGroup cyclic(const Integer& q) { return AbelianGroup{{q}}; }
  static AbelianGroup free_abelian(std::size_t rank) {
    return AbelianGroup{std::vector<Integer>(rank, Integer(0))};
  }

  std::size_t rank() const { return moduli.size(); }
  Element identity() const { return Element(moduli.size(), Integer(0)); }
  Element reduce(Element e) const;
  Element add(const Element& a, const Element& b) const;
  Element negate(const Element& a) const;
  Element scale(const Integer& k, const Element& a) const;
  bool is_identity(const Element& a) const;

  // Number of elements; 0 encodes infinite order.
  Integer order() const;
};

// Finite group as a Cayley table over indices 0..order-1. Construction
// verifies closure, associativity, identity, and inverses.
struct FiniteGroup {
  int order = 0;
  std::vector<int> table;  // row-major: table[a * order + b] = a * b
  int identity = 0;
  std::vector<int> inverse;

  static FiniteGroup from_table(std::vector<int> table);
  static FiniteGroup cyclic(int q);
  static FiniteGroup symmetric(int k);  // order k!

  int mul(int a, int b) const { return table[a * order + b]; }
  int inv(int a) const { return inverse[a]; }
};

}  // namespace biaslab
