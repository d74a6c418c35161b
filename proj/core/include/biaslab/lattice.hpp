#pragma once

#include <span>
#include <vector>

#include "biaslab/bigint.hpp"

namespace biaslab {

// Dense integer matrix, row-major, arbitrary-precision entries.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Integer> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

  Integer& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const Integer& at(std::size_t i, std::size_t j) const {
    return data[i * cols + j];
  }
};

Integer floor_div(const Integer& a, const Integer& b);

// Row-style Hermite normal form of the row lattice: returns the rank-many
// echelon basis rows (pivots positive, entries above pivots reduced).
IntMatrix hermite_normal_form(const IntMatrix& m);

// Smith normal form restricted to what quotient presentations need: the
// divisor chain d_0 | d_1 | ... and the right transform V with U M V = D.
struct SmithForm {
  std::size_t ambient = 0;        // number of columns m of the input
  std::size_t rank = 0;
  std::vector<Integer> divisors;  // positive, length = rank
  IntMatrix v;                    // m x m unimodular right transform

  // Coordinates of x in the quotient Z^m / rowspan(M), free factors first:
  // [ (xV)_rank .. (xV)_{m-1},  (xV)_0 mod d_0, .., (xV)_{rank-1} mod d_{rank-1} ].
  std::vector<Integer> quotient_coords(std::span<const Integer> x) const;

  // Moduli of the quotient, aligned with quotient_coords: m - rank zeros
  // (infinite cyclic factors) followed by the divisors.
  std::vector<Integer> moduli_padded() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

// Integer row lattice given by generators; membership via the Hermite basis.
class IntLattice {
 public:
  IntLattice(std::size_t ambient, const IntMatrix& generators);

  std::size_t ambient() const { return ambient_; }
  std::size_t rank() const { return basis_.rows; }
  const IntMatrix& basis() const { return basis_; }
  bool contains(std::span<const Integer> x) const;

 private:
  std::size_t ambient_;
  IntMatrix basis_;
};

}  // namespace biaslab
