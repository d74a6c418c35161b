#include "biaslab/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace biaslab {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.backend().data(), a.backend().data(), b.backend().data());
  return q;
}

namespace {

void row_sub(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < m.cols; ++j) m.at(dst, j) -= q * m.at(src, j);
}

void row_swap(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(a, j), m.at(b, j));
}

void row_negate(IntMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols; ++j) m.at(r, j) = -m.at(r, j);
}

}  // namespace

IntMatrix hermite_normal_form(const IntMatrix& input) {
  IntMatrix m = input;
  std::size_t r = 0;  // next pivot row
  for (std::size_t col = 0; col < m.cols && r < m.rows; ++col) {
    // gcd-reduce the column below r to a single nonzero entry at row r
    for (;;) {
      std::size_t best = m.rows;
      for (std::size_t i = r; i < m.rows; ++i) {
        if (m.at(i, col) == 0) continue;
        if (best == m.rows ||
            abs(m.at(i, col)) < abs(m.at(best, col)))
          best = i;
      }
      if (best == m.rows) break;  // column clear below r
      row_swap(m, r, best);
      bool finished = true;
      for (std::size_t i = r + 1; i < m.rows; ++i) {
        if (m.at(i, col) == 0) continue;
        row_sub(m, i, r, floor_div(m.at(i, col), m.at(r, col)));
        if (m.at(i, col) != 0) finished = false;
      }
      if (finished) break;
    }
    if (m.at(r, col) == 0) continue;
    if (m.at(r, col) < 0) row_negate(m, r);
    // reduce entries above the pivot into [0, pivot)
    for (std::size_t i = 0; i < r; ++i)
      row_sub(m, i, r, floor_div(m.at(i, col), m.at(r, col)));
    ++r;
  }
  IntMatrix out(r, m.cols);
  std::copy(m.data.begin(), m.data.begin() + r * m.cols, out.data.begin());
  return out;
}

SmithForm smith_normal_form(const IntMatrix& input) {
  IntMatrix a = input;
  const std::size_t mcols = input.cols;
  SmithForm sf;
  sf.ambient = mcols;
  sf.v = IntMatrix(mcols, mcols);
  for (std::size_t i = 0; i < mcols; ++i) sf.v.at(i, i) = 1;

  auto col_swap = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (std::size_t i = 0; i < a.rows; ++i) std::swap(a.at(i, x), a.at(i, y));
    for (std::size_t i = 0; i < mcols; ++i)
      std::swap(sf.v.at(i, x), sf.v.at(i, y));
  };
  auto col_sub = [&](std::size_t dst, std::size_t src, const Integer& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < a.rows; ++i)
      a.at(i, dst) -= q * a.at(i, src);
    for (std::size_t i = 0; i < mcols; ++i)
      sf.v.at(i, dst) -= q * sf.v.at(i, src);
  };
  auto col_negate = [&](std::size_t c) {
    for (std::size_t i = 0; i < a.rows; ++i) a.at(i, c) = -a.at(i, c);
    for (std::size_t i = 0; i < mcols; ++i) sf.v.at(i, c) = -sf.v.at(i, c);
  };

  const std::size_t limit = std::min(a.rows, a.cols);
  std::size_t t = 0;
  while (t < limit) {
    // locate a nonzero entry of smallest magnitude in the trailing block
    std::size_t pi = a.rows, pj = a.cols;
    for (std::size_t i = t; i < a.rows; ++i)
      for (std::size_t j = t; j < a.cols; ++j)
        if (a.at(i, j) != 0 &&
            (pi == a.rows || abs(a.at(i, j)) < abs(a.at(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi == a.rows) break;  // trailing block is zero
    row_swap(a, t, pi);
    col_swap(t, pj);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < a.rows; ++i) {
        if (a.at(i, t) == 0) continue;
        Integer q = floor_div(a.at(i, t), a.at(t, t));
        row_sub(a, i, t, q);
        if (a.at(i, t) != 0) {
          row_swap(a, t, i);  // smaller remainder becomes the pivot
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < a.cols; ++j) {
        if (a.at(t, j) == 0) continue;
        Integer q = floor_div(a.at(t, j), a.at(t, t));
        col_sub(j, t, q);
        if (a.at(t, j) != 0) {
          col_swap(t, j);
          clean = false;
        }
      }
    }

    // divisibility chain: the pivot must divide every later entry
    bool redo = false;
    for (std::size_t i = t + 1; i < a.rows && !redo; ++i)
      for (std::size_t j = t + 1; j < a.cols && !redo; ++j)
        if (a.at(i, j) % a.at(t, t) != 0) {
          // fold row i into row t so the offending column re-enters the pivot
          row_sub(a, t, i, Integer(-1));
          redo = true;
        }
    if (redo) continue;

    if (a.at(t, t) < 0) col_negate(t);
    ++t;
  }

  sf.rank = t;
  sf.divisors.reserve(t);
  for (std::size_t i = 0; i < t; ++i) sf.divisors.push_back(a.at(i, i));
  return sf;
}

std::vector<Integer> SmithForm::quotient_coords(
    std::span<const Integer> x) const {
  if (x.size() != ambient)
    throw std::invalid_argument("vector dimension mismatch");
  std::vector<Integer> xv(ambient);
  for (std::size_t j = 0; j < ambient; ++j) {
    Integer acc = 0;
    for (std::size_t i = 0; i < ambient; ++i) acc += x[i] * v.at(i, j);
    xv[j] = std::move(acc);
  }
  std::vector<Integer> out;
  out.reserve(ambient);
  for (std::size_t j = rank; j < ambient; ++j) out.push_back(xv[j]);
  for (std::size_t j = 0; j < rank; ++j) {
    Integer m = xv[j] % divisors[j];
    if (m < 0) m += divisors[j];
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<Integer> SmithForm::moduli_padded() const {
  std::vector<Integer> out(ambient - rank, Integer(0));
  out.insert(out.end(), divisors.begin(), divisors.end());
  return out;
}

IntLattice::IntLattice(std::size_t ambient, const IntMatrix& generators)
    : ambient_(ambient) {
  if (generators.rows > 0 && generators.cols != ambient)
    throw std::invalid_argument("generator dimension mismatch");
  IntMatrix g = generators;
  g.cols = ambient;
  if (g.rows == 0) g.data.clear();
  basis_ = hermite_normal_form(g);
}

bool IntLattice::contains(std::span<const Integer> x) const {
  if (x.size() != ambient_)
    throw std::invalid_argument("vector dimension mismatch");
  std::vector<Integer> rem(x.begin(), x.end());
  for (std::size_t i = 0; i < basis_.rows; ++i) {
    std::size_t pivot_col = 0;
    while (pivot_col < ambient_ && basis_.at(i, pivot_col) == 0) ++pivot_col;
    const Integer& pivot = basis_.at(i, pivot_col);
    if (rem[pivot_col] % pivot != 0) return false;
    Integer q = rem[pivot_col] / pivot;
    if (q != 0)
      for (std::size_t j = pivot_col; j < ambient_; ++j)
        rem[j] -= q * basis_.at(i, j);
  }
  return std::all_of(rem.begin(), rem.end(),
                     [](const Integer& z) { return z == 0; });
}

}  // namespace biaslab
