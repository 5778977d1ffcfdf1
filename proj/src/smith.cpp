#include "coxcomb/smith.hpp"

#include <algorithm>

#include "coxcomb/errors.hpp"

namespace coxcomb {

std::vector<Int> SmithDecomposition::diagonal() const {
  std::size_t n = std::min(D.rows(), D.cols());
  std::vector<Int> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = D.at(i, i);
  return d;
}

std::size_t SmithDecomposition::rank() const {
  std::size_t r = 0;
  for (const Int& d : diagonal())
    if (d != 0) ++r;
  return r;
}

namespace {

// Smallest nonzero entry (by absolute value) of the trailing submatrix.
bool find_pivot(const IntegerMatrix& d, std::size_t t, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  Int best;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      const Int& v = d.at(i, j);
      if (v == 0) continue;
      Int a = abs_int(v);
      if (!found || a < best) {
        found = true;
        best = a;
        pi = i;
        pj = j;
      }
    }
  return found;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntegerMatrix& m) {
  SmithDecomposition dec{IntegerMatrix::identity(m.rows()), m, IntegerMatrix::identity(m.cols())};
  IntegerMatrix& d = dec.D;
  IntegerMatrix& u = dec.U;
  IntegerMatrix& v = dec.V;

  std::size_t steps = std::min(d.rows(), d.cols());
  for (std::size_t t = 0; t < steps; ++t) {
    std::size_t pi, pj;
    if (!find_pivot(d, t, pi, pj)) break;
    d.swap_rows(t, pi);
    u.swap_rows(t, pi);
    d.swap_cols(t, pj);
    v.swap_cols(t, pj);

    for (;;) {
      bool restart = false;
      for (std::size_t i = t + 1; i < d.rows() && !restart; ++i) {
        if (d.at(i, t) == 0) continue;
        Int q = rounded_div(d.at(i, t), d.at(t, t));
        d.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (d.at(i, t) != 0) {
          // Remainder is strictly smaller than the pivot; promote it.
          d.swap_rows(i, t);
          u.swap_rows(i, t);
          restart = true;
        }
      }
      if (restart) continue;
      for (std::size_t j = t + 1; j < d.cols() && !restart; ++j) {
        if (d.at(t, j) == 0) continue;
        Int q = rounded_div(d.at(t, j), d.at(t, t));
        d.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (d.at(t, j) != 0) {
          d.swap_cols(j, t);
          v.swap_cols(j, t);
          restart = true;
        }
      }
      if (restart) continue;

      // Row and column of the pivot are clear. The divisibility chain needs
      // the pivot to divide the whole trailing submatrix; pull in a row that
      // violates this and reduce again.
      bool pulled = false;
      for (std::size_t i = t + 1; i < d.rows() && !pulled; ++i)
        for (std::size_t j = t + 1; j < d.cols() && !pulled; ++j)
          if (d.at(i, j) % d.at(t, t) != 0) {
            d.add_row_multiple(t, i, Int(1));
            u.add_row_multiple(t, i, Int(1));
            pulled = true;
          }
      if (!pulled) break;
    }

    if (d.at(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }
  return dec;
}

bool in_column_span(const SmithDecomposition& dec, const std::vector<Int>& x) {
  if (x.size() != dec.D.rows())
    throw precondition_error("DimensionMismatch", "vector length does not match ambient rank");
  std::vector<Int> y = dec.U.apply(x);
  std::size_t n = std::min(dec.D.rows(), dec.D.cols());
  for (std::size_t i = 0; i < y.size(); ++i) {
    Int di = i < n ? dec.D.at(i, i) : Int(0);
    if (di == 0) {
      if (y[i] != 0) return false;
    } else if (y[i] % di != 0) {
      return false;
    }
  }
  return true;
}

std::vector<std::vector<Int>> kernel_basis(const IntegerMatrix& m) {
  SmithDecomposition dec = smith_normal_form(m);
  std::vector<std::vector<Int>> basis;
  for (std::size_t j = dec.rank(); j < m.cols(); ++j) basis.push_back(dec.V.column(j));
  return basis;
}

Lattice::Lattice(std::size_t ambient, const std::vector<std::vector<Int>>& generators)
    : generators_(ambient, generators.size()) {
  for (std::size_t j = 0; j < generators.size(); ++j) {
    if (generators[j].size() != ambient)
      throw precondition_error("DimensionMismatch", "lattice generator has wrong length");
    for (std::size_t i = 0; i < ambient; ++i) generators_.at(i, j) = generators[j][i];
  }
  dec_ = smith_normal_form(generators_);
}

bool Lattice::contains(const std::vector<Int>& x) const { return in_column_span(dec_, x); }

bool Lattice::contains(const Lattice& other) const {
  if (ambient() != other.ambient()) return false;
  for (std::size_t j = 0; j < other.generators_.cols(); ++j)
    if (!contains(other.generators_.column(j))) return false;
  return true;
}

bool Lattice::operator==(const Lattice& other) const {
  return contains(other) && other.contains(*this);
}

}  // namespace coxcomb
