#ifndef COXCOMB_SMITH_HPP
#define COXCOMB_SMITH_HPP

#include <cstddef>
#include <vector>

#include "coxcomb/matrix.hpp"

namespace coxcomb {

/// Smith normal form U * M * V = D with unimodular U, V and a nonnegative
/// diagonal satisfying the divisibility chain d1 | d2 | ... | dk.
struct SmithDecomposition {
  IntegerMatrix U;  // rows x rows
  IntegerMatrix D;  // rows x cols, diagonal
  IntegerMatrix V;  // cols x cols

  std::vector<Int> diagonal() const;
  std::size_t rank() const;
};

SmithDecomposition smith_normal_form(const IntegerMatrix& m);

/// Does x lie in the column span (over Z) of the decomposed matrix?
/// Decided in Smith coordinates: y = U*x must satisfy d_i | y_i on the
/// diagonal range and y_i = 0 beyond the rank.
bool in_column_span(const SmithDecomposition& dec, const std::vector<Int>& x);

/// Basis of the integer kernel {x : M*x = 0}: the columns of V past the rank.
std::vector<std::vector<Int>> kernel_basis(const IntegerMatrix& m);

/// Finitely many generating columns of a sublattice of Z^ambient, with
/// membership and equality tests (mutual inclusion).
class Lattice {
 public:
  Lattice(std::size_t ambient, const std::vector<std::vector<Int>>& generators);

  std::size_t ambient() const { return generators_.rows(); }
  bool contains(const std::vector<Int>& x) const;
  bool contains(const Lattice& other) const;
  bool operator==(const Lattice& other) const;

 private:
  IntegerMatrix generators_;
  SmithDecomposition dec_;
};

}  // namespace coxcomb

#endif
