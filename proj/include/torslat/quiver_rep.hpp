#pragma once

#include <cstddef>
#include <vector>

#include <boost/rational.hpp>

namespace torslat {

using Rational = boost::rational<long long>;

struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rational> data;  // row-major

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r * c), Rational(0)) {}

  Rational& at(int r, int c) { return data[static_cast<std::size_t>(r * cols + c)]; }
  const Rational& at(int r, int c) const { return data[static_cast<std::size_t>(r * cols + c)]; }
  bool is_zero() const;
};

Matrix operator*(const Matrix& a, const Matrix& b);

/// Representation of RA_n as a bound quiver. Vertex i is stored at index
/// i-1; raising[i-1] is M(a_i) : M(i) -> M(i+1) and lowering[i-1] is
/// M(a_i*) : M(i+1) -> M(i).
struct QuiverRep {
  int n = 1;
  std::vector<int> dim;
  std::vector<Matrix> raising;
  std::vector<Matrix> lowering;

  /// True iff both two-cycles a_i* a_i and a_i a_i* act as zero.
  bool satisfies_relations() const;
};

/// Dimension of the null space of `system` (a homogeneous linear system in
/// system.cols unknowns), by Gaussian elimination over Q.
int nullity(Matrix system);

/// dim Hom(m, m2), the solution space of f_j M(a) = M2(a) f_i over all arrows a : i -> j.
int hom_dimension(const QuiverRep& m, const QuiverRep& m2);

}  // namespace torslat
