#include "torslat/quiver_rep.hpp"

#include <utility>

#include "torslat/error.hpp"

namespace torslat {

bool Matrix::is_zero() const {
  for (const auto& x : data)
    if (x.numerator() != 0) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols != b.rows) throw Error(ErrorCode::Internal, "matrix shape mismatch");
  Matrix out(a.rows, b.cols);
  for (int r = 0; r < a.rows; ++r)
    for (int k = 0; k < a.cols; ++k)
      for (int c = 0; c < b.cols; ++c) out.at(r, c) += a.at(r, k) * b.at(k, c);
  return out;
}

bool QuiverRep::satisfies_relations() const {
  for (std::size_t e = 0; e + 1 < dim.size(); ++e) {
    // a_e* a_e : e -> e+1 -> e and a_e a_e* : e+1 -> e -> e+1.
    if (!(lowering[e] * raising[e]).is_zero()) return false;
    if (!(raising[e] * lowering[e]).is_zero()) return false;
  }
  return true;
}

int nullity(Matrix m) {
  int rank = 0;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < m.rows; ++r) {
      if (m.at(r, col).numerator() != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int c = 0; c < m.cols; ++c) std::swap(m.at(pivot, c), m.at(rank, c));
    const Rational lead = m.at(rank, col);
    for (int c = col; c < m.cols; ++c) m.at(rank, c) /= lead;
    for (int r = 0; r < m.rows; ++r) {
      if (r == rank || m.at(r, col).numerator() == 0) continue;
      const Rational factor = m.at(r, col);
      for (int c = col; c < m.cols; ++c) m.at(r, c) -= factor * m.at(rank, c);
    }
    ++rank;
  }
  return m.cols - rank;
}

int hom_dimension(const QuiverRep& src, const QuiverRep& dst) {
  if (src.n != dst.n) throw Error(ErrorCode::RankMismatch, "representations of different rank");
  const int n = src.n;

  // Unknowns: the entries of f_i : src(i) -> dst(i), a dst(i) x src(i) block per vertex.
  std::vector<int> offset(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i < n; ++i)
    offset[static_cast<std::size_t>(i) + 1] =
        offset[static_cast<std::size_t>(i)] +
        dst.dim[static_cast<std::size_t>(i)] * src.dim[static_cast<std::size_t>(i)];
  const int unknowns = offset.back();
  if (unknowns == 0) return 0;

  auto var = [&](int vertex, int r, int c) {
    return offset[static_cast<std::size_t>(vertex)] + r * src.dim[static_cast<std::size_t>(vertex)] + c;
  };

  std::vector<std::vector<Rational>> rows;
  // f_j * src(a) - dst(a) * f_i = 0 for an arrow a : i -> j.
  auto add_arrow = [&](int i, int j, const Matrix& a_src, const Matrix& a_dst) {
    const int di = src.dim[static_cast<std::size_t>(i)];
    const int dj = dst.dim[static_cast<std::size_t>(j)];
    for (int r = 0; r < dj; ++r) {
      for (int c = 0; c < di; ++c) {
        std::vector<Rational> row(static_cast<std::size_t>(unknowns), Rational(0));
        for (int k = 0; k < src.dim[static_cast<std::size_t>(j)]; ++k)
          row[static_cast<std::size_t>(var(j, r, k))] += a_src.at(k, c);
        for (int k = 0; k < dst.dim[static_cast<std::size_t>(i)]; ++k)
          row[static_cast<std::size_t>(var(i, k, c))] -= a_dst.at(r, k);
        rows.push_back(std::move(row));
      }
    }
  };
  for (int e = 0; e + 1 < n; ++e) {
    add_arrow(e, e + 1, src.raising[static_cast<std::size_t>(e)], dst.raising[static_cast<std::size_t>(e)]);
    add_arrow(e + 1, e, src.lowering[static_cast<std::size_t>(e)], dst.lowering[static_cast<std::size_t>(e)]);
  }

  Matrix system(static_cast<int>(rows.size()), unknowns);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (int c = 0; c < unknowns; ++c) system.at(static_cast<int>(r), c) = rows[r][static_cast<std::size_t>(c)];
  return nullity(std::move(system));
}

}  // namespace torslat
