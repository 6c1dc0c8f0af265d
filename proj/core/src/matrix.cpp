#include "hv/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace hv {

bool ScalarMatrix::all_rational() const {
  for (const auto& e : entries_)
    if (!e.is_rational()) return false;
  return true;
}

ScalarMatrix ScalarMatrix::identity(std::size_t n) {
  ScalarMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

Scalar det_fraction_free(const ScalarMatrix& input) {
  if (input.rows() != input.cols())
    throw std::invalid_argument("det: matrix is not square");
  const std::size_t n = input.rows();
  if (n == 0) return Scalar(1);

  ScalarMatrix m = input;
  Scalar prev_pivot(1);
  bool negate = false;

  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot_row = k;
    while (pivot_row < n && m.at(pivot_row, k).is_zero()) ++pivot_row;
    if (pivot_row == n) return Scalar(0);
    if (pivot_row != k) {
      for (std::size_t j = k; j < n; ++j)
        std::swap(m.at(k, j), m.at(pivot_row, j));
      negate = !negate;
    }
    const Scalar pivot = m.at(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Scalar num = m.at(i, j) * pivot - m.at(i, k) * m.at(k, j);
        // Bareiss: the previous pivot divides every 2x2 update exactly.
        m.at(i, j) = num.div_exact(prev_pivot);
      }
      m.at(i, k) = Scalar(0);
    }
    prev_pivot = pivot;
  }
  Scalar det = m.at(n - 1, n - 1);
  return negate ? -det : det;
}

std::vector<std::size_t> rational_rref(
    std::vector<std::vector<Rational>>& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t ncols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    const Rational inv = Rational(1) / rows[r][c];
    for (std::size_t j = c; j < ncols; ++j) rows[r][j] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = c; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::vector<Rational>> nullspace(const ScalarMatrix& m) {
  if (!m.all_rational())
    throw std::domain_error("nullspace: requires evaluated (rational) mode");
  std::vector<std::vector<Rational>> rows(m.rows(),
                                          std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      rows[i][j] = m.at(i, j).rational();

  const auto pivots = rational_rref(rows);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(m.cols(), Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rational_rank(const std::vector<std::vector<Rational>>& rows) {
  auto work = rows;
  return rational_rref(work).size();
}

}  // namespace hv
