#ifndef HV_MATRIX_HPP
#define HV_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "hv/scalar.hpp"

namespace hv {

// Dense row-major matrix of exact scalars.
class ScalarMatrix {
 public:
  ScalarMatrix() : rows_(0), cols_(0) {}
  ScalarMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  bool all_rational() const;

  static ScalarMatrix identity(std::size_t n);

 private:
  std::size_t rows_, cols_;
  std::vector<Scalar> entries_;
};

// Exact determinant by fraction-free (Bareiss) elimination with row pivoting
// by first nonzero entry. Works in both scalar modes: every division the
// schedule performs is exact in the underlying ring. Throws on a non-square
// input. The 0x0 determinant is 1.
Scalar det_fraction_free(const ScalarMatrix& m);

// Exact basis of the right kernel over Q. Requires every entry to be
// rational (evaluated mode); symbolic input is rejected. Basis vectors come
// from the reduced row echelon form: one vector per free column, with that
// free coordinate set to 1 and pivot coordinates filled in, so the output is
// reproducible across runs.
std::vector<std::vector<Rational>> nullspace(const ScalarMatrix& m);

// Exact row-space rank over Q of a list of coordinate vectors.
std::size_t rational_rank(const std::vector<std::vector<Rational>>& rows);

// Reduced row echelon form over Q, in place; returns pivot column indices.
std::vector<std::size_t> rational_rref(std::vector<std::vector<Rational>>& rows);

}  // namespace hv

#endif
