#pragma once

// Dense exact matrices and the row-reduction kernels every other module runs on.
//
// The row reduction and matrix product have an OpenMP-parallel implementation
// (the default) and a serial reference implementation in hopflab::serial that
// the tests compare against.

#include <cstddef>
#include <optional>
#include <vector>

#include "hopflab/field.hpp"

namespace hopflab {

using Vec = std::vector<Scalar>;

Vec zero_vec(const Field& f, std::size_t n);
Vec unit_vec(const Field& f, std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Vec operator+(Vec a, const Vec& b);
Vec operator-(Vec a, const Vec& b);
Vec scale(const Scalar& s, Vec v);
/// a += s * b
void axpy(Vec& a, const Scalar& s, const Vec& b);
Scalar dot(const Vec& a, const Vec& b);

/// Row-major dense matrix; every entry shares the matrix field.
class Mat {
 public:
  Mat(Field f, std::size_t rows, std::size_t cols);
  static Mat identity(Field f, std::size_t n);
  static Mat from_rows(Field f, std::size_t cols, const std::vector<Vec>& rows);
  static Mat from_columns(Field f, std::size_t rows, const std::vector<Vec>& cols);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  void set_row(std::size_t i, const Vec& v);
  void set_col(std::size_t j, const Vec& v);
  Mat transpose() const;
  bool is_zero() const;

  friend bool operator==(const Mat& a, const Mat& b);
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> a_;
};

Mat operator*(const Mat& a, const Mat& b);
Vec operator*(const Mat& a, const Vec& v);
Mat operator+(const Mat& a, const Mat& b);
Mat operator-(const Mat& a, const Mat& b);
/// Kronecker product.
Mat kron(const Mat& a, const Mat& b);

/// Reduced row echelon form with zero rows removed, plus the pivot column of each row.
struct RowEchelon {
  Mat basis;
  std::vector<std::size_t> pivots;
};

/// Deterministic Gauss-Jordan: pivot is the first nonzero column, smallest row index.
RowEchelon row_echelon(const Mat& m);
/// Unique RREF of m with zero rows dropped; its row count is rank(m).
Mat rref(const Mat& m);
std::size_t rank(const Mat& m);
std::optional<Mat> inverse(const Mat& m);
/// Some x with a x = b, if one exists.
std::optional<Vec> solve(const Mat& a, const Vec& b);

namespace serial {
RowEchelon row_echelon(const Mat& m);
Mat multiply(const Mat& a, const Mat& b);
}  // namespace serial

/// Flattening of V (x) V for dim V = d: (i, j) -> i*d + j.
std::size_t tensor_index(std::size_t d, std::size_t i, std::size_t j);
std::pair<std::size_t, std::size_t> tensor_unindex(std::size_t d, std::size_t k);

}  // namespace hopflab
