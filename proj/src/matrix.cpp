#include "hopflab/matrix.hpp"

#include <utility>

namespace hopflab {

Vec zero_vec(const Field& f, std::size_t n) { return Vec(n, Scalar::zero(f)); }

Vec unit_vec(const Field& f, std::size_t n, std::size_t i) {
  Vec v = zero_vec(f, n);
  v.at(i) = Scalar::one(f);
  return v;
}

bool is_zero(const Vec& v) {
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

Vec operator+(Vec a, const Vec& b) {
  if (a.size() != b.size()) throw InvalidInput("vector length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Vec operator-(Vec a, const Vec& b) {
  if (a.size() != b.size()) throw InvalidInput("vector length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

Vec scale(const Scalar& s, Vec v) {
  for (auto& x : v)
    if (!x.is_zero()) x *= s;
  return v;
}

void axpy(Vec& a, const Scalar& s, const Vec& b) {
  if (a.size() != b.size()) throw InvalidInput("vector length mismatch");
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!b[i].is_zero()) a[i].add_product(s, b[i]);
}

Scalar dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size() || a.empty()) throw InvalidInput("dot: length mismatch or empty");
  Scalar s = Scalar::zero(a[0].field());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s.add_product(a[i], b[i]);
  return s;
}

Mat::Mat(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(f)) {}

Mat Mat::identity(Field f, std::size_t n) {
  Mat m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
  return m;
}

Mat Mat::from_rows(Field f, std::size_t cols, const std::vector<Vec>& rows) {
  Mat m(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

Mat Mat::from_columns(Field f, std::size_t rows, const std::vector<Vec>& cols) {
  Mat m(f, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
  return m;
}

Vec Mat::row(std::size_t i) const {
  return Vec(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_), a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vec Mat::col(std::size_t j) const {
  Vec v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

void Mat::set_row(std::size_t i, const Vec& v) {
  if (v.size() != cols_) throw InvalidInput("set_row: length mismatch");
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
}

void Mat::set_col(std::size_t j, const Vec& v) {
  if (v.size() != rows_) throw InvalidInput("set_col: length mismatch");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

Mat Mat::transpose() const {
  Mat t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Mat::is_zero() const {
  for (const auto& s : a_)
    if (!s.is_zero()) return false;
  return true;
}

bool operator==(const Mat& a, const Mat& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

namespace {

void check_mul(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw InvalidInput("matrix product: dimension mismatch");
  if (!(a.field() == b.field())) throw InvalidInput("matrix product: mixed fields");
}

}  // namespace

Mat operator*(const Mat& a, const Mat& b) {
  check_mul(a, b);
  Mat c(a.field(), a.rows(), b.cols());
  const auto n = static_cast<std::ptrdiff_t>(a.rows());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t ii = 0; ii < n; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) c(i, j).add_product(aik, b(k, j));
    }
  }
  return c;
}

Vec operator*(const Mat& a, const Vec& v) {
  if (a.cols() != v.size()) throw InvalidInput("matrix-vector: dimension mismatch");
  Vec out = zero_vec(a.field(), a.rows());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (!a(i, j).is_zero()) out[i].add_product(a(i, j), v[j]);
  }
  return out;
}

Mat operator+(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidInput("matrix sum: shape mismatch");
  Mat c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
  return c;
}

Mat operator-(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidInput("matrix difference: shape mismatch");
  Mat c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) -= b(i, j);
  return c;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat c(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (!b(k, l).is_zero()) c(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return c;
}

namespace {

// Shared Gauss-Jordan driver; Parallel selects the elimination loop.
template <bool Parallel>
RowEchelon gauss_jordan(const Mat& m) {
  std::vector<Vec> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < rows.size(); ++c) {
    std::size_t p = lead;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[lead], rows[p]);
    const Scalar inv = rows[lead][c].inverse();
    for (std::size_t j = c; j < m.cols(); ++j)
      if (!rows[lead][j].is_zero()) rows[lead][j] *= inv;
    const Vec& prow = rows[lead];
    const auto n = static_cast<std::ptrdiff_t>(rows.size());
    if constexpr (Parallel) {
#pragma omp parallel for schedule(dynamic)
      for (std::ptrdiff_t ii = 0; ii < n; ++ii) {
        const auto i = static_cast<std::size_t>(ii);
        if (i == lead || rows[i][c].is_zero()) continue;
        const Scalar f = -rows[i][c];
        for (std::size_t j = c; j < m.cols(); ++j)
          if (!prow[j].is_zero()) rows[i][j].add_product(f, prow[j]);
      }
    } else {
      for (std::ptrdiff_t ii = 0; ii < n; ++ii) {
        const auto i = static_cast<std::size_t>(ii);
        if (i == lead || rows[i][c].is_zero()) continue;
        const Scalar f = -rows[i][c];
        for (std::size_t j = c; j < m.cols(); ++j)
          if (!prow[j].is_zero()) rows[i][j].add_product(f, prow[j]);
      }
    }
    pivots.push_back(c);
    ++lead;
  }
  rows.resize(lead);
  return {Mat::from_rows(m.field(), m.cols(), rows), pivots};
}

}  // namespace

RowEchelon row_echelon(const Mat& m) { return gauss_jordan<true>(m); }

namespace serial {
RowEchelon row_echelon(const Mat& m) { return gauss_jordan<false>(m); }

Mat multiply(const Mat& a, const Mat& b) {
  check_mul(a, b);
  Mat c(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Scalar s = Scalar::zero(a.field());
      for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
      c(i, j) = s;
    }
  return c;
}
}  // namespace serial

Mat rref(const Mat& m) { return row_echelon(m).basis; }

std::size_t rank(const Mat& m) { return row_echelon(m).pivots.size(); }

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  Mat aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Scalar::one(m.field());
  }
  RowEchelon re = row_echelon(aug);
  if (re.pivots.size() < n || re.pivots[n - 1] != n - 1) return std::nullopt;
  Mat inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = re.basis(i, n + j);
  return inv;
}

std::optional<Vec> solve(const Mat& a, const Vec& b) {
  if (b.size() != a.rows()) throw InvalidInput("solve: dimension mismatch");
  Mat aug(a.field(), a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  RowEchelon re = row_echelon(aug);
  Vec x = zero_vec(a.field(), a.cols());
  for (std::size_t r = 0; r < re.pivots.size(); ++r) {
    if (re.pivots[r] == a.cols()) return std::nullopt;
    x[re.pivots[r]] = re.basis(r, a.cols());
  }
  return x;
}

std::size_t tensor_index(std::size_t d, std::size_t i, std::size_t j) {
  if (i >= d || j >= d) throw InvalidInput("tensor_index: index out of range");
  return i * d + j;
}

std::pair<std::size_t, std::size_t> tensor_unindex(std::size_t d, std::size_t k) {
  if (d == 0 || k >= d * d) throw InvalidInput("tensor_unindex: index out of range");
  return {k / d, k % d};
}

}  // namespace hopflab
