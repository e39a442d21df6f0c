#include "hopflab/subspace.hpp"

#include <algorithm>

namespace hopflab {

Subspace::Subspace(Field f, std::size_t ambient) : basis_(f, 0, ambient) {}

Subspace Subspace::full(Field f, std::size_t n) {
  RowEchelon re{Mat::identity(f, n), {}};
  for (std::size_t i = 0; i < n; ++i) re.pivots.push_back(i);
  return Subspace(std::move(re));
}

Subspace Subspace::row_space(const Mat& m) { return Subspace(row_echelon(m)); }

Subspace Subspace::span(Field f, std::size_t n, const std::vector<Vec>& vs) {
  SpanBuilder b(f, n);
  for (const auto& v : vs) b.add(v);
  return b.build();
}

Subspace Subspace::coordinate(Field f, std::size_t n, const std::vector<std::size_t>& idx) {
  std::vector<Vec> vs;
  for (auto i : idx) vs.push_back(unit_vec(f, n, i));
  return span(f, n, vs);
}

std::vector<Vec> Subspace::vectors() const {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(vector(i));
  return out;
}

Vec Subspace::reduce(const Vec& v) const {
  if (v.size() != ambient()) throw InvalidInput("subspace: vector length mismatch");
  Vec r = v;
  for (std::size_t i = 0; i < dim(); ++i) {
    const Scalar c = r[pivots_[i]];
    if (c.is_zero()) continue;
    for (std::size_t j = pivots_[i]; j < ambient(); ++j)
      if (!basis_(i, j).is_zero()) r[j] -= c * basis_(i, j);
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& u) const {
  if (u.ambient() != ambient()) throw InvalidInput("subspace: ambient mismatch");
  if (u.dim() > dim()) return false;
  for (std::size_t i = 0; i < u.dim(); ++i)
    if (!contains(u.vector(i))) return false;
  return true;
}

Vec Subspace::coordinates(const Vec& v) const {
  Vec c;
  c.reserve(dim());
  for (auto p : pivots_) c.push_back(v.at(p));
  return c;
}

SpanBuilder::SpanBuilder(Field f, std::size_t ambient) : field_(f), ambient_(ambient) {}

bool SpanBuilder::add(const Vec& v) {
  if (v.size() != ambient_) throw InvalidInput("span: vector length mismatch");
  if (full()) return false;
  Vec r = v;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar c = r[pivots_[i]];
    if (c.is_zero()) continue;
    axpy(r, -c, rows_[i]);
  }
  std::size_t p = 0;
  while (p < ambient_ && r[p].is_zero()) ++p;
  if (p == ambient_) return false;
  const Scalar inv = r[p].inverse();
  r = scale(inv, std::move(r));
  // keep the other rows reduced at the new pivot
  for (auto& row : rows_) {
    const Scalar c = row[p];
    if (!c.is_zero()) axpy(row, -c, r);
  }
  const auto pos = static_cast<std::size_t>(std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin());
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(r));
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
  return true;
}

Subspace SpanBuilder::build() const {
  return Subspace::row_space(Mat::from_rows(field_, ambient_, rows_));
}

Subspace sum(const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient()) throw InvalidInput("sum: ambient dimension mismatch");
  SpanBuilder b(u.field(), u.ambient());
  for (std::size_t i = 0; i < u.dim(); ++i) b.add(u.vector(i));
  for (std::size_t i = 0; i < v.dim(); ++i) b.add(v.vector(i));
  return b.build();
}

Subspace intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient()) throw InvalidInput("intersect: ambient dimension mismatch");
  return annihilator(sum(annihilator(u), annihilator(v)));
}

Subspace annihilator(const Subspace& u) { return kernel(u.basis()); }

Subspace kernel(const Mat& m) {
  const RowEchelon re = row_echelon(m);
  const Field f = m.field();
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : re.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec x = unit_vec(f, n, free);
    for (std::size_t r = 0; r < re.pivots.size(); ++r) x[re.pivots[r]] = -re.basis(r, free);
    basis.push_back(std::move(x));
  }
  return Subspace::row_space(Mat::from_rows(f, n, basis));
}

Subspace image(const Mat& m) { return Subspace::row_space(m.transpose()); }

Subspace map_subspace(const Mat& m, const Subspace& u) {
  if (m.cols() != u.ambient()) throw InvalidInput("map_subspace: dimension mismatch");
  SpanBuilder b(m.field(), m.rows());
  for (std::size_t i = 0; i < u.dim(); ++i) b.add(m * u.vector(i));
  return b.build();
}

Subspace preimage(const Mat& m, const Subspace& u) {
  if (m.rows() != u.ambient()) throw InvalidInput("preimage: dimension mismatch");
  // x with f(m x) = 0 for every f in u^perp
  const Subspace perp = annihilator(u);
  if (perp.dim() == 0) return Subspace::full(m.field(), m.cols());
  return kernel(perp.basis() * m);
}

Quotient quotient_basis(const Subspace& w, const Subspace& u) {
  if (!w.contains(u)) throw InvalidInput("quotient_basis: u is not contained in w");
  const Field f = w.field();
  const std::size_t n = w.ambient();
  std::vector<Vec> reps;
  std::vector<std::size_t> rep_pivots;
  for (std::size_t i = 0; i < w.dim(); ++i) {
    const std::size_t p = w.pivots()[i];
    if (std::find(u.pivots().begin(), u.pivots().end(), p) != u.pivots().end()) continue;
    reps.push_back(w.vector(i));
    rep_pivots.push_back(p);
  }
  Quotient q{Mat::from_columns(f, n, reps), Mat(f, reps.size(), n)};
  // project(v) = coordinates of reduce_u(v) at the representative pivots
  for (std::size_t r = 0; r < reps.size(); ++r) {
    Vec row = unit_vec(f, n, rep_pivots[r]);
    for (std::size_t i = 0; i < u.dim(); ++i) {
      const Scalar c = u.basis()(i, rep_pivots[r]);
      if (!c.is_zero()) row[u.pivots()[i]] -= c;
    }
    q.project.set_row(r, row);
  }
  return q;
}

}  // namespace hopflab
