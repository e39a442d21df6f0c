#pragma once

#include <cstddef>
#include <vector>

#include "hopflab/matrix.hpp"

namespace hopflab {

/// Subspace of k^n stored by its canonical RREF basis (no zero rows).
/// Two subspaces are equal iff their bases are identical.
class Subspace {
 public:
  Subspace(Field f, std::size_t ambient);  // zero subspace
  static Subspace zero(Field f, std::size_t n) { return Subspace(f, n); }
  static Subspace full(Field f, std::size_t n);
  static Subspace row_space(const Mat& m);
  static Subspace span(Field f, std::size_t n, const std::vector<Vec>& vs);
  /// Span of the given coordinate vectors e_i.
  static Subspace coordinate(Field f, std::size_t n, const std::vector<std::size_t>& idx);

  const Field& field() const noexcept { return basis_.field(); }
  std::size_t ambient() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const Mat& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  Vec vector(std::size_t i) const { return basis_.row(i); }
  std::vector<Vec> vectors() const;
  bool is_full() const noexcept { return dim() == ambient(); }

  /// v minus its projection along the pivots; zero iff v is in the subspace.
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const;
  bool contains(const Subspace& u) const;
  /// Coordinates of v (assumed to lie in the subspace) in the RREF basis.
  Vec coordinates(const Vec& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  Subspace(RowEchelon re) : basis_(std::move(re.basis)), pivots_(std::move(re.pivots)) {}

  Mat basis_;
  std::vector<std::size_t> pivots_;
};

/// Incremental span builder; cheaper than stacking many vectors when the rank is small.
class SpanBuilder {
 public:
  SpanBuilder(Field f, std::size_t ambient);
  /// Returns true when v enlarged the span.
  bool add(const Vec& v);
  std::size_t dim() const noexcept { return rows_.size(); }
  bool full() const noexcept { return rows_.size() == ambient_; }
  Subspace build() const;

 private:
  Field field_;
  std::size_t ambient_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersect(const Subspace& u, const Subspace& v);
/// {y : <x, y> = 0 for all x in u} under the standard pairing; lives in the dual ambient space.
Subspace annihilator(const Subspace& u);
/// {x : m x = 0}
Subspace kernel(const Mat& m);
/// Column space of m.
Subspace image(const Mat& m);
/// Image of u under the linear map m (m.cols() == u.ambient()).
Subspace map_subspace(const Mat& m, const Subspace& u);
/// {x : m x in u}
Subspace preimage(const Mat& m, const Subspace& u);

/// Realisation of the quotient w / u: lift is ambient x q (columns are
/// representatives), project is q x ambient with project * lift = I and
/// kernel of project restricted to w equal to u.
struct Quotient {
  Mat lift;
  Mat project;
};
Quotient quotient_basis(const Subspace& w, const Subspace& u);

}  // namespace hopflab
