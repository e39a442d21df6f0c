#pragma once

// Subalgebras of End(k^n) given by a spanning set of matrices: structure
// constants, radicals, minimal polynomials and primitive idempotents.

#include <vector>

#include "hopflab/poly.hpp"
#include "hopflab/structures.hpp"

namespace hopflab {

/// Matrices are flattened row-major into k^{n*n}; the unit need not be the identity
/// (corner algebras e A e have unit e).
class MatrixAlgebra {
 public:
  /// Span of the given matrices; throws InvalidInput if it is not closed under
  /// products (the check is skipped when the caller knows the span is closed).
  MatrixAlgebra(Field f, std::size_t n, const std::vector<Mat>& spanning, Mat unit, bool check_closed = true);
  /// Smallest subalgebra containing the generators and the identity.
  static MatrixAlgebra generated_by(Field f, std::size_t n, const std::vector<Mat>& generators);

  const Field& field() const noexcept { return field_; }
  std::size_t size() const noexcept { return n_; }
  std::size_t dim() const noexcept { return span_.dim(); }
  const Mat& unit() const noexcept { return unit_; }
  Mat element(std::size_t i) const;
  std::vector<Mat> basis() const;
  bool contains(const Mat& m) const;
  Vec coordinates(const Mat& m) const;
  Mat from_coordinates(const Vec& c) const;

  AlgebraData structure() const;
  /// Jacobson radical, as matrices.
  std::vector<Mat> radical() const;
  /// e A e for an idempotent e of the algebra.
  MatrixAlgebra corner(const Mat& e) const;

 private:
  Field field_;
  std::size_t n_;
  Subspace span_;
  Mat unit_;
};

Vec flatten(const Mat& m);
Mat unflatten(const Field& f, std::size_t n, const Vec& v);

/// Monic minimal polynomial of x over the field, with powers taken relative to unit.
Poly minimal_polynomial(const Mat& x, const Mat& unit);
/// p(x) with the constant term multiplied by unit.
Mat evaluate(const Poly& p, const Mat& x, const Mat& unit);
bool is_nilpotent(const Mat& x);

/// Whether the algebra modulo its radical is one-dimensional (a local algebra with
/// split residue field).
bool is_split_local(const MatrixAlgebra& a);

/// Complete set of orthogonal primitive idempotents summing to the unit. Each
/// split uses the CRT idempotents of a minimal polynomial with a root in the
/// field. Throws Unsupported when a corner is not split local and no split is found.
std::vector<Mat> primitive_idempotents(const MatrixAlgebra& a);

}  // namespace hopflab
