#pragma once

// Coalgebras, algebras and Hopf algebras given by sparse structure constants on
// a fixed basis e_0..e_{d-1}.

#include <string>
#include <vector>

#include "hopflab/subspace.hpp"

namespace hopflab {

/// c * (e_i (x) e_j)
struct TensorTerm {
  std::size_t i, j;
  Scalar c;
};

/// c * e_k
struct LinearTerm {
  std::size_t k;
  Scalar c;
};

/// Delta(e_i) = sum over delta(i) of c e_j (x) e_k, together with the counit.
class Coalgebra {
 public:
  Coalgebra(Field f, std::vector<std::string> names, std::vector<std::vector<TensorTerm>> delta, Vec counit);

  const Field& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<TensorTerm>& delta(std::size_t i) const { return delta_.at(i); }
  const Vec& counit() const noexcept { return counit_; }

  /// Delta(x) flattened with tensor_index.
  Vec comultiply(const Vec& x) const;
  /// Delta(x) as the d x d matrix of coefficients of e_j (x) e_k.
  Mat comultiply_matrix(const Vec& x) const;
  /// Delta as a d^2 x d matrix.
  Mat comultiplication_map() const;
  Scalar epsilon(const Vec& x) const;
  /// Convolution product of functionals f, g in C*: (fg)(c) = f(c_1) g(c_2).
  Vec convolve(const Vec& f, const Vec& g) const;

 private:
  Field field_;
  std::vector<std::string> names_;
  std::vector<std::vector<TensorTerm>> delta_;
  Vec counit_;
};

/// e_i e_j = sum over product(i, j) of c e_k, with unit vector.
class AlgebraData {
 public:
  AlgebraData(Field f, std::vector<std::string> names, std::vector<std::vector<LinearTerm>> mult, Vec unit);

  const Field& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<LinearTerm>& product(std::size_t i, std::size_t j) const { return mult_.at(i * dim() + j); }
  const Vec& unit() const noexcept { return unit_; }

  Vec multiply(const Vec& x, const Vec& y) const;
  /// Matrix of y -> x y.
  Mat left_multiplication(const Vec& x) const;
  /// Matrix of y -> y x.
  Mat right_multiplication(const Vec& x) const;
  /// Multiplication as a d x d^2 matrix on flattened tensors.
  Mat multiplication_map() const;

 private:
  Field field_;
  std::vector<std::string> names_;
  std::vector<std::vector<LinearTerm>> mult_;
  Vec unit_;
};

/// Hopf algebra: a coalgebra and an algebra on one basis plus the antipode
/// matrix (column a is S(e_a)).
class HopfAlgebra {
 public:
  HopfAlgebra(Coalgebra c, AlgebraData a, Mat antipode);

  const Field& field() const noexcept { return coalg_.field(); }
  std::size_t dim() const noexcept { return coalg_.dim(); }
  const std::vector<std::string>& names() const noexcept { return coalg_.names(); }
  const Coalgebra& coalgebra() const noexcept { return coalg_; }
  const AlgebraData& algebra() const noexcept { return alg_; }
  const Mat& antipode() const noexcept { return antipode_; }

  Vec multiply(const Vec& x, const Vec& y) const { return alg_.multiply(x, y); }
  Vec comultiply(const Vec& x) const { return coalg_.comultiply(x); }
  Scalar epsilon(const Vec& x) const { return coalg_.epsilon(x); }
  Vec antipode(const Vec& x) const { return antipode_ * x; }
  Vec one() const { return alg_.unit(); }
  Vec basis_vector(std::size_t i) const { return unit_vec(field(), dim(), i); }
  /// Basis index by name; throws InvalidInput when absent.
  std::size_t index(const std::string& name) const;
  Vec element(const std::string& name) const { return basis_vector(index(name)); }

 private:
  Coalgebra coalg_;
  AlgebraData alg_;
  Mat antipode_;
};

struct Violation {
  std::string axiom;
  std::string detail;
};

std::vector<Violation> validate(const Coalgebra& c);
std::vector<Violation> validate(const AlgebraData& a);
/// Coalgebra and algebra axioms, bialgebra compatibility, antipode axiom and bijectivity.
std::vector<Violation> validate(const HopfAlgebra& h);

/// Dual algebra C*: product is the transpose of Delta, unit is the counit.
AlgebraData dual(const Coalgebra& c);
/// Dual coalgebra A*: coproduct is the transpose of the product.
Coalgebra dual(const AlgebraData& a);
/// Dual Hopf algebra on the dual basis; the antipode is transposed.
HopfAlgebra dual(const HopfAlgebra& h);
/// Same algebra with the opposite coproduct and inverse antipode.
HopfAlgebra co_opposite(const HopfAlgebra& h);
/// A (x) B with basis e_i (x) f_j at index i * dim B + j.
HopfAlgebra tensor_product(const HopfAlgebra& a, const HopfAlgebra& b);

/// Structure carried to the RREF basis of a subcoalgebra / Hopf subalgebra.
/// Throws InvalidInput if the subspace is not closed.
Coalgebra restrict_coalgebra(const Coalgebra& c, const Subspace& d);
HopfAlgebra restrict_hopf(const HopfAlgebra& h, const Subspace& d);
/// Columns are the basis of d; maps coordinates of a restriction back into the ambient space.
Mat inclusion_map(const Subspace& d);

/// Coordinates of an element of d (x) d, given as a matrix of coefficients of
/// e_i (x) e_j, in the basis u_a (x) u_b of RREF basis vectors of d. Throws
/// InvalidInput if the element is not in d (x) d.
std::vector<TensorTerm> coordinates_in_tensor_square(const Subspace& d, const Mat& m);

bool is_subcoalgebra(const Coalgebra& c, const Subspace& d);
bool is_subalgebra(const AlgebraData& a, const Subspace& d);
bool is_two_sided_ideal(const AlgebraData& a, const Subspace& d);
/// Delta(I) in I (x) C + C (x) I and epsilon(I) = 0.
bool is_coideal(const Coalgebra& c, const Subspace& i);
bool is_hopf_subalgebra(const HopfAlgebra& h, const Subspace& d);
bool is_hopf_ideal(const HopfAlgebra& h, const Subspace& i);

/// Span of all products u v with u in d, v in e.
Subspace subspace_product(const AlgebraData& a, const Subspace& d, const Subspace& e);
namespace serial {
Subspace subspace_product(const AlgebraData& a, const Subspace& d, const Subspace& e);
}

/// Largest two-sided ideal contained in w.
Subspace largest_ideal_in(const AlgebraData& a, const Subspace& w);

/// Same field, names and structure constants.
bool same_structure(const Coalgebra& a, const Coalgebra& b);
bool same_structure(const HopfAlgebra& a, const HopfAlgebra& b);

/// Name of a vector for reports: "x", "2*x + gx", ...
std::string format_vector(const std::vector<std::string>& names, const Vec& v);

}  // namespace hopflab
