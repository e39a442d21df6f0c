#pragma once

// Associated graded Hopf algebra of a filtration, its diagram (the coinvariants
// of the homogeneous projection), the Yetter-Drinfeld structure of the diagram
// over the degree-zero part, and the bosonization R # H_[0].

#include <string>
#include <vector>

#include "hopflab/coradical.hpp"

namespace hopflab {

/// Graded Hopf algebra on a degree-ordered basis.
struct GradedHopf {
  HopfAlgebra hopf;
  std::vector<std::size_t> degree;
  std::vector<std::size_t> layer_dims;
  /// Columns: representatives in the original algebra of the graded basis.
  Mat representatives;

  /// Coordinate subspace of the degree-n layer.
  Subspace layer(std::size_t n) const;
  /// Sum of the layers of degree <= n.
  Subspace partial_sum(std::size_t n) const;
};

/// gr of a Hopf filtration; throws InvalidInput if the filtration fails verify_hopf_filtration.
GradedHopf associated_graded(const HopfAlgebra& h, const Filtration& f);
/// Identity on degree 0, zero on higher degrees.
Mat homogeneous_projection(const GradedHopf& g);

/// {x : (id (x) pi) Delta x = x (x) pi(1)} for a coalgebra map pi: B -> C (dim C x dim B).
Subspace coinvariants(const HopfAlgebra& b, const Mat& pi);

/// Braided Hopf algebra R inside gr H, on the (homogeneous) RREF basis of R.
struct Diagram {
  Subspace subspace;  // R inside the graded algebra
  std::vector<std::size_t> degree;
  std::vector<std::size_t> layer_dims;
  AlgebraData algebra;
  /// Braided coproduct r -> theta(r_1) (x) r_2 with theta(a) = a_1 S(pi(a_2)).
  std::vector<std::vector<TensorTerm>> coproduct;
  Vec counit;
  /// Braided antipode, obtained degree by degree from m (S_R (x) id) Delta_R = epsilon.
  Mat antipode;

  std::size_t dim() const noexcept { return degree.size(); }
  Vec comultiply(const Vec& r) const;
};

Diagram diagram(const GradedHopf& g);
/// Diagram of gr h for the standard filtration.
Diagram diagram(const HopfAlgebra& h);
/// Whether every degree-one basis element r of R has Delta_R r = r (x) 1 + 1 (x) r.
bool degree_one_is_primitive(const Diagram& r);
/// Layer-0 Hopf subalgebra of a graded Hopf algebra, restricted to its own basis.
HopfAlgebra degree_zero_part(const GradedHopf& g);

/// Left-left Yetter-Drinfeld module over l on a space of dimension v.
/// action[a] is the matrix of e_a acting; coaction[a] is T_a with
/// delta(m) = sum_a e_a (x) T_a m.
struct YDModule {
  HopfAlgebra l;
  std::size_t v;
  std::vector<Mat> action;
  std::vector<Mat> coaction;
};

/// Adjoint action h . r = h_1 r S(h_2) and coaction (pi (x) id) Delta on the diagram.
YDModule yd_structure(const GradedHopf& g, const Diagram& r);
/// Module, comodule and Yetter-Drinfeld compatibility failures.
std::vector<Violation> validate_yd(const YDModule& m);
/// Restriction of a Yetter-Drinfeld module to an invariant subspace (columns of basis span it).
YDModule restrict_yd(const YDModule& m, const Subspace& sub);

/// Radford biproduct R # L on the basis r_i # l_j at index i * dim L + j.
HopfAlgebra bosonization(const Diagram& r, const YDModule& yd);

struct BosonizationReport {
  bool bijective = false;
  bool multiplicative = false;
  bool comultiplicative = false;
  bool unital = false;
  bool antipode_compatible = false;
  std::size_t diagram_dim = 0;
  std::size_t degree_zero_dim = 0;
  bool ok() const { return bijective && multiplicative && comultiplicative && unital && antipode_compatible; }
};
/// Checks that r # h -> r h is an isomorphism of Hopf algebras R # gr^0 -> gr H.
BosonizationReport verify_bosonization_iso(const GradedHopf& g);

struct GradedFiltrationReport {
  std::vector<std::size_t> standard_dims;
  std::vector<std::size_t> layer_partial_sums;
  bool terms_equal = false;
  bool coradical_in_degree_zero = false;
  bool ok() const { return terms_equal && coradical_in_degree_zero; }
};
/// The standard filtration of gr H against the partial sums of its layers.
GradedFiltrationReport check_graded_standard_filtration(const GradedHopf& g);

/// Whether the coradical filtration of g is given by the partial sums of the layers.
bool is_coradically_graded(const GradedHopf& g);

}  // namespace hopflab
