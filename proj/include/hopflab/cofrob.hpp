#pragma once

// Comodules, integrals and the distinguished group-like, injective hulls,
// cotensor products, and exact sequences of Hopf algebras.

#include <string>
#include <vector>

#include "hopflab/matalg.hpp"

namespace hopflab {

enum class Side { Left, Right };

/// Comodule on k^v over a coalgebra. Left: delta(m) = sum_a e_a (x) T_a m.
/// Right: delta(m) = sum_a T_a m (x) e_a.
struct Comodule {
  Coalgebra c;
  Side side;
  std::size_t v;
  std::vector<Mat> coaction;
};

std::vector<Violation> validate(const Comodule& m);
/// C over itself through Delta.
Comodule regular_comodule(const Coalgebra& c, Side side);
/// k^v with delta(m) = 1 (x) m (or m (x) 1).
Comodule trivial_comodule(const HopfAlgebra& h, Side side, std::size_t v = 1);
/// Push-forward along a coalgebra map pi: C -> D (dim D x dim C).
Comodule corestrict(const Comodule& m, const Coalgebra& d, const Mat& pi);

bool is_subcomodule(const Comodule& m, const Subspace& s);
/// Structure on the RREF basis of s; throws InvalidInput if s is not a subcomodule.
Comodule subcomodule(const Comodule& m, const Subspace& s);
/// Structure on quotient_basis(full, s).
Comodule quotient_comodule(const Comodule& m, const Subspace& s);
Subspace generated_subcomodule(const Comodule& m, const std::vector<Vec>& vs);

/// Span of the coaction matrices; subcomodules are its invariant subspaces.
MatrixAlgebra coefficient_algebra(const Comodule& m);
/// Comodule maps from -> to, as to.v x from.v matrices.
std::vector<Mat> comodule_maps(const Comodule& from, const Comodule& to);
MatrixAlgebra endomorphism_algebra(const Comodule& m);

/// Sum of the simple subcomodules: the common kernel of the radical of the coefficient algebra.
Subspace socle(const Comodule& m);
/// Intersection of the maximal subcomodules.
Subspace comodule_radical(const Comodule& m);
/// A maximal subcomodule (contains the radical, simple quotient).
Subspace maximal_subcomodule(const Comodule& m);
/// Nonzero, semisimple, and with a single primitive idempotent in its endomorphism algebra.
bool is_simple(const Comodule& m, const Subspace& s);
/// Simple summands of a semisimple subcomodule s.
std::vector<Subspace> simple_decomposition(const Comodule& m, const Subspace& s);
/// Images of a complete set of primitive idempotents of End(m).
std::vector<Subspace> indecomposable_decomposition(const Comodule& m);
bool has_local_endomorphisms(const Comodule& m, const Subspace& s);

/// Indecomposable summand of the injective comodule m containing the simple
/// subcomodule s; its socle is checked to be s (HardFailure otherwise).
Subspace injective_hull(const Comodule& m, const Subspace& s);
/// Hull of span{1} inside H viewed as a comodule on the given side.
Subspace hull_of_unit(const HopfAlgebra& h, Side side);

struct IntegralData {
  Subspace space;  // in the dual basis
  Vec integral;
  Vec distinguished_grouplike;
};
/// int(h_2) h_1 = int(h) 1, with g from int(h_1) h_2 = int(h) g.
IntegralData left_integrals(const HopfAlgebra& h);
/// int(h_1) h_2 = int(h) 1, with g from int(h_2) h_1 = int(h) g.
IntegralData right_integrals(const HopfAlgebra& h);
/// int(1) != 0, cross-checked against the coradical; HardFailure on disagreement.
bool is_cosemisimple_by_integral(const HopfAlgebra& h);

struct RadfordReport {
  std::size_t coradical_dim = 0;
  std::size_t hull_dim = 0;
  std::size_t product_dim = 0;
  bool holds = false;
};
/// H_0 E_H(k) = H for the hull of span{1} as a right comodule.
RadfordReport check_radford(const HopfAlgebra& h);

/// Radical of an indecomposable injective comodule; throws InvalidInput unless
/// the quotient is simple.
Subspace unique_maximal_subcomodule(const Comodule& e);

struct IntegralVanishingReport {
  std::size_t hull_dim = 0;
  std::size_t maximal_dim = 0;
  bool quotient_one_dimensional = false;
  Vec quotient_grouplike;
  bool quotient_is_distinguished = false;
  bool nonzero_on_hull = false;
  bool zero_on_maximal = false;
  bool ok() const {
    return quotient_one_dimensional && quotient_is_distinguished && nonzero_on_hull && zero_on_maximal;
  }
};
/// For E the right hull of span{1} and M its maximal subcomodule: E/M = k g and
/// the left integral is nonzero on E and zero on M.
IntegralVanishingReport check_integral_vanishing(const HopfAlgebra& h);

/// Equalizer of delta_M (x) id and id (x) delta_X in M (x) X (index i * dim X + j).
Subspace cotensor(const Comodule& m_right, const Comodule& x_left);
/// The same space as the coinvariants of X' (x) M, where X' is X made a right
/// comodule through the inverse antipode.
Subspace cotensor_by_coinvariants(const HopfAlgebra& h, const Comodule& m_right, const Comodule& x_left);
/// Both computations; HardFailure when they differ.
Subspace cotensor_checked(const HopfAlgebra& h, const Comodule& m_right, const Comodule& x_left);

/// f: A -> B (dim B x dim A) preserves product, unit, coproduct, counit and antipode.
bool is_hopf_map(const HopfAlgebra& a, const HopfAlgebra& b, const Mat& f);
/// b_1 s S(b_2) in the subspace for all basis b and s in the subspace.
bool is_normal(const HopfAlgebra& b, const Subspace& sub);

struct HopfQuotient {
  HopfAlgebra quotient;
  Mat projection;  // dim quotient x dim B
};
/// B / I on quotient_basis(full, I); throws InvalidInput if I is not a Hopf ideal.
HopfQuotient quotient_hopf(const HopfAlgebra& b, const Subspace& ideal);

struct ExactSequence {
  HopfAlgebra a, b, c;
  Mat iota, pi;
  Subspace ba_plus;
  Subspace coinvariants;
};
/// A -> B -> B / B A^+. Throws InvalidInput for a non-injective or non-Hopf iota
/// or a non-normal image; HardFailure when ker pi != B A^+ or B^{co C} != iota(A).
ExactSequence build_exact_sequence(const HopfAlgebra& a, const HopfAlgebra& b, const Mat& iota);

struct ExactSequenceReport {
  bool cofrobenius_equivalence = true;  // every finite-dimensional Hopf algebra is co-Frobenius
  bool integral_nonzero_on_a = false;
  bool a_cosemisimple = false;
  bool b_cosemisimple = false;
  bool c_cosemisimple = false;
  bool ok() const {
    return cofrobenius_equivalence && integral_nonzero_on_a == c_cosemisimple &&
           b_cosemisimple == (a_cosemisimple && c_cosemisimple);
  }
};
/// Evaluates both equivalences; HardFailure when either fails.
ExactSequenceReport check_exseq_theorems(const ExactSequence& seq);

/// Whether m is a direct summand of a free comodule H^r (splitting solved linearly).
bool is_projective(const Comodule& m, const HopfAlgebra& h);

struct ProjectivityReport {
  std::vector<std::string> subjects;
  std::vector<bool> projective;
  bool all() const;
};
/// H and the hull of each simple summand of its socle, as right comodules.
ProjectivityReport injective_implies_projective_check(const HopfAlgebra& h);

}  // namespace hopflab
