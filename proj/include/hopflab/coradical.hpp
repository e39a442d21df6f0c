#pragma once

// Radicals, wedges, the coradical and standard filtrations, the Hopf
// coradical and the largest Hopf ideal inside the Jacobson radical.

#include <string>
#include <vector>

#include "hopflab/structures.hpp"

namespace hopflab {

/// Jacobson radical. Characteristic 0 uses the kernel of the trace form;
/// GF(p) uses the iterated power-trace refinement, which reduces to the trace
/// form when p exceeds the dimension.
Subspace jacobson_radical(const AlgebraData& a);
/// Kernel of (x, y) -> Tr(L_{xy}); equals the radical in characteristic 0 or p > dim.
Subspace trace_form_radical(const AlgebraData& a);

/// J(C*)^perp.
Subspace coradical(const Coalgebra& c);
bool is_cosemisimple(const Coalgebra& c);

/// D wedge E = (D^perp E^perp)^perp computed in C*.
Subspace wedge(const Coalgebra& c, const Subspace& d, const Subspace& e);
/// {x : Delta x in D (x) C + C (x) E}, solved in C (x) C. Quadratic memory in dim C.
Subspace wedge_by_kernel(const Coalgebra& c, const Subspace& d, const Subspace& e);

/// Increasing chain F_0 <= F_1 <= ... <= F_T with F_T the whole space.
struct Filtration {
  std::vector<Subspace> terms;

  std::size_t terminal_index() const { return terms.empty() ? 0 : terms.size() - 1; }
  std::vector<std::size_t> dims() const;
  /// F_n, with F_n = F_T for n beyond the terminal index.
  const Subspace& at(std::size_t n) const { return terms.at(std::min(n, terms.size() - 1)); }
};

/// Basis adapted to a chain: F_0's RREF basis followed, for each n, by the
/// rows of F_n's RREF basis whose pivots are new, with the degree of each vector.
struct AdaptedBasis {
  std::vector<Vec> vectors;
  std::vector<std::size_t> degree;
};
/// Throws InvalidInput if the terms are not increasing.
AdaptedBasis adapted_basis(const Filtration& f);

/// H_n = wedge^{n+1} H_0.
Filtration coradical_filtration(const Coalgebra& c);
/// H_n = (J^{n+1})^perp with J the radical of C*.
Filtration coradical_filtration_by_radical(const Coalgebra& c);

struct HopfCoradicalResult {
  Subspace subspace;
  /// Smallest m with sum_{r <= m} D^r closed under multiplication.
  std::size_t generation_degree = 0;
};

/// Subalgebra generated by d: accumulates A_{r+1} = A_r + A_r d from A_0 = span{1}.
HopfCoradicalResult subalgebra_generated(const AlgebraData& a, const Subspace& d);
/// Subalgebra generated by the coradical. Throws InvalidInput if S(H_0) is not inside H_0.
HopfCoradicalResult hopf_coradical(const HopfAlgebra& h);
/// H_[n] = wedge^{n+1} H_[0].
Filtration standard_filtration(const HopfAlgebra& h);

struct FiltrationFailure {
  std::string check;  // "chain", "coproduct", "product" or "antipode"
  std::size_t n;
  std::string detail;
};

/// Checks Delta(F_n) in sum_i F_i (x) F_{n-i}, F_n F_m in F_{n+m} and S(F_n) = F_n.
std::vector<FiltrationFailure> verify_hopf_filtration(const HopfAlgebra& h, const Filtration& f);

/// Largest Hopf ideal inside J(H), as the greatest fixed point of
/// I -> I cap (I wedge I) cap S^{-1}(I) cap ker(epsilon) cap (largest ideal in I).
Subspace j_omega_fixed_point(const HopfAlgebra& h);
/// (Hopf coradical of H*)^perp.
Subspace j_omega_dual(const HopfAlgebra& h);
/// Both computations; throws HardFailure when they disagree.
Subspace j_omega(const HopfAlgebra& h);

struct GrDualReport {
  /// dim J^n / J^{n+1} for the powers of J_omega.
  std::vector<std::size_t> ideal_layers;
  /// dim H*_[n] / H*_[n-1] for the standard filtration of the dual.
  std::vector<std::size_t> dual_layers;
  /// Rank of the induced pairing between matching layers.
  std::vector<std::size_t> pairing_ranks;
  bool ok = false;
};
GrDualReport gr_dual_compat(const HopfAlgebra& h);

/// Powers D, D^2, ... of a subspace of an algebra until they vanish or stabilise.
std::vector<Subspace> subspace_powers(const AlgebraData& a, const Subspace& d);

}  // namespace hopflab
