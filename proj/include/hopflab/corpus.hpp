#pragma once

// Builders for the bundled example structures.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hopflab/structures.hpp"

namespace hopflab {

/// Multiplication table of a finite group: table[i][j] is the index of g_i g_j.
using GroupTable = std::vector<std::vector<std::size_t>>;

GroupTable cyclic_group(std::size_t n);
/// S_n on one-line permutations in lexicographic order (identity first);
/// product is composition (s t)(x) = s(t(x)).
GroupTable symmetric_group(std::size_t n);
/// Throws InvalidInput unless the table is a group of order at most 24 with identity at index 0.
void check_group_table(const GroupTable& t);

HopfAlgebra group_algebra(const Field& f, const GroupTable& t, std::vector<std::string> names = {});
/// Dual of the group algebra: basis delta_g, pointwise product.
HopfAlgebra function_algebra(const Field& f, const GroupTable& t, std::vector<std::string> names = {});
/// Basis 1, g, x, gx with g^2 = 1, x^2 = 0, xg = -gx, Delta x = x (x) 1 + g (x) x.
HopfAlgebra sweedler4();
/// Taft algebra of dimension n^2 with x g = zeta g x, Delta x = x (x) 1 + g (x) x.
/// Basis g^i x^j at index j*n + i. Built over Q(zeta_n), or Q when n = 2.
HopfAlgebra taft(std::size_t n);
/// Small quantum group u_q(sl_2) at an odd root of unity q = zeta_l, basis E^a F^b K^c
/// at index (a*l + b)*l + c.
HopfAlgebra uqsl2(std::size_t l);
HopfAlgebra uqsl2_dual(std::size_t l);
/// Comatrix coalgebra on e_ij (index i*d + j), Delta e_ij = sum_p e_ip (x) e_pj.
Coalgebra comatrix(const Field& f, std::size_t d);

/// A coalgebra C = sum_r (C_{d_r})^{n_r} with a bijective anti-coalgebra map S.
struct CoalgebraWithS {
  Coalgebra coalgebra;
  Mat s;
};
/// The copies of C_{d_r} are permuted by S with transposition, the last copy
/// returning through conjugation by F_r. Requires 1 < d_1 < ... and invertible F_r.
CoalgebraWithS coalgebra_with_s(const Field& f, const std::vector<Mat>& fs, const std::vector<std::size_t>& ns);
/// Violations of Delta S = (S (x) S) Delta^op, epsilon S = epsilon and bijectivity.
std::vector<Violation> validate_anti_coalgebra(const Coalgebra& c, const Mat& s);
/// Smallest k <= bound with S^k = id, or 0.
std::size_t order_of(const Mat& s, std::size_t bound);

/// A bundled Hopf algebra together with Hopf ideals known to lie in its radical.
struct CorpusEntry {
  std::string name;
  HopfAlgebra hopf;
  std::vector<Subspace> known_hopf_ideals;
};

/// Names of the Hopf algebras in the default corpus, in run order.
std::vector<std::string> default_corpus_names();
CorpusEntry corpus_entry(const std::string& name);

/// Builder output for the CLI: a Hopf algebra, or a coalgebra with optional S.
struct BuiltStructure {
  std::optional<HopfAlgebra> hopf;
  std::optional<Coalgebra> coalgebra;
  std::optional<Mat> s;
};
/// Corpus names plus parametrised builders: cyclic (n, p), symmetric (n),
/// function_symmetric (n), taft (n), uqsl2 (l), uqsl2_dual (l), comatrix (d),
/// coalgebra_with_s (F as "a,b;c,d", n).
BuiltStructure build_named(const std::string& name, const std::map<std::string, std::string>& params);

/// A bundled exact sequence: A embeds into B through iota (dim B x dim A).
struct BundledSequence {
  std::string name;
  HopfAlgebra a;
  HopfAlgebra b;
  Mat iota;
};
std::vector<BundledSequence> bundled_sequences();

}  // namespace hopflab
