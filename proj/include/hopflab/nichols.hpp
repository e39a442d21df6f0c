#pragma once

// Braidings of Yetter-Drinfeld modules, quantum symmetrizers and the graded
// dimensions of Nichols algebras in low degree.

#include <cstdint>
#include <vector>

#include "hopflab/graded.hpp"

namespace hopflab {

/// Braiding on V (x) V, basis e_i (x) e_j at index i * v + j.
struct Braiding {
  std::size_t v = 0;
  Mat c;
};

/// c(x (x) y) = x_{-1} . y (x) x_0. Throws InvalidInput when the result is not
/// an invertible solution of the braid relation.
Braiding braiding_from_yd(const YDModule& yd);
/// c(e_i (x) e_j) = q_ij e_j (x) e_i.
Braiding diagonal_braiding(const Mat& q);
/// Invertibility and (c (x) id)(id (x) c)(c (x) id) = (id (x) c)(c (x) id)(id (x) c).
std::vector<Violation> validate(const Braiding& c);

/// Largest v^n the symmetrizer accepts.
inline constexpr std::size_t max_symmetrizer_size = 4096;

/// c acting in positions k, k + 1 (0-based) of V^{(x) n}.
Mat braid_generator(const Braiding& c, std::size_t n, std::size_t k);
/// Product of generators along a word (leftmost letter applied last).
Mat braid_word(const Braiding& c, std::size_t n, const std::vector<std::size_t>& word);

/// Sum over S_n of the braid lifts, in the factorized form
/// S_n = (S_{n-1} (x) id)(1 + c_{n-1} + c_{n-1} c_{n-2} + ... + c_{n-1} ... c_1).
/// Throws Unsupported when v^n exceeds max_symmetrizer_size.
Mat quantum_symmetrizer(const Braiding& c, std::size_t n);

namespace reference {
/// A reduced word for a permutation given in one-line notation: repeatedly
/// strips a descent, the first one or (with a generator) a random one.
std::vector<std::size_t> reduced_word(std::vector<std::size_t> perm, std::uint64_t* seed = nullptr);
/// The symmetrizer summed over all n! permutations, each lifted through reduced_word.
Mat quantum_symmetrizer(const Braiding& c, std::size_t n, std::uint64_t* seed = nullptr);
}  // namespace reference

/// Lifts of two different reduced words of the longest permutation agree.
bool longest_element_lifts_agree(const Braiding& c, std::size_t n);

struct NicholsTruncation {
  std::vector<std::size_t> dims;  // dims[n] = dim B^n(V) for n <= n_max
};
/// Ranks of the symmetrizers. The braid relation and, for n <= 4, the
/// independence of the lift from the reduced word are checked (HardFailure).
NicholsTruncation nichols_dims(const Braiding& c, std::size_t n_max);
NicholsTruncation nichols_dims(const YDModule& yd, std::size_t n_max);

struct DiagramNicholsReport {
  std::vector<std::size_t> layer_dims;
  std::vector<std::size_t> nichols_dims;
  bool equal = false;
};
/// Nichols algebra of the degree-one part of the diagram of gr h, against the
/// layer dimensions of the diagram (up to one degree past the top layer).
DiagramNicholsReport compare_with_diagram(const HopfAlgebra& h);

}  // namespace hopflab
