#pragma once

// Random generators shared by the property tests. Seeds are fixed so every
// run exercises the same cases.

#include <random>

#include "hopflab/subspace.hpp"

namespace testsupport {

using namespace hopflab;

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(0x5eed1234ULL);
  return g;
}

inline long small_int(long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng());
}

inline Scalar random_scalar(const Field& f, bool allow_zero = true) {
  for (;;) {
    Scalar s(f);
    if (f.kind() == FieldKind::Cyclotomic) {
      std::vector<mpq_class> c;
      for (int i = 0; i < f.degree(); ++i) c.emplace_back(small_int(-5, 5), small_int(1, 4));
      for (auto& q : c) q.canonicalize();
      s = Scalar::from_coefficients(f, c);
    } else if (f.kind() == FieldKind::Prime) {
      s = Scalar(f, small_int(0, f.param() - 1));
    } else {
      mpq_class q(small_int(-9, 9), small_int(1, 5));
      q.canonicalize();
      s = Scalar(f, q);
    }
    if (allow_zero || !s.is_zero()) return s;
  }
}

/// Sparse-ish random matrix; density controls how many entries are nonzero.
inline Mat random_mat(const Field& f, std::size_t r, std::size_t c, double density = 0.6) {
  Mat m(f, r, c);
  std::bernoulli_distribution keep(density);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (keep(rng())) m(i, j) = random_scalar(f);
  return m;
}

inline Mat random_invertible(const Field& f, std::size_t n) {
  for (;;) {
    Mat m = random_mat(f, n, n, 0.8);
    if (rank(m) == n) return m;
  }
}

inline Subspace random_subspace(const Field& f, std::size_t n) {
  return Subspace::row_space(random_mat(f, static_cast<std::size_t>(small_int(0, static_cast<long>(n))), n, 0.5));
}

inline std::vector<Field> test_fields() {
  return {Field::rational(), Field::prime(2), Field::prime(7), Field::cyclotomic(3), Field::cyclotomic(5)};
}

}  // namespace testsupport
