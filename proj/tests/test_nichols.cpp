#include <numeric>

#include "doctest.h"
#include "hopflab/corpus.hpp"
#include "hopflab/nichols.hpp"
#include "support.hpp"

using namespace hopflab;
using namespace testsupport;

namespace {

Braiding scalar_braiding(const Scalar& q) {
  Mat m(q.field(), 1, 1);
  m(0, 0) = q;
  return diagonal_braiding(m);
}

Braiding flip(const Field& f, std::size_t v) {
  Mat q(f, v, v);
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = 0; j < v; ++j) q(i, j) = Scalar::one(f);
  return diagonal_braiding(q);
}

Scalar power(const Scalar& q, std::size_t k) {
  Scalar r = Scalar::one(q.field());
  for (std::size_t i = 0; i < k; ++i) r = r * q;
  return r;
}

// [n]_q! evaluated directly as prod_k (1 + q + ... + q^{k-1}).
Scalar quantum_factorial(const Scalar& q, std::size_t n) {
  Scalar r = Scalar::one(q.field());
  for (std::size_t k = 1; k <= n; ++k) {
    Scalar s = Scalar::zero(q.field());
    for (std::size_t i = 0; i < k; ++i) s = s + power(q, i);
    r = r * s;
  }
  return r;
}

// Diagonal braiding with random nonzero entries: always a solution of the braid relation.
Braiding random_diagonal(const Field& f, std::size_t v) {
  Mat q(f, v, v);
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = 0; j < v; ++j) q(i, j) = random_scalar(f, false);
  return diagonal_braiding(q);
}

// Conjugate of (c (x) ...) by g (x) g: still a braiding, no longer diagonal.
Braiding conjugated(const Braiding& c, const Mat& g) {
  const Mat gg = kron(g, g);
  return {c.v, gg * c.c * *inverse(gg)};
}

// 1-dim Yetter-Drinfeld module over k C_n: coaction by g^s, g acts by chi.
YDModule cyclic_yd(const Field& f, std::size_t n, std::size_t s, const Scalar& chi) {
  YDModule yd{group_algebra(f, cyclic_group(n)), 1, {}, {}};
  for (std::size_t a = 0; a < n; ++a) {
    Mat act(f, 1, 1), co(f, 1, 1);
    act(0, 0) = power(chi, a);
    if (a == s) co(0, 0) = Scalar::one(f);
    yd.action.push_back(act);
    yd.coaction.push_back(co);
  }
  return yd;
}

}  // namespace

TEST_CASE("symmetrizers in degrees zero and one are identities") {
  const Field q = Field::rational();
  const Braiding c = flip(q, 2);
  CHECK(quantum_symmetrizer(c, 0) == Mat::identity(q, 1));
  CHECK(quantum_symmetrizer(c, 1) == Mat::identity(q, 2));
}

TEST_CASE("the flip gives the classical symmetrizer") {
  const Field q = Field::rational();
  for (std::size_t v : {1, 2, 3}) {
    CAPTURE(v);
    const Braiding c = flip(q, v);
    CHECK(validate(c).empty());
    const Mat s2 = quantum_symmetrizer(c, 2);
    CHECK(s2 == Mat::identity(q, v * v) + c.c);
    CHECK(rank(s2) == v * (v + 1) / 2);
    // polynomial algebra: dim Sym^n = C(v + n - 1, n)
    const auto dims = nichols_dims(c, 4).dims;
    std::vector<std::size_t> expect{1};
    for (std::size_t n = 1; n <= 4; ++n) expect.push_back(expect.back() * (v + n - 1) / n);
    CHECK(dims == expect);
  }
}

TEST_CASE("a scalar braiding gives the quantum factorial") {
  for (const Field& f : {Field::rational(), Field::cyclotomic(3), Field::cyclotomic(5), Field::prime(7)}) {
    CAPTURE(f.to_string());
    for (int trial = 0; trial < 4; ++trial) {
      const Scalar q = trial == 0 && f.kind() == FieldKind::Cyclotomic ? Scalar::zeta(f) : random_scalar(f, false);
      const Braiding c = scalar_braiding(q);
      for (std::size_t n = 0; n <= 6; ++n) {
        const Mat s = quantum_symmetrizer(c, n);
        REQUIRE(s.rows() == 1);
        CHECK(s(0, 0) == quantum_factorial(q, n));
      }
    }
  }
}

TEST_CASE("Nichols dimensions of one-dimensional braided spaces") {
  const Field q = Field::rational();
  CHECK(nichols_dims(scalar_braiding(Scalar::one(q)), 6).dims == std::vector<std::size_t>{1, 1, 1, 1, 1, 1, 1});
  CHECK(nichols_dims(scalar_braiding(Scalar(q, -1L)), 4).dims == std::vector<std::size_t>{1, 1, 0, 0, 0});
  for (std::size_t n : {2, 3, 4, 5}) {
    CAPTURE(n);
    const Field f = Field::cyclotomic(static_cast<int>(n));
    std::vector<std::size_t> expect(n + 2, 0);
    for (std::size_t i = 0; i < n; ++i) expect[i] = 1;
    CHECK(nichols_dims(scalar_braiding(Scalar::zeta(f)), n + 1).dims == expect);
  }
  // In characteristic p the polynomial algebra truncates: [p]_1 = p = 0.
  CHECK(nichols_dims(scalar_braiding(Scalar::one(Field::prime(3))), 5).dims ==
        std::vector<std::size_t>{1, 1, 1, 0, 0, 0});
}

TEST_CASE("factorized symmetrizer equals the sum over all permutations") {
  for (const Field& f : {Field::rational(), Field::cyclotomic(3), Field::prime(5)}) {
    CAPTURE(f.to_string());
    for (std::size_t v : {1, 2}) {
      const Braiding diag = random_diagonal(f, v);
      const Braiding c = conjugated(diag, random_invertible(f, v));
      REQUIRE(validate(c).empty());
      for (std::size_t n = 0; n <= (v == 1 ? 5u : 4u); ++n) {
        CAPTURE(v);
        CAPTURE(n);
        const Mat fast = quantum_symmetrizer(c, n);
        CHECK(fast == reference::quantum_symmetrizer(c, n));
        std::uint64_t seed = 0x5eedULL + n;
        CHECK(fast == reference::quantum_symmetrizer(c, n, &seed));
      }
    }
  }
}

TEST_CASE("reduced words") {
  CHECK(reference::reduced_word({0, 1, 2}).empty());
  CHECK(reference::reduced_word({1, 0, 2}) == std::vector<std::size_t>{0});
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t seed = 7;
    do {
      std::size_t inversions = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
      for (std::uint64_t* s : {static_cast<std::uint64_t*>(nullptr), &seed}) {
        const auto w = reference::reduced_word(perm, s);
        CHECK(w.size() == inversions);
        // Apply the word to the identity as position swaps, leftmost last.
        std::vector<std::size_t> p(n);
        std::iota(p.begin(), p.end(), 0);
        for (std::size_t i = 0; i < w.size(); ++i) std::swap(p[w[i]], p[w[i] + 1]);
        CHECK(p == perm);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("braid generators satisfy the braid relations") {
  const Field q = Field::rational();
  const Braiding c = conjugated(random_diagonal(q, 2), random_invertible(q, 2));
  const std::size_t n = 4;
  for (std::size_t k = 0; k + 2 < n; ++k) {
    const Mat a = braid_generator(c, n, k), b = braid_generator(c, n, k + 1);
    CHECK(a * b * a == b * a * b);
  }
  CHECK(braid_generator(c, n, 0) * braid_generator(c, n, 2) == braid_generator(c, n, 2) * braid_generator(c, n, 0));
  CHECK(braid_word(c, n, {0, 2}) == braid_generator(c, n, 0) * braid_generator(c, n, 2));
  CHECK(braid_generator(c, 2, 0) == c.c);
  CHECK(longest_element_lifts_agree(c, 4));
}

TEST_CASE("invalid braidings are rejected") {
  const Field q = Field::rational();
  Braiding singular = flip(q, 2);
  singular.c(0, 0) = Scalar::zero(q);
  CHECK_FALSE(validate(singular).empty());
  CHECK_THROWS_AS(nichols_dims(singular, 3), InvalidInput);
  // c = A (x) id: c12 and c23 commute, and A^2 (x) A = A (x) A^2 fails unless A is scalar.
  Mat a(q, 2, 2);
  a(0, 0) = Scalar::one(q);
  a(0, 1) = Scalar::one(q);
  a(1, 1) = Scalar(q, 2L);
  const Braiding bad{2, kron(a, Mat::identity(q, 2))};
  bool braid_fails = false;
  for (const auto& v : validate(bad)) braid_fails |= v.axiom == "braid relation";
  CHECK(braid_fails);
  CHECK_THROWS_AS(quantum_symmetrizer(flip(q, 3), 8), Unsupported);
}

TEST_CASE("braidings from Yetter-Drinfeld modules") {
  SUBCASE("trivial module gives the flip") {
    const Field q = Field::rational();
    YDModule yd{group_algebra(q, cyclic_group(1)), 2, {Mat::identity(q, 2)}, {Mat::identity(q, 2)}};
    CHECK(braiding_from_yd(yd).c == flip(q, 2).c);
  }
  SUBCASE("g acting by zeta_3 over Q(zeta_3) C_3") {
    const Field f = Field::cyclotomic(3);
    const Braiding c = braiding_from_yd(cyclic_yd(f, 3, 1, Scalar::zeta(f)));
    CHECK(c.c == scalar_braiding(Scalar::zeta(f)).c);
    CHECK(nichols_dims(cyclic_yd(f, 3, 1, Scalar::zeta(f)), 4).dims == std::vector<std::size_t>{1, 1, 1, 0, 0});
  }
  SUBCASE("coaction by g^2 pairs with the character twice") {
    const Field f = Field::cyclotomic(3);
    const Braiding c = braiding_from_yd(cyclic_yd(f, 3, 2, Scalar::zeta(f)));
    CHECK(c.c(0, 0) == Scalar::zeta(f) * Scalar::zeta(f));
  }
  SUBCASE("diagram of Sweedler's algebra") {
    const HopfAlgebra h = sweedler4();
    const GradedHopf g = associated_graded(h, standard_filtration(h));
    const Diagram r = diagram(g);
    std::vector<std::size_t> one;
    for (std::size_t i = 0; i < r.dim(); ++i)
      if (r.degree[i] == 1) one.push_back(i);
    REQUIRE(one.size() == 1);
    const YDModule v = restrict_yd(yd_structure(g, r), Subspace::coordinate(h.field(), r.dim(), one));
    CHECK(braiding_from_yd(v).c == scalar_braiding(Scalar(h.field(), -1L)).c);
  }
  SUBCASE("non Yetter-Drinfeld data is rejected") {
    const Field q = Field::rational();
    YDModule yd = cyclic_yd(q, 2, 1, Scalar(q, -1L));
    yd.action[1](0, 0) = Scalar(q, 3L);  // not a representation of C_2
    CHECK_THROWS_AS(braiding_from_yd(yd), InvalidInput);
  }
}

TEST_CASE("diagrams of pointed corpus members are Nichols algebras") {
  for (const HopfAlgebra& h : {sweedler4(), taft(3), taft(4)}) {
    CAPTURE(h.dim());
    const auto rep = compare_with_diagram(h);
    CHECK(rep.equal);
    const std::size_t n = rep.layer_dims.size() - 1;
    std::vector<std::size_t> expect(n + 1, 1);
    expect.back() = 0;
    CHECK(rep.nichols_dims == expect);
  }
}

TEST_CASE("graded dimensions are bounded by v^n") {
  for (const Field& f : {Field::rational(), Field::cyclotomic(4)}) {
    for (int trial = 0; trial < 3; ++trial) {
      const Braiding c = conjugated(random_diagonal(f, 2), random_invertible(f, 2));
      const auto dims = nichols_dims(c, 4).dims;
      REQUIRE(dims.size() == 5);
      CHECK(dims[0] == 1);
      CHECK(dims[1] == 2);
      std::size_t vn = 1;
      for (std::size_t d : dims) {
        CHECK(d <= vn);
        vn *= 2;
      }
    }
  }
}
