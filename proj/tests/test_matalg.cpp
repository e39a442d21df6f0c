#include <algorithm>

#include "doctest.h"
#include "hopflab/matalg.hpp"
#include "support.hpp"

using namespace hopflab;
using namespace testsupport;

namespace {

Poly poly(const Field& f, std::initializer_list<long> c) {
  Poly p;
  for (long x : c) p.push_back(Scalar(f, x));
  trim(p);
  return p;
}

Poly random_poly(const Field& f, int deg) {
  Poly p;
  for (int i = 0; i <= deg; ++i) p.push_back(random_scalar(f));
  trim(p);
  return p;
}

std::vector<std::string> texts(const std::vector<Scalar>& v) {
  std::vector<std::string> out;
  for (const auto& s : v) out.push_back(s.to_string());
  return out;
}

Mat mat(const Field& f, std::size_t n, std::initializer_list<long> entries) {
  Mat m(f, n, n);
  std::size_t k = 0;
  for (long e : entries) {
    m(k / n, k % n) = Scalar(f, e);
    ++k;
  }
  return m;
}

Mat unit_matrix(const Field& f, std::size_t n, std::size_t i, std::size_t j) {
  Mat m(f, n, n);
  m(i, j) = Scalar::one(f);
  return m;
}

void check_complete_orthogonal(const MatrixAlgebra& a, const std::vector<Mat>& es) {
  const Field& f = a.field();
  Mat total(f, a.size(), a.size());
  for (std::size_t i = 0; i < es.size(); ++i) {
    CHECK(a.contains(es[i]));
    CHECK(es[i] * es[i] == es[i]);
    CHECK_FALSE(es[i].is_zero());
    for (std::size_t j = 0; j < es.size(); ++j)
      if (i != j) CHECK((es[i] * es[j]).is_zero());
    CHECK(is_split_local(a.corner(es[i])));
    total = total + es[i];
  }
  CHECK(total == a.unit());
}

}  // namespace

TEST_CASE("polynomial division and extended gcd") {
  for (const Field& f : test_fields()) {
    CAPTURE(f.to_string());
    for (int trial = 0; trial < 20; ++trial) {
      const Poly a = random_poly(f, static_cast<int>(small_int(0, 6)));
      Poly b = random_poly(f, static_cast<int>(small_int(0, 4)));
      if (b.empty()) b = poly(f, {1});
      Poly q, r;
      poly_divmod(a, b, q, r);
      CHECK(degree(r) < degree(b));
      CHECK(poly_add(poly_mul(q, b), r) == a);
      Poly u, v;
      const Poly g = poly_ext_gcd(a, b, u, v);
      CHECK(poly_add(poly_mul(u, a), poly_mul(v, b)) == g);
      Poly qa, ra, qb, rb;
      poly_divmod(a, g, qa, ra);
      poly_divmod(b, g, qb, rb);
      CHECK(ra.empty());
      CHECK(rb.empty());
    }
  }
}

TEST_CASE("roots of large height are recovered") {
  const Field q = Field::rational();
  const mpq_class a("123456789012345678901234567890/7777777777777777777"), b("-98765432109876543210/3");
  const Poly p = poly_mul({Scalar(q, -a), Scalar::one(q)}, {Scalar(q, -b), Scalar::one(q)});
  const auto roots = roots_in_field(poly_mul(p, p));
  REQUIRE(roots.size() == 2);
  CHECK(((roots[0] == Scalar(q, a) && roots[1] == Scalar(q, b)) || (roots[1] == Scalar(q, a) && roots[0] == Scalar(q, b))));
  const Field f = Field::cyclotomic(5);
  const Scalar big = Scalar::from_coefficients(f, {mpq_class("1234567890123456789012345"), mpq_class(-7, 3),
                                                   mpq_class("99999999999999999999/13"), 0});
  const auto r5 = roots_in_field({-big, Scalar::zero(f), Scalar::one(f)});
  CHECK(r5.empty());
  const auto r6 = roots_in_field({big * big, Scalar(f, 0L) - big - big, Scalar::one(f)});
  CHECK(r6 == std::vector<Scalar>{big});
}

TEST_CASE("roots over the rationals") {
  const Field q = Field::rational();
  // 3 (t - 1)(t - 2)(t + 1/3) = 3t^3 - 8t^2 + 3t + 2
  CHECK(texts(roots_in_field(poly(q, {2, 3, -8, 3}))) == std::vector<std::string>{"-1/3", "1", "2"});
  CHECK(roots_in_field(poly(q, {1, 0, 1})).empty());
  CHECK(texts(roots_in_field(poly(q, {0, 0, 1}))) == std::vector<std::string>{"0"});
  CHECK(roots_in_field(poly(q, {-2, 0, 1})).empty());
}

TEST_CASE("roots over prime fields") {
  CHECK(texts(roots_in_field(poly(Field::prime(5), {1, 0, 1}))) == std::vector<std::string>{"2", "3"});
  CHECK(roots_in_field(poly(Field::prime(7), {1, 0, 1})).empty());
  // A large prime takes the Cantor-Zassenhaus path.
  const Field f = Field::prime(1000003);
  std::vector<long> chosen{17, 400000, 999999, 123456};
  Poly p = poly(f, {1});
  for (long r : chosen) p = poly_mul(p, poly(f, {-r, 1}));
  p = poly_mul(p, poly(f, {-2, 0, 1}));  // 2 is not a square mod 1000003 (it is 3 mod 8)
  std::vector<std::string> expect;
  for (long r : chosen) expect.push_back(std::to_string(r));
  std::sort(expect.begin(), expect.end());
  CHECK(texts(roots_in_field(p)) == expect);
}

TEST_CASE("roots of cyclotomic polynomials in their own field") {
  for (int n : {3, 4, 5, 7}) {
    CAPTURE(n);
    const Field f = Field::cyclotomic(n);
    Poly p = poly(f, {-1});
    p.resize(static_cast<std::size_t>(n) + 1, Scalar::zero(f));
    p[static_cast<std::size_t>(n)] = Scalar::one(f);  // t^n - 1
    const auto roots = roots_in_field(p);
    CHECK(roots.size() == static_cast<std::size_t>(n));
    for (const auto& r : roots) CHECK(poly_eval(p, r).is_zero());
  }
  const Field f3 = Field::cyclotomic(3);
  CHECK(roots_in_field(poly(f3, {-2, 0, 1})).empty());
}

TEST_CASE("random split polynomials recover their roots") {
  for (const Field& f : {Field::rational(), Field::prime(7), Field::cyclotomic(3), Field::cyclotomic(5)}) {
    CAPTURE(f.to_string());
    for (int trial = 0; trial < 8; ++trial) {
      std::vector<Scalar> rs;
      Poly p = poly(f, {1});
      for (int i = 0; i < 3; ++i) {
        rs.push_back(random_scalar(f));
        p = poly_mul(p, {-rs.back(), Scalar::one(f)});
      }
      const auto found = roots_in_field(p);
      for (const auto& r : rs) CHECK(std::find(found.begin(), found.end(), r) != found.end());
      for (const auto& r : found) CHECK(poly_eval(p, r).is_zero());
    }
  }
}

TEST_CASE("minimal polynomials") {
  const Field q = Field::rational();
  const Mat jordan = mat(q, 3, {2, 1, 0, 0, 2, 0, 0, 0, 5});
  // (t - 2)^2 (t - 5) = t^3 - 9t^2 + 24t - 20
  CHECK(minimal_polynomial(jordan, Mat::identity(q, 3)) == poly(q, {-20, 24, -9, 1}));
  const Mat id = Mat::identity(q, 3);
  CHECK(minimal_polynomial(id, id) == poly(q, {-1, 1}));
  CHECK(evaluate(minimal_polynomial(jordan, id), jordan, id).is_zero());
  CHECK(is_nilpotent(mat(q, 3, {0, 1, 2, 0, 0, 3, 0, 0, 0})));
  CHECK_FALSE(is_nilpotent(jordan));
}

TEST_CASE("matrix algebras reject unclosed spans") {
  const Field q = Field::rational();
  CHECK_THROWS_AS(MatrixAlgebra(q, 2, {unit_matrix(q, 2, 0, 1), unit_matrix(q, 2, 1, 0)}, Mat::identity(q, 2)),
                  InvalidInput);
  const MatrixAlgebra upper(q, 2, {unit_matrix(q, 2, 0, 0), unit_matrix(q, 2, 0, 1), unit_matrix(q, 2, 1, 1)},
                            Mat::identity(q, 2));
  CHECK(upper.dim() == 3);
  CHECK(upper.radical().size() == 1);
  CHECK(upper.radical()[0] == unit_matrix(q, 2, 0, 1));
}

TEST_CASE("primitive idempotents of split algebras") {
  const Field q = Field::rational();
  SUBCASE("upper triangular matrices") {
    const auto a = MatrixAlgebra::generated_by(q, 2, {unit_matrix(q, 2, 0, 0), unit_matrix(q, 2, 0, 1)});
    const auto es = primitive_idempotents(a);
    CHECK(es.size() == 2);
    check_complete_orthogonal(a, es);
  }
  SUBCASE("full matrix algebra") {
    const auto a = MatrixAlgebra::generated_by(q, 3, {unit_matrix(q, 3, 0, 1), unit_matrix(q, 3, 1, 2),
                                                      unit_matrix(q, 3, 2, 0)});
    CHECK(a.dim() == 9);
    const auto es = primitive_idempotents(a);
    CHECK(es.size() == 3);
    for (const auto& e : es) CHECK(rank(e) == 1);
    check_complete_orthogonal(a, es);
  }
  SUBCASE("cyclic group in the regular representation over Q(zeta_3)") {
    const Field f = Field::cyclotomic(3);
    const Mat c = mat(f, 3, {0, 0, 1, 1, 0, 0, 0, 1, 0});
    const auto a = MatrixAlgebra::generated_by(f, 3, {c});
    const auto es = primitive_idempotents(a);
    CHECK(es.size() == 3);
    check_complete_orthogonal(a, es);
  }
  SUBCASE("a local algebra is its own primitive idempotent") {
    const auto a = MatrixAlgebra::generated_by(q, 3, {mat(q, 3, {0, 1, 0, 0, 0, 1, 0, 0, 0})});
    CHECK(is_split_local(a));
    CHECK(primitive_idempotents(a) == std::vector<Mat>{Mat::identity(q, 3)});
  }
}

TEST_CASE("non-split semisimple algebras are reported") {
  const Field q = Field::rational();
  // Q C_3 = Q x Q(zeta_3): the second factor has no idempotent split over Q.
  const Mat c = mat(q, 3, {0, 0, 1, 1, 0, 0, 0, 1, 0});
  CHECK_THROWS_AS(primitive_idempotents(MatrixAlgebra::generated_by(q, 3, {c})), Unsupported);
}

TEST_CASE("random conjugates of a diagonal algebra split completely") {
  for (const Field& f : {Field::rational(), Field::prime(7), Field::cyclotomic(5)}) {
    CAPTURE(f.to_string());
    const Mat p = random_invertible(f, 4);
    const Mat pinv = *inverse(p);
    std::vector<Mat> gens;
    for (std::size_t i = 0; i < 4; ++i) gens.push_back(p * unit_matrix(f, 4, i, i) * pinv);
    gens.push_back(p * unit_matrix(f, 4, 0, 1) * pinv);
    const auto a = MatrixAlgebra::generated_by(f, 4, gens);
    const auto es = primitive_idempotents(a);
    CHECK(es.size() == 4);
    check_complete_orthogonal(a, es);
  }
}
