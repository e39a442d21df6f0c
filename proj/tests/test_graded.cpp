#include "doctest.h"
#include "hopflab/corpus.hpp"
#include "hopflab/graded.hpp"
#include "support.hpp"

using namespace hopflab;
using namespace testsupport;

namespace {

GradedHopf graded_of(const HopfAlgebra& h) { return associated_graded(h, standard_filtration(h)); }

std::vector<std::string> fast_members() {
  std::vector<std::string> out;
  for (const auto& n : default_corpus_names())
    if (n != "uqsl2_dual3") out.push_back(n);
  return out;
}

// m (f (x) g) applied to a braided coproduct.
Vec convolve_on(const Diagram& r, const Mat& left, const Mat& right, std::size_t b) {
  Vec out = zero_vec(r.algebra.field(), r.dim());
  for (const auto& t : r.coproduct[b]) axpy(out, t.c, r.algebra.multiply(left.col(t.i), right.col(t.j)));
  return out;
}

}  // namespace

TEST_CASE("associated graded of a coradically graded algebra is itself") {
  const HopfAlgebra h = sweedler4();
  const GradedHopf g = graded_of(h);
  CHECK(same_structure(g.hopf, h));
  CHECK(g.layer_dims == std::vector<std::size_t>{2, 2});
  CHECK(g.representatives == Mat::identity(h.field(), 4));
}

TEST_CASE("associated graded Hopf algebras satisfy the axioms") {
  for (const auto& name : fast_members()) {
    CAPTURE(name);
    const HopfAlgebra h = corpus_entry(name).hopf;
    const GradedHopf g = graded_of(h);
    CHECK(validate(g.hopf).empty());
    CHECK(g.hopf.dim() == h.dim());
    CHECK(is_coradically_graded(g));
    CHECK(check_graded_standard_filtration(g).ok());
  }
}

TEST_CASE("layer dimensions") {
  CHECK(graded_of(taft(3)).layer_dims == std::vector<std::size_t>{3, 3, 3});
  CHECK(graded_of(taft(4)).layer_dims == std::vector<std::size_t>{4, 4, 4, 4});
  CHECK(graded_of(corpus_entry("h4_x_qc3").hopf).layer_dims == std::vector<std::size_t>{6, 6});
}

TEST_CASE("a single-term filtration leaves the algebra unchanged") {
  const HopfAlgebra h = corpus_entry("uqsl2_dual3").hopf;
  const GradedHopf g = graded_of(h);
  CHECK(g.layer_dims == std::vector<std::size_t>{27});
  CHECK(same_structure(g.hopf, h));
  CHECK_FALSE(is_coradically_graded(g));
  const auto rep = check_graded_standard_filtration(g);
  CHECK(rep.terms_equal);
  CHECK(rep.coradical_in_degree_zero);
  const Diagram r = diagram(g);
  CHECK(r.dim() == 1);
}

TEST_CASE("non-Hopf filtrations are rejected") {
  const HopfAlgebra h = sweedler4();
  Filtration f;
  f.terms = {Subspace::span(h.field(), 4, {h.one()}), Subspace::full(h.field(), 4)};
  CHECK_THROWS_AS(associated_graded(h, f), InvalidInput);
}

TEST_CASE("coinvariants of the identity projection are the scalars") {
  for (const auto& name : {"qc3", "qs3", "fs3"}) {
    CAPTURE(name);
    const HopfAlgebra h = corpus_entry(name).hopf;
    CHECK(coinvariants(h, Mat::identity(h.field(), h.dim())) == Subspace::span(h.field(), h.dim(), {h.one()}));
  }
  const HopfAlgebra h = sweedler4();
  CHECK_THROWS_AS(coinvariants(h, Mat::identity(h.field(), 3)), InvalidInput);
}

TEST_CASE("diagram dimensions") {
  CHECK(diagram(graded_of(sweedler4())).layer_dims == std::vector<std::size_t>{1, 1});
  CHECK(diagram(graded_of(taft(3))).layer_dims == std::vector<std::size_t>{1, 1, 1});
  CHECK(diagram(graded_of(taft(4))).layer_dims == std::vector<std::size_t>{1, 1, 1, 1});
  for (const auto& name : fast_members()) {
    CAPTURE(name);
    const GradedHopf g = graded_of(corpus_entry(name).hopf);
    CHECK(diagram(g).dim() * g.layer_dims[0] == g.hopf.dim());
  }
}

TEST_CASE("homogeneous projection is a split Hopf map onto degree zero") {
  for (const auto& name : {"sweedler4", "taft3", "h4_x_qc3"}) {
    CAPTURE(name);
    const GradedHopf g = graded_of(corpus_entry(name).hopf);
    const HopfAlgebra& h = g.hopf;
    const Mat pi = homogeneous_projection(g);
    CHECK(pi * pi == pi);
    CHECK(rank(pi) == g.layer_dims[0]);
    for (const Vec& v : g.layer(0).vectors()) CHECK(pi * v == v);
    CHECK(pi * h.one() == h.one());
    for (std::size_t a = 0; a < h.dim(); ++a) {
      const Vec ea = h.basis_vector(a);
      CHECK(h.epsilon(pi * ea) == h.epsilon(ea));
      CHECK(pi * h.antipode(ea) == h.antipode(pi * ea));
      CHECK(h.coalgebra().comultiply_matrix(pi * ea) == pi * h.coalgebra().comultiply_matrix(ea) * pi.transpose());
      for (std::size_t b = 0; b < h.dim(); ++b) {
        const Vec eb = h.basis_vector(b);
        CHECK(pi * h.multiply(ea, eb) == h.multiply(pi * ea, pi * eb));
      }
    }
  }
}

TEST_CASE("coinvariants of a tensor factor projection") {
  // B = A (x) C, pi = epsilon_A (x) id: the coinvariants are A (x) 1.
  const HopfAlgebra a = sweedler4(), c = corpus_entry("qc3").hopf;
  const HopfAlgebra b = tensor_product(a, c);
  const Field& f = b.field();
  Mat pi(f, c.dim(), b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < c.dim(); ++j) pi(j, i * c.dim() + j) = a.coalgebra().counit()[i];
  std::vector<Vec> expected;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Vec v = zero_vec(f, b.dim());
    for (std::size_t j = 0; j < c.dim(); ++j) v[i * c.dim() + j] = c.one()[j];
    expected.push_back(v);
  }
  CHECK(coinvariants(b, pi) == Subspace::span(f, b.dim(), expected));
}

TEST_CASE("degree-one elements of the diagram are primitive") {
  for (const auto& name : fast_members()) {
    CAPTURE(name);
    const Diagram r = diagram(corpus_entry(name).hopf);
    CHECK(degree_one_is_primitive(r));
    CHECK(r.degree[0] == 0);
    CHECK(r.layer_dims[0] == 1);
  }
}

TEST_CASE("braided Hopf algebra identities of the diagram") {
  for (const auto& name : fast_members()) {
    CAPTURE(name);
    const Diagram r = diagram(graded_of(corpus_entry(name).hopf));
    const std::size_t m = r.dim();
    const Field& f = r.algebra.field();
    const Mat id = Mat::identity(f, m);
    for (std::size_t b = 0; b < m; ++b) {
      const Vec eps = scale(r.counit[b], r.algebra.unit());
      CHECK(convolve_on(r, r.antipode, id, b) == eps);
      CHECK(convolve_on(r, id, r.antipode, b) == eps);
      // Coassociativity and counit on the braided coproduct.
      Vec left = zero_vec(f, m * m * m), right = zero_vec(f, m * m * m);
      Vec lc = zero_vec(f, m), rc = zero_vec(f, m);
      for (const auto& t : r.coproduct[b]) {
        const Vec di = r.comultiply(unit_vec(f, m, t.i)), dj = r.comultiply(unit_vec(f, m, t.j));
        for (std::size_t k = 0; k < m * m; ++k) {
          if (!di[k].is_zero()) left[k * m + t.j].add_product(t.c, di[k]);
          if (!dj[k].is_zero()) right[t.i * m * m + k].add_product(t.c, dj[k]);
        }
        lc[t.j].add_product(t.c, r.counit[t.i]);
        rc[t.i].add_product(t.c, r.counit[t.j]);
      }
      CHECK(left == right);
      CHECK(lc == unit_vec(f, m, b));
      CHECK(rc == unit_vec(f, m, b));
    }
  }
}

TEST_CASE("Yetter-Drinfeld structure on the Sweedler diagram") {
  const GradedHopf g = graded_of(sweedler4());
  const Diagram r = diagram(g);
  const YDModule yd = yd_structure(g, r);
  const Field& f = yd.l.field();
  CHECK(validate_yd(yd).empty());
  const std::size_t gi = yd.l.index("g"), one = yd.l.index("1");
  // R = span{1, x}: g acts by -1 on x, and delta(x) = g (x) x.
  CHECK(r.algebra.names() == std::vector<std::string>{"1", "x"});
  Mat act(f, 2, 2);
  act(0, 0) = Scalar::one(f);
  act(1, 1) = Scalar(f, -1L);
  CHECK(yd.action[gi] == act);
  Mat tg(f, 2, 2), t1(f, 2, 2);
  tg(1, 1) = Scalar::one(f);
  t1(0, 0) = Scalar::one(f);
  CHECK(yd.coaction[gi] == tg);
  CHECK(yd.coaction[one] == t1);
}

TEST_CASE("Taft generator acts by the inverse root of unity") {
  const GradedHopf g = graded_of(taft(3));
  const Diagram r = diagram(g);
  const YDModule yd = yd_structure(g, r);
  const Field& f = yd.l.field();
  const Scalar z = Scalar::zeta(f);
  CHECK(validate_yd(yd).empty());
  const std::size_t gi = yd.l.index("g");
  CHECK(r.degree == std::vector<std::size_t>{0, 1, 2});
  CHECK(yd.action[gi](1, 1) == z.inverse());
  CHECK(yd.action[gi](2, 2) == z.inverse() * z.inverse());
  CHECK(yd.coaction[gi](1, 1) == Scalar::one(f));
  CHECK(yd.coaction[yd.l.index("g^2")](2, 2) == Scalar::one(f));
}

TEST_CASE("restriction of Yetter-Drinfeld modules") {
  const GradedHopf g = graded_of(taft(3));
  const Diagram r = diagram(g);
  const YDModule yd = yd_structure(g, r);
  const Field& f = yd.l.field();
  const YDModule top = restrict_yd(yd, Subspace::coordinate(f, 3, {1}));
  CHECK(top.v == 1);
  CHECK(validate_yd(top).empty());
  CHECK(top.action[yd.l.index("g")](0, 0) == Scalar::zeta(f).inverse());
  // span{1 + x} is neither a submodule nor a subcomodule.
  Vec v = zero_vec(f, 3);
  v[0] = v[1] = Scalar::one(f);
  CHECK_THROWS_AS(restrict_yd(yd, Subspace::span(f, 3, {v})), InvalidInput);
}

TEST_CASE("validate_yd detects broken structures") {
  const GradedHopf g = graded_of(taft(3));
  const Diagram r = diagram(g);
  YDModule yd = yd_structure(g, r);
  const Field& f = yd.l.field();
  YDModule bad_action = yd;
  bad_action.action[yd.l.index("g")](1, 1) = Scalar::one(f);
  CHECK_FALSE(validate_yd(bad_action).empty());
  YDModule bad_coaction = yd;
  bad_coaction.coaction[yd.l.index("g")](1, 1) = Scalar(f, 2L);
  CHECK_FALSE(validate_yd(bad_coaction).empty());
}

TEST_CASE("a transposition grading with trivial action is not Yetter-Drinfeld") {
  // Over kS_3, delta(v) = t (x) v needs h t h^{-1} = t for every h.
  const HopfAlgebra l = corpus_entry("qs3").hopf;
  const Field& f = l.field();
  YDModule m{l, 1, std::vector<Mat>(6, Mat::identity(f, 1)), std::vector<Mat>(6, Mat(f, 1, 1))};
  m.coaction[l.index("p021")](0, 0) = Scalar::one(f);
  const auto v = validate_yd(m);
  REQUIRE(v.size() >= 1);
  CHECK(v.front().axiom == "yetter-drinfeld");
  // Grading by the identity is fine.
  m.coaction[l.index("p021")](0, 0) = Scalar::zero(f);
  m.coaction[l.index("1")](0, 0) = Scalar::one(f);
  CHECK(validate_yd(m).empty());
}

TEST_CASE("bosonization recovers the graded algebra") {
  for (const auto& name : fast_members()) {
    CAPTURE(name);
    const GradedHopf g = graded_of(corpus_entry(name).hopf);
    const auto rep = verify_bosonization_iso(g);
    CHECK(rep.ok());
    CHECK(rep.diagram_dim * rep.degree_zero_dim == g.hopf.dim());
    const Diagram r = diagram(g);
    CHECK(validate(bosonization(r, yd_structure(g, r))).empty());
  }
}

TEST_CASE("bosonization of the Sweedler diagram matches the Sweedler algebra") {
  const GradedHopf g = graded_of(sweedler4());
  const Diagram r = diagram(g);
  const HopfAlgebra b = bosonization(r, yd_structure(g, r));
  CHECK(b.names() == std::vector<std::string>{"(1)#(1)", "(1)#(g)", "(x)#(1)", "(x)#(g)"});
  // x#1 * 1#g = x#g, 1#g * x#1 = -x#g.
  const Vec x = b.element("(x)#(1)"), gg = b.element("(1)#(g)"), xg = b.element("(x)#(g)");
  CHECK(b.multiply(x, gg) == xg);
  CHECK(b.multiply(gg, x) == scale(Scalar(b.field(), -1L), xg));
  CHECK(b.multiply(x, x) == zero_vec(b.field(), 4));
  // S(x) = -g x = x g
  CHECK(b.antipode(x) == xg);
}

TEST_CASE("bosonization rejects mismatched dimensions") {
  const GradedHopf g = graded_of(taft(3));
  const Diagram r = diagram(g);
  const YDModule top = restrict_yd(yd_structure(g, r), Subspace::coordinate(g.hopf.field(), 3, {1}));
  CHECK_THROWS_AS(bosonization(r, top), InvalidInput);
}
