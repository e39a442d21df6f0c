#include "doctest.h"
#include "hopflab/cofrob.hpp"
#include "hopflab/coradical.hpp"
#include "hopflab/corpus.hpp"
#include "support.hpp"

using namespace hopflab;
using namespace testsupport;

namespace {

std::vector<std::string> fast_members() {
  std::vector<std::string> out;
  for (const auto& n : default_corpus_names())
    if (n != "uqsl2_dual3") out.push_back(n);
  return out;
}

Subspace span_of(const HopfAlgebra& h, std::initializer_list<const char*> names) {
  std::vector<Vec> vs;
  for (const char* n : names) vs.push_back(h.element(n));
  return Subspace::span(h.field(), h.dim(), vs);
}

std::vector<std::size_t> dims(const std::vector<Subspace>& ss) {
  std::vector<std::size_t> out;
  for (const auto& s : ss) out.push_back(s.dim());
  std::sort(out.begin(), out.end());
  return out;
}

// Summands meet trivially and span a space of dimension n.
void check_direct_sum(const std::vector<Subspace>& parts, std::size_t n) {
  std::size_t total = 0;
  std::vector<Vec> all;
  for (const auto& p : parts) {
    total += p.dim();
    for (const auto& v : p.vectors()) all.push_back(v);
  }
  CHECK(total == n);
  if (!parts.empty()) CHECK(Subspace::span(parts[0].field(), parts[0].ambient(), all).dim() == n);
}

Vec apply_identity(const HopfAlgebra& h, const Vec& in, bool left_identity, std::size_t b) {
  // int(h_2) h_1 (left) or int(h_1) h_2 (right) for h = e_b.
  Vec out = zero_vec(h.field(), h.dim());
  for (const auto& t : h.coalgebra().delta(b)) {
    if (left_identity)
      out[t.i] += t.c * in[t.j];
    else
      out[t.j] += t.c * in[t.i];
  }
  return out;
}

const BundledSequence& sequence(const std::string& name) {
  static const std::vector<BundledSequence> all = bundled_sequences();
  for (const auto& s : all)
    if (s.name == name) return s;
  throw std::runtime_error("no sequence " + name);
}

}  // namespace

TEST_CASE("regular comodules satisfy the comodule axioms") {
  for (const auto& name : fast_members()) {
    CAPTURE(name);
    const HopfAlgebra h = corpus_entry(name).hopf;
    CHECK(validate(regular_comodule(h.coalgebra(), Side::Left)).empty());
    CHECK(validate(regular_comodule(h.coalgebra(), Side::Right)).empty());
    CHECK(validate(trivial_comodule(h, Side::Left, 2)).empty());
  }
}

TEST_CASE("broken coactions are detected") {
  const HopfAlgebra h = sweedler4();
  Comodule m = regular_comodule(h.coalgebra(), Side::Left);
  m.coaction[h.index("x")](0, 0) += Scalar::one(h.field());
  CHECK_FALSE(validate(m).empty());
  Comodule k = trivial_comodule(h, Side::Right);
  k.coaction[0](0, 0) = Scalar(h.field(), 2L);
  const auto v = validate(k);
  REQUIRE_FALSE(v.empty());
  CHECK(v[0].axiom == "counit");
}

TEST_CASE("subcomodules and quotients") {
  const HopfAlgebra h = sweedler4();
  const Comodule left = regular_comodule(h.coalgebra(), Side::Left);
  CHECK(is_subcomodule(left, span_of(h, {"1", "x"})));
  CHECK_FALSE(is_subcomodule(left, span_of(h, {"x"})));
  CHECK_THROWS_AS(subcomodule(left, span_of(h, {"x"})), InvalidInput);
  CHECK(validate(subcomodule(left, span_of(h, {"1", "x"}))).empty());
  const Comodule q = quotient_comodule(left, span_of(h, {"1", "x"}));
  CHECK(q.v == 2);
  CHECK(validate(q).empty());
  CHECK(generated_subcomodule(left, {h.element("x")}) == span_of(h, {"1", "x"}));
  CHECK(generated_subcomodule(left, {h.element("gx")}) == span_of(h, {"g", "gx"}));
  const Comodule right = regular_comodule(h.coalgebra(), Side::Right);
  CHECK(generated_subcomodule(right, {h.element("x")}) == span_of(h, {"g", "x"}));
}

TEST_CASE("comodule maps from the trivial comodule pick out coinvariant lines") {
  for (const auto& name : fast_members()) {
    CAPTURE(name);
    const HopfAlgebra h = corpus_entry(name).hopf;
    for (Side s : {Side::Left, Side::Right}) {
      const auto maps = comodule_maps(trivial_comodule(h, s), regular_comodule(h.coalgebra(), s));
      REQUIRE(maps.size() == 1);
      CHECK(Subspace::span(h.field(), h.dim(), {maps[0].col(0)}) == Subspace::span(h.field(), h.dim(), {h.one()}));
    }
  }
}

TEST_CASE("endomorphisms of the regular comodule have the dimension of H") {
  for (const auto& name : {"sweedler4", "taft3", "qs3"}) {
    CAPTURE(name);
    const HopfAlgebra h = corpus_entry(name).hopf;
    const Comodule left = regular_comodule(h.coalgebra(), Side::Left);
    const auto fast = endomorphism_algebra(left);
    CHECK(fast.dim() == h.dim());
    // The commutant solve agrees with the fast path.
    const auto solved = comodule_maps(left, left);
    CHECK(solved.size() == h.dim());
    for (const auto& m : solved) CHECK(fast.contains(m));
  }
}

TEST_CASE("integrals of cosemisimple group algebras") {
  const HopfAlgebra h = corpus_entry("qc2").hopf;
  const IntegralData in = left_integrals(h);
  CHECK(in.space.dim() == 1);
  CHECK(in.integral == h.element("1"));
  CHECK(in.distinguished_grouplike == h.one());
}

TEST_CASE("integral and distinguished group-like of the Sweedler algebra") {
  const HopfAlgebra h = sweedler4();
  const IntegralData l = left_integrals(h);
  CHECK(l.integral == h.element("gx"));
  CHECK(l.distinguished_grouplike == h.element("g"));
  const IntegralData r = right_integrals(h);
  CHECK(r.integral == h.element("x"));
  CHECK(r.distinguished_grouplike == h.element("g"));
}

TEST_CASE("Taft integrals") {
  const HopfAlgebra h = taft(3);
  const IntegralData l = left_integrals(h);
  CHECK(l.integral == h.element("gx^2"));
  CHECK(l.distinguished_grouplike == h.element("g"));
  CHECK(right_integrals(h).distinguished_grouplike == h.element("g^2"));
}

TEST_CASE("integral identities hold on every basis element") {
  for (const auto& name : fast_members()) {
    CAPTURE(name);
    const HopfAlgebra h = corpus_entry(name).hopf;
    for (bool left : {true, false}) {
      const IntegralData d = left ? left_integrals(h) : right_integrals(h);
      CHECK(d.space.dim() == 1);
      for (std::size_t b = 0; b < h.dim(); ++b) {
        CHECK(apply_identity(h, d.integral, left, b) == scale(d.integral[b], h.one()));
        CHECK(apply_identity(h, d.integral, !left, b) == scale(d.integral[b], d.distinguished_grouplike));
      }
      const Vec& g = d.distinguished_grouplike;
      CHECK(h.multiply(g, h.antipode(g)) == h.one());
      CHECK(h.multiply(h.antipode(g), g) == h.one());
    }
  }
}

TEST_CASE("cosemisimplicity by integrals") {
  CHECK(is_cosemisimple_by_integral(corpus_entry("qs3").hopf));
  CHECK(is_cosemisimple_by_integral(corpus_entry("fs3").hopf));
  CHECK_FALSE(is_cosemisimple_by_integral(sweedler4()));
  CHECK_FALSE(is_cosemisimple_by_integral(taft(3)));
  // Group algebras are cosemisimple in every characteristic.
  CHECK(is_cosemisimple_by_integral(corpus_entry("gf2_c2").hopf));
}

TEST_CASE("socle of H is the coradical") {
  for (const auto& name : default_corpus_names()) {
    CAPTURE(name);
    const HopfAlgebra h = corpus_entry(name).hopf;
    const Subspace h0 = coradical(h.coalgebra());
    CHECK(socle(regular_comodule(h.coalgebra(), Side::Left)) == h0);
    if (name != "uqsl2_dual3") CHECK(socle(regular_comodule(h.coalgebra(), Side::Right)) == h0);
  }
}

TEST_CASE("simple subcomodules of H") {
  SUBCASE("group algebra") {
    const HopfAlgebra h = corpus_entry("qc2").hopf;
    const Comodule m = regular_comodule(h.coalgebra(), Side::Left);
    const auto s = simple_decomposition(m, socle(m));
    CHECK(dims(s) == std::vector<std::size_t>{1, 1});
  }
  SUBCASE("Sweedler") {
    const HopfAlgebra h = sweedler4();
    const Comodule m = regular_comodule(h.coalgebra(), Side::Left);
    CHECK(socle(m) == span_of(h, {"1", "g"}));
    const auto s = simple_decomposition(m, socle(m));
    REQUIRE(s.size() == 2);
    CHECK(((s[0] == span_of(h, {"1"}) && s[1] == span_of(h, {"g"})) ||
           (s[1] == span_of(h, {"1"}) && s[0] == span_of(h, {"g"}))));
    CHECK(is_simple(m, span_of(h, {"g"})));
    CHECK_FALSE(is_simple(m, span_of(h, {"1", "g"})));
    CHECK_FALSE(is_simple(m, span_of(h, {"1", "x"})));
  }
  SUBCASE("dual of the small quantum group") {
    const HopfAlgebra h = corpus_entry("uqsl2_dual3").hopf;
    const Comodule m = regular_comodule(h.coalgebra(), Side::Left);
    const auto s = simple_decomposition(m, socle(m));
    CHECK(dims(s) == std::vector<std::size_t>{1, 2, 2, 3, 3, 3});
    check_direct_sum(s, 14);
  }
  SUBCASE("function algebra on S3") {
    const HopfAlgebra h = corpus_entry("fs3").hopf;
    const Comodule m = regular_comodule(h.coalgebra(), Side::Right);
    CHECK(dims(simple_decomposition(m, socle(m))) == std::vector<std::size_t>{1, 1, 2, 2});
  }
  CHECK_THROWS_AS(simple_decomposition(regular_comodule(sweedler4().coalgebra(), Side::Left),
                                       Subspace::full(Field::rational(), 4)),
                  InvalidInput);
}

TEST_CASE("indecomposable decompositions") {
  struct Case {
    const char* name;
    std::vector<std::size_t> dims;
  };
  for (const Case& c : {Case{"sweedler4", {2, 2}}, Case{"taft3", {3, 3, 3}}, Case{"taft4", {4, 4, 4, 4}},
                        Case{"h4_x_qc3", {2, 2, 2, 2, 2, 2}}, Case{"qs3", {1, 1, 1, 1, 1, 1}}}) {
    CAPTURE(c.name);
    const HopfAlgebra h = corpus_entry(c.name).hopf;
    const Comodule m = regular_comodule(h.coalgebra(), Side::Left);
    const auto parts = indecomposable_decomposition(m);
    CHECK(dims(parts) == c.dims);
    check_direct_sum(parts, h.dim());
    for (const auto& p : parts) {
      CHECK(is_subcomodule(m, p));
      CHECK(has_local_endomorphisms(m, p));
    }
  }
}

TEST_CASE("a semisimple comodule decomposes into its simples") {
  const HopfAlgebra h = corpus_entry("fs3").hopf;
  const Comodule m = regular_comodule(h.coalgebra(), Side::Left);
  const auto parts = indecomposable_decomposition(m);
  const auto simples = simple_decomposition(m, Subspace::full(h.field(), h.dim()));
  CHECK(dims(parts) == dims(simples));
  for (const auto& p : parts) CHECK(is_simple(m, p));
}

TEST_CASE("the regular comodule of a non-cosemisimple algebra has no local endomorphism ring") {
  const HopfAlgebra h = sweedler4();
  const Comodule m = regular_comodule(h.coalgebra(), Side::Left);
  CHECK_FALSE(has_local_endomorphisms(m, Subspace::full(h.field(), 4)));
  CHECK(has_local_endomorphisms(m, span_of(h, {"1", "x"})));
}

TEST_CASE("injective hulls of the unit") {
  CHECK(hull_of_unit(corpus_entry("qs3").hopf, Side::Left) == span_of(corpus_entry("qs3").hopf, {"1"}));
  const HopfAlgebra h = sweedler4();
  CHECK(hull_of_unit(h, Side::Left) == span_of(h, {"1", "x"}));
  CHECK(hull_of_unit(h, Side::Right) == span_of(h, {"1", "gx"}));
  CHECK(hull_of_unit(taft(3), Side::Left).dim() == 3);
  CHECK(hull_of_unit(taft(3), Side::Right).dim() == 3);
}

TEST_CASE("every simple subcomodule has a hull with that socle") {
  for (const auto& name : {"sweedler4", "taft3", "h4_x_qc3", "fs3"}) {
    CAPTURE(name);
    const HopfAlgebra h = corpus_entry(name).hopf;
    for (Side side : {Side::Left, Side::Right}) {
      const Comodule m = regular_comodule(h.coalgebra(), side);
      std::size_t total = 0;
      for (const auto& s : simple_decomposition(m, socle(m))) {
        const Subspace e = injective_hull(m, s);
        CHECK(e.contains(s));
        CHECK(map_subspace(inclusion_map(e), socle(subcomodule(m, e))) == s);
        CHECK(has_local_endomorphisms(m, e));
        total += e.dim();
      }
      CHECK(total == h.dim());
    }
  }
  const HopfAlgebra h = sweedler4();
  CHECK_THROWS_AS(injective_hull(regular_comodule(h.coalgebra(), Side::Left), span_of(h, {"1", "g"})), InvalidInput);
}

TEST_CASE("Radford identity") {
  for (const auto& name : default_corpus_names()) {
    CAPTURE(name);
    const HopfAlgebra h = corpus_entry(name).hopf;
    const RadfordReport r = check_radford(h);
    CHECK(r.holds);
    CHECK(r.product_dim == h.dim());
    if (is_cosemisimple(h.coalgebra())) CHECK(r.hull_dim == 1);
  }
  const RadfordReport s = check_radford(sweedler4());
  CHECK(s.coradical_dim == 2);
  CHECK(s.hull_dim == 2);
}

TEST_CASE("integral vanishes on the maximal subcomodule of the hull") {
  for (const auto& name : fast_members()) {
    CAPTURE(name);
    const HopfAlgebra h = corpus_entry(name).hopf;
    const IntegralVanishingReport r = check_integral_vanishing(h);
    CHECK(r.ok());
    CHECK(r.maximal_dim + 1 == r.hull_dim);
    if (is_cosemisimple(h.coalgebra())) {
      CHECK(r.maximal_dim == 0);
      CHECK(r.quotient_grouplike == h.one());
    }
  }
  const IntegralVanishingReport h4 = check_integral_vanishing(sweedler4());
  CHECK(h4.maximal_dim == 1);
  CHECK(h4.quotient_grouplike == sweedler4().element("g"));
  CHECK(check_integral_vanishing(taft(3)).maximal_dim == 2);
}

TEST_CASE("unique maximal subcomodules") {
  const HopfAlgebra h = sweedler4();
  const Comodule m = regular_comodule(h.coalgebra(), Side::Right);
  const Comodule e = subcomodule(m, span_of(h, {"1", "gx"}));
  CHECK(unique_maximal_subcomodule(e).dim() == 1);
  CHECK_THROWS_AS(unique_maximal_subcomodule(m), InvalidInput);
}

TEST_CASE("H has a nonzero finite-dimensional simple quotient") {
  for (const auto& name : fast_members()) {
    CAPTURE(name);
    const HopfAlgebra h = corpus_entry(name).hopf;
    const Comodule m = regular_comodule(h.coalgebra(), Side::Right);
    const Subspace mx = maximal_subcomodule(m);
    CHECK(is_subcomodule(m, mx));
    CHECK(mx.dim() < h.dim());
    const Comodule q = quotient_comodule(m, mx);
    CHECK(is_simple(q, Subspace::full(h.field(), q.v)));
  }
}

TEST_CASE("cotensor with the regular comodule returns the other factor") {
  for (const auto& name : {"qc3", "sweedler4", "taft3"}) {
    CAPTURE(name);
    const HopfAlgebra h = corpus_entry(name).hopf;
    const Comodule hr = regular_comodule(h.coalgebra(), Side::Right);
    const Comodule hl = regular_comodule(h.coalgebra(), Side::Left);
    const Subspace e = hull_of_unit(h, Side::Left);
    CHECK(cotensor_checked(h, hr, subcomodule(hl, e)).dim() == e.dim());
    CHECK(cotensor_checked(h, hr, trivial_comodule(h, Side::Left)).dim() == 1);
    CHECK(cotensor_checked(h, trivial_comodule(h, Side::Right), hl).dim() == 1);
    CHECK(cotensor_checked(h, hr, hl).dim() == h.dim());
  }
}

TEST_CASE("cotensor of comodules in different degrees vanishes") {
  const HopfAlgebra h = corpus_entry("qc3").hopf;
  const Comodule hr = regular_comodule(h.coalgebra(), Side::Right);
  const Comodule hl = regular_comodule(h.coalgebra(), Side::Left);
  const Comodule a = subcomodule(hr, span_of(h, {"c"}));
  const Comodule b = subcomodule(hl, span_of(h, {"c^2"}));
  CHECK(cotensor_checked(h, a, b).dim() == 0);
  CHECK(cotensor_checked(h, a, subcomodule(hl, span_of(h, {"c"}))).dim() == 1);
}

TEST_CASE("Hopf maps and normality") {
  const HopfAlgebra h = sweedler4();
  CHECK(is_hopf_map(h, h, Mat::identity(h.field(), 4)));
  Mat flip = Mat::identity(h.field(), 4);
  flip(2, 2) = Scalar(h.field(), 2L);
  flip(3, 3) = Scalar(h.field(), 2L);
  CHECK(is_hopf_map(h, h, flip));  // x -> 2x is an automorphism
  flip(1, 1) = Scalar(h.field(), 2L);
  CHECK_FALSE(is_hopf_map(h, h, flip));
  const HopfAlgebra s3 = corpus_entry("qs3").hopf;
  CHECK(is_normal(s3, span_of(s3, {"1", "p120", "p201"})));
  CHECK_FALSE(is_normal(s3, span_of(s3, {"1", "p102"})));
}

TEST_CASE("quotient Hopf algebras") {
  const HopfAlgebra s3 = corpus_entry("qs3").hopf;
  CHECK_THROWS_AS(quotient_hopf(s3, span_of(s3, {"p102"})), InvalidInput);
}

TEST_CASE("exact sequence from the alternating group") {
  const auto& s = sequence("qa3_in_qs3");
  const ExactSequence seq = build_exact_sequence(s.a, s.b, s.iota);
  CHECK(seq.c.dim() == 2);
  CHECK(validate(seq.c).empty());
  // C is the group algebra of C_2: cocommutative with two group-likes.
  CHECK(is_cosemisimple(seq.c.coalgebra()));
  CHECK(coradical(seq.c.coalgebra()).dim() == 2);
  CHECK(seq.ba_plus.dim() == 4);
  CHECK(seq.coinvariants == image(s.iota));
  const ExactSequenceReport r = check_exseq_theorems(seq);
  CHECK(r.a_cosemisimple);
  CHECK(r.b_cosemisimple);
  CHECK(r.c_cosemisimple);
  CHECK(r.integral_nonzero_on_a);
  CHECK(r.ok());
}

TEST_CASE("exact sequence with a non-cosemisimple kernel") {
  const auto& s = sequence("sweedler4_in_h4_x_qc3");
  const ExactSequence seq = build_exact_sequence(s.a, s.b, s.iota);
  CHECK(seq.c.dim() == 3);
  CHECK(validate(seq.c).empty());
  CHECK(is_hopf_map(seq.b, seq.c, seq.pi));
  // C is Q C_3: three group-likes.
  CHECK(coradical(seq.c.coalgebra()).dim() == 3);
  const ExactSequenceReport r = check_exseq_theorems(seq);
  CHECK(r.c_cosemisimple);
  CHECK(r.integral_nonzero_on_a);
  CHECK_FALSE(r.a_cosemisimple);
  CHECK_FALSE(r.b_cosemisimple);
  // B cotensored with k over C recovers A.
  const Comodule bc = corestrict(regular_comodule(seq.b.coalgebra(), Side::Right), seq.c.coalgebra(), seq.pi);
  CHECK(validate(bc).empty());
  CHECK(cotensor_checked(seq.c, bc, trivial_comodule(seq.c, Side::Left)).dim() == 4);
}

TEST_CASE("exact sequence with trivial kernel") {
  const auto& s = sequence("k_in_sweedler4");
  const ExactSequence seq = build_exact_sequence(s.a, s.b, s.iota);
  CHECK(seq.c.dim() == 4);
  CHECK(is_hopf_map(s.b, seq.c, seq.pi));
  CHECK(rank(seq.pi) == 4);
  const ExactSequenceReport r = check_exseq_theorems(seq);
  CHECK_FALSE(r.c_cosemisimple);
  CHECK_FALSE(r.integral_nonzero_on_a);
  CHECK(r.a_cosemisimple);
}

TEST_CASE("exact sequences reject bad embeddings") {
  const HopfAlgebra s3 = corpus_entry("qs3").hopf;
  const HopfAlgebra c2 = corpus_entry("qc2").hopf;
  Mat iota(s3.field(), 6, 2);
  iota(s3.index("1"), 0) = Scalar::one(s3.field());
  iota(s3.index("p102"), 1) = Scalar::one(s3.field());
  CHECK(is_hopf_map(c2, s3, iota));
  CHECK_THROWS_AS(build_exact_sequence(c2, s3, iota), InvalidInput);
  Mat not_hopf = iota;
  not_hopf(s3.index("p102"), 1) = Scalar::zero(s3.field());
  not_hopf(s3.index("p120"), 1) = Scalar::one(s3.field());
  CHECK_FALSE(is_hopf_map(c2, s3, not_hopf));
  CHECK_THROWS_AS(build_exact_sequence(c2, s3, not_hopf), InvalidInput);
  CHECK_THROWS_AS(build_exact_sequence(c2, s3, Mat(s3.field(), 6, 2)), InvalidInput);
}

TEST_CASE("injective comodules are projective") {
  for (const auto& name : fast_members()) {
    CAPTURE(name);
    const ProjectivityReport r = injective_implies_projective_check(corpus_entry(name).hopf);
    CHECK(r.all());
    CHECK(r.subjects.size() >= 2);
  }
}

TEST_CASE("the trivial comodule is projective exactly when H is cosemisimple") {
  for (const auto& name : fast_members()) {
    CAPTURE(name);
    const HopfAlgebra h = corpus_entry(name).hopf;
    CHECK(is_projective(trivial_comodule(h, Side::Right), h) == is_cosemisimple(h.coalgebra()));
  }
}

TEST_CASE("corestriction along a Hopf surjection") {
  const auto& s = sequence("qa3_in_qs3");
  const ExactSequence seq = build_exact_sequence(s.a, s.b, s.iota);
  for (Side side : {Side::Left, Side::Right}) {
    const Comodule c = corestrict(regular_comodule(seq.b.coalgebra(), side), seq.c.coalgebra(), seq.pi);
    CHECK(validate(c).empty());
    CHECK(dims(indecomposable_decomposition(c)) == std::vector<std::size_t>{1, 1, 1, 1, 1, 1});
  }
}

TEST_CASE("generated subcomodules of random vectors") {
  for (const auto& name : {"sweedler4", "taft3", "h4_x_qc3"}) {
    CAPTURE(name);
    const HopfAlgebra h = corpus_entry(name).hopf;
    for (Side side : {Side::Left, Side::Right}) {
      const Comodule m = regular_comodule(h.coalgebra(), side);
      const Subspace soc = socle(m);
      for (int trial = 0; trial < 6; ++trial) {
        const Mat r = random_mat(h.field(), 2, h.dim(), 0.5);
        const Subspace g = generated_subcomodule(m, {r.row(0), r.row(1)});
        CHECK(g.contains(Subspace::row_space(r)));
        CHECK(is_subcomodule(m, g));
        const Subspace sg = map_subspace(inclusion_map(g), socle(subcomodule(m, g)));
        CHECK(sg == intersect(g, soc));
        CHECK(comodule_radical(m).dim() + soc.dim() == h.dim());
      }
    }
  }
}
