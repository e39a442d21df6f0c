#include "hopflab/cofrob.hpp"

#include <functional>
#include <map>
#include <optional>
#include <random>

#include "hopflab/coradical.hpp"
#include "hopflab/graded.hpp"

namespace hopflab {

namespace {

Mat rect(const Field& f, std::size_t r, std::size_t c, const Vec& v) {
  Mat m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = v[i * c + j];
  return m;
}

Vec flat(const Mat& m) { return flatten(m); }

// Columns span the common kernel of the maps apply(a, .) for a < count on k^n.
Mat common_kernel(const Field& f, std::size_t n, std::size_t count,
                  const std::function<Vec(std::size_t, const Vec&)>& apply) {
  Mat k = Mat::identity(f, n);
  for (std::size_t a = 0; a < count && k.cols() > 0; ++a) {
    std::vector<Vec> images;
    bool all_zero = true;
    for (std::size_t c = 0; c < k.cols(); ++c) {
      images.push_back(apply(a, k.col(c)));
      if (!is_zero(images.back())) all_zero = false;
    }
    if (all_zero) continue;
    const Subspace ker = kernel(Mat::from_columns(f, images.front().size(), images));
    k = k * Mat::from_columns(f, k.cols(), ker.vectors());
  }
  return k;
}

Mat identity_like(const Comodule& m) { return Mat::identity(m.c.field(), m.v); }

void require_same(const Comodule& a, const Comodule& b, const char* what) {
  if (a.side != b.side || !same_structure(a.c, b.c))
    throw InvalidInput(std::string(what) + ": comodules over different coalgebras or sides");
}

bool is_regular(const Comodule& m) {
  if (m.v != m.c.dim()) return false;
  const Comodule r = regular_comodule(m.c, m.side);
  return r.coaction == m.coaction;
}

// Idempotents of End(m) summing to the identity, each primitive.
std::vector<Mat> end_idempotents(const Comodule& m) { return primitive_idempotents(endomorphism_algebra(m)); }

Subspace hull_from(const Comodule& m, const std::vector<Mat>& idem, const Subspace& s) {
  const Field& f = m.c.field();
  if (!is_subcomodule(m, s) || s.dim() == 0) throw InvalidInput("injective_hull: not a nonzero subcomodule");
  if (!is_simple(m, s)) throw InvalidInput("injective_hull: subcomodule is not simple");
  const Mat sb = inclusion_map(s);
  for (const Mat& e : idem) {
    if (rank(e * sb) != s.dim()) continue;
    const Subspace ei = image(e);
    Subspace hull = ei;
    if (!ei.contains(s)) {
      // psi: E_i -> m with psi(e s) = s; psi is injective since it is on the socle e S.
      const Comodule ec = subcomodule(m, ei);
      const std::vector<Mat> maps = comodule_maps(ec, m);
      std::vector<Vec> cols;
      Vec rhs;
      for (const Mat& psi : maps) {
        Vec col;
        for (std::size_t k = 0; k < s.dim(); ++k) {
          const Vec w = psi * ei.coordinates(e * s.vector(k));
          col.insert(col.end(), w.begin(), w.end());
        }
        cols.push_back(std::move(col));
      }
      for (std::size_t k = 0; k < s.dim(); ++k) {
        const Vec sk = s.vector(k);
        rhs.insert(rhs.end(), sk.begin(), sk.end());
      }
      const auto c = solve(Mat::from_columns(f, rhs.size(), cols), rhs);
      if (!c) throw HardFailure("injective_hull: no comodule map extends the socle isomorphism");
      Mat psi(f, m.v, ei.dim());
      for (std::size_t j = 0; j < maps.size(); ++j)
        if (!(*c)[j].is_zero())
          for (std::size_t r = 0; r < psi.rows(); ++r)
            for (std::size_t q = 0; q < psi.cols(); ++q) psi(r, q).add_product((*c)[j], maps[j](r, q));
      hull = image(psi);
    }
    const Subspace soc = map_subspace(inclusion_map(hull), socle(subcomodule(m, hull)));
    if (soc != s) throw HardFailure("injective_hull: socle of the hull differs from the simple subcomodule");
    return hull;
  }
  throw HardFailure("injective_hull: no indecomposable summand projects injectively on the subcomodule");
}

}  // namespace

std::vector<Violation> validate(const Comodule& m) {
  std::vector<Violation> out;
  const Coalgebra& c = m.c;
  const Field& f = c.field();
  const std::size_t d = c.dim();
  if (m.coaction.size() != d) return {{"shape", "one coaction matrix per basis element expected"}};
  for (const Mat& t : m.coaction)
    if (t.rows() != m.v || t.cols() != m.v || !(t.field() == f)) return {{"shape", "coaction matrix of the wrong size"}};
  Mat sum(f, m.v, m.v);
  for (std::size_t a = 0; a < d; ++a)
    if (!c.counit()[a].is_zero())
      for (std::size_t i = 0; i < m.v; ++i)
        for (std::size_t j = 0; j < m.v; ++j) sum(i, j).add_product(c.counit()[a], m.coaction[a](i, j));
  if (sum != Mat::identity(f, m.v)) out.push_back({"counit", "sum of counit-weighted coaction matrices is not the identity"});
  // T_b T_a = sum_c delta_c^{ab} T_c (left) or delta_c^{ba} T_c (right).
  std::map<std::pair<std::size_t, std::size_t>, Mat> rhs;
  for (std::size_t cc = 0; cc < d; ++cc) {
    if (m.coaction[cc].is_zero()) continue;
    for (const TensorTerm& t : c.delta(cc)) {
      const auto key = m.side == Side::Left ? std::make_pair(t.i, t.j) : std::make_pair(t.j, t.i);
      auto it = rhs.try_emplace(key, Mat(f, m.v, m.v)).first;
      for (std::size_t i = 0; i < m.v; ++i)
        for (std::size_t j = 0; j < m.v; ++j) it->second(i, j).add_product(t.c, m.coaction[cc](i, j));
    }
  }
  const Mat zero(f, m.v, m.v);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      const Mat lhs = m.coaction[b] * m.coaction[a];
      const auto it = rhs.find({a, b});
      if (lhs != (it == rhs.end() ? zero : it->second)) {
        out.push_back({"coassociativity", "fails at (" + c.names()[a] + ", " + c.names()[b] + ")"});
        return out;
      }
    }
  return out;
}

Comodule regular_comodule(const Coalgebra& c, Side side) {
  const std::size_t d = c.dim();
  std::vector<Mat> t(d, Mat(c.field(), d, d));
  for (std::size_t b = 0; b < d; ++b)
    for (const TensorTerm& term : c.delta(b)) {
      if (side == Side::Left)
        t[term.i](term.j, b) += term.c;
      else
        t[term.j](term.i, b) += term.c;
    }
  return {c, side, d, std::move(t)};
}

Comodule trivial_comodule(const HopfAlgebra& h, Side side, std::size_t v) {
  std::vector<Mat> t;
  for (std::size_t a = 0; a < h.dim(); ++a) {
    Mat m(h.field(), v, v);
    for (std::size_t i = 0; i < v; ++i) m(i, i) = h.one()[a];
    t.push_back(std::move(m));
  }
  return {h.coalgebra(), side, v, std::move(t)};
}

Comodule corestrict(const Comodule& m, const Coalgebra& d, const Mat& pi) {
  if (pi.rows() != d.dim() || pi.cols() != m.c.dim()) throw InvalidInput("corestrict: projection has the wrong shape");
  std::vector<Mat> t(d.dim(), Mat(d.field(), m.v, m.v));
  for (std::size_t a = 0; a < m.c.dim(); ++a)
    for (std::size_t e = 0; e < d.dim(); ++e)
      if (!pi(e, a).is_zero())
        for (std::size_t i = 0; i < m.v; ++i)
          for (std::size_t j = 0; j < m.v; ++j) t[e](i, j).add_product(pi(e, a), m.coaction[a](i, j));
  return {d, m.side, m.v, std::move(t)};
}

bool is_subcomodule(const Comodule& m, const Subspace& s) {
  if (s.ambient() != m.v) throw InvalidInput("is_subcomodule: subspace has the wrong ambient dimension");
  for (const Mat& t : m.coaction)
    for (const Vec& u : s.vectors())
      if (!s.contains(t * u)) return false;
  return true;
}

Comodule subcomodule(const Comodule& m, const Subspace& s) {
  if (!is_subcomodule(m, s)) throw InvalidInput("subcomodule: subspace is not a subcomodule");
  std::vector<Mat> t;
  const std::vector<Vec> basis = s.vectors();
  for (const Mat& a : m.coaction) {
    Mat r(m.c.field(), s.dim(), s.dim());
    for (std::size_t j = 0; j < basis.size(); ++j) r.set_col(j, s.coordinates(a * basis[j]));
    t.push_back(std::move(r));
  }
  return {m.c, m.side, s.dim(), std::move(t)};
}

Comodule quotient_comodule(const Comodule& m, const Subspace& s) {
  if (!is_subcomodule(m, s)) throw InvalidInput("quotient_comodule: subspace is not a subcomodule");
  const Quotient q = quotient_basis(Subspace::full(m.c.field(), m.v), s);
  std::vector<Mat> t;
  for (const Mat& a : m.coaction) t.push_back(q.project * a * q.lift);
  return {m.c, m.side, q.lift.cols(), std::move(t)};
}

Subspace generated_subcomodule(const Comodule& m, const std::vector<Vec>& vs) {
  SpanBuilder b(m.c.field(), m.v);
  std::vector<Vec> queue;
  for (const Vec& v : vs)
    if (b.add(v)) queue.push_back(v);
  for (std::size_t i = 0; i < queue.size() && !b.full(); ++i)
    for (const Mat& t : m.coaction) {
      Vec w = t * queue[i];
      if (b.add(w)) queue.push_back(std::move(w));
    }
  return b.build();
}

MatrixAlgebra coefficient_algebra(const Comodule& m) {
  std::vector<Mat> span;
  for (const Mat& t : m.coaction)
    if (!t.is_zero()) span.push_back(t);
  return MatrixAlgebra(m.c.field(), m.v, span, identity_like(m), false);
}

std::vector<Mat> comodule_maps(const Comodule& from, const Comodule& to) {
  require_same(from, to, "comodule_maps");
  const Field& f = from.c.field();
  const std::size_t r = to.v, c = from.v;
  const Mat k = common_kernel(f, r * c, from.c.dim(), [&](std::size_t a, const Vec& x) {
    const Mat xm = rect(f, r, c, x);
    return flat(to.coaction[a] * xm - xm * from.coaction[a]);
  });
  std::vector<Mat> out;
  for (std::size_t j = 0; j < k.cols(); ++j) out.push_back(rect(f, r, c, k.col(j)));
  return out;
}

MatrixAlgebra endomorphism_algebra(const Comodule& m) {
  if (is_regular(m)) {
    // The commutant of one regular coaction is spanned by the other side's coaction.
    const Comodule other = regular_comodule(m.c, m.side == Side::Left ? Side::Right : Side::Left);
    return MatrixAlgebra(m.c.field(), m.v, other.coaction, identity_like(m), false);
  }
  return MatrixAlgebra(m.c.field(), m.v, comodule_maps(m, m), identity_like(m), false);
}

Subspace socle(const Comodule& m) {
  const std::vector<Mat> rad = coefficient_algebra(m).radical();
  if (rad.empty()) return Subspace::full(m.c.field(), m.v);
  std::vector<Vec> rows;
  for (const Mat& j : rad)
    for (std::size_t i = 0; i < j.rows(); ++i) rows.push_back(j.row(i));
  return kernel(Mat::from_rows(m.c.field(), m.v, rows));
}

Subspace comodule_radical(const Comodule& m) {
  SpanBuilder b(m.c.field(), m.v);
  for (const Mat& j : coefficient_algebra(m).radical())
    for (std::size_t c = 0; c < j.cols(); ++c) b.add(j.col(c));
  return b.build();
}

Subspace maximal_subcomodule(const Comodule& m) {
  if (m.v == 0) throw InvalidInput("maximal_subcomodule: zero comodule");
  const Subspace rad = comodule_radical(m);
  const Comodule top = quotient_comodule(m, rad);
  const Quotient q = quotient_basis(Subspace::full(m.c.field(), m.v), rad);
  const std::vector<Subspace> simples = simple_decomposition(top, Subspace::full(m.c.field(), top.v));
  Subspace out = rad;
  for (std::size_t i = 1; i < simples.size(); ++i) out = sum(out, map_subspace(q.lift, simples[i]));
  return out;
}

bool is_simple(const Comodule& m, const Subspace& s) {
  if (s.dim() == 0 || !is_subcomodule(m, s)) return false;
  const Comodule sub = subcomodule(m, s);
  if (!coefficient_algebra(sub).radical().empty()) return false;
  return primitive_idempotents(endomorphism_algebra(sub)).size() == 1;
}

std::vector<Subspace> simple_decomposition(const Comodule& m, const Subspace& s) {
  const Comodule sub = subcomodule(m, s);
  if (!coefficient_algebra(sub).radical().empty())
    throw InvalidInput("simple_decomposition: subcomodule is not semisimple");
  const Mat inc = inclusion_map(s);
  std::vector<Subspace> out;
  for (const Mat& e : primitive_idempotents(endomorphism_algebra(sub))) {
    Subspace u = map_subspace(inc, image(e));
    // A summand of a semisimple comodule with local endomorphisms is simple; every
    // nonzero vector must then generate it.
    for (const Vec& v : u.vectors())
      if (generated_subcomodule(m, {v}) != u) throw HardFailure("simple_decomposition: summand is not simple");
    out.push_back(std::move(u));
  }
  return out;
}

std::vector<Subspace> indecomposable_decomposition(const Comodule& m) {
  std::vector<Subspace> out;
  for (const Mat& e : end_idempotents(m)) out.push_back(image(e));
  return out;
}

bool has_local_endomorphisms(const Comodule& m, const Subspace& s) {
  if (s.dim() == 0) return false;
  return primitive_idempotents(endomorphism_algebra(subcomodule(m, s))).size() == 1;
}

Subspace injective_hull(const Comodule& m, const Subspace& s) { return hull_from(m, end_idempotents(m), s); }

Subspace hull_of_unit(const HopfAlgebra& h, Side side) {
  return injective_hull(regular_comodule(h.coalgebra(), side), Subspace::span(h.field(), h.dim(), {h.one()}));
}

namespace {

IntegralData integrals(const HopfAlgebra& h, bool left) {
  const Field& f = h.field();
  const std::size_t d = h.dim();
  const Vec one = h.one();
  // Row (b, i): coefficient of e_i in int(h_2) h_1 - int(h) 1 (left) or int(h_1) h_2 - int(h) 1.
  Mat sys(f, d * d, d);
  for (std::size_t b = 0; b < d; ++b) {
    for (const TensorTerm& t : h.coalgebra().delta(b)) {
      if (left)
        sys(b * d + t.i, t.j) += t.c;
      else
        sys(b * d + t.j, t.i) += t.c;
    }
    for (std::size_t i = 0; i < d; ++i) sys(b * d + i, b) -= one[i];
  }
  const Subspace space = kernel(sys);
  if (space.dim() != 1)
    throw HardFailure("integrals: space of " + std::string(left ? "left" : "right") + " integrals has dimension " +
                      std::to_string(space.dim()));
  const Vec in = space.vector(0);
  // The other-sided identity defines g.
  auto twisted = [&](std::size_t b) {
    Vec r = zero_vec(f, d);
    for (const TensorTerm& t : h.coalgebra().delta(b)) {
      if (left)
        r[t.j].add_product(t.c, in[t.i]);
      else
        r[t.i].add_product(t.c, in[t.j]);
    }
    return r;
  };
  const std::size_t piv = space.pivots()[0];
  const Vec g = scale(in[piv].inverse(), twisted(piv));
  for (std::size_t b = 0; b < d; ++b)
    if (twisted(b) != scale(in[b], g)) throw HardFailure("integrals: no distinguished group-like");
  if (h.epsilon(g) != Scalar::one(f) || h.comultiply(g) != flatten(kron(Mat::from_columns(f, d, {g}),
                                                                         Mat::from_rows(f, d, {g}))))
    throw HardFailure("integrals: distinguished element is not group-like");
  return {space, in, g};
}

}  // namespace

IntegralData left_integrals(const HopfAlgebra& h) { return integrals(h, true); }
IntegralData right_integrals(const HopfAlgebra& h) { return integrals(h, false); }

bool is_cosemisimple_by_integral(const HopfAlgebra& h) {
  const bool by_integral = !dot(left_integrals(h).integral, h.one()).is_zero();
  if (by_integral != is_cosemisimple(h.coalgebra()))
    throw HardFailure("is_cosemisimple: integral criterion disagrees with the coradical");
  return by_integral;
}

RadfordReport check_radford(const HopfAlgebra& h) {
  RadfordReport r;
  const Subspace h0 = coradical(h.coalgebra());
  const Subspace e = hull_of_unit(h, Side::Right);
  const Subspace p = subspace_product(h.algebra(), h0, e);
  r.coradical_dim = h0.dim();
  r.hull_dim = e.dim();
  r.product_dim = p.dim();
  r.holds = p.is_full();
  return r;
}

Subspace unique_maximal_subcomodule(const Comodule& e) {
  const Subspace rad = comodule_radical(e);
  const Comodule top = quotient_comodule(e, rad);
  if (!is_simple(top, Subspace::full(e.c.field(), top.v)))
    throw InvalidInput("unique_maximal_subcomodule: the comodule has more than one maximal subcomodule");
  return rad;
}

IntegralVanishingReport check_integral_vanishing(const HopfAlgebra& h) {
  IntegralVanishingReport r;
  const Comodule reg = regular_comodule(h.coalgebra(), Side::Right);
  const Subspace e = hull_of_unit(h, Side::Right);
  const Comodule ec = subcomodule(reg, e);
  const Subspace local = unique_maximal_subcomodule(ec);
  const Subspace m = map_subspace(inclusion_map(e), local);
  const IntegralData in = left_integrals(h);
  r.hull_dim = e.dim();
  r.maximal_dim = m.dim();
  const Comodule top = quotient_comodule(ec, local);
  r.quotient_one_dimensional = top.v == 1;
  if (r.quotient_one_dimensional) {
    r.quotient_grouplike = zero_vec(h.field(), h.dim());
    for (std::size_t a = 0; a < h.dim(); ++a) r.quotient_grouplike[a] = top.coaction[a](0, 0);
    r.quotient_is_distinguished = r.quotient_grouplike == in.distinguished_grouplike;
  }
  for (const Vec& v : e.vectors())
    if (!dot(in.integral, v).is_zero()) r.nonzero_on_hull = true;
  r.zero_on_maximal = true;
  for (const Vec& v : m.vectors())
    if (!dot(in.integral, v).is_zero()) r.zero_on_maximal = false;
  return r;
}

Subspace cotensor(const Comodule& m, const Comodule& x) {
  if (m.side != Side::Right || x.side != Side::Left) throw InvalidInput("cotensor: expects a right and a left comodule");
  if (!same_structure(m.c, x.c)) throw InvalidInput("cotensor: comodules over different coalgebras");
  const Field& f = m.c.field();
  const Mat im = Mat::identity(f, m.v), ix = Mat::identity(f, x.v);
  const Mat k = common_kernel(f, m.v * x.v, m.c.dim(), [&](std::size_t a, const Vec& z) {
    return kron(m.coaction[a], ix) * z - kron(im, x.coaction[a]) * z;
  });
  return image(k);
}

Subspace cotensor_by_coinvariants(const HopfAlgebra& h, const Comodule& m, const Comodule& x) {
  if (m.side != Side::Right || x.side != Side::Left)
    throw InvalidInput("cotensor_by_coinvariants: expects a right and a left comodule");
  if (!same_structure(m.c, h.coalgebra()) || !same_structure(x.c, h.coalgebra()))
    throw InvalidInput("cotensor_by_coinvariants: comodules are not over the given Hopf algebra");
  const Field& f = h.field();
  const std::size_t d = h.dim();
  const auto sinv = inverse(h.antipode());
  if (!sinv) throw InvalidInput("cotensor_by_coinvariants: antipode is not bijective");
  // p[b][a] = S^{-1}(e_b) e_a
  std::vector<std::vector<Vec>> p(d);
  for (std::size_t b = 0; b < d; ++b)
    for (std::size_t a = 0; a < d; ++a) p[b].push_back(h.multiply(sinv->col(b), h.basis_vector(a)));
  std::vector<std::size_t> am, bx;
  for (std::size_t a = 0; a < d; ++a) {
    if (!m.coaction[a].is_zero()) am.push_back(a);
    if (!x.coaction[a].is_zero()) bx.push_back(a);
  }
  std::map<std::pair<std::size_t, std::size_t>, Mat> op;
  for (std::size_t a : am)
    for (std::size_t b : bx) op.emplace(std::make_pair(a, b), kron(m.coaction[a], x.coaction[b]));
  const Vec one = h.one();
  const Mat k = common_kernel(f, m.v * x.v, d, [&](std::size_t c, const Vec& z) {
    Vec r = scale(-one[c], z);
    for (const auto& [ab, mat] : op) {
      const Scalar& w = p[ab.second][ab.first][c];
      if (!w.is_zero()) axpy(r, w, mat * z);
    }
    return r;
  });
  return image(k);
}

Subspace cotensor_checked(const HopfAlgebra& h, const Comodule& m, const Comodule& x) {
  const Subspace a = cotensor(m, x);
  if (a != cotensor_by_coinvariants(h, m, x))
    throw HardFailure("cotensor: equalizer and coinvariant computations disagree");
  return a;
}

bool is_hopf_map(const HopfAlgebra& a, const HopfAlgebra& b, const Mat& f) {
  if (f.rows() != b.dim() || f.cols() != a.dim() || !(a.field() == b.field())) return false;
  if (f * a.one() != b.one()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const Vec fi = f.col(i);
    if (b.epsilon(fi) != a.epsilon(a.basis_vector(i))) return false;
    if (b.antipode(fi) != f * a.antipode(a.basis_vector(i))) return false;
    if (b.coalgebra().comultiply_matrix(fi) != f * a.coalgebra().comultiply_matrix(a.basis_vector(i)) * f.transpose())
      return false;
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (b.multiply(fi, f.col(j)) != f * a.multiply(a.basis_vector(i), a.basis_vector(j))) return false;
  }
  return true;
}

bool is_normal(const HopfAlgebra& b, const Subspace& sub) {
  const std::vector<Vec> basis = sub.vectors();
  for (std::size_t k = 0; k < b.dim(); ++k)
    for (const Vec& s : basis) {
      Vec acc = zero_vec(b.field(), b.dim());
      for (const TensorTerm& t : b.coalgebra().delta(k))
        axpy(acc, t.c, b.multiply(b.multiply(b.basis_vector(t.i), s), b.antipode().col(t.j)));
      if (!sub.contains(acc)) return false;
    }
  return true;
}

HopfQuotient quotient_hopf(const HopfAlgebra& b, const Subspace& ideal) {
  if (!is_hopf_ideal(b, ideal)) throw InvalidInput("quotient_hopf: subspace is not a Hopf ideal");
  const Field& f = b.field();
  const Quotient q = quotient_basis(Subspace::full(f, b.dim()), ideal);
  const std::size_t n = q.lift.cols();
  std::vector<std::string> names;
  std::vector<Vec> lifts;
  for (std::size_t i = 0; i < n; ++i) {
    lifts.push_back(q.lift.col(i));
    names.push_back("[" + format_vector(b.names(), lifts.back()) + "]");
  }
  std::vector<std::vector<TensorTerm>> delta(n);
  std::vector<std::vector<LinearTerm>> mult(n * n);
  Vec counit = zero_vec(f, n);
  Mat s(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Mat dm = q.project * b.coalgebra().comultiply_matrix(lifts[i]) * q.project.transpose();
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (!dm(r, c).is_zero()) delta[i].push_back({r, c, dm(r, c)});
    counit[i] = b.epsilon(lifts[i]);
    s.set_col(i, q.project * b.antipode(lifts[i]));
    for (std::size_t j = 0; j < n; ++j) {
      const Vec pr = q.project * b.multiply(lifts[i], lifts[j]);
      for (std::size_t k = 0; k < n; ++k)
        if (!pr[k].is_zero()) mult[i * n + j].push_back({k, pr[k]});
    }
  }
  HopfAlgebra quotient(Coalgebra(f, names, std::move(delta), std::move(counit)),
                       AlgebraData(f, names, std::move(mult), q.project * b.one()), std::move(s));
  return {std::move(quotient), q.project};
}

ExactSequence build_exact_sequence(const HopfAlgebra& a, const HopfAlgebra& b, const Mat& iota) {
  if (iota.rows() != b.dim() || iota.cols() != a.dim()) throw InvalidInput("build_exact_sequence: embedding has the wrong shape");
  if (rank(iota) != a.dim()) throw InvalidInput("build_exact_sequence: embedding is not injective");
  if (!is_hopf_map(a, b, iota)) throw InvalidInput("build_exact_sequence: embedding is not a Hopf map");
  const Field& f = b.field();
  const Subspace img = image(iota);
  if (!is_normal(b, img)) throw InvalidInput("build_exact_sequence: image is not normal");
  const Subspace a_plus = kernel(Mat::from_rows(f, a.dim(), {a.coalgebra().counit()}));
  const Subspace ba_plus =
      subspace_product(b.algebra(), Subspace::full(f, b.dim()), map_subspace(iota, a_plus));
  HopfQuotient q = quotient_hopf(b, ba_plus);
  if (kernel(q.projection) != ba_plus) throw HardFailure("exactness failure: ker pi differs from B A+");
  Subspace coinv = coinvariants(b, q.projection);
  if (coinv != img) throw HardFailure("exactness failure: coinvariants differ from the image of A");
  return {a, b, std::move(q.quotient), iota, std::move(q.projection), ba_plus, std::move(coinv)};
}

ExactSequenceReport check_exseq_theorems(const ExactSequence& seq) {
  ExactSequenceReport r;
  const Vec in = left_integrals(seq.b).integral;
  for (std::size_t j = 0; j < seq.iota.cols(); ++j)
    if (!dot(in, seq.iota.col(j)).is_zero()) r.integral_nonzero_on_a = true;
  r.a_cosemisimple = is_cosemisimple_by_integral(seq.a);
  r.b_cosemisimple = is_cosemisimple_by_integral(seq.b);
  r.c_cosemisimple = is_cosemisimple_by_integral(seq.c);
  if (!r.ok()) throw HardFailure("check_exseq_theorems: an equivalence fails");
  return r;
}

bool is_projective(const Comodule& m, const HopfAlgebra& h) {
  if (m.side != Side::Right || !same_structure(m.c, h.coalgebra()))
    throw InvalidInput("is_projective: expects a right comodule over the Hopf algebra");
  const Field& f = h.field();
  const std::size_t d = h.dim(), v = m.v;
  if (v == 0) return true;
  const Comodule reg = regular_comodule(h.coalgebra(), Side::Right);
  // H is free of rank one over H*: find t with {T_a t} a basis; then t -> p
  // extends to a comodule map phi_p: H -> M for every p.
  std::mt19937_64 rng(0x5eed);
  std::optional<Mat> cinv;
  for (std::size_t attempt = 0; attempt < 64 && !cinv; ++attempt) {
    Vec t = zero_vec(f, d);
    for (std::size_t i = 0; i < d; ++i) t[i] = Scalar(f, static_cast<long>(rng() % 7) - 3);
    std::vector<Vec> cols;
    for (const Mat& ta : reg.coaction) cols.push_back(ta * t);
    cinv = inverse(Mat::from_columns(f, d, cols));
  }
  if (!cinv) throw HardFailure("is_projective: no free generator of H found");
  // Surjection pi = (phi_{e_k})_k from H^v; splitting sigma_k(x) = sum_a f_k(T_a x) e_a
  // with the f_k unknown. Solve sum_k phi_k sigma_k = id.
  std::vector<Mat> phi;
  for (std::size_t k = 0; k < v; ++k) {
    Mat img(f, v, d);
    for (std::size_t a = 0; a < d; ++a) img.set_col(a, m.coaction[a].col(k));
    phi.push_back(img * *cinv);
  }
  Mat sys(f, v * v, v * v);
  for (std::size_t a = 0; a < d; ++a) {
    const Mat& ta = m.coaction[a];
    if (ta.is_zero()) continue;
    for (std::size_t k = 0; k < v; ++k)
      for (std::size_t p = 0; p < v; ++p) {
        const Scalar& w = phi[k](p, a);
        if (w.is_zero()) continue;
        for (std::size_t l = 0; l < v; ++l)
          for (std::size_t q = 0; q < v; ++q)
            if (!ta(l, q).is_zero()) sys(p * v + q, k * v + l).add_product(w, ta(l, q));
      }
  }
  return solve(sys, flatten(Mat::identity(f, v))).has_value();
}

bool ProjectivityReport::all() const {
  for (bool b : projective)
    if (!b) return false;
  return true;
}

ProjectivityReport injective_implies_projective_check(const HopfAlgebra& h) {
  ProjectivityReport r;
  const Comodule reg = regular_comodule(h.coalgebra(), Side::Right);
  r.subjects.push_back("H");
  r.projective.push_back(is_projective(reg, h));
  const std::vector<Mat> idem = end_idempotents(reg);
  for (const Subspace& s : simple_decomposition(reg, socle(reg))) {
    const Subspace e = hull_from(reg, idem, s);
    r.subjects.push_back("E(" + format_vector(h.names(), s.vector(0)) + ")");
    r.projective.push_back(is_projective(subcomodule(reg, e), h));
  }
  return r;
}

}  // namespace hopflab
