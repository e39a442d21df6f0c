#include "hopflab/graded.hpp"

#include <algorithm>

namespace hopflab {

namespace {

std::vector<std::size_t> indices_where(const std::vector<std::size_t>& degree, std::size_t hi_inclusive, bool exact) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < degree.size(); ++i)
    if (exact ? degree[i] == hi_inclusive : degree[i] <= hi_inclusive) out.push_back(i);
  return out;
}

std::vector<LinearTerm> sparse(const Vec& v) {
  std::vector<LinearTerm> out;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) out.push_back({k, v[k]});
  return out;
}

Vec coords_in(const Subspace& s, const Vec& v, const char* what) {
  if (!s.contains(v)) throw HardFailure(std::string(what) + ": element left the expected subspace");
  return s.coordinates(v);
}

// Delta^(2)(e_x) as terms (p, q, r, c).
struct Triple {
  std::size_t p, q, r;
  Scalar c;
};
std::vector<Triple> double_coproduct(const Coalgebra& c, std::size_t x) {
  std::vector<Triple> out;
  for (const auto& t : c.delta(x))
    for (const auto& u : c.delta(t.i)) out.push_back({u.i, u.j, t.j, t.c * u.c});
  return out;
}

void add_scaled(Mat& acc, const Scalar& c, const Mat& x) {
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j)
      if (!x(i, j).is_zero()) acc(i, j).add_product(c, x(i, j));
}

Mat linear_combination(const Field& f, std::size_t v, const std::vector<Mat>& ms, const Vec& coeffs) {
  Mat acc(f, v, v);
  for (std::size_t k = 0; k < ms.size(); ++k)
    if (!coeffs[k].is_zero()) add_scaled(acc, coeffs[k], ms[k]);
  return acc;
}

}  // namespace

Subspace GradedHopf::layer(std::size_t n) const {
  return Subspace::coordinate(hopf.field(), hopf.dim(), indices_where(degree, n, true));
}

Subspace GradedHopf::partial_sum(std::size_t n) const {
  return Subspace::coordinate(hopf.field(), hopf.dim(), indices_where(degree, n, false));
}

GradedHopf associated_graded(const HopfAlgebra& h, const Filtration& f) {
  const auto failures = verify_hopf_filtration(h, f);
  if (!failures.empty())
    throw InvalidInput("associated_graded: not a Hopf filtration (" + failures.front().check + " at n=" +
                       std::to_string(failures.front().n) + ")");
  const Field& field = h.field();
  const std::size_t d = h.dim();
  const AdaptedBasis adapted = adapted_basis(f);
  const std::vector<Vec>& basis = adapted.vectors;
  const std::vector<std::size_t>& deg = adapted.degree;
  const Mat to_basis = Mat::from_columns(field, d, basis);
  const Mat from_basis = *inverse(to_basis);

  std::vector<std::vector<LinearTerm>> mult(d * d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      const Vec p = from_basis * h.multiply(basis[a], basis[b]);
      for (std::size_t k = 0; k < d; ++k)
        if (deg[k] == deg[a] + deg[b] && !p[k].is_zero()) mult[a * d + b].push_back({k, p[k]});
    }

  std::vector<std::vector<TensorTerm>> delta(d);
  Vec counit = zero_vec(field, d);
  Mat s(field, d, d);
  const Mat from_t = from_basis.transpose();
  for (std::size_t a = 0; a < d; ++a) {
    const Mat c = from_basis * h.coalgebra().comultiply_matrix(basis[a]) * from_t;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (deg[i] + deg[j] == deg[a] && !c(i, j).is_zero()) delta[a].push_back({i, j, c(i, j)});
    if (deg[a] == 0) counit[a] = h.epsilon(basis[a]);
    const Vec sa = from_basis * h.antipode(basis[a]);
    for (std::size_t k = 0; k < d; ++k)
      if (deg[k] == deg[a]) s(k, a) = sa[k];
  }
  Vec unit = from_basis * h.one();

  std::vector<std::string> names;
  for (const Vec& v : basis) names.push_back(format_vector(h.names(), v));

  std::vector<std::size_t> layer_dims(f.terms.size(), 0);
  for (std::size_t x : deg) ++layer_dims[x];

  return GradedHopf{HopfAlgebra(Coalgebra(field, names, std::move(delta), std::move(counit)),
                                AlgebraData(field, names, std::move(mult), std::move(unit)), std::move(s)),
                    deg, std::move(layer_dims), to_basis};
}

Mat homogeneous_projection(const GradedHopf& g) {
  Mat p(g.hopf.field(), g.hopf.dim(), g.hopf.dim());
  for (std::size_t i = 0; i < g.hopf.dim(); ++i)
    if (g.degree[i] == 0) p(i, i) = Scalar::one(g.hopf.field());
  return p;
}

Subspace coinvariants(const HopfAlgebra& b, const Mat& pi) {
  const std::size_t db = b.dim(), dc = pi.rows();
  if (pi.cols() != db) throw InvalidInput("coinvariants: projection has the wrong shape");
  const Field& f = b.field();
  const Vec one_c = pi * b.one();
  // x -> (id (x) pi) Delta x - x (x) pi(1), as a (db * dc) x db matrix.
  Mat t(f, db * dc, db);
  for (std::size_t a = 0; a < db; ++a) {
    for (const auto& term : b.coalgebra().delta(a))
      for (std::size_t k = 0; k < dc; ++k)
        if (!pi(k, term.j).is_zero()) t(term.i * dc + k, a).add_product(term.c, pi(k, term.j));
    for (std::size_t k = 0; k < dc; ++k) t(a * dc + k, a) -= one_c[k];
  }
  return kernel(t);
}

Vec Diagram::comultiply(const Vec& r) const {
  const std::size_t m = dim();
  Vec out = zero_vec(algebra.field(), m * m);
  for (std::size_t b = 0; b < m; ++b) {
    if (r[b].is_zero()) continue;
    for (const auto& t : coproduct[b]) out[t.i * m + t.j].add_product(r[b], t.c);
  }
  return out;
}

Diagram diagram(const GradedHopf& g) {
  const HopfAlgebra& h = g.hopf;
  const Field& f = h.field();
  const std::size_t d = h.dim();
  const Mat pi = homogeneous_projection(g);
  const Subspace r = coinvariants(h, pi);
  const std::size_t m = r.dim();

  std::vector<std::size_t> degree(m);
  for (std::size_t a = 0; a < m; ++a) {
    const Vec u = r.vector(a);
    degree[a] = g.degree[r.pivots()[a]];
    for (std::size_t i = 0; i < d; ++i)
      if (!u[i].is_zero() && g.degree[i] != degree[a]) throw HardFailure("diagram: coinvariants are not graded");
  }
  std::vector<std::size_t> layer_dims(g.layer_dims.size(), 0);
  for (std::size_t x : degree) ++layer_dims[x];
  if (layer_dims.empty() || layer_dims[0] != 1) throw HardFailure("diagram: degree-zero part is not span{1}");

  std::vector<std::string> names;
  std::vector<std::vector<LinearTerm>> mult(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    names.push_back(format_vector(h.names(), r.vector(a)));
    for (std::size_t b = 0; b < m; ++b)
      mult[a * m + b] = sparse(coords_in(r, h.multiply(r.vector(a), r.vector(b)), "diagram product"));
  }
  const Vec unit = coords_in(r, h.one(), "diagram unit");
  AlgebraData alg(f, names, std::move(mult), unit);

  // Column i of theta is e_i1 S(pi(e_i2)).
  Mat theta(f, d, d);
  for (std::size_t i = 0; i < d; ++i) {
    Vec col = zero_vec(f, d);
    for (const auto& t : h.coalgebra().delta(i)) {
      if (g.degree[t.j] != 0) continue;
      axpy(col, t.c, h.multiply(h.basis_vector(t.i), h.antipode().col(t.j)));
    }
    theta.set_col(i, col);
  }

  std::vector<std::vector<TensorTerm>> coproduct(m);
  Vec counit = zero_vec(f, m);
  for (std::size_t b = 0; b < m; ++b) {
    const Mat t = theta * h.coalgebra().comultiply_matrix(r.vector(b));
    try {
      coproduct[b] = coordinates_in_tensor_square(r, t);
    } catch (const InvalidInput&) {
      throw HardFailure("diagram: braided coproduct leaves R (x) R");
    }
    counit[b] = h.epsilon(r.vector(b));
  }

  // m(S_R (x) id) Delta_R = epsilon, solved in order of degree. The only term
  // involving S_R(u_b) itself is u_b (x) u_0 with u_0 = unit[0]^{-1} 1.
  Mat s(f, m, m);
  std::vector<bool> known(m, false);
  std::vector<std::size_t> order(m);
  for (std::size_t i = 0; i < m; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return degree[x] < degree[y]; });
  const Scalar u0_scale = unit[0].inverse();  // u_0 = u0_scale * 1
  for (std::size_t b : order) {
    Vec rhs = scale(counit[b], unit);
    Scalar lead = Scalar::zero(f);
    for (const auto& t : coproduct[b]) {
      if (t.i == b && t.j == 0) {
        lead += t.c * u0_scale;
        continue;
      }
      if (!known[t.i]) throw HardFailure("diagram: braided coproduct is not triangular in degree");
      Vec x = zero_vec(f, m);
      x[t.j] = Scalar::one(f);
      axpy(rhs, -t.c, alg.multiply(s.col(t.i), x));
    }
    if (lead.is_zero()) throw HardFailure("diagram: braided coproduct lacks the u (x) 1 term");
    s.set_col(b, scale(lead.inverse(), rhs));
    known[b] = true;
  }

  return Diagram{r, std::move(degree), std::move(layer_dims), std::move(alg), std::move(coproduct), std::move(counit),
                 std::move(s)};
}

Diagram diagram(const HopfAlgebra& h) { return diagram(associated_graded(h, standard_filtration(h))); }

bool degree_one_is_primitive(const Diagram& r) {
  const std::size_t m = r.dim();
  const Field& f = r.algebra.field();
  const Vec one = r.algebra.unit();
  for (std::size_t b = 0; b < m; ++b) {
    if (r.degree[b] != 1) continue;
    Vec want = zero_vec(f, m * m);
    for (std::size_t k = 0; k < m; ++k) {
      want[b * m + k] += one[k];
      want[k * m + b] += one[k];
    }
    if (r.comultiply(unit_vec(f, m, b)) != want) return false;
  }
  return true;
}

HopfAlgebra degree_zero_part(const GradedHopf& g) { return restrict_hopf(g.hopf, g.layer(0)); }

YDModule yd_structure(const GradedHopf& g, const Diagram& r) {
  const HopfAlgebra& h = g.hopf;
  const Field& f = h.field();
  HopfAlgebra l = degree_zero_part(g);
  const std::size_t n0 = l.dim();
  for (std::size_t a = 0; a < n0; ++a)
    if (g.degree[a] != 0) throw HardFailure("yd_structure: graded basis is not degree-ordered");
  const std::size_t m = r.dim();
  std::vector<Mat> action(n0, Mat(f, m, m)), coaction(n0, Mat(f, m, m));
  for (std::size_t j = 0; j < m; ++j) {
    const Vec u = r.subspace.vector(j);
    const Mat c = h.coalgebra().comultiply_matrix(u);
    for (std::size_t a = 0; a < n0; ++a) {
      coaction[a].set_col(j, coords_in(r.subspace, c.row(a), "yd coaction"));
      Vec v = zero_vec(f, h.dim());
      for (const auto& t : h.coalgebra().delta(a))
        axpy(v, t.c, h.multiply(h.multiply(h.basis_vector(t.i), u), h.antipode().col(t.j)));
      action[a].set_col(j, coords_in(r.subspace, v, "yd action"));
    }
  }
  return YDModule{std::move(l), m, std::move(action), std::move(coaction)};
}

std::vector<Violation> validate_yd(const YDModule& m) {
  std::vector<Violation> out;
  const HopfAlgebra& l = m.l;
  const Field& f = l.field();
  const std::size_t n = l.dim();
  if (m.action.size() != n || m.coaction.size() != n) return {{"shape", "one matrix per basis element expected"}};
  auto combo = [&](const std::vector<Mat>& ms, const Vec& coeffs) { return linear_combination(f, m.v, ms, coeffs); };
  const Mat id = Mat::identity(f, m.v);
  if (combo(m.action, l.one()) != id) out.push_back({"module unit", "1 does not act as the identity"});
  for (std::size_t a = 0; a < n && out.size() < 8; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (combo(m.action, l.multiply(l.basis_vector(a), l.basis_vector(b))) != m.action[a] * m.action[b]) {
        out.push_back({"module associativity", l.names()[a] + " * " + l.names()[b]});
        break;
      }
  if (combo(m.coaction, l.coalgebra().counit()) != id) out.push_back({"comodule counit", "(epsilon (x) id) delta != id"});
  // T_b T_a = sum_c delta_c^{ab} T_c
  std::vector<Mat> lhs(n * n, Mat(f, m.v, m.v));
  for (std::size_t c = 0; c < n; ++c)
    for (const auto& t : l.coalgebra().delta(c)) add_scaled(lhs[t.i * n + t.j], t.c, m.coaction[c]);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (lhs[a * n + b] != m.coaction[b] * m.coaction[a]) {
        out.push_back({"comodule coassociativity", l.names()[a] + " (x) " + l.names()[b]});
        a = n;
        break;
      }
  // delta(h . v) = h_1 v_(-1) S(h_3) (x) h_2 . v_(0), compared as n x v matrices per (h, v).
  // right[r] multiplies on the right by S(e_r).
  std::vector<Mat> right;
  for (std::size_t r = 0; r < n; ++r) right.push_back(l.algebra().right_multiplication(l.antipode().col(r)));
  for (std::size_t x = 0; x < n; ++x) {
    const auto d2 = double_coproduct(l.coalgebra(), x);
    bool bad = false;
    for (std::size_t j = 0; j < m.v && !bad; ++j) {
      Mat want(f, n, m.v), got(f, n, m.v);
      const Vec hv = m.action[x].col(j);
      for (std::size_t a = 0; a < n; ++a) want.set_row(a, m.coaction[a] * hv);
      for (const auto& t : d2)
        for (std::size_t a = 0; a < n; ++a) {
          const Vec tv = m.coaction[a].col(j);
          if (is_zero(tv)) continue;
          Vec left = zero_vec(f, n);
          for (const auto& pa : l.algebra().product(t.p, a)) axpy(left, pa.c, right[t.r].col(pa.k));
          const Vec right = m.action[t.q] * tv;
          for (std::size_t p = 0; p < n; ++p) {
            if (left[p].is_zero()) continue;
            for (std::size_t q = 0; q < m.v; ++q)
              if (!right[q].is_zero()) got(p, q).add_product(t.c * left[p], right[q]);
          }
        }
      if (want != got) {
        out.push_back({"yetter-drinfeld", "compatibility fails for " + l.names()[x]});
        bad = true;
      }
    }
  }
  return out;
}

YDModule restrict_yd(const YDModule& m, const Subspace& sub) {
  if (sub.ambient() != m.v) throw InvalidInput("restrict_yd: dimension mismatch");
  const Field& f = m.l.field();
  const std::size_t k = sub.dim();
  auto restrict_all = [&](const std::vector<Mat>& ms, const char* what) {
    std::vector<Mat> out;
    for (const Mat& x : ms) {
      Mat r(f, k, k);
      for (std::size_t j = 0; j < k; ++j) {
        const Vec v = x * sub.vector(j);
        if (!sub.contains(v)) throw InvalidInput(std::string("restrict_yd: subspace is not ") + what);
        r.set_col(j, sub.coordinates(v));
      }
      out.push_back(std::move(r));
    }
    return out;
  };
  return YDModule{m.l, k, restrict_all(m.action, "a submodule"), restrict_all(m.coaction, "a subcomodule")};
}

HopfAlgebra bosonization(const Diagram& r, const YDModule& yd) {
  const HopfAlgebra& l = yd.l;
  const Field& f = l.field();
  const std::size_t m = r.dim(), n = l.dim();
  if (yd.v != m) throw InvalidInput("bosonization: module and diagram dimensions differ");
  const std::size_t d = m * n;
  auto idx = [n](std::size_t i, std::size_t j) { return i * n + j; };
  auto r_unit = [&](std::size_t i) { return unit_vec(f, m, i); };
  // Product of sparse basis vectors in L.
  auto l_mul = [&](std::size_t a, std::size_t b) { return l.algebra().product(a, b); };

  std::vector<std::vector<LinearTerm>> mult(d * d);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t q = 0; q < n; ++q) {
          Vec out = zero_vec(f, d);
          // (u_i # l_j)(u_k # l_q) = u_i (l_j1 . u_k) # l_j2 l_q
          for (const auto& t : l.coalgebra().delta(j)) {
            const Vec moved = yd.action[t.i].col(k);
            if (is_zero(moved)) continue;
            const Vec left = r.algebra.multiply(r_unit(i), moved);
            for (const auto& p : l_mul(t.j, q))
              for (std::size_t a = 0; a < m; ++a)
                if (!left[a].is_zero()) out[idx(a, p.k)].add_product(t.c * p.c, left[a]);
          }
          mult[idx(i, j) * d + idx(k, q)] = sparse(out);
        }
  Vec unit = zero_vec(f, d);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (!r.algebra.unit()[a].is_zero() && !l.one()[b].is_zero()) unit[idx(a, b)] = r.algebra.unit()[a] * l.one()[b];
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) names.push_back("(" + r.algebra.names()[i] + ")#(" + l.names()[j] + ")");
  AlgebraData alg(f, names, std::move(mult), unit);

  // Delta(u_i # l_j) = u_a # u_b(-1) l_j1 (x) u_b(0) # l_j2 over Delta_R(u_i) = u_a (x) u_b.
  std::vector<std::vector<TensorTerm>> delta(d);
  Vec counit = zero_vec(f, d);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Mat acc(f, d, d);
      for (const auto& rt : r.coproduct[i])
        for (std::size_t s = 0; s < n; ++s) {
          const Vec w = yd.coaction[s].col(rt.j);
          if (is_zero(w)) continue;
          for (const auto& lt : l.coalgebra().delta(j))
            for (const auto& p : l_mul(s, lt.i))
              for (std::size_t t = 0; t < m; ++t)
                if (!w[t].is_zero()) acc(idx(rt.i, p.k), idx(t, lt.j)).add_product(rt.c * lt.c * p.c, w[t]);
        }
      for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y)
          if (!acc(x, y).is_zero()) delta[idx(i, j)].push_back({x, y, acc(x, y)});
      counit[idx(i, j)] = r.counit[i] * l.coalgebra().counit()[j];
    }

  // S(u_i # l_j) = (1 # S_L(u_i(-1) l_j)) (S_R(u_i(0)) # 1)
  auto embed = [&](const Vec& rv, const Vec& lv) {
    Vec out = zero_vec(f, d);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (!rv[a].is_zero() && !lv[b].is_zero()) out[idx(a, b)] = rv[a] * lv[b];
    return out;
  };
  Mat s(f, d, d);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec col = zero_vec(f, d);
      for (std::size_t sidx = 0; sidx < n; ++sidx) {
        const Vec w = yd.coaction[sidx].col(i);
        if (is_zero(w)) continue;
        const Vec left = embed(r.algebra.unit(), l.antipode(l.multiply(l.basis_vector(sidx), l.basis_vector(j))));
        for (std::size_t t = 0; t < m; ++t)
          if (!w[t].is_zero()) axpy(col, w[t], alg.multiply(left, embed(r.antipode.col(t), l.one())));
      }
      s.set_col(idx(i, j), col);
    }

  return HopfAlgebra(Coalgebra(f, names, std::move(delta), std::move(counit)), std::move(alg), std::move(s));
}

BosonizationReport verify_bosonization_iso(const GradedHopf& g) {
  const HopfAlgebra& h = g.hopf;
  const Field& f = h.field();
  const Diagram r = diagram(g);
  const YDModule yd = yd_structure(g, r);
  const HopfAlgebra b = bosonization(r, yd);
  const std::size_t m = r.dim(), n = yd.l.dim(), d = b.dim();

  BosonizationReport rep;
  rep.diagram_dim = m;
  rep.degree_zero_dim = n;

  // Phi(u_i # l_j) = u_i l_j, with l_j = e_j inside gr H.
  Mat phi(f, h.dim(), d);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) phi.set_col(i * n + j, h.multiply(r.subspace.vector(i), h.basis_vector(j)));

  rep.bijective = d == h.dim() && rank(phi) == d;

  rep.multiplicative = true;
  for (std::size_t x = 0; x < d && rep.multiplicative; ++x)
    for (std::size_t y = 0; y < d; ++y)
      if (phi * b.multiply(b.basis_vector(x), b.basis_vector(y)) != h.multiply(phi.col(x), phi.col(y))) {
        rep.multiplicative = false;
        break;
      }

  rep.comultiplicative = true;
  const Mat phi_t = phi.transpose();
  for (std::size_t x = 0; x < d && rep.comultiplicative; ++x) {
    const Mat mapped = phi * b.coalgebra().comultiply_matrix(b.basis_vector(x)) * phi_t;
    if (mapped != h.coalgebra().comultiply_matrix(phi.col(x))) rep.comultiplicative = false;
  }

  rep.unital = phi * b.one() == h.one();
  for (std::size_t x = 0; x < d && rep.unital; ++x)
    if (h.epsilon(phi.col(x)) != b.epsilon(b.basis_vector(x))) rep.unital = false;

  rep.antipode_compatible = phi * b.antipode() == h.antipode() * phi;
  return rep;
}

GradedFiltrationReport check_graded_standard_filtration(const GradedHopf& g) {
  GradedFiltrationReport rep;
  const Filtration std_f = standard_filtration(g.hopf);
  rep.standard_dims = std_f.dims();
  const std::size_t top = g.layer_dims.empty() ? 0 : g.layer_dims.size() - 1;
  for (std::size_t k = 0; k <= top; ++k) rep.layer_partial_sums.push_back(g.partial_sum(k).dim());
  rep.terms_equal = std_f.terms.size() == top + 1;
  for (std::size_t k = 0; k <= top && rep.terms_equal; ++k)
    if (std_f.terms[k] != g.partial_sum(k)) rep.terms_equal = false;
  rep.coradical_in_degree_zero = g.layer(0).contains(coradical(g.hopf.coalgebra()));
  return rep;
}

bool is_coradically_graded(const GradedHopf& g) {
  const Filtration c = coradical_filtration(g.hopf.coalgebra());
  if (c.terms.size() != g.layer_dims.size()) return false;
  for (std::size_t k = 0; k < c.terms.size(); ++k)
    if (c.terms[k] != g.partial_sum(k)) return false;
  return true;
}

}  // namespace hopflab
