#include "hopflab/coradical.hpp"

#include <algorithm>
#include <cstdint>

namespace hopflab {

namespace {

Vec basis_vec(const Field& f, std::size_t d, std::size_t i) { return unit_vec(f, d, i); }

// Integer d x d matrices modulo m, row-major.
using IntMat = std::vector<std::int64_t>;

IntMat mul_mod(const IntMat& a, const IntMat& b, std::size_t n, std::int64_t m) {
  IntMat c(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const std::int64_t aik = a[i * n + k];
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const auto v = static_cast<__int128>(aik) * b[k * n + j] + c[i * n + j];
        c[i * n + j] = static_cast<std::int64_t>(v % m);
      }
    }
  return c;
}

std::int64_t trace_of_power_mod(IntMat a, std::size_t n, std::int64_t e, std::int64_t m) {
  IntMat r(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) r[i * n + i] = 1 % m;
  while (e > 0) {
    if (e & 1) r = mul_mod(r, a, n, m);
    e >>= 1;
    if (e > 0) a = mul_mod(a, a, n, m);
  }
  std::int64_t t = 0;
  for (std::size_t i = 0; i < n; ++i) t = (t + r[i * n + i]) % m;
  return t;
}

// g_i(y) = (Tr(L~_y^{p^i}) mod p^{i+1}) / p^i with L~_y the lift of L_y to [0, p).
std::int64_t power_trace(const AlgebraData& a, const Vec& y, std::int64_t p, int i) {
  const Mat l = a.left_multiplication(y);
  const std::size_t n = a.dim();
  IntMat lift(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) lift[r * n + c] = l(r, c).residue();
  std::int64_t pi = 1;
  for (int k = 0; k < i; ++k) pi *= p;
  const std::int64_t m = pi * p;
  const std::int64_t t = trace_of_power_mod(std::move(lift), n, pi, m);
  if (t % pi != 0) throw HardFailure("jacobson_radical: power trace is not divisible by p^i");
  return t / pi;
}

Subspace prime_field_radical(const AlgebraData& a) {
  const Field& f = a.field();
  const std::int64_t p = f.characteristic();
  const std::size_t d = a.dim();
  int levels = 0;  // floor(log_p d)
  for (std::int64_t q = p; q <= static_cast<std::int64_t>(d); q *= p) ++levels;
  Subspace current = Subspace::full(f, d);
  for (int i = 0; i <= levels && current.dim() > 0; ++i) {
    // G(b, r) = g_i(x_r e_b)
    Mat g(f, d, current.dim());
    for (std::size_t r = 0; r < current.dim(); ++r)
      for (std::size_t b = 0; b < d; ++b)
        g(b, r) = Scalar(f, static_cast<long>(power_trace(a, a.multiply(current.vector(r), basis_vec(f, d, b)), p, i)));
    const Subspace coeffs = kernel(g);
    std::vector<Vec> next;
    for (const Vec& c : coeffs.vectors()) {
      Vec v = zero_vec(f, d);
      for (std::size_t r = 0; r < c.size(); ++r) axpy(v, c[r], current.vector(r));
      next.push_back(std::move(v));
    }
    current = Subspace::span(f, d, next);
  }
  return current;
}

Vec regular_traces(const AlgebraData& a) {
  // t_k = Tr(L_{e_k}) = sum_i m_{k i}^i
  const std::size_t d = a.dim();
  Vec t = zero_vec(a.field(), d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t i = 0; i < d; ++i)
      for (const auto& term : a.product(k, i))
        if (term.k == i) t[k] += term.c;
  return t;
}

// Span of f(i, j) over a grid of index pairs, evaluated in parallel.
template <class Fn>
Subspace span_of_grid(const Field& field, std::size_t ambient, std::size_t n1, std::size_t n2, Fn fn) {
  const std::size_t n = n1 * n2;
  std::vector<Vec> values(n);
  const auto total = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t idx = 0; idx < total; ++idx) {
    const auto k = static_cast<std::size_t>(idx);
    values[k] = fn(k / n2, k % n2);
  }
  SpanBuilder b(field, ambient);
  for (const auto& v : values)
    if (b.add(v) && b.full()) break;
  return b.build();
}

}  // namespace

Subspace trace_form_radical(const AlgebraData& a) {
  const std::size_t d = a.dim();
  const Vec t = regular_traces(a);
  // B(e_a, e_b) = Tr(L_{e_a e_b}) = sum_k m_ab^k t_k
  Mat b(a.field(), d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& term : a.product(i, j))
        if (!t[term.k].is_zero()) b(i, j).add_product(term.c, t[term.k]);
  return kernel(b);
}

Subspace jacobson_radical(const AlgebraData& a) {
  if (a.field().kind() == FieldKind::Prime) return prime_field_radical(a);
  return trace_form_radical(a);
}

Subspace coradical(const Coalgebra& c) { return annihilator(jacobson_radical(dual(c))); }

bool is_cosemisimple(const Coalgebra& c) { return coradical(c).is_full(); }

Subspace wedge(const Coalgebra& c, const Subspace& d, const Subspace& e) {
  if (d.ambient() != c.dim() || e.ambient() != c.dim()) throw InvalidInput("wedge: dimension mismatch");
  const Subspace dp = annihilator(d), ep = annihilator(e);
  const Subspace prod = span_of_grid(c.field(), c.dim(), dp.dim(), ep.dim(), [&](std::size_t i, std::size_t j) {
    return c.convolve(dp.vector(i), ep.vector(j));
  });
  return annihilator(prod);
}

Subspace wedge_by_kernel(const Coalgebra& c, const Subspace& d, const Subspace& e) {
  if (d.ambient() != c.dim() || e.ambient() != c.dim()) throw InvalidInput("wedge: dimension mismatch");
  const std::size_t n = c.dim();
  const Field& f = c.field();
  // W = D (x) C + C (x) E inside C (x) C
  SpanBuilder w(f, n * n);
  for (const Vec& u : d.vectors())
    for (std::size_t k = 0; k < n; ++k) {
      Vec t = zero_vec(f, n * n);
      for (std::size_t i = 0; i < n; ++i)
        if (!u[i].is_zero()) t[i * n + k] = u[i];
      w.add(t);
    }
  for (const Vec& u : e.vectors())
    for (std::size_t k = 0; k < n; ++k) {
      Vec t = zero_vec(f, n * n);
      for (std::size_t i = 0; i < n; ++i)
        if (!u[i].is_zero()) t[k * n + i] = u[i];
      w.add(t);
    }
  return preimage(c.comultiplication_map(), w.build());
}

std::vector<std::size_t> Filtration::dims() const {
  std::vector<std::size_t> out;
  for (const auto& t : terms) out.push_back(t.dim());
  return out;
}

namespace {

Filtration wedge_chain(const Coalgebra& c, const Subspace& start) {
  Filtration f;
  f.terms.push_back(start);
  while (!f.terms.back().is_full()) {
    Subspace next = wedge(c, f.terms.back(), start);
    if (next == f.terms.back()) throw HardFailure("wedge filtration stalled below the whole coalgebra");
    f.terms.push_back(std::move(next));
  }
  return f;
}

}  // namespace

AdaptedBasis adapted_basis(const Filtration& f) {
  AdaptedBasis out;
  for (std::size_t n = 0; n < f.terms.size(); ++n) {
    const Mat lift = n == 0 ? f.terms[0].basis().transpose() : quotient_basis(f.terms[n], f.terms[n - 1]).lift;
    for (std::size_t k = 0; k < lift.cols(); ++k) {
      out.vectors.push_back(lift.col(k));
      out.degree.push_back(n);
    }
  }
  return out;
}

Filtration coradical_filtration(const Coalgebra& c) { return wedge_chain(c, coradical(c)); }

Filtration coradical_filtration_by_radical(const Coalgebra& c) {
  const AlgebraData dual_alg = dual(c);
  const Subspace j = jacobson_radical(dual_alg);
  Filtration f;
  Subspace power = j;
  for (;;) {
    f.terms.push_back(annihilator(power));
    if (power.dim() == 0) break;
    Subspace next = subspace_product(dual_alg, power, j);
    if (next == power) throw HardFailure("radical powers stabilised before vanishing");
    power = std::move(next);
  }
  return f;
}

HopfCoradicalResult subalgebra_generated(const AlgebraData& a, const Subspace& d) {
  Subspace acc = Subspace::span(a.field(), a.dim(), {a.unit()});
  for (std::size_t r = 0;; ++r) {
    Subspace next = sum(acc, subspace_product(a, acc, d));
    if (next == acc) return {acc, r};
    acc = std::move(next);
  }
}

HopfCoradicalResult hopf_coradical(const HopfAlgebra& h) {
  const Subspace h0 = coradical(h.coalgebra());
  if (!h0.contains(map_subspace(h.antipode(), h0)))
    throw InvalidInput("hopf_coradical: the coradical is not stable under the antipode");
  return subalgebra_generated(h.algebra(), h0);
}

Filtration standard_filtration(const HopfAlgebra& h) { return wedge_chain(h.coalgebra(), hopf_coradical(h).subspace); }

std::vector<FiltrationFailure> verify_hopf_filtration(const HopfAlgebra& h, const Filtration& f) {
  std::vector<FiltrationFailure> out;
  const Field& field = h.field();
  const std::size_t d = h.dim();
  if (f.terms.empty()) return {{"chain", 0, "empty filtration"}};
  for (std::size_t n = 0; n < f.terms.size(); ++n)
    if (f.terms[n].ambient() != d) return {{"chain", n, "term has the wrong ambient dimension"}};
  for (std::size_t n = 1; n < f.terms.size(); ++n)
    if (!f.terms[n].contains(f.terms[n - 1])) return {{"chain", n, "terms are not increasing"}};
  if (!f.terms.back().is_full()) return {{"chain", f.terminal_index(), "last term is not the whole space"}};

  const AdaptedBasis adapted = adapted_basis(f);
  const std::vector<Vec>& basis = adapted.vectors;
  const std::vector<std::size_t>& degree = adapted.degree;
  const Mat to_adapted = *inverse(Mat::from_columns(field, d, basis));

  std::vector<bool> coproduct_reported(f.terms.size(), false);
  for (std::size_t b = 0; b < d; ++b) {
    const Mat m = h.coalgebra().comultiply_matrix(basis[b]);
    const Mat c = to_adapted * m * to_adapted.transpose();
    for (std::size_t i = 0; i < d && !coproduct_reported[degree[b]]; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (degree[i] + degree[j] > degree[b] && !c(i, j).is_zero()) {
          coproduct_reported[degree[b]] = true;
          out.push_back({"coproduct", degree[b],
                         "Delta(" + format_vector(h.names(), basis[b]) + ") leaves sum F_i (x) F_{n-i}"});
          break;
        }
  }

  std::vector<bool> product_reported(2 * f.terms.size(), false);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      const std::size_t n = degree[a] + degree[b];
      if (product_reported[n]) continue;
      if (!f.at(n).contains(h.multiply(basis[a], basis[b]))) {
        product_reported[n] = true;
        out.push_back({"product", n,
                       format_vector(h.names(), basis[a]) + " * " + format_vector(h.names(), basis[b]) +
                           " leaves F_" + std::to_string(n)});
      }
    }

  for (std::size_t n = 0; n < f.terms.size(); ++n)
    if (map_subspace(h.antipode(), f.terms[n]) != f.terms[n])
      out.push_back({"antipode", n, "S(F_n) != F_n"});
  return out;
}

Subspace j_omega_fixed_point(const HopfAlgebra& h) {
  const std::size_t d = h.dim();
  const Field& f = h.field();
  Subspace counit_kernel = kernel(Mat::from_rows(f, d, {h.coalgebra().counit()}));
  Subspace current = jacobson_radical(h.algebra());
  for (;;) {
    Subspace next = intersect(current, wedge(h.coalgebra(), current, current));
    next = intersect(next, preimage(h.antipode(), current));
    next = intersect(next, counit_kernel);
    next = intersect(next, largest_ideal_in(h.algebra(), current));
    if (next == current) return current;
    current = std::move(next);
  }
}

Subspace j_omega_dual(const HopfAlgebra& h) { return annihilator(hopf_coradical(dual(h)).subspace); }

Subspace j_omega(const HopfAlgebra& h) {
  Subspace a = j_omega_fixed_point(h);
  if (a != j_omega_dual(h)) throw HardFailure("j_omega: fixed point and dual characterisation disagree");
  return a;
}

std::vector<Subspace> subspace_powers(const AlgebraData& a, const Subspace& d) {
  std::vector<Subspace> out{d};
  while (out.back().dim() > 0) {
    Subspace next = subspace_product(a, out.back(), d);
    if (next == out.back()) break;
    out.push_back(std::move(next));
  }
  return out;
}

GrDualReport gr_dual_compat(const HopfAlgebra& h) {
  GrDualReport r;
  const std::size_t d = h.dim();
  const Field& f = h.field();
  const Subspace j = j_omega(h);

  // J^0 = H, J^1, J^2, ... down to 0.
  std::vector<Subspace> powers{Subspace::full(f, d)};
  for (auto& p : subspace_powers(h.algebra(), j)) powers.push_back(std::move(p));
  if (powers.back().dim() != 0) powers.push_back(Subspace::zero(f, d));  // not nilpotent: report mismatch below
  for (std::size_t n = 0; n + 1 < powers.size(); ++n) r.ideal_layers.push_back(powers[n].dim() - powers[n + 1].dim());

  const Filtration dual_std = standard_filtration(dual(h));
  for (std::size_t n = 0; n < dual_std.terms.size(); ++n)
    r.dual_layers.push_back(dual_std.terms[n].dim() - (n == 0 ? 0 : dual_std.terms[n - 1].dim()));

  r.ok = r.ideal_layers == r.dual_layers;
  for (std::size_t n = 0; n < std::min(r.ideal_layers.size(), dual_std.terms.size()); ++n) {
    const Mat ideal_reps = quotient_basis(powers[n], powers[n + 1]).lift;
    const Mat dual_reps = n == 0 ? dual_std.terms[0].basis().transpose()
                                 : quotient_basis(dual_std.terms[n], dual_std.terms[n - 1]).lift;
    const std::size_t rk = ideal_reps.cols() == 0 || dual_reps.cols() == 0
                               ? 0
                               : rank(dual_reps.transpose() * ideal_reps);
    r.pairing_ranks.push_back(rk);
    if (rk != r.ideal_layers[n] || rk != r.dual_layers[n]) r.ok = false;
  }
  return r;
}

}  // namespace hopflab
