#include "hopflab/corpus.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <sstream>

namespace hopflab {

namespace {

using Tensor = std::map<std::pair<std::size_t, std::size_t>, Scalar>;

void add_term(Tensor& t, std::size_t i, std::size_t j, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t.emplace(std::make_pair(i, j), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }
}

Tensor tensor_multiply(const AlgebraData& a, const Tensor& x, const Tensor& y) {
  Tensor out;
  for (const auto& [ij, c1] : x)
    for (const auto& [kl, c2] : y) {
      const Scalar c = c1 * c2;
      for (const auto& s : a.product(ij.first, kl.first))
        for (const auto& t : a.product(ij.second, kl.second)) add_term(out, s.k, t.k, c * s.c * t.c);
    }
  return out;
}

std::vector<TensorTerm> to_terms(const Tensor& t) {
  std::vector<TensorTerm> out;
  for (const auto& [ij, c] : t) out.push_back({ij.first, ij.second, c});
  return out;
}

/// Each non-unit basis element is factored as basis[prefix] * generator.
struct Factor {
  std::size_t prefix;
  std::size_t generator;
};

/// Extends Delta, epsilon, S from generators to the whole basis: Delta and
/// epsilon multiplicatively, S anti-multiplicatively. Basis element 0 is the unit.
HopfAlgebra extend_from_generators(const AlgebraData& a, const std::vector<Factor>& factors,
                                   const std::map<std::size_t, Tensor>& gen_delta,
                                   const std::map<std::size_t, Scalar>& gen_counit,
                                   const std::map<std::size_t, Vec>& gen_antipode) {
  const std::size_t d = a.dim();
  const Field& f = a.field();
  std::vector<Tensor> delta(d);
  Vec counit = zero_vec(f, d);
  Mat s(f, d, d);
  delta[0] = Tensor{{{0, 0}, Scalar::one(f)}};
  counit[0] = Scalar::one(f);
  s.set_col(0, unit_vec(f, d, 0));
  for (std::size_t k = 1; k < d; ++k) {
    const Factor& fac = factors.at(k);
    if (fac.prefix >= k) throw Error("generator factorisation must refer to earlier basis elements");
    delta[k] = tensor_multiply(a, delta[fac.prefix], gen_delta.at(fac.generator));
    counit[k] = counit[fac.prefix] * gen_counit.at(fac.generator);
    s.set_col(k, a.multiply(gen_antipode.at(fac.generator), s.col(fac.prefix)));
  }
  std::vector<std::vector<TensorTerm>> terms;
  for (const auto& t : delta) terms.push_back(to_terms(t));
  return HopfAlgebra(Coalgebra(f, a.names(), std::move(terms), std::move(counit)), a, std::move(s));
}

std::vector<std::string> default_group_names(std::size_t n) {
  std::vector<std::string> names{"1"};
  for (std::size_t i = 1; i < n; ++i) names.push_back("g" + std::to_string(i));
  return names;
}

std::vector<std::size_t> group_inverses(const GroupTable& t) {
  std::vector<std::size_t> inv(t.size());
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t.size(); ++j)
      if (t[i][j] == 0) inv[i] = j;
  return inv;
}

std::string power_name(const char* symbol, std::size_t e) {
  if (e == 0) return "";
  return e == 1 ? std::string(symbol) : std::string(symbol) + "^" + std::to_string(e);
}

std::string monomial_name(const std::vector<std::pair<const char*, std::size_t>>& factors) {
  std::string s;
  for (const auto& [sym, e] : factors) s += power_name(sym, e);
  return s.empty() ? "1" : s;
}

}  // namespace

GroupTable cyclic_group(std::size_t n) {
  if (n == 0) throw InvalidInput("cyclic group of order 0");
  GroupTable t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return t;
}

GroupTable symmetric_group(std::size_t n) {
  if (n == 0 || n > 4) throw InvalidInput("symmetric group: n must be between 1 and 4");
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  GroupTable t(perms.size(), std::vector<std::size_t>(perms.size()));
  for (std::size_t i = 0; i < perms.size(); ++i)
    for (std::size_t j = 0; j < perms.size(); ++j) {
      std::vector<std::size_t> comp(n);
      for (std::size_t x = 0; x < n; ++x) comp[x] = perms[i][perms[j][x]];
      t[i][j] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), comp) - perms.begin());
    }
  return t;
}

void check_group_table(const GroupTable& t) {
  const std::size_t n = t.size();
  if (n == 0 || n > 24) throw InvalidInput("group table: order must be between 1 and 24");
  for (const auto& row : t) {
    if (row.size() != n) throw InvalidInput("group table: not square");
    std::vector<bool> seen(n, false);
    for (auto x : row) {
      if (x >= n || seen[x]) throw InvalidInput("group table: rows must be permutations");
      seen[x] = true;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (t[0][i] != i || t[i][0] != i) throw InvalidInput("group table: index 0 is not the identity");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (t[t[i][j]][k] != t[i][t[j][k]]) throw InvalidInput("group table: not associative");
}

HopfAlgebra group_algebra(const Field& f, const GroupTable& t, std::vector<std::string> names) {
  check_group_table(t);
  const std::size_t n = t.size();
  if (names.empty()) names = default_group_names(n);
  if (names.size() != n) throw InvalidInput("group algebra: wrong number of names");
  const auto inv = group_inverses(t);
  std::vector<std::vector<TensorTerm>> delta(n);
  std::vector<std::vector<LinearTerm>> mult(n * n);
  Mat s(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    delta[i].push_back({i, i, Scalar::one(f)});
    s(inv[i], i) = Scalar::one(f);
    for (std::size_t j = 0; j < n; ++j) mult[i * n + j].push_back({t[i][j], Scalar::one(f)});
  }
  Vec counit(n, Scalar::one(f));
  return HopfAlgebra(Coalgebra(f, names, std::move(delta), std::move(counit)),
                     AlgebraData(f, names, std::move(mult), unit_vec(f, n, 0)), std::move(s));
}

HopfAlgebra function_algebra(const Field& f, const GroupTable& t, std::vector<std::string> names) {
  check_group_table(t);
  const std::size_t n = t.size();
  if (names.empty()) {
    for (auto& g : default_group_names(n)) names.push_back("d_" + g);
  }
  if (names.size() != n) throw InvalidInput("function algebra: wrong number of names");
  const auto inv = group_inverses(t);
  std::vector<std::vector<TensorTerm>> delta(n);
  std::vector<std::vector<LinearTerm>> mult(n * n);
  Mat s(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    mult[i * n + i].push_back({i, Scalar::one(f)});
    s(inv[i], i) = Scalar::one(f);
    for (std::size_t j = 0; j < n; ++j) delta[t[i][j]].push_back({i, j, Scalar::one(f)});
  }
  for (auto& terms : delta)
    std::sort(terms.begin(), terms.end(), [](const TensorTerm& a, const TensorTerm& b) {
      return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    });
  return HopfAlgebra(Coalgebra(f, names, std::move(delta), unit_vec(f, n, 0)),
                     AlgebraData(f, names, std::move(mult), Vec(n, Scalar::one(f))), std::move(s));
}

HopfAlgebra taft(std::size_t n) {
  if (n < 2) throw InvalidInput("taft: n must be at least 2");
  if (n > 12) throw InvalidInput("taft: n above 12 is outside the supported range");
  const Field f = n == 2 ? Field::rational() : Field::cyclotomic(static_cast<int>(n));
  const Scalar zeta = n == 2 ? Scalar(f, -1L) : Scalar::zeta(f);
  const std::size_t d = n * n;
  auto idx = [n](std::size_t i, std::size_t j) { return j * n + i; };
  std::vector<std::string> names(d);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) names[idx(i, j)] = monomial_name({{"g", i}, {"x", j}});

  // (g^i x^j)(g^k x^l) = zeta^{jk} g^{i+k} x^{j+l}
  std::vector<std::vector<LinearTerm>> mult(d * d);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t k = 0; k < n; ++k) {
          if (j + l >= n) continue;
          mult[idx(i, j) * d + idx(k, l)].push_back(
              {idx((i + k) % n, j + l), zeta.pow(static_cast<long>((j * k) % n))});
        }
  const AlgebraData a(f, names, std::move(mult), unit_vec(f, d, 0));

  // g^i x^j = (g^i x^{j-1}) x and g^i = g^{i-1} g
  const std::size_t g = idx(1, 0), x = idx(0, 1), g_inv = idx(n - 1, 0), g_inv_x = idx(n - 1, 1);
  std::vector<Factor> factors(d);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      if (i == 0 && j == 0) continue;
      factors[idx(i, j)] = j > 0 ? Factor{idx(i, j - 1), x} : Factor{idx(i - 1, 0), g};
    }
  const Scalar one = Scalar::one(f);
  std::map<std::size_t, Tensor> gd{{g, Tensor{{{g, g}, one}}}, {x, Tensor{{{x, 0}, one}, {{g, x}, one}}}};
  std::map<std::size_t, Scalar> ge{{g, one}, {x, Scalar::zero(f)}};
  std::map<std::size_t, Vec> gs{{g, unit_vec(f, d, g_inv)}, {x, scale(-one, unit_vec(f, d, g_inv_x))}};
  return extend_from_generators(a, factors, gd, ge, gs);
}

HopfAlgebra sweedler4() { return taft(2); }

HopfAlgebra uqsl2(std::size_t l) {
  if (l < 3 || l % 2 == 0 || l > 7) throw InvalidInput("uqsl2: l must be odd with 3 <= l <= 7");
  const Field f = Field::cyclotomic(static_cast<int>(l));
  const Scalar q = Scalar::zeta(f);
  const std::size_t d = l * l * l;
  auto idx = [l](std::size_t a, std::size_t b, std::size_t c) { return (a * l + b) * l + c; };
  std::vector<std::string> names(d);
  for (std::size_t a = 0; a < l; ++a)
    for (std::size_t b = 0; b < l; ++b)
      for (std::size_t c = 0; c < l; ++c) names[idx(a, b, c)] = monomial_name({{"E", a}, {"F", b}, {"K", c}});

  using Elem = std::map<std::size_t, Scalar>;  // normal-ordered E^a F^b K^c
  auto add = [](Elem& e, std::size_t k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, ins] = e.emplace(k, c);
    if (!ins) {
      it->second += c;
      if (it->second.is_zero()) e.erase(it);
    }
  };
  auto split = [l](std::size_t k) { return std::array<std::size_t, 3>{k / (l * l), (k / l) % l, k % l}; };
  // right multiplication by K and F, left multiplication by E^a
  auto times_k = [&](const Elem& x, long power) {
    Elem out;
    const auto lp = static_cast<long>(l);
    for (const auto& [k, c] : x) {
      auto [a, b, e] = split(k);
      add(out, idx(a, b, static_cast<std::size_t>(((static_cast<long>(e) + power) % lp + lp) % lp)), c);
    }
    return out;
  };
  auto times_f = [&](const Elem& x) {
    Elem out;
    for (const auto& [k, c] : x) {
      auto [a, b, e] = split(k);
      if (b + 1 < l) add(out, idx(a, b + 1, e), c * q.pow(-2 * static_cast<long>(e)));
    }
    return out;
  };
  auto e_power_times = [&](std::size_t p, const Elem& x) {
    Elem out;
    for (const auto& [k, c] : x) {
      auto [a, b, e] = split(k);
      if (a + p < l) add(out, idx(a + p, b, e), c);
    }
    return out;
  };
  // [K] = (K - K^{-1}) / (q - q^{-1})
  const Scalar denom = (q - q.inverse()).inverse();
  // fe[b] = F^b E in normal order: F^b E = (F^{b-1} E) F - F^{b-1} [K]
  std::vector<Elem> fe(l);
  fe[0] = Elem{{idx(1, 0, 0), Scalar::one(f)}};
  for (std::size_t b = 1; b < l; ++b) {
    fe[b] = times_f(fe[b - 1]);
    add(fe[b], idx(0, b - 1, 1), -denom);
    add(fe[b], idx(0, b - 1, l - 1), denom);
  }
  auto times_e = [&](const Elem& x) {
    Elem out;
    for (const auto& [k, c] : x) {
      auto [a, b, e] = split(k);
      // E^a F^b K^e E = q^{2e} E^a (F^b E) K^e
      const Elem inner = times_k(e_power_times(a, fe[b]), static_cast<long>(e));
      const Scalar s = c * q.pow(2 * static_cast<long>(e));
      for (const auto& [k2, c2] : inner) add(out, k2, s * c2);
    }
    return out;
  };

  std::vector<std::vector<LinearTerm>> mult(d * d);
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) {
      auto [a, b, c] = split(y);
      Elem r{{x, Scalar::one(f)}};
      for (std::size_t i = 0; i < a; ++i) r = times_e(r);
      for (std::size_t i = 0; i < b; ++i) r = times_f(r);
      r = times_k(r, static_cast<long>(c));
      for (const auto& [k, s] : r) mult[x * d + y].push_back({k, s});
    }
  const AlgebraData alg(f, names, std::move(mult), unit_vec(f, d, 0));

  const std::size_t E = idx(1, 0, 0), F = idx(0, 1, 0), K = idx(0, 0, 1), Kinv = idx(0, 0, l - 1);
  std::vector<Factor> factors(d);
  for (std::size_t k = 1; k < d; ++k) {
    auto [a, b, c] = split(k);
    if (c > 0)
      factors[k] = {idx(a, b, c - 1), K};
    else if (b > 0)
      factors[k] = {idx(a, b - 1, 0), F};
    else
      factors[k] = {idx(a - 1, 0, 0), E};
  }
  const Scalar one = Scalar::one(f);
  std::map<std::size_t, Tensor> gd{{E, Tensor{{{E, K}, one}, {{0, E}, one}}},
                                   {F, Tensor{{{F, 0}, one}, {{Kinv, F}, one}}},
                                   {K, Tensor{{{K, K}, one}}}};
  std::map<std::size_t, Scalar> ge{{E, Scalar::zero(f)}, {F, Scalar::zero(f)}, {K, one}};
  const Vec s_e = scale(-one, unit_vec(f, d, idx(1, 0, l - 1)));  // -E K^{-1}
  const Vec s_f = scale(-one, alg.multiply(unit_vec(f, d, K), unit_vec(f, d, F)));  // -K F
  std::map<std::size_t, Vec> gs{{E, s_e}, {F, s_f}, {K, unit_vec(f, d, Kinv)}};
  return extend_from_generators(alg, factors, gd, ge, gs);
}

HopfAlgebra uqsl2_dual(std::size_t l) { return dual(uqsl2(l)); }

Coalgebra comatrix(const Field& f, std::size_t d) {
  if (d == 0) throw InvalidInput("comatrix: d must be positive");
  std::vector<std::string> names;
  std::vector<std::vector<TensorTerm>> delta(d * d);
  Vec counit = zero_vec(f, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      names.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
      for (std::size_t p = 0; p < d; ++p) delta[i * d + j].push_back({i * d + p, p * d + j, Scalar::one(f)});
      if (i == j) counit[i * d + j] = Scalar::one(f);
    }
  return Coalgebra(f, std::move(names), std::move(delta), std::move(counit));
}

CoalgebraWithS coalgebra_with_s(const Field& f, const std::vector<Mat>& fs, const std::vector<std::size_t>& ns) {
  if (fs.empty() || fs.size() != ns.size()) throw InvalidInput("coalgebra_with_s: need one copy count per matrix");
  std::size_t total = 0;
  for (std::size_t r = 0; r < fs.size(); ++r) {
    const std::size_t dr = fs[r].rows();
    if (fs[r].cols() != dr || dr < 2) throw InvalidInput("coalgebra_with_s: F_r must be square of size at least 2");
    if (r > 0 && dr <= fs[r - 1].rows()) throw InvalidInput("coalgebra_with_s: sizes must increase strictly");
    if (ns[r] == 0) throw InvalidInput("coalgebra_with_s: copy counts must be positive");
    if (!(fs[r].field() == f)) throw InvalidInput("coalgebra_with_s: F_r over another field");
    total += ns[r] * dr * dr;
  }
  std::vector<std::string> names(total);
  std::vector<std::vector<TensorTerm>> delta(total);
  Vec counit = zero_vec(f, total);
  Mat s(f, total, total);
  std::size_t offset = 0;
  for (std::size_t r = 0; r < fs.size(); ++r) {
    const std::size_t dr = fs[r].rows(), nr = ns[r];
    const auto finv = inverse(fs[r]);
    if (!finv) throw InvalidInput("coalgebra_with_s: F_r is not invertible");
    auto idx = [&](std::size_t k, std::size_t i, std::size_t j) { return offset + (k * dr + i) * dr + j; };
    for (std::size_t k = 0; k < nr; ++k)
      for (std::size_t i = 0; i < dr; ++i)
        for (std::size_t j = 0; j < dr; ++j) {
          const std::size_t e = idx(k, i, j);
          names[e] = "e" + std::to_string(r + 1) + "." + std::to_string(k + 1) + "_" + std::to_string(i + 1) +
                     std::to_string(j + 1);
          for (std::size_t p = 0; p < dr; ++p) delta[e].push_back({idx(k, i, p), idx(k, p, j), Scalar::one(f)});
          if (i == j) counit[e] = Scalar::one(f);
          if (k + 1 < nr) {
            s(idx(k + 1, j, i), e) = Scalar::one(f);
          } else {
            // a_ij = sum_{p,q} F_ip e^{1}_{qp} (F^{-1})_qj
            for (std::size_t p = 0; p < dr; ++p)
              for (std::size_t qq = 0; qq < dr; ++qq)
                s(idx(0, qq, p), e) += fs[r](i, p) * (*finv)(qq, j);
          }
        }
    offset += nr * dr * dr;
  }
  CoalgebraWithS out{Coalgebra(f, std::move(names), std::move(delta), std::move(counit)), std::move(s)};
  return out;
}

std::vector<Violation> validate_anti_coalgebra(const Coalgebra& c, const Mat& s) {
  std::vector<Violation> out;
  const std::size_t d = c.dim();
  if (s.rows() != d || s.cols() != d) return {{"shape", "S has the wrong shape"}};
  for (std::size_t a = 0; a < d; ++a) {
    const Vec sa = s.col(a);
    const Mat lhs = c.comultiply_matrix(sa);
    // (S (x) S) Delta^op (e_a) as a matrix: sum c S(e_j) S(e_i)^T over terms e_i (x) e_j
    Mat rhs(c.field(), d, d);
    for (const auto& t : c.delta(a)) {
      const Vec u = s.col(t.j), v = s.col(t.i);
      for (std::size_t i = 0; i < d; ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < d; ++j)
          if (!v[j].is_zero()) rhs(i, j).add_product(t.c, u[i] * v[j]);
      }
    }
    if (lhs != rhs) out.push_back({"anti-coalgebra", "Delta S != (S (x) S) Delta^op on " + c.names()[a]});
    if (c.epsilon(sa) != c.counit()[a]) out.push_back({"anti-coalgebra", "epsilon S != epsilon on " + c.names()[a]});
  }
  if (rank(s) != d) out.push_back({"anti-coalgebra", "S is not bijective"});
  return out;
}

std::size_t order_of(const Mat& s, std::size_t bound) {
  const Mat id = Mat::identity(s.field(), s.rows());
  Mat p = s;
  for (std::size_t k = 1; k <= bound; ++k) {
    if (p == id) return k;
    p = p * s;
  }
  return 0;
}

namespace {

std::vector<std::string> permutation_names(std::size_t n) {
  std::vector<std::string> names;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    std::string s = "p";
    for (auto x : p) s += std::to_string(x);
    names.push_back(s);
  } while (std::next_permutation(p.begin(), p.end()));
  names[0] = "1";
  return names;
}

std::vector<std::string> power_names(const char* symbol, std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(monomial_name({{symbol, i}}));
  return names;
}

// Ideal generated by the elements with some x-degree, for Taft-type bases g^i x^j.
Subspace x_ideal(const HopfAlgebra& h, std::size_t n) {
  std::vector<std::size_t> idx;
  for (std::size_t k = n; k < n * n; ++k) idx.push_back(k);
  return Subspace::coordinate(h.field(), h.dim(), idx);
}

}  // namespace

std::vector<std::string> default_corpus_names() {
  return {"trivial", "qc2", "qc3", "qa3", "qs3", "fs3", "gf2_c2", "sweedler4", "taft3", "taft4", "h4_x_qc3", "uqsl2_dual3"};
}

CorpusEntry corpus_entry(const std::string& name) {
  const Field q = Field::rational();
  if (name == "trivial") return {name, group_algebra(q, cyclic_group(1)), {}};
  if (name == "qc2") return {name, group_algebra(q, cyclic_group(2), power_names("c", 2)), {}};
  if (name == "qc3" || name == "qa3") return {name, group_algebra(q, cyclic_group(3), power_names("c", 3)), {}};
  if (name == "qs3") return {name, group_algebra(q, symmetric_group(3), permutation_names(3)), {}};
  if (name == "fs3") {
    std::vector<std::string> names;
    for (const auto& p : permutation_names(3)) names.push_back("d_" + p);
    return {name, function_algebra(q, symmetric_group(3), names), {}};
  }
  if (name == "gf2_c2") return {name, group_algebra(Field::prime(2), cyclic_group(2), power_names("c", 2)), {}};
  if (name == "sweedler4") {
    HopfAlgebra h = sweedler4();
    Subspace ideal = x_ideal(h, 2);
    return {name, std::move(h), {std::move(ideal)}};
  }
  if (name == "taft3" || name == "taft4") {
    const std::size_t n = name == "taft3" ? 3 : 4;
    HopfAlgebra h = taft(n);
    Subspace ideal = x_ideal(h, n);
    return {name, std::move(h), {std::move(ideal)}};
  }
  if (name == "h4_x_qc3") {
    HopfAlgebra h = tensor_product(sweedler4(), group_algebra(q, cyclic_group(3), power_names("c", 3)));
    // x (x) QC_3 generates a Hopf ideal inside the radical
    Subspace ideal = Subspace::coordinate(q, 12, {6, 7, 8, 9, 10, 11});
    return {name, std::move(h), {std::move(ideal)}};
  }
  if (name == "uqsl2_dual3") return {name, uqsl2_dual(3), {}};
  if (name == "uqsl2_3") return {name, uqsl2(3), {}};
  throw InvalidInput("unknown corpus member '" + name + "'");
}

namespace {

std::size_t param_size(const std::map<std::string, std::string>& params, const std::string& key, std::size_t def) {
  auto it = params.find(key);
  if (it == params.end()) return def;
  try {
    std::size_t pos = 0;
    const long v = std::stol(it->second, &pos);
    if (pos != it->second.size() || v < 0) throw InvalidInput("");
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw InvalidInput("parameter " + key + " must be a non-negative integer");
  }
}

Mat parse_matrix_param(const Field& f, const std::string& text) {
  std::vector<Vec> rows;
  std::stringstream rs(text);
  std::string row;
  std::size_t cols = 0;
  while (std::getline(rs, row, ';')) {
    Vec r;
    std::stringstream cs(row);
    std::string cell;
    while (std::getline(cs, cell, ',')) {
      try {
        r.push_back(Scalar(f, mpq_class(cell)));
      } catch (const std::exception&) {
        throw InvalidInput("matrix parameter: bad entry '" + cell + "'");
      }
    }
    if (!rows.empty() && r.size() != cols) throw InvalidInput("matrix parameter: ragged rows");
    cols = r.size();
    rows.push_back(std::move(r));
  }
  if (rows.empty()) throw InvalidInput("matrix parameter: empty");
  return Mat::from_rows(f, cols, rows);
}

}  // namespace

BuiltStructure build_named(const std::string& name, const std::map<std::string, std::string>& params) {
  const Field q = Field::rational();
  BuiltStructure out;
  if (name == "cyclic") {
    const std::size_t n = param_size(params, "n", 2), p = param_size(params, "p", 0);
    out.hopf = group_algebra(p == 0 ? q : Field::prime(static_cast<std::int64_t>(p)), cyclic_group(n), power_names("c", n));
  } else if (name == "symmetric") {
    const std::size_t n = param_size(params, "n", 3);
    out.hopf = group_algebra(q, symmetric_group(n), permutation_names(n));
  } else if (name == "function_symmetric") {
    const std::size_t n = param_size(params, "n", 3);
    std::vector<std::string> names;
    for (const auto& p : permutation_names(n)) names.push_back("d_" + p);
    out.hopf = function_algebra(q, symmetric_group(n), names);
  } else if (name == "taft") {
    out.hopf = taft(param_size(params, "n", 3));
  } else if (name == "uqsl2") {
    out.hopf = uqsl2(param_size(params, "l", 3));
  } else if (name == "uqsl2_dual") {
    out.hopf = uqsl2_dual(param_size(params, "l", 3));
  } else if (name == "comatrix") {
    out.coalgebra = comatrix(q, param_size(params, "d", 2));
  } else if (name == "coalgebra_with_s") {
    auto it = params.find("F");
    const Mat fm = parse_matrix_param(q, it == params.end() ? "0,1;1,0" : it->second);
    CoalgebraWithS c = coalgebra_with_s(q, {fm}, {param_size(params, "n", 2)});
    out.coalgebra = std::move(c.coalgebra);
    out.s = std::move(c.s);
  } else {
    for (const auto& [k, v] : params)
      throw InvalidInput("corpus member '" + name + "' takes no parameter '" + k + "'");
    out.hopf = corpus_entry(name).hopf;
  }
  return out;
}

std::vector<BundledSequence> bundled_sequences() {
  const Field q = Field::rational();
  std::vector<BundledSequence> out;
  {
    HopfAlgebra h4 = sweedler4();
    HopfAlgebra k = group_algebra(q, cyclic_group(1));
    Mat iota(q, 4, 1);
    iota(0, 0) = Scalar::one(q);
    out.push_back({"k_in_sweedler4", std::move(k), std::move(h4), std::move(iota)});
  }
  {
    HopfAlgebra a3 = corpus_entry("qa3").hopf;
    HopfAlgebra s3 = corpus_entry("qs3").hopf;
    // c -> the 3-cycle 0->1->2->0 ("p120"), c^2 -> "p201"
    Mat iota(q, 6, 3);
    iota(s3.index("1"), 0) = Scalar::one(q);
    iota(s3.index("p120"), 1) = Scalar::one(q);
    iota(s3.index("p201"), 2) = Scalar::one(q);
    out.push_back({"qa3_in_qs3", std::move(a3), std::move(s3), std::move(iota)});
  }
  {
    HopfAlgebra h4 = sweedler4();
    HopfAlgebra b = corpus_entry("h4_x_qc3").hopf;
    // a -> a (x) 1 at index 3a
    Mat iota(q, 12, 4);
    for (std::size_t a = 0; a < 4; ++a) iota(3 * a, a) = Scalar::one(q);
    out.push_back({"sweedler4_in_h4_x_qc3", std::move(h4), std::move(b), std::move(iota)});
  }
  return out;
}

}  // namespace hopflab
