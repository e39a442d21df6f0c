#include "hopflab/poly.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

namespace hopflab {

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int degree(const Poly& p) {
  for (std::size_t i = p.size(); i > 0; --i)
    if (!p[i - 1].is_zero()) return static_cast<int>(i - 1);
  return -1;
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly r = a.size() >= b.size() ? a : b;
  const Poly& s = a.size() >= b.size() ? b : a;
  for (std::size_t i = 0; i < s.size(); ++i) r[i] += s[i];
  trim(r);
  return r;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly nb;
  for (const auto& c : b) nb.push_back(-c);
  return poly_add(a, nb);
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Scalar::zero(a[0].field()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) r[i + j].add_product(a[i], b[j]);
  }
  trim(r);
  return r;
}

void poly_divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  const int db = degree(b);
  if (db < 0) throw InvalidInput("polynomial division by zero");
  r = a;
  trim(r);
  const Field f = b[0].field();
  q.assign(r.size() > static_cast<std::size_t>(db) ? r.size() - db : 0, Scalar::zero(f));
  const Scalar lead_inv = b[db].inverse();
  for (int k = degree(r); k >= db; k = degree(r)) {
    const Scalar c = r[k] * lead_inv;
    q[k - db] = c;
    for (int i = 0; i <= db; ++i)
      if (!b[i].is_zero()) r[k - db + i] -= c * b[i];
    trim(r);
  }
  trim(q);
}

Poly poly_monic(Poly p) {
  trim(p);
  if (p.empty()) return p;
  const Scalar inv = p.back().inverse();
  for (auto& c : p) c *= inv;
  return p;
}

Poly poly_gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly q, r;
    poly_divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(std::move(a));
}

Poly poly_ext_gcd(const Poly& a, const Poly& b, Poly& u, Poly& v) {
  if (a.empty() && b.empty()) throw InvalidInput("gcd of two zero polynomials");
  const Field f = (a.empty() ? b : a)[0].field();
  Poly r0 = a, r1 = b, s0{Scalar::one(f)}, s1{}, t0{}, t1{Scalar::one(f)};
  trim(r0);
  trim(r1);
  while (!r1.empty()) {
    Poly q, r;
    poly_divmod(r0, r1, q, r);
    Poly s2 = poly_sub(s0, poly_mul(q, s1)), t2 = poly_sub(t0, poly_mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const Scalar inv = r0.back().inverse();
  for (auto& c : s0) c *= inv;
  for (auto& c : t0) c *= inv;
  u = std::move(s0);
  v = std::move(t0);
  return poly_monic(std::move(r0));
}

Scalar poly_eval(const Poly& p, const Scalar& x) {
  Scalar r = Scalar::zero(x.field());
  for (std::size_t i = p.size(); i > 0; --i) {
    r *= x;
    r += p[i - 1];
  }
  return r;
}

Poly linear_power(const Scalar& lambda, int k) {
  const Field f = lambda.field();
  Poly lin{-lambda, Scalar::one(f)}, r{Scalar::one(f)};
  for (int i = 0; i < k; ++i) r = poly_mul(r, lin);
  return r;
}

namespace {

using u64 = std::uint64_t;
using i64 = std::int64_t;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
    if (n % p == 0) return n == p;
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s && composite; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

// GF(p^m) = GF(p)[x] / (modulus), modulus monic of degree m.
struct Fq {
  u64 p;
  int m;
  std::vector<u64> modulus;  // size m + 1

  using E = std::vector<u64>;
  E zero() const { return E(m, 0); }
  E one() const {
    E e(m, 0);
    e[0] = 1;
    return e;
  }
  bool is_zero(const E& a) const {
    return std::all_of(a.begin(), a.end(), [](u64 c) { return c == 0; });
  }
  E add(const E& a, const E& b) const {
    E r(m);
    for (int i = 0; i < m; ++i) r[i] = (a[i] + b[i]) % p;
    return r;
  }
  E sub(const E& a, const E& b) const {
    E r(m);
    for (int i = 0; i < m; ++i) r[i] = (a[i] + p - b[i]) % p;
    return r;
  }
  E mul(const E& a, const E& b) const {
    std::vector<u64> t(2 * m - 1, 0);
    for (int i = 0; i < m; ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; j < m; ++j) t[i + j] = (t[i + j] + mulmod(a[i], b[j], p)) % p;
    }
    for (int k = 2 * m - 2; k >= m; --k) {
      const u64 c = t[k];
      if (c == 0) continue;
      for (int i = 0; i <= m; ++i) t[k - m + i] = (t[k - m + i] + p - mulmod(c, modulus[i], p)) % p;
    }
    t.resize(m);
    return t;
  }
  E pow(E a, const mpz_class& e) const {
    E r = one();
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i > 0; --i) {
      r = mul(r, r);
      if (mpz_tstbit(e.get_mpz_t(), i - 1)) r = mul(r, a);
    }
    return r;
  }
  E inv(const E& a) const {
    mpz_class q;
    mpz_ui_pow_ui(q.get_mpz_t(), p, m);
    return pow(a, q - 2);
  }
};

using FqPoly = std::vector<Fq::E>;

void fq_trim(const Fq& F, FqPoly& a) {
  while (!a.empty() && F.is_zero(a.back())) a.pop_back();
}

FqPoly fq_mod(const Fq& F, FqPoly a, const FqPoly& b) {
  fq_trim(F, a);
  const std::size_t db = b.size() - 1;
  const Fq::E inv = F.inv(b.back());
  while (a.size() > db) {
    const Fq::E c = F.mul(a.back(), inv);
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = F.sub(a[shift + i], F.mul(c, b[i]));
    fq_trim(F, a);
  }
  return a;
}

FqPoly fq_div(const Fq& F, FqPoly a, const FqPoly& b) {
  const std::size_t db = b.size() - 1;
  const Fq::E inv = F.inv(b.back());
  FqPoly q(a.size() >= b.size() ? a.size() - db : 0, F.zero());
  while (a.size() > db) {
    const Fq::E c = F.mul(a.back(), inv);
    const std::size_t shift = a.size() - 1 - db;
    q[shift] = c;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = F.sub(a[shift + i], F.mul(c, b[i]));
    fq_trim(F, a);
  }
  return q;
}

FqPoly fq_mulmod(const Fq& F, const FqPoly& a, const FqPoly& b, const FqPoly& mod) {
  if (a.empty() || b.empty()) return {};
  FqPoly r(a.size() + b.size() - 1, F.zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  return fq_mod(F, std::move(r), mod);
}

FqPoly fq_powmod(const Fq& F, FqPoly a, const mpz_class& e, const FqPoly& mod) {
  FqPoly r{F.one()};
  a = fq_mod(F, std::move(a), mod);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i > 0; --i) {
    r = fq_mulmod(F, r, r, mod);
    if (mpz_tstbit(e.get_mpz_t(), i - 1)) r = fq_mulmod(F, r, a, mod);
  }
  return r;
}

FqPoly fq_gcd(const Fq& F, FqPoly a, FqPoly b) {
  fq_trim(F, a);
  fq_trim(F, b);
  while (!b.empty()) {
    FqPoly r = fq_mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  const Fq::E inv = F.inv(a.back());
  for (auto& c : a) c = F.mul(c, inv);
  return a;
}

// Roots of a squarefree product of distinct linear factors, by equal-degree splitting.
void split_linear(const Fq& F, const FqPoly& g, const mpz_class& q, std::mt19937_64& rng, std::vector<Fq::E>& out) {
  if (g.size() <= 1) return;
  if (g.size() == 2) {
    out.push_back(F.sub(F.zero(), F.mul(g[0], F.inv(g[1]))));
    return;
  }
  const mpz_class half = (q - 1) / 2;
  for (int attempt = 0; attempt < 200; ++attempt) {
    Fq::E delta(F.m);
    for (auto& c : delta) c = rng() % F.p;
    FqPoly w = fq_powmod(F, FqPoly{delta, F.one()}, half, g);
    if (w.empty()) w = {F.zero()};
    w[0] = F.sub(w[0], F.one());
    FqPoly d = fq_gcd(F, g, w);
    if (d.size() > 1 && d.size() < g.size()) {
      split_linear(F, d, q, rng, out);
      split_linear(F, fq_div(F, g, d), q, rng, out);
      return;
    }
  }
}

// Roots in GF(q) of a monic polynomial over GF(q).
std::vector<Fq::E> fq_roots(const Fq& F, FqPoly f) {
  fq_trim(F, f);
  if (f.size() <= 1) return {};
  mpz_class q;
  mpz_ui_pow_ui(q.get_mpz_t(), F.p, F.m);
  if (F.m == 1 && F.p < 5000) {
    std::vector<Fq::E> out;
    for (u64 x = 0; x < F.p; ++x) {
      u64 v = 0;
      for (std::size_t i = f.size(); i > 0; --i) v = (mulmod(v, x, F.p) + f[i - 1][0]) % F.p;
      if (v == 0) out.push_back({x});
    }
    return out;
  }
  // gcd(f, t^q - t) collects the linear factors.
  FqPoly h = fq_powmod(F, FqPoly{F.zero(), F.one()}, q, f);
  h.resize(std::max<std::size_t>(h.size(), 2), F.zero());
  h[1] = F.sub(h[1], F.one());
  FqPoly g = fq_gcd(F, f, h);
  std::mt19937_64 rng(0x5eed);
  std::vector<Fq::E> out;
  split_linear(F, g, q, rng, out);
  return out;
}

int multiplicative_order(u64 a, int n) {
  u64 x = a % n;
  for (int k = 1; k <= n; ++k) {
    if (x == 1) return k;
    x = x * (a % n) % n;
  }
  return 0;
}

// The skip-th largest prime below 2^61 whose residue generates (Z/n)^*, or 0
// when none exists in the search window.
u64 inert_prime(int n, int phi, int skip) {
  const u64 top = (u64{1} << 61) - 1;
  for (u64 c = top; c > top - 2000000; c -= 2) {
    if (n > 2) {
      if (std::gcd(c % n, static_cast<u64>(n)) != 1) continue;
      if (multiplicative_order(c, n) != phi) continue;
    }
    if (is_prime_u64(c) && skip-- == 0) return c;
  }
  return 0;
}

u64 mod_p(const mpz_class& z, u64 p) { return mpz_fdiv_ui(z.get_mpz_t(), static_cast<unsigned long>(p)); }

mpz_class reduce_mod(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

mpz_class symmetric(const mpz_class& r, const mpz_class& m) { return 2 * r > m ? mpz_class(r - m) : r; }

// (Z / mod)[x] / (phi) with phi monic of degree m; the Hensel lifting ring for
// an inert prime.
struct Lifted {
  mpz_class mod;
  int m;
  std::vector<mpz_class> phi;  // size m + 1

  using E = std::vector<mpz_class>;
  E reduce(E a) const {
    for (auto& c : a) c = reduce_mod(c, mod);
    return a;
  }
  E add(const E& a, const E& b) const {
    E r(m);
    for (int i = 0; i < m; ++i) r[i] = reduce_mod(a[i] + b[i], mod);
    return r;
  }
  E sub(const E& a, const E& b) const {
    E r(m);
    for (int i = 0; i < m; ++i) r[i] = reduce_mod(a[i] - b[i], mod);
    return r;
  }
  E mul(const E& a, const E& b) const {
    std::vector<mpz_class> t(2 * m - 1, 0);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) t[i + j] += a[i] * b[j];
    for (int k = 2 * m - 2; k >= m; --k) {
      const mpz_class c = t[k];
      if (c == 0) continue;
      for (int i = 0; i <= m; ++i) t[k - m + i] -= c * phi[i];
    }
    t.resize(m);
    return reduce(std::move(t));
  }
  // nu(x) for nu given by integral coefficient vectors, low to high.
  E eval(const std::vector<E>& nu, const E& x) const {
    E r(m, 0);
    for (std::size_t i = nu.size(); i > 0; --i) r = add(mul(r, x), nu[i - 1]);
    return r;
  }
};

Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Scalar(p[i].field(), static_cast<long>(i)));
  trim(d);
  return d;
}

enum class Lift { Found, Absent, Degenerate };

// Newton iteration from a simple root r0 of nu mod p, doubling the precision
// until accept() confirms a candidate or the precision passes target_bits.
Lift hensel(const Fq& F, const std::vector<Lifted::E>& nu, const std::vector<mpz_class>& phi, const Fq::E& r0,
            std::size_t target_bits, const std::function<bool(const Lifted::E&, const mpz_class&)>& accept) {
  std::vector<Lifted::E> dnu;
  for (std::size_t i = 1; i < nu.size(); ++i) {
    Lifted::E c(F.m);
    for (int k = 0; k < F.m; ++k) c[k] = nu[i][k] * static_cast<unsigned long>(i);
    dnu.push_back(std::move(c));
  }
  auto to_fq = [&](const Lifted::E& a) {
    Fq::E e(F.m);
    for (int k = 0; k < F.m; ++k) e[k] = mpz_fdiv_ui(a[k].get_mpz_t(), static_cast<unsigned long>(F.p));
    return e;
  };
  Lifted ring{mpz_class(static_cast<unsigned long>(F.p)), F.m, phi};
  Lifted::E r(F.m), w(F.m);
  for (int k = 0; k < F.m; ++k) r[k] = static_cast<unsigned long>(r0[k]);
  const Fq::E d0 = to_fq(ring.eval(dnu, r));
  if (F.is_zero(d0)) return Lift::Degenerate;
  const Fq::E w0 = F.inv(d0);
  for (int k = 0; k < F.m; ++k) w[k] = static_cast<unsigned long>(w0[k]);
  for (;;) {
    if (accept(r, ring.mod)) return Lift::Found;
    if (mpz_sizeinbase(ring.mod.get_mpz_t(), 2) > target_bits) return Lift::Absent;
    ring.mod *= ring.mod;
    r = ring.sub(r, ring.mul(ring.eval(nu, r), w));
    Lifted::E two(F.m, 0);
    two[0] = 2;
    w = ring.mul(w, ring.sub(two, ring.mul(ring.eval(dnu, r), w)));
  }
}

std::vector<Scalar> candidate_roots(const Poly& p) {
  const Field f = p[0].field();
  std::vector<Scalar> cands{Scalar::zero(f)};
  if (f.kind() == FieldKind::Cyclotomic) {
    const Scalar z = Scalar::zeta(f);
    Scalar w = Scalar::one(f);
    for (int j = 0; j < f.param(); ++j) {
      cands.push_back(w);
      cands.push_back(-w);
      w *= z;
    }
  }
  return cands;
}

}  // namespace

std::vector<Scalar> roots_in_field(const Poly& p_in) {
  Poly p = poly_monic(p_in);
  if (degree(p) <= 0) return {};
  const Field f = p[0].field();
  std::vector<Scalar> out;
  auto keep = [&](const Scalar& x) {
    if (!poly_eval(p, x).is_zero()) return;
    for (const auto& y : out)
      if (y == x) return;
    out.push_back(x);
  };

  if (f.kind() == FieldKind::Prime) {
    const Fq F{static_cast<u64>(f.param()), 1, {0, 1}};
    FqPoly g;
    for (const auto& c : p) g.push_back({static_cast<u64>(c.residue())});
    for (const auto& r : fq_roots(F, g)) keep(Scalar(f, static_cast<long>(r[0])));
  } else {
    const int m = f.degree();
    const int n = f.kind() == FieldKind::Rational ? 1 : static_cast<int>(f.param());
    // Roots of p are the roots of its squarefree part, which has simple roots mod almost every prime.
    {
      Poly q, r;
      poly_divmod(p, poly_gcd(p, derivative(p)), q, r);
      p = poly_monic(q);
    }
    const int sq = degree(p);
    // nu(t) = D^s p(t / D) is monic with coefficients in Z[zeta], so D * root is integral.
    mpz_class d = 1;
    for (const auto& c : p)
      for (const auto& q : c.coefficients()) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), q.get_den_mpz_t());
    std::vector<Lifted::E> nu(sq + 1, Lifted::E(m, 0));
    std::size_t coeff_bits = 1;
    mpz_class dpow = 1;
    for (int i = sq; i >= 0; --i) {
      const auto& co = p[i].coefficients();
      for (int k = 0; k < m && k < static_cast<int>(co.size()); ++k) {
        nu[i][k] = mpq_class(co[k] * dpow).get_num();
        coeff_bits = std::max(coeff_bits, mpz_sizeinbase(nu[i][k].get_mpz_t(), 2));
      }
      dpow *= d;
    }
    std::vector<mpz_class> phi{0, 1};
    if (f.kind() == FieldKind::Cyclotomic) {
      phi.clear();
      for (const auto& c : f.cyclotomic()->modulus) phi.push_back(c.get_num());
    }
    // Every conjugate of a root is at most 1 + the largest coefficient conjugate,
    // and power-basis coordinates are bounded through the trace; this leaves ample slack.
    const std::size_t target = coeff_bits + 8 * static_cast<std::size_t>(m) + 64;
    auto accept = [&](const Lifted::E& r, const mpz_class& mod) {
      std::vector<mpq_class> coeffs;
      for (int k = 0; k < m; ++k) {
        mpq_class c(symmetric(r[k], mod), d);
        c.canonicalize();
        coeffs.push_back(c);
      }
      const Scalar x = Scalar::from_coefficients(f, coeffs);
      if (!poly_eval(p, x).is_zero()) return false;
      keep(x);
      return true;
    };
    bool done = false;
    for (int attempt = 0; attempt < 4 && !done; ++attempt) {
      const u64 prime = inert_prime(n, m, attempt);
      if (prime == 0) break;
      Fq F{prime, m, {}};
      for (const auto& c : phi) F.modulus.push_back(mod_p(c, prime));
      FqPoly g;
      for (const auto& c : nu) {
        Fq::E e(m);
        for (int k = 0; k < m; ++k) e[k] = mod_p(c[k], prime);
        g.push_back(std::move(e));
      }
      done = true;
      for (const auto& r0 : fq_roots(F, g))
        if (hensel(F, nu, phi, r0, target, accept) == Lift::Degenerate) done = false;
    }
    if (!done)
      for (const auto& c : candidate_roots(p)) keep(c);
  }
  std::sort(out.begin(), out.end(), [](const Scalar& a, const Scalar& b) { return a.to_string() < b.to_string(); });
  return out;
}

}  // namespace hopflab
