#include "hopflab/field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace hopflab {

namespace {

using QPoly = std::vector<mpq_class>;  // low to high

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient and remainder of a by b (b nonzero).
void divmod(const QPoly& a, const QPoly& b, QPoly& quo, QPoly& rem) {
  rem = a;
  trim(rem);
  QPoly bb = b;
  trim(bb);
  quo.assign(rem.size() >= bb.size() ? rem.size() - bb.size() + 1 : 0, mpq_class(0));
  while (!rem.empty() && rem.size() >= bb.size()) {
    const std::size_t shift = rem.size() - bb.size();
    mpq_class c = rem.back() / bb.back();
    quo[shift] = c;
    for (std::size_t i = 0; i < bb.size(); ++i) rem[shift + i] -= c * bb[i];
    trim(rem);
  }
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly out(std::max(a.size(), b.size()), mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

std::unique_ptr<detail::CyclotomicData> make_cyclotomic(int n) {
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
  QPoly num(static_cast<std::size_t>(n) + 1, mpq_class(0));
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    QPoly q, r;
    divmod(num, detail::cyclotomic_data(d)->modulus, q, r);
    num = q;
  }
  auto data = std::make_unique<detail::CyclotomicData>();
  data->n = n;
  data->degree = static_cast<int>(num.size()) - 1;
  data->modulus = std::move(num);
  return data;
}

std::int64_t mod_pow(std::int64_t b, std::int64_t e, std::int64_t m) {
  __int128 r = 1, x = b % m;
  if (x < 0) x += m;
  while (e > 0) {
    if (e & 1) r = (r * x) % m;
    x = (x * x) % m;
    e >>= 1;
  }
  return static_cast<std::int64_t>(r);
}

std::int64_t normalize_residue(const mpq_class& v, std::int64_t p) {
  mpz_class num = v.get_num() % p;
  mpz_class den = v.get_den() % p;
  if (den == 0) throw InvalidInput("denominator divisible by the characteristic");
  std::int64_t n = num.get_si();
  std::int64_t d = den.get_si();
  if (n < 0) n += p;
  if (d < 0) d += p;
  return static_cast<std::int64_t>((static_cast<__int128>(n) * mod_pow(d, p - 2, p)) % p);
}

}  // namespace

namespace detail {
const CyclotomicData* cyclotomic_data(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CyclotomicData>> registry;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = registry.find(n);
    if (it != registry.end()) return it->second.get();
  }
  // Built outside the lock; recursion asks for proper divisors.
  auto data = make_cyclotomic(n);
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = registry.emplace(n, std::move(data));
  return it->second.get();
}
}  // namespace detail

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Field Field::rational() { return Field(FieldKind::Rational, 0, nullptr); }

Field Field::prime(std::int64_t p) {
  if (!is_prime(p) || p >= (std::int64_t{1} << 31)) throw InvalidInput("GF(p) needs a prime p < 2^31, got " + std::to_string(p));
  return Field(FieldKind::Prime, p, nullptr);
}

Field Field::cyclotomic(int n) {
  if (n < 1) throw InvalidInput("cyclotomic order must be positive");
  return Field(FieldKind::Cyclotomic, n, detail::cyclotomic_data(n));
}

int Field::degree() const noexcept { return kind_ == FieldKind::Cyclotomic ? cyc_->degree : 1; }

std::string Field::to_string() const {
  switch (kind_) {
    case FieldKind::Rational: return "Q";
    case FieldKind::Prime: return "GF(" + std::to_string(param_) + ")";
    case FieldKind::Cyclotomic: return "Q(zeta_" + std::to_string(param_) + ")";
  }
  return "?";
}

Scalar::Scalar(Field f) : field_(f) {
  if (f.kind() != FieldKind::Prime) q_.assign(static_cast<std::size_t>(f.degree()), mpq_class(0));
}

Scalar::Scalar(Field f, long v) : Scalar(f) {
  if (f.kind() == FieldKind::Prime) {
    r_ = v % f.param();
    if (r_ < 0) r_ += f.param();
  } else {
    q_[0] = v;
  }
}

Scalar::Scalar(Field f, const mpq_class& v) : Scalar(f) {
  if (f.kind() == FieldKind::Prime) {
    r_ = normalize_residue(v, f.param());
  } else {
    q_[0] = v;
    q_[0].canonicalize();
  }
}

Scalar Scalar::zeta(Field f) {
  if (f.kind() != FieldKind::Cyclotomic) {
    if (f.kind() == FieldKind::Rational) return Scalar(f, 1L);
    throw InvalidInput("no canonical root of unity in " + f.to_string());
  }
  std::vector<mpq_class> x{mpq_class(0), mpq_class(1)};
  return from_coefficients(f, x);
}

Scalar Scalar::from_coefficients(Field f, const std::vector<mpq_class>& coeffs) {
  Scalar s(f);
  if (f.kind() != FieldKind::Cyclotomic) {
    if (coeffs.size() != 1) throw InvalidInput("expected a single coefficient for " + f.to_string());
    return Scalar(f, coeffs[0]);
  }
  std::vector<mpq_class> poly = coeffs;
  s.reduce_cyclotomic(poly);
  return s;
}

namespace {

mpq_class parse_rational(const std::string& text) {
  const auto bad = [&] { return InvalidInput("malformed scalar \"" + text + "\""); };
  if (text.empty() || text.find_first_not_of("+-0123456789/") != std::string::npos) throw bad();
  mpq_class q;
  if (q.set_str(text, 10) != 0 || q.get_den() == 0) throw bad();
  q.canonicalize();
  return q;
}

}  // namespace

Scalar Scalar::parse(Field f, const std::string& text) {
  if (f.kind() != FieldKind::Cyclotomic) {
    const mpq_class q = parse_rational(text);
    if (f.kind() == FieldKind::Prime && mpz_divisible_ui_p(q.get_den_mpz_t(), static_cast<unsigned long>(f.param())))
      throw InvalidInput("denominator of \"" + text + "\" vanishes in " + f.to_string());
    return Scalar(f, q);
  }
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw InvalidInput("cyclotomic scalar must be written [c0,...]: \"" + text + "\"");
  std::vector<mpq_class> coeffs;
  std::istringstream in(text.substr(1, text.size() - 2));
  for (std::string part; std::getline(in, part, ',');) coeffs.push_back(parse_rational(part));
  return from_coefficients(f, coeffs);
}

void Scalar::reduce_cyclotomic(std::vector<mpq_class>& poly) {
  const auto* cyc = field_.cyclotomic();
  const std::size_t deg = static_cast<std::size_t>(cyc->degree);
  for (std::size_t k = poly.size(); k-- > deg;) {
    if (poly[k] == 0) continue;
    mpq_class c = poly[k];
    const std::size_t shift = k - deg;
    for (std::size_t t = 0; t <= deg; ++t) poly[shift + t] -= c * cyc->modulus[t];
  }
  q_.assign(deg, mpq_class(0));
  for (std::size_t i = 0; i < deg && i < poly.size(); ++i) q_[i] = poly[i];
}

bool Scalar::is_zero() const noexcept {
  if (field_.kind() == FieldKind::Prime) return r_ == 0;
  for (const auto& c : q_)
    if (c != 0) return false;
  return true;
}

bool Scalar::is_one() const noexcept {
  if (field_.kind() == FieldKind::Prime) return r_ == 1;
  if (q_[0] != 1) return false;
  for (std::size_t i = 1; i < q_.size(); ++i)
    if (q_[i] != 0) return false;
  return true;
}

bool Scalar::is_rational() const noexcept {
  if (field_.kind() == FieldKind::Prime) return true;
  for (std::size_t i = 1; i < q_.size(); ++i)
    if (q_[i] != 0) return false;
  return true;
}

void Scalar::check_same(const Scalar& o) const {
  if (!(field_ == o.field_)) throw InvalidInput("mixed fields: " + field_.to_string() + " vs " + o.field_.to_string());
}

Scalar Scalar::operator-() const {
  Scalar s(*this);
  if (field_.kind() == FieldKind::Prime) {
    s.r_ = r_ == 0 ? 0 : field_.param() - r_;
  } else {
    for (auto& c : s.q_) c = -c;
  }
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (field_.kind() == FieldKind::Prime) {
    r_ += o.r_;
    if (r_ >= field_.param()) r_ -= field_.param();
  } else {
    for (std::size_t i = 0; i < q_.size(); ++i) q_[i] += o.q_[i];
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  if (field_.kind() == FieldKind::Prime) {
    r_ -= o.r_;
    if (r_ < 0) r_ += field_.param();
  } else {
    for (std::size_t i = 0; i < q_.size(); ++i) q_[i] -= o.q_[i];
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  switch (field_.kind()) {
    case FieldKind::Prime:
      r_ = static_cast<std::int64_t>((static_cast<__int128>(r_) * o.r_) % field_.param());
      break;
    case FieldKind::Rational:
      q_[0] *= o.q_[0];
      break;
    case FieldKind::Cyclotomic: {
      const std::size_t deg = q_.size();
      if (deg == 1) {
        q_[0] *= o.q_[0];
        break;
      }
      std::vector<mpq_class> prod(2 * deg - 1, mpq_class(0));
      for (std::size_t i = 0; i < deg; ++i) {
        if (q_[i] == 0) continue;
        for (std::size_t j = 0; j < deg; ++j)
          if (o.q_[j] != 0) prod[i + j] += q_[i] * o.q_[j];
      }
      reduce_cyclotomic(prod);
      break;
    }
  }
  return *this;
}

void Scalar::add_product(const Scalar& a, const Scalar& b) {
  if (field_.kind() == FieldKind::Rational) {
    check_same(a);
    check_same(b);
    q_[0] += a.q_[0] * b.q_[0];
    return;
  }
  if (field_.kind() == FieldKind::Prime) {
    check_same(a);
    check_same(b);
    r_ = static_cast<std::int64_t>((r_ + static_cast<__int128>(a.r_) * b.r_) % field_.param());
    return;
  }
  *this += a * b;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw InvalidInput("division by zero");
  Scalar out(field_);
  switch (field_.kind()) {
    case FieldKind::Prime:
      out.r_ = mod_pow(r_, field_.param() - 2, field_.param());
      return out;
    case FieldKind::Rational:
      out.q_[0] = 1 / q_[0];
      return out;
    case FieldKind::Cyclotomic: {
      // Extended Euclid: find u with a*u = 1 mod Phi_n.
      QPoly r0 = field_.cyclotomic()->modulus, r1 = q_;
      trim(r1);
      QPoly s0{}, s1{mpq_class(1)};
      while (!(r1.size() == 1)) {
        QPoly quo, rem;
        divmod(r0, r1, quo, rem);
        QPoly s2 = sub(s0, mul(quo, s1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
        if (r1.empty()) throw HardFailure("cyclotomic inverse: non-unit element");
      }
      for (auto& c : s1) c /= r1[0];
      return from_coefficients(field_, s1);
    }
  }
  return out;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same(o);
  return *this *= o.inverse();
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar result = Scalar::one(field_);
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  if (a.field_.kind() == FieldKind::Prime) return a.r_ == b.r_;
  return a.q_ == b.q_;
}

std::string Scalar::to_string() const {
  if (field_.kind() == FieldKind::Prime) return std::to_string(r_);
  if (field_.kind() == FieldKind::Rational) return q_[0].get_str();
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < q_.size(); ++i) os << (i ? "," : "") << q_[i].get_str();
  os << ']';
  return os.str();
}

}  // namespace hopflab
