#include "hopflab/matalg.hpp"

#include "hopflab/coradical.hpp"

namespace hopflab {

Vec flatten(const Mat& m) {
  Vec v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

Mat unflatten(const Field& f, std::size_t n, const Vec& v) {
  Mat m(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = v[i * n + j];
  return m;
}

MatrixAlgebra::MatrixAlgebra(Field f, std::size_t n, const std::vector<Mat>& spanning, Mat unit, bool check_closed)
    : field_(f), n_(n), span_(f, n * n), unit_(std::move(unit)) {
  std::vector<Vec> vs;
  for (const Mat& m : spanning) vs.push_back(flatten(m));
  vs.push_back(flatten(unit_));
  span_ = Subspace::span(f, n * n, vs);
  if (!check_closed) return;
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j)
      if (!span_.contains(flatten(element(i) * element(j))))
        throw InvalidInput("MatrixAlgebra: span is not closed under multiplication");
}

MatrixAlgebra MatrixAlgebra::generated_by(Field f, std::size_t n, const std::vector<Mat>& generators) {
  SpanBuilder b(f, n * n);
  std::vector<Mat> elems{Mat::identity(f, n)};
  b.add(flatten(elems[0]));
  for (const Mat& g : generators)
    if (b.add(flatten(g))) elems.push_back(g);
  // Multiply every new element by every generator until nothing grows.
  std::size_t done = 0;
  while (done < elems.size()) {
    const std::size_t end = elems.size();
    for (std::size_t i = done; i < end; ++i)
      for (const Mat& g : generators) {
        Mat p = elems[i] * g;
        if (b.add(flatten(p))) elems.push_back(std::move(p));
      }
    done = end;
  }
  return MatrixAlgebra(f, n, elems, Mat::identity(f, n), false);
}

Mat MatrixAlgebra::element(std::size_t i) const { return unflatten(field_, n_, span_.vector(i)); }

std::vector<Mat> MatrixAlgebra::basis() const {
  std::vector<Mat> out;
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(element(i));
  return out;
}

bool MatrixAlgebra::contains(const Mat& m) const { return span_.contains(flatten(m)); }

Vec MatrixAlgebra::coordinates(const Mat& m) const {
  const Vec v = flatten(m);
  if (!span_.contains(v)) throw InvalidInput("MatrixAlgebra: element outside the algebra");
  return span_.coordinates(v);
}

Mat MatrixAlgebra::from_coordinates(const Vec& c) const {
  Vec v = zero_vec(field_, n_ * n_);
  for (std::size_t i = 0; i < dim(); ++i)
    if (!c[i].is_zero()) axpy(v, c[i], span_.vector(i));
  return unflatten(field_, n_, v);
}

AlgebraData MatrixAlgebra::structure() const {
  const std::size_t d = dim();
  const std::vector<Mat> b = basis();
  std::vector<std::vector<LinearTerm>> mult(d * d);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < d; ++i) {
    names.push_back("b" + std::to_string(i));
    for (std::size_t j = 0; j < d; ++j) {
      const Vec c = coordinates(b[i] * b[j]);
      for (std::size_t k = 0; k < d; ++k)
        if (!c[k].is_zero()) mult[i * d + j].push_back({k, c[k]});
    }
  }
  return AlgebraData(field_, names, std::move(mult), coordinates(unit_));
}

std::vector<Mat> MatrixAlgebra::radical() const {
  std::vector<Mat> out;
  for (const Vec& c : jacobson_radical(structure()).vectors()) out.push_back(from_coordinates(c));
  return out;
}

MatrixAlgebra MatrixAlgebra::corner(const Mat& e) const {
  std::vector<Mat> spanning;
  for (const Mat& b : basis()) spanning.push_back(e * b * e);
  return MatrixAlgebra(field_, n_, spanning, e, false);
}

Poly minimal_polynomial(const Mat& x, const Mat& unit) {
  const Field& f = x.field();
  const std::size_t nn = x.rows() * x.cols();
  std::vector<Vec> powers{flatten(unit)};
  SpanBuilder b(f, nn);
  b.add(powers[0]);
  Mat p = unit;
  for (;;) {
    p = p * x;
    Vec v = flatten(p);
    if (!b.add(v)) {
      const auto c = solve(Mat::from_columns(f, nn, powers), v);
      if (!c) throw HardFailure("minimal_polynomial: dependent power has no solution");
      Poly mu;
      for (const auto& s : *c) mu.push_back(-s);
      mu.push_back(Scalar::one(f));
      return mu;
    }
    powers.push_back(std::move(v));
  }
}

Mat evaluate(const Poly& p, const Mat& x, const Mat& unit) {
  Mat r(x.field(), x.rows(), x.cols());
  for (std::size_t i = p.size(); i > 0; --i) {
    r = r * x;
    for (std::size_t a = 0; a < r.rows(); ++a)
      for (std::size_t b = 0; b < r.cols(); ++b)
        if (!unit(a, b).is_zero()) r(a, b).add_product(p[i - 1], unit(a, b));
  }
  return r;
}

bool is_nilpotent(const Mat& x) {
  Mat p = x;
  for (std::size_t k = 1; k < x.rows(); k *= 2) p = p * p;
  return p.is_zero();
}

bool is_split_local(const MatrixAlgebra& a) { return a.dim() - a.radical().size() == 1; }

namespace {

// Splits e = e1 + e2 using x in the corner algebra with unit e, when the
// minimal polynomial mu of x has a root lambda and a coprime cofactor q:
// e1 = (v q)(x) with v q == 1 mod (t - lambda)^k and 0 mod q.
bool split_by(const Mat& x, const Poly& mu, const std::vector<Scalar>& roots, const Mat& e, Mat& e1) {
  for (const Scalar& lambda : roots) {
    const Poly lin = linear_power(lambda, 1);
    Poly q = mu;
    int k = 0;
    for (;;) {
      Poly quot, rem;
      poly_divmod(q, lin, quot, rem);
      if (!rem.empty()) break;
      q = std::move(quot);
      ++k;
    }
    if (degree(q) < 1) continue;
    Poly u, v;
    poly_ext_gcd(linear_power(lambda, k), q, u, v);
    e1 = evaluate(poly_mul(v, q), x, e);
    return true;
  }
  return false;
}

bool split_by(const Mat& x, const Mat& e, Mat& e1) {
  const Poly mu = minimal_polynomial(x, e);
  return split_by(x, mu, roots_in_field(mu), e, e1);
}

bool find_split(const MatrixAlgebra& c, Mat& e1) {
  const Mat& e = c.unit();
  const std::vector<Mat> basis = c.basis();
  std::vector<Vec> rad;
  for (const Mat& r : c.radical()) rad.push_back(c.coordinates(r));
  const Subspace radical = Subspace::span(c.field(), c.dim(), rad);
  auto try_element = [&](const Mat& x) {
    const Poly mu = minimal_polynomial(x, e);
    const auto roots = roots_in_field(mu);
    if (split_by(x, mu, roots, e, e1)) return true;
    // x = lambda e + y with y nilpotent. If y is outside the radical, some y z
    // is a non-nilpotent zero divisor: its minimal polynomial has root 0 and a cofactor.
    if (roots.size() != 1) return false;
    Mat y = x;
    for (std::size_t i = 0; i < y.rows(); ++i)
      for (std::size_t j = 0; j < y.cols(); ++j) y(i, j) -= roots[0] * e(i, j);
    if (radical.contains(c.coordinates(y))) return false;
    for (const Mat& z : basis) {
      const Mat yz = y * z;
      if (!is_nilpotent(yz) && split_by(yz, e, e1)) return true;
    }
    return false;
  };
  for (const Mat& b : basis)
    if (try_element(b)) return true;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (try_element(basis[i] + basis[j])) return true;
      if (try_element(basis[i] * basis[j])) return true;
    }
  return false;
}

}  // namespace

std::vector<Mat> primitive_idempotents(const MatrixAlgebra& a) {
  std::vector<Mat> out, stack{a.unit()};
  while (!stack.empty()) {
    const Mat e = stack.back();
    stack.pop_back();
    const MatrixAlgebra c = a.corner(e);
    if (is_split_local(c)) {
      out.push_back(e);
      continue;
    }
    Mat e1(a.field(), a.size(), a.size());
    if (!find_split(c, e1))
      throw Unsupported("primitive_idempotents: a corner algebra is not split local and no splitting element was found");
    stack.push_back(e - e1);
    stack.push_back(e1);
  }
  return out;
}

}  // namespace hopflab
