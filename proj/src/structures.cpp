#include "hopflab/structures.hpp"

#include <map>
#include <sstream>

namespace hopflab {

namespace {

void check_vec(const Vec& v, std::size_t d, const char* what) {
  if (v.size() != d) throw InvalidInput(std::string(what) + ": vector has wrong length");
}

using Sparse = std::map<std::size_t, Scalar>;

void accumulate(Sparse& m, std::size_t key, const Scalar& s) {
  if (s.is_zero()) return;
  auto it = m.find(key);
  if (it == m.end()) {
    m.emplace(key, s);
    return;
  }
  it->second += s;
  if (it->second.is_zero()) m.erase(it);
}

std::string index_name(const std::vector<std::string>& names, std::size_t i) {
  return i < names.size() ? names[i] : "e" + std::to_string(i);
}

}  // namespace

Coalgebra::Coalgebra(Field f, std::vector<std::string> names, std::vector<std::vector<TensorTerm>> delta, Vec counit)
    : field_(f), names_(std::move(names)), delta_(std::move(delta)), counit_(std::move(counit)) {
  const std::size_t d = names_.size();
  if (delta_.size() != d) throw InvalidInput("coalgebra: comultiplication has wrong number of basis entries");
  check_vec(counit_, d, "coalgebra counit");
  for (const auto& terms : delta_)
    for (const auto& t : terms) {
      if (t.i >= d || t.j >= d) throw InvalidInput("coalgebra: comultiplication index out of range");
      if (!(t.c.field() == field_)) throw InvalidInput("coalgebra: coefficient from another field");
    }
  for (const auto& s : counit_)
    if (!(s.field() == field_)) throw InvalidInput("coalgebra: counit from another field");
}

Vec Coalgebra::comultiply(const Vec& x) const {
  check_vec(x, dim(), "comultiply");
  const std::size_t d = dim();
  Vec out = zero_vec(field_, d * d);
  for (std::size_t a = 0; a < d; ++a) {
    if (x[a].is_zero()) continue;
    for (const auto& t : delta_[a]) out[t.i * d + t.j].add_product(x[a], t.c);
  }
  return out;
}

Mat Coalgebra::comultiply_matrix(const Vec& x) const {
  check_vec(x, dim(), "comultiply");
  Mat m(field_, dim(), dim());
  for (std::size_t a = 0; a < dim(); ++a) {
    if (x[a].is_zero()) continue;
    for (const auto& t : delta_[a]) m(t.i, t.j).add_product(x[a], t.c);
  }
  return m;
}

Mat Coalgebra::comultiplication_map() const {
  const std::size_t d = dim();
  Mat m(field_, d * d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (const auto& t : delta_[a]) m(t.i * d + t.j, a) += t.c;
  return m;
}

Scalar Coalgebra::epsilon(const Vec& x) const { return dot(counit_, x); }

Vec Coalgebra::convolve(const Vec& f, const Vec& g) const {
  check_vec(f, dim(), "convolve");
  check_vec(g, dim(), "convolve");
  Vec out = zero_vec(field_, dim());
  for (std::size_t a = 0; a < dim(); ++a)
    for (const auto& t : delta_[a])
      if (!f[t.i].is_zero() && !g[t.j].is_zero()) out[a].add_product(t.c, f[t.i] * g[t.j]);
  return out;
}

AlgebraData::AlgebraData(Field f, std::vector<std::string> names, std::vector<std::vector<LinearTerm>> mult, Vec unit)
    : field_(f), names_(std::move(names)), mult_(std::move(mult)), unit_(std::move(unit)) {
  const std::size_t d = names_.size();
  if (mult_.size() != d * d) throw InvalidInput("algebra: multiplication table has wrong size");
  check_vec(unit_, d, "algebra unit");
  for (const auto& terms : mult_)
    for (const auto& t : terms) {
      if (t.k >= d) throw InvalidInput("algebra: multiplication index out of range");
      if (!(t.c.field() == field_)) throw InvalidInput("algebra: coefficient from another field");
    }
}

Vec AlgebraData::multiply(const Vec& x, const Vec& y) const {
  check_vec(x, dim(), "multiply");
  check_vec(y, dim(), "multiply");
  const std::size_t d = dim();
  Vec out = zero_vec(field_, d);
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (y[j].is_zero()) continue;
      const Scalar xy = x[i] * y[j];
      for (const auto& t : mult_[i * d + j]) out[t.k].add_product(xy, t.c);
    }
  }
  return out;
}

Mat AlgebraData::left_multiplication(const Vec& x) const {
  check_vec(x, dim(), "left_multiplication");
  const std::size_t d = dim();
  Mat m(field_, d, d);
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& t : mult_[i * d + j]) m(t.k, j).add_product(x[i], t.c);
  }
  return m;
}

Mat AlgebraData::right_multiplication(const Vec& x) const {
  check_vec(x, dim(), "right_multiplication");
  const std::size_t d = dim();
  Mat m(field_, d, d);
  for (std::size_t j = 0; j < d; ++j) {
    if (x[j].is_zero()) continue;
    for (std::size_t i = 0; i < d; ++i)
      for (const auto& t : mult_[i * d + j]) m(t.k, i).add_product(x[j], t.c);
  }
  return m;
}

Mat AlgebraData::multiplication_map() const {
  const std::size_t d = dim();
  Mat m(field_, d, d * d);
  for (std::size_t ij = 0; ij < d * d; ++ij)
    for (const auto& t : mult_[ij]) m(t.k, ij) += t.c;
  return m;
}

HopfAlgebra::HopfAlgebra(Coalgebra c, AlgebraData a, Mat antipode)
    : coalg_(std::move(c)), alg_(std::move(a)), antipode_(std::move(antipode)) {
  if (!(coalg_.field() == alg_.field())) throw InvalidInput("hopf algebra: coalgebra and algebra fields differ");
  if (coalg_.dim() != alg_.dim()) throw InvalidInput("hopf algebra: coalgebra and algebra dimensions differ");
  if (antipode_.rows() != dim() || antipode_.cols() != dim())
    throw InvalidInput("hopf algebra: antipode has wrong shape");
  if (!(antipode_.field() == field())) throw InvalidInput("hopf algebra: antipode over another field");
}

std::size_t HopfAlgebra::index(const std::string& name) const {
  for (std::size_t i = 0; i < dim(); ++i)
    if (names()[i] == name) return i;
  throw InvalidInput("no basis element named '" + name + "'");
}

std::vector<Violation> validate(const Coalgebra& c) {
  std::vector<Violation> out;
  const std::size_t d = c.dim();
  for (std::size_t a = 0; a < d; ++a) {
    // (Delta (x) id) Delta and (id (x) Delta) Delta on e_a, keyed by i*d^2 + j*d + k
    Sparse left, right;
    for (const auto& t : c.delta(a)) {
      for (const auto& u : c.delta(t.i)) accumulate(left, (u.i * d + u.j) * d + t.j, t.c * u.c);
      for (const auto& u : c.delta(t.j)) accumulate(right, (t.i * d + u.i) * d + u.j, t.c * u.c);
    }
    if (left != right) out.push_back({"coassociativity", "fails on " + index_name(c.names(), a)});
    Vec l = zero_vec(c.field(), d), r = zero_vec(c.field(), d);
    for (const auto& t : c.delta(a)) {
      l[t.j].add_product(c.counit()[t.i], t.c);
      r[t.i].add_product(c.counit()[t.j], t.c);
    }
    const Vec e = unit_vec(c.field(), d, a);
    if (l != e || r != e) out.push_back({"counit", "fails on " + index_name(c.names(), a)});
  }
  return out;
}

std::vector<Violation> validate(const AlgebraData& a) {
  std::vector<Violation> out;
  const std::size_t d = a.dim();
  bool assoc = true;
  for (std::size_t i = 0; i < d && assoc; ++i)
    for (std::size_t j = 0; j < d && assoc; ++j) {
      Vec ij = zero_vec(a.field(), d);
      for (const auto& t : a.product(i, j)) ij[t.k] += t.c;
      for (std::size_t k = 0; k < d && assoc; ++k) {
        Vec jk = zero_vec(a.field(), d);
        for (const auto& t : a.product(j, k)) jk[t.k] += t.c;
        if (a.multiply(ij, unit_vec(a.field(), d, k)) != a.multiply(unit_vec(a.field(), d, i), jk)) {
          assoc = false;
          out.push_back({"associativity",
                         "fails on (" + index_name(a.names(), i) + ", " + index_name(a.names(), j) + ", " +
                             index_name(a.names(), k) + ")"});
        }
      }
    }
  for (std::size_t i = 0; i < d; ++i) {
    const Vec e = unit_vec(a.field(), d, i);
    if (a.multiply(a.unit(), e) != e || a.multiply(e, a.unit()) != e) {
      out.push_back({"unit", "fails on " + index_name(a.names(), i)});
      break;
    }
  }
  return out;
}

std::vector<Violation> validate(const HopfAlgebra& h) {
  std::vector<Violation> out = validate(h.coalgebra());
  for (auto& v : validate(h.algebra())) out.push_back(std::move(v));
  const std::size_t d = h.dim();
  const Field& f = h.field();
  const auto& names = h.names();

  // Delta and epsilon are algebra maps.
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < d; ++i) basis.push_back(unit_vec(f, d, i));
  bool mult_ok = true;
  for (std::size_t i = 0; i < d && mult_ok; ++i)
    for (std::size_t j = 0; j < d && mult_ok; ++j) {
      const Vec lhs = h.comultiply(h.multiply(basis[i], basis[j]));
      Vec rhs = zero_vec(f, d * d);
      for (const auto& s : h.coalgebra().delta(i))
        for (const auto& t : h.coalgebra().delta(j)) {
          const Scalar c = s.c * t.c;
          for (const auto& u : h.algebra().product(s.i, t.i))
            for (const auto& v : h.algebra().product(s.j, t.j)) rhs[u.k * d + v.k].add_product(c, u.c * v.c);
        }
      if (lhs != rhs) {
        mult_ok = false;
        out.push_back({"bialgebra", "Delta is not multiplicative on (" + names[i] + ", " + names[j] + ")"});
      }
      if (h.epsilon(h.multiply(basis[i], basis[j])) != h.coalgebra().counit()[i] * h.coalgebra().counit()[j]) {
        mult_ok = false;
        out.push_back({"bialgebra", "epsilon is not multiplicative on (" + names[i] + ", " + names[j] + ")"});
      }
    }
  Vec one_one = zero_vec(f, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (!h.one()[i].is_zero() && !h.one()[j].is_zero()) one_one[i * d + j] = h.one()[i] * h.one()[j];
  if (h.comultiply(h.one()) != one_one) out.push_back({"bialgebra", "Delta(1) != 1 (x) 1"});
  if (!h.epsilon(h.one()).is_one()) out.push_back({"bialgebra", "epsilon(1) != 1"});

  // m (S (x) id) Delta = u epsilon = m (id (x) S) Delta
  for (std::size_t a = 0; a < d; ++a) {
    Vec left = zero_vec(f, d), right = zero_vec(f, d);
    for (const auto& t : h.coalgebra().delta(a)) {
      axpy(left, t.c, h.multiply(h.antipode().col(t.i), basis[t.j]));
      axpy(right, t.c, h.multiply(basis[t.i], h.antipode().col(t.j)));
    }
    const Vec expect = scale(h.coalgebra().counit()[a], h.one());
    if (left != expect || right != expect) out.push_back({"antipode", "fails on " + names[a]});
  }
  if (rank(h.antipode()) != d) out.push_back({"antipode", "antipode is not bijective"});
  return out;
}

AlgebraData dual(const Coalgebra& c) {
  const std::size_t d = c.dim();
  std::vector<std::vector<LinearTerm>> mult(d * d);
  for (std::size_t a = 0; a < d; ++a)
    for (const auto& t : c.delta(a)) mult[t.i * d + t.j].push_back({a, t.c});
  std::vector<std::string> names;
  for (const auto& n : c.names()) names.push_back(n + "*");
  return AlgebraData(c.field(), std::move(names), std::move(mult), c.counit());
}

Coalgebra dual(const AlgebraData& a) {
  const std::size_t d = a.dim();
  std::vector<std::vector<TensorTerm>> delta(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& t : a.product(i, j)) delta[t.k].push_back({i, j, t.c});
  std::vector<std::string> names;
  for (const auto& n : a.names()) names.push_back(n + "*");
  return Coalgebra(a.field(), std::move(names), std::move(delta), a.unit());
}

namespace {

// Removes the "*" appended by a previous dualisation so that dual(dual(h)) == h.
std::vector<std::string> undual_names(std::vector<std::string> names) {
  for (auto& n : names)
    if (n.size() > 1 && n.back() == '*' && n[n.size() - 2] == '*') n.resize(n.size() - 2);
  return names;
}

}  // namespace

HopfAlgebra dual(const HopfAlgebra& h) {
  const std::size_t d = h.dim();
  std::vector<std::string> names;
  for (const auto& n : h.names()) names.push_back(n + "*");
  names = undual_names(std::move(names));
  std::vector<std::vector<LinearTerm>> mult(d * d);
  for (std::size_t a = 0; a < d; ++a)
    for (const auto& t : h.coalgebra().delta(a)) mult[t.i * d + t.j].push_back({a, t.c});
  std::vector<std::vector<TensorTerm>> delta(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& t : h.algebra().product(i, j)) delta[t.k].push_back({i, j, t.c});
  return HopfAlgebra(Coalgebra(h.field(), names, std::move(delta), h.one()),
                     AlgebraData(h.field(), names, std::move(mult), h.coalgebra().counit()),
                     h.antipode().transpose());
}

HopfAlgebra co_opposite(const HopfAlgebra& h) {
  std::vector<std::vector<TensorTerm>> delta(h.dim());
  for (std::size_t a = 0; a < h.dim(); ++a)
    for (const auto& t : h.coalgebra().delta(a)) delta[a].push_back({t.j, t.i, t.c});
  auto inv = inverse(h.antipode());
  if (!inv) throw InvalidInput("co_opposite: antipode is not invertible");
  return HopfAlgebra(Coalgebra(h.field(), h.names(), std::move(delta), h.coalgebra().counit()), h.algebra(), *inv);
}

HopfAlgebra tensor_product(const HopfAlgebra& a, const HopfAlgebra& b) {
  if (!(a.field() == b.field())) throw InvalidInput("tensor_product: fields differ");
  const std::size_t da = a.dim(), db = b.dim(), d = da * db;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j) names.push_back(a.names()[i] + "." + b.names()[j]);
  std::vector<std::vector<TensorTerm>> delta(d);
  Vec counit = zero_vec(a.field(), d), unit = zero_vec(a.field(), d);
  std::vector<std::vector<LinearTerm>> mult(d * d);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j) {
      const std::size_t x = i * db + j;
      for (const auto& s : a.coalgebra().delta(i))
        for (const auto& t : b.coalgebra().delta(j)) delta[x].push_back({s.i * db + t.i, s.j * db + t.j, s.c * t.c});
      counit[x] = a.coalgebra().counit()[i] * b.coalgebra().counit()[j];
      unit[x] = a.one()[i] * b.one()[j];
      for (std::size_t k = 0; k < da; ++k)
        for (std::size_t l = 0; l < db; ++l)
          for (const auto& s : a.algebra().product(i, k))
            for (const auto& t : b.algebra().product(j, l)) mult[x * d + k * db + l].push_back({s.k * db + t.k, s.c * t.c});
    }
  return HopfAlgebra(Coalgebra(a.field(), names, std::move(delta), std::move(counit)),
                     AlgebraData(a.field(), names, std::move(mult), std::move(unit)),
                     kron(a.antipode(), b.antipode()));
}

Mat inclusion_map(const Subspace& d) { return d.basis().transpose(); }

namespace {

std::vector<std::string> restricted_names(const std::vector<std::string>& names, const Subspace& d) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < d.dim(); ++i) out.push_back(format_vector(names, d.vector(i)));
  return out;
}

}  // namespace

std::vector<TensorTerm> coordinates_in_tensor_square(const Subspace& d, const Mat& m) {
  std::vector<TensorTerm> terms;
  Mat rebuilt(m.field(), m.rows(), m.cols());
  for (std::size_t a = 0; a < d.dim(); ++a)
    for (std::size_t b = 0; b < d.dim(); ++b) {
      const Scalar& c = m(d.pivots()[a], d.pivots()[b]);
      if (c.is_zero()) continue;
      terms.push_back({a, b, c});
      for (std::size_t i = d.pivots()[a]; i < m.rows(); ++i) {
        if (d.basis()(a, i).is_zero()) continue;
        for (std::size_t j = d.pivots()[b]; j < m.cols(); ++j)
          if (!d.basis()(b, j).is_zero()) rebuilt(i, j).add_product(c, d.basis()(a, i) * d.basis()(b, j));
      }
    }
  if (rebuilt != m) throw InvalidInput("element is not in the tensor square of the subspace");
  return terms;
}

Coalgebra restrict_coalgebra(const Coalgebra& c, const Subspace& d) {
  std::vector<std::vector<TensorTerm>> delta;
  Vec counit;
  for (std::size_t a = 0; a < d.dim(); ++a) {
    try {
      delta.push_back(coordinates_in_tensor_square(d, c.comultiply_matrix(d.vector(a))));
    } catch (const InvalidInput&) {
      throw InvalidInput("restrict_coalgebra: subspace is not a subcoalgebra");
    }
    counit.push_back(c.epsilon(d.vector(a)));
  }
  return Coalgebra(c.field(), restricted_names(c.names(), d), std::move(delta), std::move(counit));
}

HopfAlgebra restrict_hopf(const HopfAlgebra& h, const Subspace& d) {
  Coalgebra c = restrict_coalgebra(h.coalgebra(), d);
  const std::size_t n = d.dim();
  std::vector<std::vector<LinearTerm>> mult(n * n);
  auto coords = [&](const Vec& v, const char* what) {
    if (!d.contains(v)) throw InvalidInput(std::string("restrict_hopf: subspace not closed under ") + what);
    return d.coordinates(v);
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Vec p = coords(h.multiply(d.vector(a), d.vector(b)), "multiplication");
      for (std::size_t k = 0; k < n; ++k)
        if (!p[k].is_zero()) mult[a * n + b].push_back({k, p[k]});
    }
  Vec unit = coords(h.one(), "the unit");
  Mat s(h.field(), n, n);
  for (std::size_t a = 0; a < n; ++a) s.set_col(a, coords(h.antipode(d.vector(a)), "the antipode"));
  return HopfAlgebra(std::move(c), AlgebraData(h.field(), restricted_names(h.names(), d), std::move(mult), std::move(unit)),
                     std::move(s));
}

bool is_subcoalgebra(const Coalgebra& c, const Subspace& d) {
  const Subspace perp = annihilator(d);
  if (perp.dim() == 0) return true;
  const Mat p = perp.basis();
  for (std::size_t a = 0; a < d.dim(); ++a) {
    const Mat m = c.comultiply_matrix(d.vector(a));
    if (!(p * m).is_zero() || !(m * p.transpose()).is_zero()) return false;
  }
  return true;
}

bool is_subalgebra(const AlgebraData& a, const Subspace& d) {
  if (!d.contains(a.unit())) return false;
  for (std::size_t i = 0; i < d.dim(); ++i)
    for (std::size_t j = 0; j < d.dim(); ++j)
      if (!d.contains(a.multiply(d.vector(i), d.vector(j)))) return false;
  return true;
}

bool is_two_sided_ideal(const AlgebraData& a, const Subspace& d) {
  for (std::size_t i = 0; i < d.dim(); ++i)
    for (std::size_t k = 0; k < a.dim(); ++k) {
      const Vec e = unit_vec(a.field(), a.dim(), k);
      if (!d.contains(a.multiply(e, d.vector(i))) || !d.contains(a.multiply(d.vector(i), e))) return false;
    }
  return true;
}

bool is_coideal(const Coalgebra& c, const Subspace& i) {
  for (std::size_t a = 0; a < i.dim(); ++a)
    if (!c.epsilon(i.vector(a)).is_zero()) return false;
  const Subspace perp = annihilator(i);
  if (perp.dim() == 0) return true;
  const Mat p = perp.basis();
  for (std::size_t a = 0; a < i.dim(); ++a)
    if (!(p * c.comultiply_matrix(i.vector(a)) * p.transpose()).is_zero()) return false;
  return true;
}

bool is_hopf_subalgebra(const HopfAlgebra& h, const Subspace& d) {
  return is_subalgebra(h.algebra(), d) && is_subcoalgebra(h.coalgebra(), d) && map_subspace(h.antipode(), d) == d;
}

bool is_hopf_ideal(const HopfAlgebra& h, const Subspace& i) {
  return is_two_sided_ideal(h.algebra(), i) && is_coideal(h.coalgebra(), i) && i.contains(map_subspace(h.antipode(), i));
}

Subspace subspace_product(const AlgebraData& a, const Subspace& d, const Subspace& e) {
  const std::size_t n = d.dim() * e.dim();
  std::vector<Vec> products(n);
  const auto total = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t idx = 0; idx < total; ++idx) {
    const auto k = static_cast<std::size_t>(idx);
    products[k] = a.multiply(d.vector(k / e.dim()), e.vector(k % e.dim()));
  }
  SpanBuilder b(a.field(), a.dim());
  for (const auto& p : products)
    if (b.add(p) && b.full()) break;
  return b.build();
}

namespace serial {
Subspace subspace_product(const AlgebraData& a, const Subspace& d, const Subspace& e) {
  SpanBuilder b(a.field(), a.dim());
  for (std::size_t i = 0; i < d.dim(); ++i)
    for (std::size_t j = 0; j < e.dim(); ++j) b.add(a.multiply(d.vector(i), e.vector(j)));
  return b.build();
}
}  // namespace serial

namespace {

// {c : g(M_k c) = 0 for all g in target^perp and all k}
Subspace common_preimage(const std::vector<Mat>& maps, const Subspace& target, std::size_t dim) {
  const Subspace perp = annihilator(target);
  if (perp.dim() == 0) return Subspace::full(target.field(), dim);
  std::vector<Vec> rows;
  for (const Mat& m : maps) {
    const Mat r = perp.basis() * m;
    for (std::size_t i = 0; i < r.rows(); ++i) rows.push_back(r.row(i));
  }
  return kernel(Mat::from_rows(target.field(), dim, rows));
}

}  // namespace

Subspace largest_ideal_in(const AlgebraData& a, const Subspace& w) {
  std::vector<Mat> left, right;
  for (std::size_t k = 0; k < a.dim(); ++k) {
    const Vec e = unit_vec(a.field(), a.dim(), k);
    left.push_back(a.left_multiplication(e));
    right.push_back(a.right_multiplication(e));
  }
  const Subspace left_ideal = common_preimage(left, w, a.dim());
  return common_preimage(right, left_ideal, a.dim());
}

bool same_structure(const Coalgebra& a, const Coalgebra& b) {
  return a.field() == b.field() && a.names() == b.names() && a.counit() == b.counit() &&
         a.comultiplication_map() == b.comultiplication_map();
}

bool same_structure(const HopfAlgebra& a, const HopfAlgebra& b) {
  return same_structure(a.coalgebra(), b.coalgebra()) && a.algebra().unit() == b.algebra().unit() &&
         a.algebra().multiplication_map() == b.algebra().multiplication_map() && a.antipode() == b.antipode();
}

std::string format_vector(const std::vector<std::string>& names, const Vec& v) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    const std::string name = index_name(names, i);
    std::string coeff = v[i].to_string();
    if (!first) os << " + ";
    first = false;
    if (v[i].is_one())
      os << name;
    else if ((-v[i]).is_one())
      os << "-" << name;
    else
      os << coeff << "*" << name;
  }
  return first ? "0" : os.str();
}

}  // namespace hopflab
