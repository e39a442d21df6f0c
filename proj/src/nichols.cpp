#include "hopflab/nichols.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <utility>

namespace hopflab {

namespace {

std::size_t power(std::size_t v, std::size_t n) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (v != 0 && r > max_symmetrizer_size / v + 1) return max_symmetrizer_size + 1;
    r *= v;
  }
  return r;
}

std::size_t checked_size(const Braiding& c, std::size_t n) {
  const std::size_t s = power(c.v, n);
  if (s > max_symmetrizer_size)
    throw Unsupported("quantum_symmetrizer: v^n exceeds " + std::to_string(max_symmetrizer_size));
  return s;
}

using SparseCols = std::vector<std::vector<std::pair<std::size_t, Scalar>>>;

SparseCols sparse_columns(const Mat& c) {
  SparseCols out(c.cols());
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j)
      if (!c(i, j).is_zero()) out[j].emplace_back(i, c(i, j));
  return out;
}

// c_k m, with c_k the braiding in positions k, k + 1 of V^{(x) n}.
Mat apply_generator(const Braiding& c, const SparseCols& cols, std::size_t n, std::size_t k, const Mat& m) {
  const std::size_t v2 = c.v * c.v;
  const std::size_t tail = power(c.v, n - k - 2);
  const std::size_t head = power(c.v, k);
  Mat out(m.field(), m.rows(), m.cols());
  // Columns are independent.
  const auto ncols = static_cast<std::ptrdiff_t>(m.cols());
#pragma omp parallel for schedule(static) if (m.rows() * m.cols() > 4096)
  for (std::ptrdiff_t jj = 0; jj < ncols; ++jj) {
    const auto j = static_cast<std::size_t>(jj);
    for (std::size_t a = 0; a < head; ++a)
      for (std::size_t pq = 0; pq < v2; ++pq)
        for (std::size_t b = 0; b < tail; ++b) {
          const std::size_t s = (a * v2 + pq) * tail + b;
          if (m(s, j).is_zero()) continue;
          for (const auto& [r, w] : cols[pq]) out((a * v2 + r) * tail + b, j).add_product(w, m(s, j));
        }
  }
  return out;
}

}  // namespace

Braiding braiding_from_yd(const YDModule& yd) {
  if (const auto bad = validate_yd(yd); !bad.empty())
    throw InvalidInput("braiding_from_yd: module is not Yetter-Drinfeld (" + bad[0].axiom + ")");
  const Field& f = yd.l.field();
  const std::size_t v = yd.v;
  Braiding b{v, Mat(f, v * v, v * v)};
  for (std::size_t a = 0; a < yd.l.dim(); ++a) {
    const Mat& act = yd.action[a];
    const Mat& co = yd.coaction[a];
    if (co.is_zero()) continue;
    for (std::size_t i = 0; i < v; ++i)
      for (std::size_t q = 0; q < v; ++q) {
        if (co(q, i).is_zero()) continue;
        for (std::size_t j = 0; j < v; ++j)
          for (std::size_t p = 0; p < v; ++p)
            if (!act(p, j).is_zero()) b.c(p * v + q, i * v + j).add_product(act(p, j), co(q, i));
      }
  }
  const auto bad = validate(b);
  if (!bad.empty()) throw InvalidInput("braiding_from_yd: " + bad[0].axiom + " fails");
  return b;
}

Braiding diagonal_braiding(const Mat& q) {
  const std::size_t v = q.rows();
  if (q.cols() != v) throw InvalidInput("diagonal_braiding: matrix is not square");
  Braiding b{v, Mat(q.field(), v * v, v * v)};
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = 0; j < v; ++j) b.c(j * v + i, i * v + j) = q(i, j);
  return b;
}

std::vector<Violation> validate(const Braiding& b) {
  const std::size_t v2 = b.v * b.v;
  if (b.c.rows() != v2 || b.c.cols() != v2) return {{"shape", "braiding is not a v^2 x v^2 matrix"}};
  std::vector<Violation> out;
  if (!inverse(b.c)) out.push_back({"invertible", "braiding is singular"});
  if (b.v > 0) {
    const Mat id = Mat::identity(b.c.field(), b.v);
    const Mat c12 = kron(b.c, id), c23 = kron(id, b.c);
    if (c12 * c23 * c12 != c23 * c12 * c23) out.push_back({"braid relation", "c12 c23 c12 != c23 c12 c23"});
  }
  return out;
}

Mat braid_generator(const Braiding& c, std::size_t n, std::size_t k) {
  if (k + 2 > n) throw InvalidInput("braid_generator: position out of range");
  const std::size_t s = checked_size(c, n);
  return apply_generator(c, sparse_columns(c.c), n, k, Mat::identity(c.c.field(), s));
}

Mat braid_word(const Braiding& c, std::size_t n, const std::vector<std::size_t>& word) {
  const std::size_t s = checked_size(c, n);
  const SparseCols cols = sparse_columns(c.c);
  Mat m = Mat::identity(c.c.field(), s);
  for (std::size_t i = word.size(); i > 0; --i) {
    if (word[i - 1] + 2 > n) throw InvalidInput("braid_word: letter out of range");
    m = apply_generator(c, cols, n, word[i - 1], m);
  }
  return m;
}

Mat quantum_symmetrizer(const Braiding& c, std::size_t n) {
  const Field& f = c.c.field();
  checked_size(c, n);
  const SparseCols cols = sparse_columns(c.c);
  Mat sym = Mat::identity(f, power(c.v, std::min<std::size_t>(n, 1)));
  for (std::size_t m = 2; m <= n; ++m) {
    const std::size_t s = power(c.v, m);
    // T = 1 + c_{m-1} + c_{m-1} c_{m-2} + ... by Horner (0-based positions).
    Mat t = Mat::identity(f, s);
    for (std::size_t k = 0; k + 1 < m; ++k) t = Mat::identity(f, s) + apply_generator(c, cols, m, k, t);
    // (sym (x) id) t
    Mat next(f, s, s);
    const std::size_t v = c.v;
    const auto rows = static_cast<std::ptrdiff_t>(s);
#pragma omp parallel for schedule(dynamic, 4) if (s > 64)
    for (std::ptrdiff_t rr = 0; rr < rows; ++rr)
      for (std::size_t q = 0, r = static_cast<std::size_t>(rr); q < s / v; ++q) {
        const Scalar& w = sym(r / v, q);
        if (w.is_zero()) continue;
        const std::size_t src = q * v + r % v;
        for (std::size_t j = 0; j < s; ++j)
          if (!t(src, j).is_zero()) next(r, j).add_product(w, t(src, j));
      }
    sym = std::move(next);
  }
  return sym;
}

namespace reference {

std::vector<std::size_t> reduced_word(std::vector<std::size_t> perm, std::uint64_t* seed) {
  std::vector<std::size_t> stripped;
  std::mt19937_64 rng(seed ? *seed : 0);
  for (;;) {
    std::vector<std::size_t> descents;
    for (std::size_t i = 0; i + 1 < perm.size(); ++i)
      if (perm[i] > perm[i + 1]) descents.push_back(i);
    if (descents.empty()) break;
    const std::size_t i = seed ? descents[rng() % descents.size()] : descents.front();
    std::swap(perm[i], perm[i + 1]);
    stripped.push_back(i);
  }
  if (seed) *seed = rng();
  // perm s_{i1} ... s_{ik} = id, so perm = s_{ik} ... s_{i1}.
  std::reverse(stripped.begin(), stripped.end());
  return stripped;
}

Mat quantum_symmetrizer(const Braiding& c, std::size_t n, std::uint64_t* seed) {
  const std::size_t s = checked_size(c, n);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Mat sum(c.c.field(), s, s);
  do {
    sum = sum + braid_word(c, n, reduced_word(perm, seed));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

}  // namespace reference

bool longest_element_lifts_agree(const Braiding& c, std::size_t n) {
  if (n < 3) return true;
  std::vector<std::size_t> w0(n);
  std::iota(w0.rbegin(), w0.rend(), 0);
  // w0 is fixed by the diagram flip s_i -> s_{n-2-i}, so the mirror of a
  // reduced word of w0 is another one.
  const std::vector<std::size_t> a = reference::reduced_word(w0);
  std::vector<std::size_t> b;
  for (std::size_t x : a) b.push_back(n - 2 - x);
  if (a == b) return true;
  return braid_word(c, n, a) == braid_word(c, n, b);
}

NicholsTruncation nichols_dims(const Braiding& c, std::size_t n_max) {
  const auto bad = validate(c);
  if (!bad.empty()) throw InvalidInput("nichols_dims: " + bad[0].axiom + " fails");
  NicholsTruncation t;
  t.dims.push_back(1);
  if (n_max >= 1) t.dims.push_back(c.v);
  for (std::size_t n = 2; n <= n_max; ++n) {
    // B(V) is generated in degree one, so a vanishing degree stays zero.
    if (t.dims.back() == 0) {
      t.dims.push_back(0);
      continue;
    }
    if (n <= 4 && !longest_element_lifts_agree(c, n))
      throw HardFailure("nichols_dims: braid lift depends on the reduced word");
    t.dims.push_back(rank(quantum_symmetrizer(c, n)));
  }
  return t;
}

NicholsTruncation nichols_dims(const YDModule& yd, std::size_t n_max) {
  return nichols_dims(braiding_from_yd(yd), n_max);
}

DiagramNicholsReport compare_with_diagram(const HopfAlgebra& h) {
  const GradedHopf g = associated_graded(h, standard_filtration(h));
  const Diagram r = diagram(g);
  const YDModule yd = yd_structure(g, r);
  std::vector<std::size_t> one;
  for (std::size_t i = 0; i < r.dim(); ++i)
    if (r.degree[i] == 1) one.push_back(i);
  DiagramNicholsReport rep;
  rep.layer_dims = r.layer_dims;
  const std::size_t n_max = r.layer_dims.size();
  rep.layer_dims.resize(n_max + 1, 0);
  if (one.empty()) {
    rep.nichols_dims.assign(n_max + 1, 0);
    rep.nichols_dims[0] = 1;
  } else {
    rep.nichols_dims = nichols_dims(restrict_yd(yd, Subspace::coordinate(h.field(), r.dim(), one)), n_max).dims;
  }
  rep.equal = rep.nichols_dims == rep.layer_dims;
  return rep;
}

}  // namespace hopflab
