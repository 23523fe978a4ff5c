#include "phin/linalg.hpp"

#include <algorithm>
#include <sstream>

#include "phin/errors.hpp"

namespace phin {

Mat::Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Mat::Mat(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) throw InvalidInput("matrix entry count does not match its shape");
}

Mat::Mat(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InvalidInput("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::unit(std::size_t n, std::size_t i, std::size_t j) {
  Mat m(n, n);
  m(i, j) = 1;
  return m;
}

Mat Mat::diagonal(const std::vector<Scalar>& d) {
  Mat m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Mat m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InvalidInput("row length mismatch");
    std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(r * cols));
  }
  return m;
}

Mat Mat::from_columns(const std::vector<Vec>& cols, std::size_t rows) {
  Mat m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw InvalidInput("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

bool Mat::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vec Mat::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec Mat::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Scalar Mat::trace() const {
  Scalar s;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
  return s;
}

Mat& Mat::operator+=(const Mat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidInput("matrix shape mismatch in +");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidInput("matrix shape mismatch in -");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Mat& Mat::operator*=(const Scalar& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Mat operator*(const Mat& x, const Mat& y) {
  if (x.cols_ != y.rows_) throw InvalidInput("matrix shape mismatch in *");
  Mat out(x.rows_, y.cols_);
  for (std::size_t i = 0; i < x.rows_; ++i) {
    for (std::size_t k = 0; k < x.cols_; ++k) {
      const Scalar& a = x(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < y.cols_; ++j) {
        if (!y(k, j).is_zero()) out(i, j) += a * y(k, j);
      }
    }
  }
  return out;
}

Vec operator*(const Mat& x, const Vec& v) {
  if (x.cols_ != v.size()) throw InvalidInput("matrix/vector shape mismatch");
  Vec out(x.rows_);
  for (std::size_t i = 0; i < x.rows_; ++i)
    for (std::size_t k = 0; k < x.cols_; ++k)
      if (!x(i, k).is_zero() && !v[k].is_zero()) out[i] += x(i, k) * v[k];
  return out;
}

bool operator==(const Mat& x, const Mat& y) {
  return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
}

Mat Mat::pow(unsigned k) const {
  if (!is_square()) throw InvalidInput("power of a non-square matrix");
  Mat acc = identity(rows_);
  for (unsigned i = 0; i < k; ++i) acc = acc * *this;
  return acc;
}

unsigned long Mat::field_prime() const {
  unsigned long p = 0;
  for (const auto& x : data_) {
    if (x.prime() != 0) {
      if (p != 0 && p != x.prime()) throw InvalidInput("matrix mixes entries from different fields");
      p = x.prime();
    }
  }
  return p;
}

std::string Mat::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c);
  }
  os << ']';
  return os.str();
}

Vec flatten(const Mat& m) { return m.entries(); }

Mat unflatten(const Vec& v, std::size_t n) {
  if (v.size() != n * n) throw InvalidInput("vector length is not n^2");
  return Mat(n, n, v);
}

Mat commutator(const Mat& x, const Mat& y) { return x * y - y * x; }

Echelon rref(Mat m) {
  Echelon out;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m(pivot, c).is_zero()) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(pivot, j), m(r, j));
    Scalar inv = m(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Scalar factor = m(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (!m(r, j).is_zero()) m(i, j) -= factor * m(r, j);
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Mat& m) { return rref(m).rank; }

Scalar det(Mat m) {
  if (!m.is_square()) throw InvalidInput("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Scalar d(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m(pivot, c).is_zero()) ++pivot;
    if (pivot == n) return Scalar(0);
    if (pivot != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(c, j));
      d = -d;
    }
    d *= m(c, c);
    Scalar inv = m(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      Scalar factor = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= factor * m(c, j);
    }
  }
  return d;
}

Mat inverse(const Mat& m) {
  if (!m.is_square()) throw InvalidInput("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Mat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  Echelon e = rref(std::move(aug));
  if (e.rank < n || e.pivots[n - 1] != n - 1) throw InvalidInput("matrix is singular");
  Mat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

bool is_invertible(const Mat& m) { return m.is_square() && rank(m) == m.rows(); }

// --- Subspace -------------------------------------------------------------

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vec>& vectors) {
  Subspace s(ambient_dim);
  if (vectors.empty()) return s;
  Echelon e = rref(Mat::from_rows(vectors, ambient_dim));
  std::vector<Scalar> kept(e.reduced.entries().begin(),
                           e.reduced.entries().begin() + static_cast<std::ptrdiff_t>(e.rank * ambient_dim));
  s.basis_ = Mat(e.rank, ambient_dim, std::move(kept));
  return s;
}

Subspace Subspace::whole(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  s.basis_ = Mat::identity(ambient_dim);
  return s;
}

std::vector<Vec> Subspace::basis() const {
  std::vector<Vec> out;
  for (std::size_t r = 0; r < basis_.rows(); ++r) out.push_back(basis_.row(r));
  return out;
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_) throw InvalidInput("vector does not live in the ambient space");
  std::vector<Vec> rows = basis();
  rows.push_back(v);
  return rank(Mat::from_rows(rows, ambient_)) == dim();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw InvalidInput("subspaces of different ambient spaces");
  return (*this + other).dim() == dim();
}

Subspace Subspace::operator+(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw InvalidInput("subspaces of different ambient spaces");
  std::vector<Vec> rows = basis();
  for (auto& v : other.basis()) rows.push_back(std::move(v));
  return span(ambient_, rows);
}

Mat Subspace::annihilator() const {
  if (dim() == 0) return Mat::identity(ambient_);
  Subspace perp = kernel(basis_);
  return perp.basis_;
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw InvalidInput("subspaces of different ambient spaces");
  Mat a = annihilator();
  Mat b = other.annihilator();
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < a.rows(); ++r) rows.push_back(a.row(r));
  for (std::size_t r = 0; r < b.rows(); ++r) rows.push_back(b.row(r));
  if (rows.empty()) return whole(ambient_);
  return kernel(Mat::from_rows(rows, ambient_));
}

Subspace kernel(const Mat& m) {
  const std::size_t cols = m.cols();
  Echelon e = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols);
    v[free] = 1;
    for (std::size_t r = 0; r < e.rank; ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return Subspace::span(cols, basis);
}

Subspace image(const Mat& m) {
  std::vector<Vec> cols;
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
  return Subspace::span(m.rows(), cols);
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
  if (b.size() != m.rows()) throw InvalidInput("right-hand side has the wrong length");
  const std::size_t cols = m.cols();
  Mat aug(m.rows(), cols + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) aug(r, c) = m(r, c);
    aug(r, cols) = b[r];
  }
  Echelon e = rref(std::move(aug));
  Vec x(cols);
  for (std::size_t r = 0; r < e.rank; ++r) {
    if (e.pivots[r] == cols) return std::nullopt;
    x[e.pivots[r]] = e.reduced(r, cols);
  }
  return x;
}

// --- polynomials ------------------------------------------------------------

namespace poly {

Poly normalize(Poly f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
  return f;
}

std::size_t degree(const Poly& f) { return f.empty() ? 0 : f.size() - 1; }

Poly derivative(const Poly& f) {
  Poly d;
  for (std::size_t k = 1; k < f.size(); ++k) d.push_back(f[k] * Scalar(static_cast<long>(k)));
  return normalize(d);
}

Poly remainder(Poly f, const Poly& g_in) {
  Poly g = normalize(g_in);
  if (g.empty()) throw InvalidInput("polynomial division by zero");
  f = normalize(std::move(f));
  const Scalar lead_inv = g.back().inverse();
  while (f.size() >= g.size()) {
    Scalar q = f.back() * lead_inv;
    std::size_t shift = f.size() - g.size();
    for (std::size_t k = 0; k < g.size(); ++k) f[shift + k] -= q * g[k];
    f.pop_back();
    f = normalize(std::move(f));
  }
  return f;
}

Poly gcd(Poly f, Poly g) {
  f = normalize(std::move(f));
  g = normalize(std::move(g));
  while (!g.empty()) {
    Poly r = remainder(f, g);
    f = std::move(g);
    g = std::move(r);
  }
  if (f.empty()) return f;
  Scalar inv = f.back().inverse();
  for (auto& c : f) c *= inv;
  return f;
}

Mat evaluate(const Poly& f, const Mat& m) {
  Mat acc(m.rows(), m.cols());
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * m + Mat::identity(m.rows()) * *it;
  return acc;
}

Scalar evaluate(const Poly& f, const Scalar& x) {
  Scalar acc;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace poly

Poly charpoly(const Mat& a) {
  if (!a.is_square()) throw InvalidInput("characteristic polynomial of a non-square matrix");
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
  const std::size_t n = a.rows();
  Poly c(n + 1);
  c[n] = 1;
  Mat m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m + Mat::identity(n) * c[n - k + 1];
    c[n - k] = -(a * m).trace() / Scalar(static_cast<long>(k));
  }
  return c;
}

Poly minpoly(const Mat& m) {
  if (!m.is_square()) throw InvalidInput("minimal polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Vec> powers{flatten(Mat::identity(n))};
  Mat current = Mat::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    current = current * m;
    Vec target = flatten(current);
    Mat basis = Mat::from_columns(powers, n * n);
    if (auto x = solve(basis, target)) {
      Poly f(k + 1);
      for (std::size_t j = 0; j < k; ++j) f[j] = -(*x)[j];
      f[k] = 1;
      return f;
    }
    powers.push_back(std::move(target));
  }
  throw InternalError("minimal polynomial degree exceeds n");
}

bool minpoly_squarefree(const Mat& m) {
  Poly f = minpoly(m);
  return poly::degree(poly::gcd(f, poly::derivative(f))) == 0;
}

std::size_t Partition::total() const {
  std::size_t s = 0;
  for (auto x : parts) s += x;
  return s;
}

bool is_nilpotent(const Mat& m) {
  if (!m.is_square()) throw InvalidInput("nilpotency of a non-square matrix");
  return m.pow(static_cast<unsigned>(m.rows())).is_zero();
}

Partition jordan_type(const Mat& m) {
  if (!is_nilpotent(m)) throw InvalidInput("jordan_type requires a nilpotent matrix");
  const std::size_t n = m.rows();
  // r_k = rank(m^k); #{parts >= k} = r_{k-1} - r_k.
  std::vector<std::size_t> ranks{n};
  Mat power = Mat::identity(n);
  while (ranks.back() != 0) {
    power = power * m;
    ranks.push_back(rank(power));
  }
  Partition out;
  for (std::size_t k = ranks.size() - 1; k >= 1; --k) {
    std::size_t at_least_k = ranks[k - 1] - ranks[k];
    std::size_t at_least_k1 = k + 1 < ranks.size() ? ranks[k] - ranks[k + 1] : 0;
    for (std::size_t j = 0; j < at_least_k - at_least_k1; ++j) out.parts.push_back(k);
  }
  return out;
}

JordanBasis jordan_basis_nilpotent(const Mat& m) {
  if (!is_nilpotent(m)) throw InvalidInput("jordan_basis_nilpotent requires a nilpotent matrix");
  const std::size_t n = m.rows();
  std::vector<Mat> powers{Mat::identity(n)};
  while (!powers.back().is_zero()) powers.push_back(powers.back() * m);
  const std::size_t height = powers.size() - 1;  // m^height == 0
  std::vector<Subspace> kernels;
  for (const auto& pw : powers) kernels.push_back(kernel(pw));

  struct Chain {
    Vec top;
    std::size_t length;
  };
  std::vector<Chain> chains;
  for (std::size_t level = height; level >= 1; --level) {
    // Vectors already accounted for at this level: ker m^{level-1} plus the
    // images of longer chains.
    std::vector<Vec> span_rows = kernels[level - 1].basis();
    for (const auto& ch : chains) span_rows.push_back(powers[ch.length - level] * ch.top);
    Subspace covered = Subspace::span(n, span_rows);
    for (const auto& candidate : kernels[level].basis()) {
      if (covered.contains(candidate)) continue;
      chains.push_back({candidate, level});
      covered = covered + Subspace::span(n, {candidate});
    }
  }

  JordanBasis out;
  std::vector<Vec> columns;
  for (const auto& ch : chains) {
    out.partition.parts.push_back(ch.length);
    for (std::size_t k = ch.length; k >= 1; --k) columns.push_back(powers[k - 1] * ch.top);
  }
  out.conjugator = Mat::from_columns(columns, n);
  return out;
}

}  // namespace phin
