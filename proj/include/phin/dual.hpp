#pragma once

// Dual numbers x + eps y with eps^2 = 0, used to check tangent vectors by
// substituting them into the defining relations.

#include <cstddef>
#include <vector>

#include "phin/errors.hpp"
#include "phin/moduli.hpp"

namespace phin {

template <class T>
struct Dual {
  T re{};
  T eps{};

  Dual() = default;
  Dual(T r, T e = T{}) : re(std::move(r)), eps(std::move(e)) {}

  friend Dual operator+(const Dual& x, const Dual& y) { return {x.re + y.re, x.eps + y.eps}; }
  friend Dual operator-(const Dual& x, const Dual& y) { return {x.re - y.re, x.eps - y.eps}; }
  friend Dual operator*(const Dual& x, const Dual& y) { return {x.re * y.re, x.re * y.eps + x.eps * y.re}; }
  friend Dual operator/(const Dual& x, const Dual& y) {
    if (y.re == T{}) throw InvalidInput("dual division by a non-unit");
    return {x.re / y.re, (x.eps * y.re - x.re * y.eps) / (y.re * y.re)};
  }
  friend bool operator==(const Dual& x, const Dual& y) { return x.re == y.re && x.eps == y.eps; }
  bool is_zero() const { return re == T{} && eps == T{}; }
};

using DualScalar = Dual<Scalar>;

/// Square matrix over dual scalars, row-major.
class DualMat {
 public:
  explicit DualMat(std::size_t n) : n_(n), data_(n * n) {}
  DualMat(const Mat& re, const Mat& eps) : n_(re.rows()), data_(re.rows() * re.rows()) {
    for (std::size_t r = 0; r < n_; ++r)
      for (std::size_t c = 0; c < n_; ++c) (*this)(r, c) = {re(r, c), eps(r, c)};
  }

  std::size_t n() const { return n_; }
  DualScalar& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  const DualScalar& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

  friend DualMat operator*(const DualMat& x, const DualMat& y) {
    DualMat out(x.n_);
    for (std::size_t r = 0; r < x.n_; ++r)
      for (std::size_t k = 0; k < x.n_; ++k)
        for (std::size_t c = 0; c < x.n_; ++c) out(r, c) = out(r, c) + x(r, k) * y(k, c);
    return out;
  }
  friend DualMat operator-(const DualMat& x, const DualMat& y) {
    DualMat out(x.n_);
    for (std::size_t i = 0; i < x.data_.size(); ++i) out.data_[i] = x.data_[i] - y.data_[i];
    return out;
  }
  friend DualMat operator*(const DualScalar& s, const DualMat& x) {
    DualMat out(x.n_);
    for (std::size_t i = 0; i < x.data_.size(); ++i) out.data_[i] = s * x.data_[i];
    return out;
  }

  bool is_zero() const {
    for (const auto& e : data_)
      if (!e.is_zero()) return false;
    return true;
  }

  /// Gauss-Jordan elimination, pivoting on units (nonzero real part).
  DualMat inverse() const {
    DualMat a = *this;
    DualMat inv(n_);
    for (std::size_t i = 0; i < n_; ++i) inv(i, i) = DualScalar(Scalar(1));
    for (std::size_t col = 0; col < n_; ++col) {
      std::size_t pivot = col;
      while (pivot < n_ && a(pivot, col).re.is_zero()) ++pivot;
      if (pivot == n_) throw InvalidInput("dual matrix is not invertible");
      for (std::size_t c = 0; c < n_; ++c) {
        std::swap(a(col, c), a(pivot, c));
        std::swap(inv(col, c), inv(pivot, c));
      }
      const DualScalar lead = a(col, col);
      for (std::size_t c = 0; c < n_; ++c) {
        a(col, c) = a(col, c) / lead;
        inv(col, c) = inv(col, c) / lead;
      }
      for (std::size_t r = 0; r < n_; ++r) {
        if (r == col || a(r, col).is_zero()) continue;
        const DualScalar factor = a(r, col);
        for (std::size_t c = 0; c < n_; ++c) {
          a(r, c) = a(r, c) - factor * a(col, c);
          inv(r, c) = inv(r, c) - factor * inv(col, c);
        }
      }
    }
    return inv;
  }

 private:
  std::size_t n_;
  std::vector<DualScalar> data_;
};

/// Substitutes Phi~_i = (1 + eps A_i) Phi_i and N~_i = N_i + eps M_i into
/// N~_i - p Phi~_i N~_{i+1} Phi~_i^{-1} and reports whether every slot
/// vanishes modulo eps^2.  v holds (A_1..A_f, M_1..M_f).
inline bool satisfies_relations_to_first_order(const ModuliPoint& pt, const Vec& v) {
  const std::size_t n = pt.n();
  const std::size_t f = pt.f();
  if (v.size() != 2 * pt.dim()) throw InvalidInput("tangent vector has the wrong length");
  const Vec a_part(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(pt.dim()));
  const Vec m_part(v.begin() + static_cast<std::ptrdiff_t>(pt.dim()), v.end());
  const std::vector<Mat> a = unflatten_tuple(a_part, n, f);
  const std::vector<Mat> m = unflatten_tuple(m_part, n, f);
  const Mat zero(n, n);

  std::vector<DualMat> phi;
  std::vector<DualMat> nil;
  for (std::size_t i = 0; i < f; ++i) {
    phi.push_back(DualMat(Mat::identity(n), a[i]) * DualMat(pt.phi[i], zero));
    nil.emplace_back(pt.nil[i], m[i]);
  }
  const DualScalar p(Scalar(Rational(pt.p.value()), 0, pt.p));
  for (std::size_t i = 0; i < f; ++i) {
    const DualMat rhs = p * (phi[i] * nil[(i + 1) % f] * phi[i].inverse());
    if (!(nil[i] - rhs).is_zero()) return false;
  }
  return true;
}

}  // namespace phin
