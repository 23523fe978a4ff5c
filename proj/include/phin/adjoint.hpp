#pragma once

// Adjoint and Frobenius-twisted adjoint operators on gl_n^{x f}.
//
// Elements of gl_n^{x f} are flattened slot-major, then row-major: entry
// (r, c) of slot i sits at index i*n^2 + r*n + c.  Every BigOp in the library
// uses this ordering.

#include <cstddef>
#include <string_view>
#include <vector>

#include "phin/field.hpp"
#include "phin/linalg.hpp"

namespace phin {

enum class TupleKind { group, lie };

/// A cyclic f-tuple of n x n matrices (Phi_1..Phi_f or N_1..N_f).
class FrobTuple {
 public:
  /// Every entry must be invertible.
  static FrobTuple group(std::vector<Mat> mats);
  static FrobTuple lie(std::vector<Mat> mats);
  /// The constant tuple (m, ..., m).
  static FrobTuple constant(const Mat& m, std::size_t f, TupleKind kind);

  std::size_t f() const { return mats_.size(); }
  std::size_t n() const { return mats_.front().rows(); }
  TupleKind kind() const { return kind_; }
  const Mat& operator[](std::size_t i) const { return mats_[i]; }
  const std::vector<Mat>& mats() const { return mats_; }

  friend bool operator==(const FrobTuple&, const FrobTuple&) = default;

 private:
  FrobTuple(std::vector<Mat> mats, TupleKind kind);
  std::vector<Mat> mats_;
  TupleKind kind_;
};

Vec flatten(const std::vector<Mat>& slots);
std::vector<Mat> unflatten_tuple(const Vec& v, std::size_t n, std::size_t f);

/// A linear operator on gl_n^{x f}, as an (f n^2) x (f n^2) matrix.
struct BigOp {
  static constexpr std::string_view ordering = "slot-major/row-major";

  std::size_t n = 0;
  std::size_t f = 0;
  Mat matrix;

  std::size_t dim() const { return f * n * n; }
  Vec apply(const Vec& v) const { return matrix * v; }
  std::vector<Mat> apply(const std::vector<Mat>& slots) const;

  friend BigOp operator+(const BigOp& x, const BigOp& y);
  friend BigOp operator-(const BigOp& x, const BigOp& y);
  friend BigOp operator*(const BigOp& x, const BigOp& y);
  friend BigOp operator*(const Scalar& s, const BigOp& x);
  friend bool operator==(const BigOp&, const BigOp&) = default;

  static BigOp identity(std::size_t n, std::size_t f);
};

/// X |-> phi X phi^{-1} on gl_n.
BigOp ad_single(const Mat& phi);
/// (X_1..X_f) |-> (Ad(Phi_1) X_2, ..., Ad(Phi_f) X_1).
BigOp ad_frobenius(const FrobTuple& phi);
/// (X_1..X_f) |-> ([N_1, X_1], ..., [N_f, X_f]).
BigOp ad_n(const FrobTuple& nil);
/// I - p * ad_frobenius(phi).
BigOp one_minus_pad(const FrobTuple& phi, Prime p);
/// p * ad_frobenius(phi) - I.
BigOp pad_minus_one(const FrobTuple& phi, Prime p);

/// Phi_1 * ... * Phi_f.
Mat norm_product(const FrobTuple& phi);

}  // namespace phin
