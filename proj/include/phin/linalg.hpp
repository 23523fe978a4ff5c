#pragma once

// Dense exact linear algebra over Scalar.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "phin/field.hpp"

namespace phin {

using Vec = std::vector<Scalar>;

/// Row-major dense matrix over Scalar.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols);
  Mat(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);
  Mat(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Mat identity(std::size_t n);
  static Mat zero(std::size_t n) { return Mat(n, n); }
  /// Matrix unit e_{ij} (0-based indices).
  static Mat unit(std::size_t n, std::size_t i, std::size_t j);
  static Mat diagonal(const std::vector<Scalar>& d);
  /// Matrix whose rows are the given vectors.
  static Mat from_rows(const std::vector<Vec>& rows, std::size_t cols);
  /// Matrix whose columns are the given vectors.
  static Mat from_columns(const std::vector<Vec>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<Scalar>& entries() const { return data_; }

  Vec row(std::size_t r) const;
  Vec column(std::size_t c) const;
  Mat transpose() const;
  Scalar trace() const;

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  Mat& operator*=(const Scalar& s);
  friend Mat operator+(Mat x, const Mat& y) { return x += y; }
  friend Mat operator-(Mat x, const Mat& y) { return x -= y; }
  friend Mat operator*(Mat x, const Scalar& s) { return x *= s; }
  friend Mat operator*(const Scalar& s, Mat x) { return x *= s; }
  friend Mat operator*(const Mat& x, const Mat& y);
  friend Vec operator*(const Mat& x, const Vec& v);
  friend bool operator==(const Mat& x, const Mat& y);

  Mat pow(unsigned k) const;

  /// Shared prime of all entries (0 if every entry is unbound rational).
  /// Throws InvalidInput when entries come from different fields.
  unsigned long field_prime() const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Row-major flattening of an n x n matrix into a vector of length n^2.
Vec flatten(const Mat& m);
Mat unflatten(const Vec& v, std::size_t n);

Mat commutator(const Mat& x, const Mat& y);

struct Echelon {
  Mat reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form.
Echelon rref(Mat m);
std::size_t rank(const Mat& m);
Scalar det(Mat m);
/// Throws InvalidInput for a singular matrix.
Mat inverse(const Mat& m);
bool is_invertible(const Mat& m);

/// A linear subspace of K^ambient_dim, stored by its reduced echelon basis so
/// equal subspaces have identical representations.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}
  static Subspace span(std::size_t ambient_dim, const std::vector<Vec>& vectors);
  static Subspace whole(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  /// Rows of this matrix are the canonical basis.
  const Mat& basis_matrix() const { return basis_; }
  std::vector<Vec> basis() const;

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  Subspace operator+(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  /// Rows span the annihilator: x lies in the subspace iff annihilator() * x == 0.
  Mat annihilator() const;

  friend bool operator==(const Subspace& x, const Subspace& y) {
    return x.ambient_ == y.ambient_ && x.basis_ == y.basis_;
  }

 private:
  std::size_t ambient_;
  Mat basis_;
};

/// Right null space.
Subspace kernel(const Mat& m);
/// Column space.
Subspace image(const Mat& m);
/// Some x with m * x == b, if the system is consistent.
std::optional<Vec> solve(const Mat& m, const Vec& b);

/// Polynomials as coefficient lists in ascending degree; the zero polynomial
/// is the empty list.
using Poly = std::vector<Scalar>;

namespace poly {
Poly normalize(Poly f);
std::size_t degree(const Poly& f);
Poly derivative(const Poly& f);
/// Remainder of f modulo g (g nonzero).
Poly remainder(Poly f, const Poly& g);
/// Monic gcd.
Poly gcd(Poly f, Poly g);
Mat evaluate(const Poly& f, const Mat& m);
Scalar evaluate(const Poly& f, const Scalar& x);
}  // namespace poly

/// Monic characteristic polynomial det(t*I - m), ascending coefficients.
Poly charpoly(const Mat& m);
/// Monic minimal polynomial, ascending coefficients.
Poly minpoly(const Mat& m);
bool minpoly_squarefree(const Mat& m);

struct Partition {
  std::vector<std::size_t> parts;  // weakly decreasing, all positive
  std::size_t total() const;
  friend bool operator==(const Partition&, const Partition&) = default;
};

bool is_nilpotent(const Mat& m);
/// Jordan block sizes of a nilpotent matrix.  Throws InvalidInput otherwise.
Partition jordan_type(const Mat& m);

struct JordanBasis {
  Mat conjugator;  // g with g^{-1} m g in Jordan form (ones on the superdiagonal)
  Partition partition;
};

/// Blocks are ordered by decreasing size; equal sizes in the order their
/// chain tops are met in the canonical kernel bases.
JordanBasis jordan_basis_nilpotent(const Mat& m);

}  // namespace phin
