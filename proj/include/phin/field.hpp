#pragma once

// Exact arithmetic in Q and in the quadratic field Q(sqrt p).

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace phin {

using Rational = mpq_class;

bool is_prime(unsigned long n);

/// A rational prime, checked at construction.
class Prime {
 public:
  explicit Prime(unsigned long value);
  unsigned long value() const { return value_; }
  friend bool operator==(Prime, Prime) = default;

 private:
  unsigned long value_;
};

/// An element a + b*sqrt(p) of Q(sqrt p).
///
/// Purely rational values may be "unbound" (prime() == 0); they combine with
/// any field.  Combining two values bound to different primes throws
/// InvalidInput.  Values with b != 0 are always bound.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational a) : a_(std::move(a)) { a_.canonicalize(); }  // NOLINT
  Scalar(Rational a, Rational b, Prime p);

  static Scalar sqrt_p(Prime p);
  /// p^k for any integer k.
  static Scalar p_power(Prime p, long k);
  /// (sqrt p)^k for any integer k.
  static Scalar sqrt_p_power(Prime p, long k);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  unsigned long prime() const { return p_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  Scalar conjugate() const;
  /// Field norm a^2 - p b^2 down to Q.
  Rational norm() const;
  Scalar inverse() const;
  Scalar pow(long k) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }
  friend bool operator==(const Scalar& x, const Scalar& y);

  /// Pair of exact strings {"a_num/a_den", "b_num/b_den"}; zero parts are "0".
  std::pair<std::string, std::string> to_strings() const;
  std::string to_string() const;

 private:
  static unsigned long unify(unsigned long p, unsigned long q);

  Rational a_{0};
  Rational b_{0};
  unsigned long p_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& x);

/// Parses "n", "-n", "n/d" (d != 0).  Throws InvalidInput.
Rational parse_rational(std::string_view text);
/// Canonical text of a rational: "0" for zero, otherwise "num/den".
std::string rational_text(const Rational& q);

/// Square root of a rational, if it is a rational square.
std::optional<Rational> rational_sqrt(const Rational& q);
/// Square root inside Q(sqrt p), if one exists there.  `p` binds the result
/// when x is unbound.
std::optional<Scalar> field_sqrt(const Scalar& x, Prime p);

}  // namespace phin
