#include "phin/field.hpp"

#include <sstream>

#include "phin/errors.hpp"

namespace phin {

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Prime::Prime(unsigned long value) : value_(value) {
  if (!is_prime(value)) throw InvalidInput("not a prime: " + std::to_string(value));
}

Scalar::Scalar(Rational a, Rational b, Prime p) : a_(std::move(a)), b_(std::move(b)), p_(p.value()) {
  a_.canonicalize();
  b_.canonicalize();
}

Scalar Scalar::sqrt_p(Prime p) { return Scalar(0, 1, p); }

Scalar Scalar::p_power(Prime p, long k) {
  mpz_class m;
  mpz_pow_ui(m.get_mpz_t(), mpz_class(p.value()).get_mpz_t(), static_cast<unsigned long>(k < 0 ? -k : k));
  Rational q(m);
  if (k < 0) q = 1 / q;
  return Scalar(q, 0, p);
}

Scalar Scalar::sqrt_p_power(Prime p, long k) {
  // (sqrt p)^k = p^floor(k/2) * sqrt(p)^(k mod 2)
  long half = k >= 0 ? k / 2 : -((-k + 1) / 2);
  Scalar base = p_power(p, half);
  if (k - 2 * half == 1) base *= sqrt_p(p);
  return base;
}

unsigned long Scalar::unify(unsigned long p, unsigned long q) {
  if (p == 0) return q;
  if (q == 0 || p == q) return p;
  throw InvalidInput("cannot combine elements of Q(sqrt " + std::to_string(p) + ") and Q(sqrt " +
                     std::to_string(q) + ")");
}

Scalar Scalar::conjugate() const {
  Scalar r = *this;
  r.b_ = -r.b_;
  return r;
}

Rational Scalar::norm() const { return a_ * a_ - Rational(p_) * b_ * b_; }

Scalar Scalar::inverse() const {
  if (is_zero()) throw InvalidInput("division by zero");
  // 1/(a + b sqrt p) = (a - b sqrt p) / (a^2 - p b^2); the norm is nonzero
  // because sqrt p is irrational.
  Rational n = norm();
  Scalar r;
  r.a_ = a_ / n;
  r.b_ = -b_ / n;
  r.p_ = p_;
  return r;
}

Scalar Scalar::pow(long k) const {
  Scalar base = k < 0 ? inverse() : *this;
  unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
  Scalar acc(1);
  acc.p_ = p_;
  while (e != 0) {
    if (e & 1UL) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  p_ = unify(p_, o.p_);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  p_ = unify(p_, o.p_);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  p_ = unify(p_, o.p_);
  if (sgn(b_) == 0 && sgn(o.b_) == 0) {
    a_ *= o.a_;
    return *this;
  }
  Rational na = a_ * o.a_ + Rational(p_) * b_ * o.b_;
  Rational nb = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw InvalidInput("division by zero");
  if (o.is_rational()) {
    p_ = unify(p_, o.p_);
    a_ /= o.a_;
    b_ /= o.a_;
    return *this;
  }
  return *this *= o.inverse();
}

bool operator==(const Scalar& x, const Scalar& y) {
  if (x.p_ != 0 && y.p_ != 0 && x.p_ != y.p_) {
    throw InvalidInput("comparing elements of different quadratic fields");
  }
  return x.a_ == y.a_ && x.b_ == y.b_;
}

std::string rational_text(const Rational& q) { return q.get_str(); }

std::pair<std::string, std::string> Scalar::to_strings() const {
  return {rational_text(a_), rational_text(b_)};
}

std::string Scalar::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) {
  if (x.is_rational()) return os << x.a();
  os << x.a();
  if (sgn(x.b()) >= 0) os << '+';
  return os << x.b() << "*sqrt(" << x.prime() << ')';
}

Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    if (s.empty()) throw InvalidInput("empty number in '" + std::string(text) + "'");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw InvalidInput("malformed number '" + std::string(text) + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw InvalidInput("malformed number '" + std::string(text) + "'");
    }
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return mpz_class(digits, 10);
  };
  auto slash = text.find('/');
  mpz_class num = parse_int(text.substr(0, slash));
  mpz_class den = 1;
  if (slash != std::string_view::npos) {
    den = parse_int(text.substr(slash + 1));
    if (den == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0) {
    return std::nullopt;
  }
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

std::optional<Scalar> field_sqrt(const Scalar& x, Prime p) {
  if (x.prime() != 0 && x.prime() != p.value()) {
    throw InvalidInput("field_sqrt: element of a different quadratic field");
  }
  const Rational pq(p.value());
  if (x.is_rational()) {
    if (auto r = rational_sqrt(x.a())) return Scalar(*r, 0, p);
    if (auto r = rational_sqrt(x.a() / pq)) return Scalar(0, *r, p);
    return std::nullopt;
  }
  // (u + v sqrt p)^2 = A + B sqrt p  <=>  u^2 + p v^2 = A, 2uv = B.
  auto s = rational_sqrt(x.norm());
  if (!s) return std::nullopt;
  for (const Rational& u2 : {Rational((x.a() + *s) / 2), Rational((x.a() - *s) / 2)}) {
    if (sgn(u2) <= 0) continue;
    if (auto u = rational_sqrt(u2)) {
      Rational v = x.b() / (2 * *u);
      Scalar r(*u, v, p);
      if (r * r == x) return r;
    }
  }
  return std::nullopt;
}

}  // namespace phin
