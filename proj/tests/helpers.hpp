#pragma once

#include "phin/components.hpp"

namespace phin::test {

inline Scalar q(long num, long den = 1) { return Scalar(Rational(num, den)); }
inline Scalar in_field(Prime p, long a, long b) { return Scalar(Rational(a), Rational(b), p); }
inline Scalar pv(Prime p) { return Scalar(Rational(p.value()), 0, p); }

/// Matrix unit with 1-based indices, as in e_{12}.
inline Mat e(std::size_t n, std::size_t i, std::size_t j) { return Mat::unit(n, i - 1, j - 1); }

/// Span of the 1-based matrix units listed.
inline Subspace units(std::size_t n, std::initializer_list<std::pair<std::size_t, std::size_t>> entries) {
  std::vector<Vec> vs;
  for (auto [i, j] : entries) vs.push_back(flatten(e(n, i, j)));
  return Subspace::span(n * n, vs);
}

inline Mat nreg3() { return e(3, 1, 2) + e(3, 2, 3); }
inline Mat nsub3() { return e(3, 1, 2); }

}  // namespace phin::test
