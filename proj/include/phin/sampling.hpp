#pragma once

// Seeded random inputs for property checks.

#include <cstddef>
#include <random>
#include <vector>

#include "phin/components.hpp"

namespace phin::sampling {

using Rng = std::mt19937_64;

/// num / den with |num| <= range, 1 <= den <= range.
Rational rational(Rng& rng, int range = 5);
/// Integer in [-range, range].
long integer(Rng& rng, long range);

Mat matrix(Rng& rng, std::size_t n, int range = 5);
/// Random invertible matrix with small integer entries, suitable for conjugating.
Mat conjugator(Rng& rng, std::size_t n);
/// Random invertible matrix with rational entries.
Mat invertible(Rng& rng, std::size_t n, int range = 5);
FrobTuple group_tuple(Rng& rng, std::size_t n, std::size_t f, int range = 5);

/// Nilpotent in Jordan form with the given block sizes (blocks in order).
Mat jordan_nilpotent(const std::vector<std::size_t>& parts);
/// All partitions of n, largest part first.
std::vector<std::vector<std::size_t>> partitions(std::size_t n);

/// (a_i Phi_i a_{i+1}^{-1}, Ad(a_i) N_i), which preserves the relations.
ModuliPoint transport(const ModuliPoint& pt, const std::vector<Mat>& a);
/// Phi_i -> Phi_i c_i with c_i a random invertible element of Z(N_{i+1}).
ModuliPoint centralizer_twist(Rng& rng, const ModuliPoint& pt);
/// Canonical point of a random-conjugate nilpotent of the given type, moved by
/// a random transport and optionally a centralizer twist.
ModuliPoint valid_point(Rng& rng, const std::vector<std::size_t>& parts, std::size_t f, Prime p, bool twist);

/// GL_2 tuple with p^f tr(Nm)^2 = (p^f + 1)^2 det(Nm): Nm is conjugate to
/// c * [[1, b], [0, p^f]].
FrobTuple gl2_divisor_point(Rng& rng, std::size_t f, Prime p);

}  // namespace phin::sampling
