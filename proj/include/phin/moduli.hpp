#pragma once

// Points (Phi, N) with N_i = p Ad(Phi_i) N_{i+1}, their deformation complexes
// and tangent spaces.

#include <cstddef>
#include <optional>

#include "phin/adjoint.hpp"
#include "phin/errors.hpp"
#include "phin/nilpotent.hpp"

namespace phin {

struct ModuliPoint {
  FrobTuple phi;
  FrobTuple nil;
  Prime p;

  std::size_t n() const { return phi.n(); }
  std::size_t f() const { return phi.f(); }
  /// f * n^2
  std::size_t dim() const { return f() * n() * n(); }
};

/// Raised by validate_point; index is 0-based.
class RelationViolation : public InvalidInput {
 public:
  RelationViolation(std::size_t index, const std::string& what) : InvalidInput(what), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

/// First i with N_i != p Phi_i N_{i+1} Phi_i^{-1}, if any.
std::optional<std::size_t> first_violation(const FrobTuple& phi, const FrobTuple& nil, Prime p);
ModuliPoint validate_point(const FrobTuple& phi, const FrobTuple& nil, Prime p);

/// (lambda(p^{-1/2}), N) repeated over f slots, lambda associated to nil.
ModuliPoint canonical_point(const Mat& nil, Prime p, std::size_t f = 1);

/// Fil^0 of gl_n^{x f}: the cocharacter's g_{>=0} in every slot.
struct Filtration {
  Cochar cochar;
  std::size_t f = 1;
  Subspace fil0{0};

  static Filtration from_cochar(const Cochar& c, std::size_t f);
};

struct ComplexReport {
  std::size_t h0 = 0;
  std::size_t h1 = 0;
  std::size_t h2 = 0;
  std::size_t rank_d0 = 0;
  std::size_t rank_d1 = 0;
  bool filtered = false;
  std::size_t tangent_dim = 0;
  std::size_t fil0_dim = 0;  // filtered reports only

  friend bool operator==(const ComplexReport&, const ComplexReport&) = default;
};

/// d0(u) = ((1 - Ad Phi) u, ad_N u), a (2 f n^2) x (f n^2) matrix.
Mat differential_d0(const ModuliPoint& pt);
/// d1(x, y) = ad_N x + (p Ad Phi - 1) y, a (f n^2) x (2 f n^2) matrix.
Mat differential_d1(const ModuliPoint& pt);

/// Throws InternalError when d1 d0 != 0.
ComplexReport complex_dims(const ModuliPoint& pt);
ComplexReport filtered_complex_dims(const ModuliPoint& pt, const Filtration& fil);

/// Linearization of the relations at pt for Phi~ = (1 + eps A) Phi,
/// N~ = N + eps M: the map (A, M) |-> (M_i - p Ad(Phi_i) M_{i+1} - [A_i, N_i])_i.
Mat tangent_map(const ModuliPoint& pt);
/// Kernel of tangent_map, coordinates (A_1..A_f, M_1..M_f).
Subspace tangent_space(const ModuliPoint& pt);

}  // namespace phin
