#pragma once

// Associated cocharacters, gradings and parabolic data for nilpotents in gl_n.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "phin/linalg.hpp"

namespace phin {

/// lambda(t) = g * diag(t^{w_1}, ..., t^{w_n}) * g^{-1}.
struct Cochar {
  Mat conjugator;
  std::vector<int> weights;

  std::size_t n() const { return weights.size(); }
  Mat evaluate(const Scalar& t) const;
  /// d lambda(1) = g * diag(w) * g^{-1}.
  Mat differential() const;
  /// g e_{ij} g^{-1}, the weight w_i - w_j eigenvector.
  Mat eigenvector(std::size_t i, std::size_t j) const;

  friend bool operator==(const Cochar&, const Cochar&) = default;
};

Cochar diagonal_cochar(std::vector<int> weights);

/// Weight pieces of gl_n under Ad(lambda); keys are the weights that occur.
struct GradedDecomp {
  Cochar cochar;
  std::map<int, Subspace> pieces;

  /// Zero subspace when the weight does not occur.
  Subspace piece(int weight) const;
};

GradedDecomp grading(const Cochar& c);
/// Direct sum of the pieces of weight >= k.
Subspace threshold(const Cochar& c, int k);

/// The parabolic g_{>=0} with its filtration g_{>=k}.  Subspaces live in the
/// row-major flattening of gl_n.
struct ParabolicData {
  std::optional<Cochar> cochar;
  Subspace p_lie{0};
  Subspace u_lie{0};
  Subspace levi_lie{0};
  /// g_{>=k} for k in [min_step, max_step]; below is everything, above is 0.
  std::map<int, Subspace> steps;

  std::size_t n() const;
  Subspace step(int k) const;

  /// Compares the parabolic and its filtration.  The Levi factor and the
  /// cocharacter are choices and do not take part.
  friend bool operator==(const ParabolicData& x, const ParabolicData& y);
};

ParabolicData parabolic_from(const Cochar& c);

/// Weights m-1, m-3, ..., 1-m on each Jordan block of size m.
Cochar associated_cocharacter(const Mat& nil);
/// Throws InvalidInput for zero or non-nilpotent input.
ParabolicData parabolic_of(const Mat& nil);

/// Matrix of X |-> [m, X] on gl_n.
Mat ad_matrix(const Mat& m);
Subspace centralizer_lie(const Mat& nil);

/// Ad(phi) maps every g_{>=k} onto itself.
bool stabilizes(const Mat& phi, const ParabolicData& par);

/// Image of a subspace of gl_n under X |-> phi X phi^{-1}.
Subspace conjugate_subspace(const Mat& phi, const Subspace& s);

/// "(* * *;0 * 0;0 * *)": '*' where some element of s has a nonzero entry.
std::string support_pattern(const Subspace& s, std::size_t n);

}  // namespace phin
