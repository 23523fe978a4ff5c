#pragma once

// Component analyses: the GL_2 divisor, the regular model for GL_n and the
// subregular model for GL_3.

#include <cstddef>
#include <optional>
#include <vector>

#include "phin/moduli.hpp"

namespace phin {

// ---- GL_2 ----------------------------------------------------------------

/// lambda^4 - r lambda^3 + 2(r-1) lambda^2 - r lambda + 1 with r = tr^2/det,
/// ascending coefficients.
Poly gl2_charpoly_formula(const Mat& phi);

struct Gl2Report {
  Mat nm;  // Phi_1 ... Phi_f
  Scalar trace_nm;
  Scalar det_nm;
  /// p^f tr(Nm)^2 - (p^f + 1)^2 det(Nm)
  Scalar divisor_value;
  bool on_divisor = false;
  Poly charpoly_ad;  // of Ad(Nm)
  Subspace kernel{0};
  std::size_t kernel_dim = 0;
};

/// Throws InternalError if the kernel exceeds dimension 1 or disagrees with
/// the divisor equation.
Gl2Report gl2_report(const FrobTuple& phi, Prime p);

/// Gradient of the divisor polynomial in the 4f entries of (Phi_1..Phi_f),
/// slot-major then row-major.
Vec gl2_divisor_gradient(const FrobTuple& phi, Prime p);
/// 4f - rank of the gradient.
std::size_t gl2_divisor_tangent_dim(const FrobTuple& phi, Prime p);
/// Tangent dimension of the divisor plus dim ker(1 - p Ad Phi).  Throws
/// InvalidInput off the divisor.
std::size_t gl2_x0_tangent(const FrobTuple& phi, Prime p);

// ---- regular model -------------------------------------------------------

/// Rebuilds g_{>=2i} = ker(1 - p^i Ad Phi) + g_{>=2i+2} from Phi alone and
/// checks the result against parabolic_of(N).  Needs f = 1 and N regular.
ParabolicData reg_filtration_reconstruct(const ModuliPoint& pt);

// ---- subregular model for GL_3 -----------------------------------------

struct SubFiberRay {
  Mat ray;  // first nonzero entry normalized to 1
  ParabolicData parabolic;
  bool phi_in_parabolic = false;
};

struct SubFiber {
  Mat base_phi;
  Subspace kernel{0};  // ker(1 - p Ad Phi)
  /// Qualifying rays; when infinite, the kernel basis representatives.
  std::vector<SubFiberRay> rays;
  bool infinite = false;  // the rays form a P^1

  std::size_t preimages() const;
};

/// Throws Unsupported for dim K >= 3 or pencil roots outside Q(sqrt p).
SubFiber sub_fiber(const Mat& phi, Prime p);

/// Image in gl_3 + gl_3 of the tangent space of the subregular model at
/// (phi, 0, par).
Subspace sub_tangent_image(const Mat& phi, const ParabolicData& par, Prime p);

enum class Verdict { singular, smooth_unknown };

struct SingularityCertificate {
  Mat phi;
  SubFiber fiber;
  std::optional<std::size_t> tangent_span_dim;  // needs two rays
  bool corroborated = false;                    // tangent_span_dim >= 10
  /// false: excluded by the abelian-kernel test; true: ker(1 - p Ad Phi)
  /// holds a regular nilpotent; empty: undecided.
  std::optional<bool> in_x_reg;
  Verdict verdict = Verdict::smooth_unknown;
};

SingularityCertificate singularity_certificate(const Mat& phi, Prime p);

}  // namespace phin
