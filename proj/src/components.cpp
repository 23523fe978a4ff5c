#include "phin/components.hpp"

#include <array>
#include <cstdlib>

namespace phin {

namespace {

void require_gl2(const FrobTuple& phi) {
  if (phi.n() != 2) throw InvalidInput("GL_2 analysis needs 2 x 2 matrices");
  if (phi.kind() != TupleKind::group) throw InvalidInput("Phi must be a group-element tuple");
}

Mat product(const FrobTuple& phi, std::size_t begin, std::size_t end) {
  Mat acc = Mat::identity(phi.n());
  for (std::size_t i = begin; i < end; ++i) acc = acc * phi[i];
  return acc;
}

}  // namespace

Poly gl2_charpoly_formula(const Mat& phi) {
  if (phi.rows() != 2 || phi.cols() != 2) throw InvalidInput("gl2_charpoly_formula needs a 2 x 2 matrix");
  const Scalar d = det(phi);
  if (d.is_zero()) throw InvalidInput("gl2_charpoly_formula needs an invertible matrix");
  const Scalar t = phi.trace();
  const Scalar r = t * t / d;
  return {Scalar(1), -r, Scalar(2) * (r - Scalar(1)), -r, Scalar(1)};
}

Gl2Report gl2_report(const FrobTuple& phi, Prime p) {
  require_gl2(phi);
  Gl2Report rep;
  rep.nm = norm_product(phi);
  rep.trace_nm = rep.nm.trace();
  rep.det_nm = det(rep.nm);
  const Scalar q = Scalar::p_power(p, static_cast<long>(phi.f()));
  const Scalar q1 = q + Scalar(1);
  rep.divisor_value = q * rep.trace_nm * rep.trace_nm - q1 * q1 * rep.det_nm;
  rep.on_divisor = rep.divisor_value.is_zero();
  rep.charpoly_ad = charpoly(ad_single(rep.nm).matrix);
  rep.kernel = kernel(one_minus_pad(phi, p).matrix);
  rep.kernel_dim = rep.kernel.dim();
  if (rep.kernel_dim > 1) throw InternalError("ker(1 - p Ad Phi) has dimension > 1 for GL_2");
  if (rep.on_divisor != (rep.kernel_dim == 1)) throw InternalError("divisor equation and kernel disagree");
  return rep;
}

Vec gl2_divisor_gradient(const FrobTuple& phi, Prime p) {
  require_gl2(phi);
  const std::size_t f = phi.f();
  const Mat nm = norm_product(phi);
  const Scalar tr = nm.trace();
  const Scalar dt = det(nm);
  const Mat nm_inv = inverse(nm);
  const Scalar q = Scalar::p_power(p, static_cast<long>(f));
  const Scalar q1 = q + Scalar(1);

  Vec grad;
  for (std::size_t i = 0; i < f; ++i) {
    // d Nm = L E_rc R with L = Phi_1..Phi_{i-1}, R = Phi_{i+1}..Phi_f
    const Mat left = product(phi, 0, i);
    const Mat right = product(phi, i + 1, f);
    const Mat rl = right * left;
    const Mat rnl = right * nm_inv * left;
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c) {
        const Scalar d_tr = rl(c, r);
        const Scalar d_det = dt * rnl(c, r);
        grad.push_back(Scalar(2) * q * tr * d_tr - q1 * q1 * d_det);
      }
  }
  return grad;
}

std::size_t gl2_divisor_tangent_dim(const FrobTuple& phi, Prime p) {
  const Vec g = gl2_divisor_gradient(phi, p);
  return g.size() - rank(Mat::from_rows({g}, g.size()));
}

std::size_t gl2_x0_tangent(const FrobTuple& phi, Prime p) {
  const Gl2Report rep = gl2_report(phi, p);
  if (!rep.on_divisor) throw InvalidInput("Phi is not on the divisor");
  return gl2_divisor_tangent_dim(phi, p) + rep.kernel_dim;
}

ParabolicData reg_filtration_reconstruct(const ModuliPoint& pt) {
  if (pt.f() != 1) throw InvalidInput("the regular model needs f = 1");
  const std::size_t n = pt.n();
  const Mat& nil = pt.nil[0];
  if (n < 2 || !(jordan_type(nil) == Partition{{n}})) throw InvalidInput("N is not regular nilpotent");
  validate_point(pt.phi, pt.nil, pt.p);

  const Mat ad = ad_single(pt.phi[0]).matrix;
  const Mat id = Mat::identity(n * n);
  const int top = static_cast<int>(n) - 1;
  ParabolicData out;
  Subspace current(n * n);
  for (int i = top; i >= -top; --i) {
    const Subspace eigen = kernel(id - Scalar::p_power(pt.p, i) * ad);
    if (eigen.dim() != n - static_cast<std::size_t>(std::abs(i))) {
      throw InternalError("ker(1 - p^" + std::to_string(i) + " Ad Phi) has unexpected dimension");
    }
    current = current + eigen;
    out.steps.insert_or_assign(2 * i, current);
    if (i > -top) out.steps.insert_or_assign(2 * i - 1, current);
  }
  if (current.dim() != n * n) throw InternalError("reconstructed filtration does not exhaust gl_n");
  out.p_lie = out.step(0);
  out.u_lie = out.step(1);
  out.levi_lie = kernel(id - ad);
  if (!(out == parabolic_of(nil))) throw InternalError("reconstructed parabolic differs from parabolic_of(N)");
  return out;
}

// ---- subregular model ----------------------------------------------------

std::size_t SubFiber::preimages() const {
  std::size_t count = 0;
  for (const auto& r : rays) count += r.phi_in_parabolic ? 1 : 0;
  return count;
}

namespace {

// alpha a^2 + beta a b + gamma b^2
using BinaryForm = std::array<Scalar, 3>;

bool is_zero_form(const BinaryForm& q) { return q[0].is_zero() && q[1].is_zero() && q[2].is_zero(); }

bool proportional(const BinaryForm& x, const BinaryForm& y) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!(x[i] * y[j] == x[j] * y[i])) return false;
  return true;
}

Scalar eval_form(const BinaryForm& q, const Scalar& a, const Scalar& b) { return q[0] * a * a + q[1] * a * b + q[2] * b * b; }

// 2x2 minors of a X + b Y as binary forms.
std::vector<BinaryForm> minor_forms(const Mat& x, const Mat& y) {
  std::vector<BinaryForm> out;
  const std::size_t n = x.rows();
  for (std::size_t r1 = 0; r1 < n; ++r1)
    for (std::size_t r2 = r1 + 1; r2 < n; ++r2)
      for (std::size_t c1 = 0; c1 < n; ++c1)
        for (std::size_t c2 = c1 + 1; c2 < n; ++c2) {
          auto cross = [&](const Mat& u, const Mat& v) { return u(r1, c1) * v(r2, c2) - u(r1, c2) * v(r2, c1); };
          out.push_back({cross(x, x), cross(x, y) + cross(y, x), cross(y, y)});
        }
  return out;
}

Mat normalize_ray(const Mat& m) {
  for (const Scalar& e : m.entries()) {
    if (!e.is_zero()) return m * e.inverse();
  }
  return m;
}

SubFiberRay make_ray(const Mat& m, const Mat& phi) {
  SubFiberRay r{normalize_ray(m), parabolic_of(m), false};
  r.phi_in_parabolic = stabilizes(phi, r.parabolic);
  return r;
}

bool subregular(const Mat& m) { return !m.is_zero() && jordan_type(m) == Partition{{2, 1}}; }

// Projective roots (a : b) of a nonzero binary quadratic form; nullopt when
// they lie outside the field.
std::optional<std::vector<std::pair<Scalar, Scalar>>> form_roots(const BinaryForm& q, Prime p) {
  std::vector<std::pair<Scalar, Scalar>> roots;
  if (q[0].is_zero()) {
    // b (beta a + gamma b)
    roots.emplace_back(Scalar(1), Scalar(0));
    if (!q[1].is_zero()) roots.emplace_back(-q[2], q[1]);
    return roots;
  }
  const Scalar disc = q[1] * q[1] - Scalar(4) * q[0] * q[2];
  const auto s = field_sqrt(disc, p);
  if (!s) return std::nullopt;
  const Scalar two_alpha = Scalar(2) * q[0];
  roots.emplace_back((-q[1] + *s) / two_alpha, Scalar(1));
  if (!s->is_zero()) roots.emplace_back((-q[1] - *s) / two_alpha, Scalar(1));
  return roots;
}

}  // namespace

SubFiber sub_fiber(const Mat& phi, Prime p) {
  if (phi.rows() != 3 || phi.cols() != 3) throw InvalidInput("sub_fiber needs a 3 x 3 matrix");
  if (!is_invertible(phi)) throw InvalidInput("Phi is singular");
  SubFiber out;
  out.base_phi = phi;
  out.kernel = kernel(one_minus_pad(FrobTuple::group({phi}), p).matrix);
  const std::vector<Vec> basis = out.kernel.basis();

  switch (basis.size()) {
    case 0:
      return out;
    case 1: {
      const Mat x = unflatten(basis[0], 3);
      if (subregular(x)) out.rays.push_back(make_ray(x, phi));
      return out;
    }
    case 2:
      break;
    default:
      throw Unsupported("ker(1 - p Ad Phi) has dimension " + std::to_string(basis.size()) + " >= 3");
  }

  const Mat x = unflatten(basis[0], 3);
  const Mat y = unflatten(basis[1], 3);
  const std::vector<BinaryForm> forms = minor_forms(x, y);
  const BinaryForm* lead = nullptr;
  for (const auto& q : forms) {
    if (!is_zero_form(q)) {
      lead = &q;
      break;
    }
  }
  if (lead == nullptr) {
    // Every a X + b Y has rank 1: a P^1 of rays.
    out.infinite = true;
    out.rays.push_back(make_ray(x, phi));
    out.rays.push_back(make_ray(y, phi));
    return out;
  }

  const auto roots = form_roots(*lead, p);
  if (!roots) {
    for (const auto& q : forms) {
      if (!is_zero_form(q) && !proportional(q, *lead)) return out;
    }
    throw Unsupported("rank-1 rays of the pencil are defined over a quadratic extension of Q(sqrt p)");
  }
  for (const auto& [a, b] : *roots) {
    bool common = true;
    for (const auto& q : forms) common = common && eval_form(q, a, b).is_zero();
    if (!common) continue;
    const Mat m = a * x + b * y;
    if (subregular(m)) out.rays.push_back(make_ray(m, phi));
  }
  return out;
}

Subspace sub_tangent_image(const Mat& phi, const ParabolicData& par, Prime p) {
  if (phi.rows() != 3 || phi.cols() != 3 || par.n() != 3) throw InvalidInput("sub_tangent_image works in gl_3");
  const Subspace p2 = par.step(2);
  if (p2.dim() != 1) throw InvalidInput("parabolic is not of subregular type");
  if (!stabilizes(phi, par)) throw InvalidInput("Phi does not lie in the parabolic");
  const Mat one_minus = one_minus_pad(FrobTuple::group({phi}), p).matrix;
  const Vec np_vec = p2.basis()[0];
  if (!(one_minus * np_vec == Vec(9))) throw InvalidInput("(1 - p Ad Phi) does not vanish on p_2");
  const Mat np = unflatten(np_vec, 3);
  const Mat phi_inv = inverse(phi);
  const Mat q = par.p_lie.annihilator();

  // Unknowns (A, g, c), 19 coordinates.  Equations:
  //   q . (Ad(Phi^{-1})(A - g) + g) = 0
  //   (1 - p Ad Phi)[g, N_P] - [A, N_P] = 0
  const std::size_t eqs = q.rows() + 9;
  Mat system(eqs, 19);
  for (std::size_t k = 0; k < 18; ++k) {
    const bool is_a = k < 9;
    const Mat e = Mat::unit(3, (k % 9) / 3, k % 3);
    const Mat in_p = is_a ? phi_inv * e * phi : e - phi_inv * e * phi;
    const Vec lie = q * flatten(in_p);
    const Vec bracket =
        is_a ? flatten(Scalar(-1) * commutator(e, np)) : one_minus * flatten(commutator(e, np));
    for (std::size_t r = 0; r < q.rows(); ++r) system(r, k) = lie[r];
    for (std::size_t r = 0; r < 9; ++r) system(q.rows() + r, k) = bracket[r];
  }
  const Subspace solutions = kernel(system);

  std::vector<Vec> images;
  for (const Vec& s : solutions.basis()) {
    Vec v(18);
    for (std::size_t i = 0; i < 9; ++i) v[i] = s[i];
    for (std::size_t i = 0; i < 9; ++i) v[9 + i] = s[18] * np_vec[i];
    images.push_back(std::move(v));
  }
  return Subspace::span(18, images);
}

SingularityCertificate singularity_certificate(const Mat& phi, Prime p) {
  SingularityCertificate cert;
  cert.phi = phi;
  cert.fiber = sub_fiber(phi, p);

  std::vector<const SubFiberRay*> usable;
  for (const auto& r : cert.fiber.rays) {
    if (r.phi_in_parabolic) usable.push_back(&r);
  }
  const bool several = cert.fiber.infinite || usable.size() >= 2;
  cert.verdict = several ? Verdict::singular : Verdict::smooth_unknown;
  if (usable.size() >= 2) {
    const Subspace span = sub_tangent_image(phi, usable[0]->parabolic, p) +
                          sub_tangent_image(phi, usable[1]->parabolic, p);
    cert.tangent_span_dim = span.dim();
    cert.corroborated = span.dim() >= 10;
  }

  const std::vector<Vec> basis = cert.fiber.kernel.basis();
  bool abelian = true;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      abelian = abelian && commutator(unflatten(basis[i], 3), unflatten(basis[j], 3)).is_zero();
  bool has_regular = false;
  if (basis.size() == 1) {
    has_regular = rank(unflatten(basis[0], 3)) == 2;
  } else if (basis.size() == 2) {
    // a X + b Y is regular somewhere iff its 2x2 minors are not all zero.
    for (const auto& q : minor_forms(unflatten(basis[0], 3), unflatten(basis[1], 3)))
      has_regular = has_regular || !is_zero_form(q);
  }
  if (has_regular) {
    cert.in_x_reg = true;
  } else if (abelian) {
    cert.in_x_reg = false;
  }
  return cert;
}

}  // namespace phin
