#include "phin/selftest.hpp"

#include <functional>

#include "phin/dual.hpp"
#include "phin/sampling.hpp"

namespace phin {

namespace {

using sampling::Rng;

Scalar scalar_of(Prime p, long k) { return Scalar(Rational(k), 0, p); }

bool field_axioms(Prime p, Rng& rng) {
  for (int i = 0; i < 50; ++i) {
    const Scalar x(sampling::rational(rng), sampling::rational(rng), p);
    const Scalar y(sampling::rational(rng), sampling::rational(rng), p);
    const Scalar z(sampling::rational(rng), sampling::rational(rng), p);
    if (!((x * y) * z == x * (y * z)) || !(x * (y + z) == x * y + x * z)) return false;
    if (!x.is_zero() && !(x * x.inverse() == Scalar(1))) return false;
  }
  const Scalar r = Scalar::sqrt_p(p);
  return r * r == scalar_of(p, static_cast<long>(p.value()));
}

bool linear_algebra(Rng& rng) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const Mat m = sampling::matrix(rng, n);
    if (!poly::evaluate(charpoly(m), m).is_zero()) return false;
    if (kernel(m).dim() + rank(m) != n) return false;
  }
  for (const auto& parts : sampling::partitions(4)) {
    const Mat j = sampling::jordan_nilpotent(parts);
    const Mat g = sampling::conjugator(rng, 4);
    if (!(jordan_type(g * j * inverse(g)).parts == parts)) return false;
    const JordanBasis jb = jordan_basis_nilpotent(g * j * inverse(g));
    if (!(inverse(jb.conjugator) * g * j * inverse(g) * jb.conjugator == j)) return false;
  }
  return true;
}

bool adjoint_identities(Prime p, Rng& rng) {
  const Mat g = sampling::invertible(rng, 3);
  const Mat h = sampling::invertible(rng, 3);
  if (!(ad_single(g) * ad_single(h) == ad_single(g * h))) return false;
  for (std::size_t f = 1; f <= 3; ++f) {
    const FrobTuple phi = sampling::group_tuple(rng, 2, f);
    Mat power = Mat::identity(4 * f);
    const Mat ad = ad_frobenius(phi).matrix;
    for (std::size_t k = 0; k < f; ++k) power = power * ad;
    for (std::size_t i = 0; i < f; ++i) {
      Mat cyc = Mat::identity(2);
      for (std::size_t k = 0; k < f; ++k) cyc = cyc * phi[(i + k) % f];
      const Mat block = ad_single(cyc).matrix;
      for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c)
          if (!(power(4 * i + r, 4 * i + c) == block(r, c))) return false;
    }
  }
  // kernel elements of 1 - p Ad Phi are nilpotent slotwise
  for (const auto& parts : {std::vector<std::size_t>{3}, std::vector<std::size_t>{2, 1}}) {
    const ModuliPoint pt = sampling::valid_point(rng, parts, 2, p, true);
    for (const Vec& v : kernel(one_minus_pad(pt.phi, p).matrix).basis())
      for (const Mat& m : unflatten_tuple(v, 3, 2))
        if (!is_nilpotent(m)) return false;
  }
  return true;
}

bool cocharacter_invariants(Rng& rng) {
  for (std::size_t n = 2; n <= 3; ++n) {
    for (const auto& parts : sampling::partitions(n)) {
      const Mat g = sampling::conjugator(rng, n);
      const Mat nil = g * sampling::jordan_nilpotent(parts) * inverse(g);
      const Cochar c = associated_cocharacter(nil);
      for (long t : {2, 3, 5}) {
        const Mat lt = c.evaluate(Scalar(t));
        if (!(lt * nil * inverse(lt) == Scalar(t * t) * nil)) return false;
      }
      const Mat ad = ad_matrix(nil);
      if (!solve(ad, flatten(c.differential()))) return false;
      const Subspace z = centralizer_lie(nil);
      if (!threshold(c, 0).contains(z)) return false;
      const GradedDecomp gr = grading(c);
      if (z.intersect(gr.piece(0)).dim() + z.intersect(threshold(c, 1)).dim() != z.dim()) return false;
      for (const Vec& v : gr.piece(2).basis())
        if (!solve(ad, v)) return false;
    }
  }
  return true;
}

bool complex_invariants(Prime p, Rng& rng) {
  for (int i = 0; i < 6; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(i % 2);
    const auto parts = sampling::partitions(n);
    const ModuliPoint pt = sampling::valid_point(rng, parts[static_cast<std::size_t>(i) % parts.size()],
                                                 1 + static_cast<std::size_t>(i % 3), p, i % 2 == 0);
    if (!(differential_d1(pt) * differential_d0(pt)).is_zero()) return false;
    const ComplexReport rep = complex_dims(pt);
    if (rep.h0 + rep.h2 != rep.h1 || rep.tangent_dim != pt.dim() + rep.h2) return false;
    for (const Vec& v : tangent_space(pt).basis())
      if (!satisfies_relations_to_first_order(pt, v)) return false;
  }
  return true;
}

bool canonical_points(Prime p) {
  for (std::size_t n = 2; n <= 3; ++n) {
    for (const auto& parts : sampling::partitions(n)) {
      const Mat nil = sampling::jordan_nilpotent(parts);
      if (nil.is_zero()) continue;
      const ModuliPoint pt = canonical_point(nil, p);
      if (complex_dims(pt).h2 != 0) return false;
      const Mat pad = (scalar_of(p, static_cast<long>(p.value())) * ad_frobenius(pt.phi)).matrix;
      if (!minpoly_squarefree(pad)) return false;
      const Subspace k = kernel(pad_minus_one(pt.phi, p).matrix);
      if (!(k == grading(associated_cocharacter(nil)).piece(2))) return false;
    }
  }
  return true;
}

bool filtered_identity(Prime p) {
  const Mat nreg = sampling::jordan_nilpotent({3});
  const ModuliPoint pt = canonical_point(nreg, p);
  const ComplexReport rep = filtered_complex_dims(pt, Filtration::from_cochar(diagonal_cochar({1, 0, 0}), 1));
  return rep.h2 == 0 && rep.h1 == (pt.dim() - rep.fil0_dim) + rep.h0;
}

bool gl2_checks(Prime p, Rng& rng) {
  for (int i = 0; i < 10; ++i) {
    const Mat phi = sampling::invertible(rng, 2);
    if (!(gl2_charpoly_formula(phi) == charpoly(ad_single(phi).matrix))) return false;
    const std::size_t f = 1 + static_cast<std::size_t>(i % 3);
    const Gl2Report rep = gl2_report(sampling::group_tuple(rng, 2, f), p);
    const Scalar q = Scalar::p_power(p, static_cast<long>(f));
    const bool singular = det(Mat::identity(4) - q * ad_single(rep.nm).matrix).is_zero();
    if (singular != rep.on_divisor) return false;
    const FrobTuple d = sampling::gl2_divisor_point(rng, f, p);
    if (gl2_report(d, p).kernel_dim != 1 || gl2_x0_tangent(d, p) != 4 * f) return false;
  }
  return true;
}

bool regular_model(Prime p, Rng& rng) {
  for (std::size_t n = 2; n <= 3; ++n) {
    const ModuliPoint pt = sampling::valid_point(rng, {n}, 1, p, true);
    if (!(reg_filtration_reconstruct(pt) == parabolic_of(pt.nil[0]))) return false;
  }
  return true;
}

bool subregular_model(Prime p) {
  const Scalar ps = scalar_of(p, static_cast<long>(p.value()));
  const SingularityCertificate line = singularity_certificate(Mat::diagonal({Scalar(1), ps, ps}), p);
  const SingularityCertificate two = singularity_certificate(Mat::diagonal({Scalar(1), ps, ps * ps}), p);
  const SingularityCertificate none = singularity_certificate(Mat::identity(3), p);
  return line.fiber.infinite && line.verdict == Verdict::singular && line.corroborated && line.in_x_reg == false &&
         two.fiber.rays.size() == 2 && two.verdict == Verdict::singular && none.fiber.rays.empty() &&
         none.verdict == Verdict::smooth_unknown;
}

}  // namespace

std::vector<SelfCheck> run_selftest(Prime p) {
  Rng rng(20240601);
  const std::vector<std::pair<std::string, std::function<bool()>>> checks = {
      {"field_axioms", [&] { return field_axioms(p, rng); }},
      {"linear_algebra", [&] { return linear_algebra(rng); }},
      {"adjoint_identities", [&] { return adjoint_identities(p, rng); }},
      {"cocharacter_invariants", [&] { return cocharacter_invariants(rng); }},
      {"complex_invariants", [&] { return complex_invariants(p, rng); }},
      {"canonical_points", [&] { return canonical_points(p); }},
      {"filtered_identity", [&] { return filtered_identity(p); }},
      {"gl2_divisor", [&] { return gl2_checks(p, rng); }},
      {"regular_model", [&] { return regular_model(p, rng); }},
      {"subregular_model", [&] { return subregular_model(p); }},
  };
  std::vector<SelfCheck> out;
  for (const auto& [name, run] : checks) {
    SelfCheck c{name, false, {}};
    try {
      c.passed = run();
    } catch (const std::exception& e) {
      c.detail = e.what();
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace phin
