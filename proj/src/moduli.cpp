#include "phin/moduli.hpp"

namespace phin {

namespace {

Mat stack(const Mat& top, const Mat& bottom) {
  Mat out(top.rows() + bottom.rows(), top.cols());
  for (std::size_t r = 0; r < top.rows(); ++r)
    for (std::size_t c = 0; c < top.cols(); ++c) out(r, c) = top(r, c);
  for (std::size_t r = 0; r < bottom.rows(); ++r)
    for (std::size_t c = 0; c < bottom.cols(); ++c) out(top.rows() + r, c) = bottom(r, c);
  return out;
}

Mat side_by_side(const Mat& left, const Mat& right) { return stack(left.transpose(), right.transpose()).transpose(); }

Scalar p_scalar(Prime p) { return Scalar(Rational(p.value()), 0, p); }

}  // namespace

std::optional<std::size_t> first_violation(const FrobTuple& phi, const FrobTuple& nil, Prime p) {
  if (phi.f() != nil.f() || phi.n() != nil.n()) throw InvalidInput("Phi and N tuples have different shapes");
  const std::size_t f = phi.f();
  for (std::size_t i = 0; i < f; ++i) {
    const Mat rhs = p_scalar(p) * (phi[i] * nil[(i + 1) % f] * inverse(phi[i]));
    if (!(nil[i] == rhs)) return i;
  }
  return std::nullopt;
}

ModuliPoint validate_point(const FrobTuple& phi, const FrobTuple& nil, Prime p) {
  if (phi.kind() != TupleKind::group) throw InvalidInput("Phi must be a group-element tuple");
  if (nil.kind() != TupleKind::lie) throw InvalidInput("N must be a Lie-element tuple");
  if (auto i = first_violation(phi, nil, p)) {
    throw RelationViolation(*i, "N_i = p Ad(Phi_i) N_{i+1} fails at index " + std::to_string(*i));
  }
  for (std::size_t i = 0; i < nil.f(); ++i) {
    if (!is_nilpotent(nil[i])) throw InternalError("relation holds but N_" + std::to_string(i) + " is not nilpotent");
  }
  return ModuliPoint{phi, nil, p};
}

ModuliPoint canonical_point(const Mat& nil, Prime p, std::size_t f) {
  if (!nil.is_square() || !is_nilpotent(nil)) throw InvalidInput("canonical_point needs a nilpotent matrix");
  if (f == 0) throw InvalidInput("f must be positive");
  const Mat phi0 = associated_cocharacter(nil).evaluate(Scalar::sqrt_p_power(p, -1));
  return validate_point(FrobTuple::constant(phi0, f, TupleKind::group), FrobTuple::constant(nil, f, TupleKind::lie),
                        p);
}

Filtration Filtration::from_cochar(const Cochar& c, std::size_t f) {
  const std::size_t n2 = c.n() * c.n();
  const Subspace slot = threshold(c, 0);
  std::vector<Vec> vectors;
  for (std::size_t i = 0; i < f; ++i) {
    for (const Vec& v : slot.basis()) {
      Vec big(f * n2);
      std::copy(v.begin(), v.end(), big.begin() + static_cast<std::ptrdiff_t>(i * n2));
      vectors.push_back(std::move(big));
    }
  }
  return Filtration{c, f, Subspace::span(f * n2, vectors)};
}

Mat differential_d0(const ModuliPoint& pt) {
  const BigOp ad = ad_frobenius(pt.phi);
  const BigOp one_minus_ad = BigOp::identity(pt.n(), pt.f()) - ad;
  return stack(one_minus_ad.matrix, ad_n(pt.nil).matrix);
}

Mat differential_d1(const ModuliPoint& pt) {
  return side_by_side(ad_n(pt.nil).matrix, pad_minus_one(pt.phi, pt.p).matrix);
}

Mat tangent_map(const ModuliPoint& pt) {
  // Built column by column from the relation itself, independently of the
  // BigOp builders, so it can cross-check the complex.
  const std::size_t n = pt.n();
  const std::size_t f = pt.f();
  const std::size_t dim = pt.dim();
  const Scalar p = p_scalar(pt.p);
  std::vector<Mat> inv;
  for (std::size_t i = 0; i < f; ++i) inv.push_back(inverse(pt.phi[i]));

  std::vector<Vec> columns;
  for (std::size_t k = 0; k < 2 * dim; ++k) {
    const bool is_a = k < dim;
    const std::size_t slot = (k % dim) / (n * n);
    const std::size_t r = (k % (n * n)) / n;
    const std::size_t c = k % n;
    const Mat e = Mat::unit(n, r, c);
    std::vector<Mat> out(f, Mat(n, n));
    if (is_a) {
      // A_slot = e contributes -[e, N_slot] to relation slot.
      out[slot] = out[slot] - commutator(e, pt.nil[slot]);
    } else {
      // M_slot = e contributes e to relation slot and -p Phi_{slot-1} e Phi^{-1} to slot-1.
      out[slot] = out[slot] + e;
      const std::size_t prev = (slot + f - 1) % f;
      out[prev] = out[prev] - p * (pt.phi[prev] * e * inv[prev]);
    }
    columns.push_back(flatten(out));
  }
  return Mat::from_columns(columns, dim);
}

Subspace tangent_space(const ModuliPoint& pt) { return kernel(tangent_map(pt)); }

ComplexReport complex_dims(const ModuliPoint& pt) {
  const Mat d0 = differential_d0(pt);
  const Mat d1 = differential_d1(pt);
  if (!(d1 * d0).is_zero()) throw InternalError("d1 o d0 != 0 at a point that passed validation");
  const std::size_t dim = pt.dim();
  ComplexReport rep;
  rep.rank_d0 = rank(d0);
  rep.rank_d1 = rank(d1);
  rep.h0 = dim - rep.rank_d0;
  rep.h2 = dim - rep.rank_d1;
  rep.h1 = rep.h0 + rep.h2;
  const std::size_t ker_d1 = 2 * dim - rep.rank_d1;
  if (ker_d1 - rep.rank_d0 != rep.h1) throw InternalError("Euler characteristic check failed");
  rep.tangent_dim = tangent_space(pt).dim();
  return rep;
}

ComplexReport filtered_complex_dims(const ModuliPoint& pt, const Filtration& fil) {
  if (fil.cochar.n() != pt.n() || fil.f != pt.f()) throw InvalidInput("filtration and point disagree on (n, f)");
  const std::size_t dim = pt.dim();
  const Mat d0 = differential_d0(pt);
  const Mat d1 = differential_d1(pt);
  if (!(d1 * d0).is_zero()) throw InternalError("d1 o d0 != 0 at a point that passed validation");
  // u |-> u mod Fil^0, in coordinates given by the annihilator of Fil^0.
  const Mat quotient = fil.fil0.annihilator();
  const std::size_t q = quotient.rows();
  const Mat d0f = stack(d0, quotient);
  const Mat d1f = side_by_side(d1, Mat(dim, q));
  if (!(d1f * d0f).is_zero()) throw InternalError("filtered d1 o d0 != 0");

  ComplexReport rep;
  rep.filtered = true;
  rep.fil0_dim = fil.fil0.dim();
  rep.rank_d0 = rank(d0f);
  rep.rank_d1 = rank(d1f);
  rep.h0 = dim - rep.rank_d0;
  rep.h2 = dim - rep.rank_d1;
  rep.h1 = (2 * dim + q - rep.rank_d1) - rep.rank_d0;
  rep.tangent_dim = tangent_space(pt).dim();
  return rep;
}

}  // namespace phin
