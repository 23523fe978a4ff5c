#include <doctest.h>

#include "helpers.hpp"
#include "phin/errors.hpp"
#include "phin/sampling.hpp"

using namespace phin;
using namespace phin::test;

TEST_SUITE("adjoint") {
  TEST_CASE("ad_single examples") {
    const Prime p(2);
    CHECK(ad_single(Mat::identity(3)).matrix == Mat::identity(9));
    // diag(1,p) e12 diag(1,p)^{-1} = p^{-1} e12
    const BigOp a = ad_single(Mat::diagonal({q(1), pv(p)}));
    CHECK(a.matrix.column(1) == flatten(e(2, 1, 2) * q(1, 2)));
    const BigOp b = ad_single(Mat::diagonal({q(1), pv(p), pv(p) * pv(p)}));
    CHECK(b.matrix.column(5) == flatten(e(3, 2, 3) * q(1, 2)));
    CHECK_THROWS_AS(ad_single(Mat{{q(1), q(2)}, {q(2), q(4)}}), InvalidInput);
  }

  TEST_CASE("ad_single is a homomorphism") {
    sampling::Rng rng(21);
    for (int i = 0; i < 10; ++i) {
      const Mat g = sampling::invertible(rng, 3);
      const Mat h = sampling::invertible(rng, 3);
      CHECK(ad_single(g) * ad_single(h) == ad_single(g * h));
    }
  }

  TEST_CASE("ad_frobenius examples") {
    const Prime p(2);
    const Mat phi = Mat::diagonal({q(1), pv(p)});
    CHECK(ad_frobenius(FrobTuple::group({phi})) == ad_single(phi));

    const BigOp swap = ad_frobenius(FrobTuple::constant(Mat::identity(2), 2, TupleKind::group));
    const Mat x = e(2, 1, 1);
    const Mat y = e(2, 2, 1);
    const std::vector<Mat> out = swap.apply(std::vector<Mat>{x, y});
    CHECK(out[0] == y);
    CHECK(out[1] == x);

    const BigOp tw = ad_frobenius(FrobTuple::group({phi, Mat::identity(2)}));
    const std::vector<Mat> r = tw.apply(std::vector<Mat>{Mat::zero(2), e(2, 1, 2)});
    CHECK(r[0] == e(2, 1, 2) * q(1, 2));
    CHECK(r[1].is_zero());
  }

  TEST_CASE("f-th power of ad_frobenius is block diagonal") {
    sampling::Rng rng(23);
    for (std::size_t f = 1; f <= 3; ++f) {
      const FrobTuple phi = sampling::group_tuple(rng, 2, f);
      const BigOp ad = ad_frobenius(phi);
      BigOp power = BigOp::identity(2, f);
      for (std::size_t k = 0; k < f; ++k) power = power * ad;
      BigOp expected{2, f, Mat(4 * f, 4 * f)};
      for (std::size_t i = 0; i < f; ++i) {
        Mat cyc = Mat::identity(2);
        for (std::size_t k = 0; k < f; ++k) cyc = cyc * phi[(i + k) % f];
        const Mat block = ad_single(cyc).matrix;
        for (std::size_t r = 0; r < 4; ++r)
          for (std::size_t c = 0; c < 4; ++c) expected.matrix(4 * i + r, 4 * i + c) = block(r, c);
      }
      CHECK(power == expected);
    }
  }

  TEST_CASE("ad_n examples") {
    CHECK(ad_n(FrobTuple::constant(Mat::zero(3), 2, TupleKind::lie)).matrix.is_zero());
    const BigOp a = ad_n(FrobTuple::lie({e(2, 1, 2)}));
    CHECK(unflatten(a.apply(flatten(e(2, 2, 1))), 2) == e(2, 1, 1) - e(2, 2, 2));
    const BigOp b = ad_n(FrobTuple::lie({nreg3()}));
    const Mat h = Mat::diagonal({q(2), q(0), q(-2)});
    CHECK(unflatten(b.apply(flatten(h)), 3) == nreg3() * q(-2));
  }

  TEST_CASE("kernels of 1 - p Ad Phi") {
    const Prime p(2);
    const Scalar ps = pv(p);
    const Subspace k2 = kernel(one_minus_pad(FrobTuple::group({Mat::diagonal({q(1), ps})}), p).matrix);
    CHECK(k2 == units(2, {{1, 2}}));
    const Subspace k3 = kernel(one_minus_pad(FrobTuple::group({Mat::diagonal({q(1), ps, ps})}), p).matrix);
    CHECK(k3 == units(3, {{1, 2}, {1, 3}}));
    const Subspace k4 = kernel(one_minus_pad(FrobTuple::group({Mat::diagonal({q(1), ps, ps * ps})}), p).matrix);
    CHECK(k4 == units(3, {{1, 2}, {2, 3}}));
    const FrobTuple phi = FrobTuple::group({Mat::diagonal({q(1), ps})});
    CHECK(pad_minus_one(phi, p) == Scalar(-1) * one_minus_pad(phi, p));
  }

  TEST_CASE("kernel elements are nilpotent slotwise") {
    sampling::Rng rng(29);
    for (unsigned long pv_ : {2UL, 3UL}) {
      const Prime p(pv_);
      for (int i = 0; i < 10; ++i) {
        const std::size_t f = 1 + static_cast<std::size_t>(i % 3);
        const std::size_t n = 2 + static_cast<std::size_t>(i % 2);
        const auto parts = sampling::partitions(n);
        const ModuliPoint pt = sampling::valid_point(rng, parts[static_cast<std::size_t>(i) % (parts.size() - 1)], f, p, true);
        const Subspace k = kernel(one_minus_pad(pt.phi, p).matrix);
        CHECK(k.dim() > 0);
        for (const Vec& v : k.basis())
          for (const Mat& m : unflatten_tuple(v, n, f)) CHECK(is_nilpotent(m));
      }
    }
  }

  TEST_CASE("shape checks") {
    CHECK_THROWS_AS(FrobTuple::group({Mat::identity(2), Mat::identity(3)}), InvalidInput);
    CHECK_THROWS_AS(FrobTuple::group({Mat::zero(2)}), InvalidInput);
    const BigOp a = BigOp::identity(2, 1);
    const BigOp b = BigOp::identity(2, 2);
    CHECK_THROWS_AS(a + b, InvalidInput);
    CHECK_THROWS_AS(ad_frobenius(FrobTuple::lie({Mat::identity(2)})), InvalidInput);
  }
}
