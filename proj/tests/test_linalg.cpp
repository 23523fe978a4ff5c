#include <doctest.h>

#include "helpers.hpp"
#include "phin/errors.hpp"
#include "phin/sampling.hpp"

using namespace phin;
using namespace phin::test;

TEST_SUITE("linalg") {
  TEST_CASE("rref and rank") {
    const Echelon id = rref(Mat::identity(3));
    CHECK(id.reduced == Mat::identity(3));
    CHECK(id.rank == 3);
    const Echelon z = rref(Mat::zero(2));
    CHECK(z.reduced == Mat::zero(2));
    CHECK(z.rank == 0);
    CHECK(rank(Mat{{q(1), q(2)}, {q(2), q(4)}}) == 1);
  }

  TEST_CASE("kernel") {
    CHECK(kernel(Mat::identity(3)).dim() == 0);
    CHECK(kernel(Mat::zero(3)).dim() == 3);
    const Mat m{{q(1), q(2)}, {q(2), q(4)}};
    const Subspace k = kernel(m);
    CHECK(k.dim() == 1);
    // (-2, 1) solves x + 2y = 0 directly.
    const Vec v{q(-2), q(1)};
    CHECK(m * v == Vec{q(0), q(0)});
    CHECK(k == Subspace::span(2, {v}));
  }

  TEST_CASE("rank-nullity on random matrices") {
    sampling::Rng rng(3);
    for (int i = 0; i < 30; ++i) {
      const std::size_t rows = 1 + static_cast<std::size_t>(i % 4);
      Mat m(rows, 4);
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < 4; ++c) m(r, c) = Scalar(sampling::integer(rng, 2));
      CHECK(kernel(m).dim() + rank(m) == 4);
      for (const Vec& v : kernel(m).basis()) CHECK(m * v == Vec(rows));
    }
  }

  TEST_CASE("charpoly examples") {
    CHECK(charpoly(Mat::identity(2)) == Poly{q(1), q(-2), q(1)});
    const Prime p(2);
    const Scalar ps = pv(p);
    CHECK(charpoly(Mat::diagonal({q(1), ps})) == Poly{ps, -(q(1) + ps), q(1)});
    // companion matrix of t^3 - t: last column holds -c0, -c1, -c2 = 0, 1, 0
    const Mat companion{{q(0), q(0), q(0)}, {q(1), q(0), q(1)}, {q(0), q(1), q(0)}};
    CHECK(charpoly(companion) == Poly{q(0), q(-1), q(0), q(1)});
  }

  TEST_CASE("charpoly agrees with det(tI - m) by cofactor expansion") {
    sampling::Rng rng(5);
    for (int i = 0; i < 20; ++i) {
      const Mat m = sampling::matrix(rng, 3);
      const Poly c = charpoly(m);
      for (long t = -2; t <= 2; ++t) {
        const Mat a = Mat::identity(3) * q(t) - m;
        const Scalar cof = a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
                           a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
                           a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
        CHECK(poly::evaluate(c, q(t)) == cof);
      }
    }
  }

  TEST_CASE("Cayley-Hamilton up to n = 4 over Q(sqrt p)") {
    sampling::Rng rng(9);
    const Prime p(3);
    for (std::size_t n = 1; n <= 4; ++n) {
      for (int i = 0; i < 5; ++i) {
        Mat m = sampling::matrix(rng, n);
        m(0, 0) = m(0, 0) + Scalar::sqrt_p(p);
        CHECK(poly::evaluate(charpoly(m), m).is_zero());
      }
    }
  }

  TEST_CASE("minimal polynomial and squarefreeness") {
    const Prime p(2);
    CHECK(minpoly_squarefree(Mat::diagonal({q(1), pv(p)})));
    CHECK_FALSE(minpoly_squarefree(e(2, 1, 2)));
    CHECK(minpoly_squarefree(Mat::identity(3)));
    CHECK(minpoly(Mat::identity(3)) == Poly{q(-1), q(1)});
    CHECK(minpoly(e(2, 1, 2)) == Poly{q(0), q(0), q(1)});
    CHECK(minpoly(Mat::diagonal({q(1), q(1), q(2)})) == Poly{q(2), q(-3), q(1)});
  }

  TEST_CASE("nilpotency and Jordan type") {
    CHECK(jordan_type(Mat::zero(3)).parts == std::vector<std::size_t>{1, 1, 1});
    CHECK(jordan_type(nsub3()).parts == std::vector<std::size_t>{2, 1});
    CHECK(jordan_type(nreg3()).parts == std::vector<std::size_t>{3});
    CHECK_FALSE(is_nilpotent(Mat::identity(2)));
    CHECK_THROWS_AS(jordan_type(Mat::identity(2)), InvalidInput);
  }

  TEST_CASE("Jordan type is conjugation invariant") {
    sampling::Rng rng(13);
    for (std::size_t n = 2; n <= 4; ++n) {
      for (const auto& parts : sampling::partitions(n)) {
        const Mat j = sampling::jordan_nilpotent(parts);
        const Mat g = sampling::invertible(rng, n);
        CHECK(jordan_type(g * j * inverse(g)).parts == parts);
      }
    }
  }

  TEST_CASE("Jordan bases") {
    const JordanBasis already = jordan_basis_nilpotent(nreg3());
    CHECK(already.conjugator == Mat::identity(3));

    const JordanBasis swap = jordan_basis_nilpotent(e(2, 2, 1));
    CHECK(swap.conjugator == Mat{{q(0), q(1)}, {q(1), q(0)}});
    CHECK(swap.partition.parts == std::vector<std::size_t>{2});

    // chain e3 -> e1 for e13, so the basis is (e1, e3, e2)
    const JordanBasis e13 = jordan_basis_nilpotent(e(3, 1, 3));
    CHECK(e13.partition.parts == std::vector<std::size_t>{2, 1});
    CHECK(e13.conjugator == Mat{{q(1), q(0), q(0)}, {q(0), q(0), q(1)}, {q(0), q(1), q(0)}});

    sampling::Rng rng(17);
    for (const auto& parts : sampling::partitions(4)) {
      const Mat j = sampling::jordan_nilpotent(parts);
      const Mat g = sampling::invertible(rng, 4);
      const JordanBasis jb = jordan_basis_nilpotent(g * j * inverse(g));
      CHECK(inverse(jb.conjugator) * (g * j * inverse(g)) * jb.conjugator == j);
    }
  }

  TEST_CASE("subspaces") {
    const Subspace a = units(2, {{1, 1}, {1, 2}});
    const Subspace b = units(2, {{1, 2}, {2, 2}});
    CHECK((a + b).dim() == 3);
    CHECK(a.intersect(b) == units(2, {{1, 2}}));
    CHECK(a.contains(flatten(e(2, 1, 1) * q(5) + e(2, 1, 2))));
    CHECK_FALSE(a.contains(flatten(e(2, 2, 1))));
    const Mat ann = a.annihilator();
    CHECK(ann.rows() == 2);
    for (const Vec& v : a.basis()) CHECK((ann * v) == Vec(2));
  }

  TEST_CASE("solve and inverse") {
    const Mat m{{q(2), q(1)}, {q(1), q(1)}};
    CHECK(inverse(m) * m == Mat::identity(2));
    const auto x = solve(m, Vec{q(3), q(2)});
    REQUIRE(x.has_value());
    CHECK(*x == Vec{q(1), q(1)});
    CHECK_FALSE(solve(Mat{{q(1), q(2)}, {q(2), q(4)}}, Vec{q(1), q(0)}).has_value());
    CHECK_THROWS_AS(inverse(Mat{{q(1), q(2)}, {q(2), q(4)}}), InvalidInput);
    CHECK(det(m) == q(1));
  }
}
