#include "phin/adjoint.hpp"

#include "phin/errors.hpp"

namespace phin {

FrobTuple::FrobTuple(std::vector<Mat> mats, TupleKind kind) : mats_(std::move(mats)), kind_(kind) {
  if (mats_.empty()) throw InvalidInput("an f-tuple needs f >= 1 entries");
  const std::size_t n = mats_.front().rows();
  if (n == 0) throw InvalidInput("matrices must be at least 1 x 1");
  for (const auto& m : mats_) {
    if (m.rows() != n || m.cols() != n) throw InvalidInput("f-tuple entries must all be n x n for one n");
  }
}

FrobTuple FrobTuple::group(std::vector<Mat> mats) {
  FrobTuple t(std::move(mats), TupleKind::group);
  for (std::size_t i = 0; i < t.f(); ++i) {
    if (!is_invertible(t[i])) throw InvalidInput("Phi_" + std::to_string(i + 1) + " is singular");
  }
  return t;
}

FrobTuple FrobTuple::lie(std::vector<Mat> mats) { return FrobTuple(std::move(mats), TupleKind::lie); }

FrobTuple FrobTuple::constant(const Mat& m, std::size_t f, TupleKind kind) {
  std::vector<Mat> mats(f, m);
  return kind == TupleKind::group ? group(std::move(mats)) : lie(std::move(mats));
}

Vec flatten(const std::vector<Mat>& slots) {
  Vec v;
  for (const auto& m : slots) v.insert(v.end(), m.entries().begin(), m.entries().end());
  return v;
}

std::vector<Mat> unflatten_tuple(const Vec& v, std::size_t n, std::size_t f) {
  if (v.size() != f * n * n) throw InvalidInput("vector length is not f*n^2");
  std::vector<Mat> out;
  for (std::size_t i = 0; i < f; ++i) {
    auto first = v.begin() + static_cast<std::ptrdiff_t>(i * n * n);
    out.emplace_back(n, n, std::vector<Scalar>(first, first + static_cast<std::ptrdiff_t>(n * n)));
  }
  return out;
}

namespace {

void require_same_shape(const BigOp& x, const BigOp& y) {
  if (x.n != y.n || x.f != y.f) throw InvalidInput("combining operators on different gl_n^{x f}");
}

// Matrix of X |-> left * X * right on gl_n in the row-major unit basis.
Mat sandwich_matrix(const Mat& left, const Mat& right) {
  const std::size_t n = left.rows();
  Mat out(n * n, n * n);
  // (L X R)_{rc} = sum_{ab} L_{ra} X_{ab} R_{bc}
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t a = 0; a < n; ++a) {
        if (left(r, a).is_zero()) continue;
        for (std::size_t b = 0; b < n; ++b) {
          if (!right(b, c).is_zero()) out(r * n + c, a * n + b) = left(r, a) * right(b, c);
        }
      }
  return out;
}

void place_block(Mat& big, std::size_t block_row, std::size_t block_col, const Mat& block) {
  const std::size_t s = block.rows();
  for (std::size_t r = 0; r < s; ++r)
    for (std::size_t c = 0; c < s; ++c) big(block_row * s + r, block_col * s + c) = block(r, c);
}

}  // namespace

std::vector<Mat> BigOp::apply(const std::vector<Mat>& slots) const {
  return unflatten_tuple(matrix * flatten(slots), n, f);
}

BigOp operator+(const BigOp& x, const BigOp& y) {
  require_same_shape(x, y);
  return {x.n, x.f, x.matrix + y.matrix};
}

BigOp operator-(const BigOp& x, const BigOp& y) {
  require_same_shape(x, y);
  return {x.n, x.f, x.matrix - y.matrix};
}

BigOp operator*(const BigOp& x, const BigOp& y) {
  require_same_shape(x, y);
  return {x.n, x.f, x.matrix * y.matrix};
}

BigOp operator*(const Scalar& s, const BigOp& x) { return {x.n, x.f, x.matrix * s}; }

BigOp BigOp::identity(std::size_t n, std::size_t f) { return {n, f, Mat::identity(f * n * n)}; }

BigOp ad_single(const Mat& phi) {
  if (!phi.is_square()) throw InvalidInput("ad_single needs a square matrix");
  return {phi.rows(), 1, sandwich_matrix(phi, inverse(phi))};
}

BigOp ad_frobenius(const FrobTuple& phi) {
  if (phi.kind() != TupleKind::group) throw InvalidInput("ad_frobenius needs a group-element tuple");
  const std::size_t n = phi.n();
  const std::size_t f = phi.f();
  BigOp op{n, f, Mat(f * n * n, f * n * n)};
  for (std::size_t i = 0; i < f; ++i) place_block(op.matrix, i, (i + 1) % f, ad_single(phi[i]).matrix);
  return op;
}

BigOp ad_n(const FrobTuple& nil) {
  if (nil.kind() != TupleKind::lie) throw InvalidInput("ad_n needs a Lie-element tuple");
  const std::size_t n = nil.n();
  const std::size_t f = nil.f();
  const Mat id = Mat::identity(n);
  BigOp op{n, f, Mat(f * n * n, f * n * n)};
  for (std::size_t i = 0; i < f; ++i) {
    place_block(op.matrix, i, i, sandwich_matrix(nil[i], id) - sandwich_matrix(id, nil[i]));
  }
  return op;
}

BigOp one_minus_pad(const FrobTuple& phi, Prime p) {
  BigOp ad = ad_frobenius(phi);
  return BigOp::identity(ad.n, ad.f) - Scalar(Rational(p.value()), 0, p) * ad;
}

BigOp pad_minus_one(const FrobTuple& phi, Prime p) {
  BigOp ad = ad_frobenius(phi);
  return Scalar(Rational(p.value()), 0, p) * ad - BigOp::identity(ad.n, ad.f);
}

Mat norm_product(const FrobTuple& phi) {
  Mat acc = Mat::identity(phi.n());
  for (const auto& m : phi.mats()) acc = acc * m;
  return acc;
}

}  // namespace phin
