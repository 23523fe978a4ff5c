#include "phin/sampling.hpp"

namespace phin::sampling {

long integer(Rng& rng, long range) { return std::uniform_int_distribution<long>(-range, range)(rng); }

Rational rational(Rng& rng, int range) {
  const long num = integer(rng, range);
  const long den = std::uniform_int_distribution<long>(1, range)(rng);
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Mat matrix(Rng& rng, std::size_t n, int range) {
  Mat m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = Scalar(rational(rng, range));
  return m;
}

Mat conjugator(Rng& rng, std::size_t n) {
  for (;;) {
    Mat m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = Scalar(integer(rng, 2));
    if (is_invertible(m)) return m;
  }
}

Mat invertible(Rng& rng, std::size_t n, int range) {
  for (;;) {
    Mat m = matrix(rng, n, range);
    if (is_invertible(m)) return m;
  }
}

FrobTuple group_tuple(Rng& rng, std::size_t n, std::size_t f, int range) {
  std::vector<Mat> mats;
  for (std::size_t i = 0; i < f; ++i) mats.push_back(invertible(rng, n, range));
  return FrobTuple::group(std::move(mats));
}

Mat jordan_nilpotent(const std::vector<std::size_t>& parts) {
  std::size_t n = 0;
  for (std::size_t m : parts) n += m;
  Mat out(n, n);
  std::size_t start = 0;
  for (std::size_t m : parts) {
    for (std::size_t j = 0; j + 1 < m; ++j) out(start + j, start + j + 1) = Scalar(1);
    start += m;
  }
  return out;
}

namespace {

void partitions_rec(std::size_t rest, std::size_t max_part, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (rest == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t m = std::min(rest, max_part); m >= 1; --m) {
    cur.push_back(m);
    partitions_rec(rest - m, m, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<std::size_t>> partitions(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

ModuliPoint transport(const ModuliPoint& pt, const std::vector<Mat>& a) {
  const std::size_t f = pt.f();
  if (a.size() != f) throw InvalidInput("transport needs one matrix per slot");
  std::vector<Mat> phi;
  std::vector<Mat> nil;
  for (std::size_t i = 0; i < f; ++i) {
    phi.push_back(a[i] * pt.phi[i] * inverse(a[(i + 1) % f]));
    nil.push_back(a[i] * pt.nil[i] * inverse(a[i]));
  }
  return validate_point(FrobTuple::group(std::move(phi)), FrobTuple::lie(std::move(nil)), pt.p);
}

ModuliPoint centralizer_twist(Rng& rng, const ModuliPoint& pt) {
  const std::size_t f = pt.f();
  const std::size_t n = pt.n();
  std::vector<Mat> phi;
  for (std::size_t i = 0; i < f; ++i) {
    const std::vector<Vec> basis = centralizer_lie(pt.nil[(i + 1) % f]).basis();
    for (;;) {
      Vec v(n * n);
      for (const Vec& b : basis) {
        const Scalar coeff(integer(rng, 2));
        for (std::size_t k = 0; k < v.size(); ++k) v[k] += coeff * b[k];
      }
      const Mat c = unflatten(v, n);
      if (is_invertible(c)) {
        phi.push_back(pt.phi[i] * c);
        break;
      }
    }
  }
  return validate_point(FrobTuple::group(std::move(phi)), pt.nil, pt.p);
}

ModuliPoint valid_point(Rng& rng, const std::vector<std::size_t>& parts, std::size_t f, Prime p, bool twist) {
  const Mat j = jordan_nilpotent(parts);
  const std::size_t n = j.rows();
  const Mat g = conjugator(rng, n);
  const ModuliPoint base = canonical_point(g * j * inverse(g), p, f);
  std::vector<Mat> a;
  for (std::size_t i = 0; i < f; ++i) a.push_back(conjugator(rng, n));
  ModuliPoint pt = transport(base, a);
  return twist ? centralizer_twist(rng, pt) : pt;
}

FrobTuple gl2_divisor_point(Rng& rng, std::size_t f, Prime p) {
  const Scalar q = Scalar::p_power(p, static_cast<long>(f));
  Rational c = 0;
  while (sgn(c) == 0) c = rational(rng);
  const Mat upper{{Scalar(1), Scalar(rational(rng))}, {Scalar(0), q}};
  const Mat g = conjugator(rng, 2);
  const Mat target = Scalar(c) * (g * upper * inverse(g));

  std::vector<Mat> mats;
  Mat prefix = Mat::identity(2);
  for (std::size_t i = 0; i + 1 < f; ++i) {
    mats.push_back(invertible(rng, 2));
    prefix = prefix * mats.back();
  }
  mats.push_back(inverse(prefix) * target);
  return FrobTuple::group(std::move(mats));
}

}  // namespace phin::sampling
