#include "phin/nilpotent.hpp"

#include <algorithm>
#include <set>

#include "phin/adjoint.hpp"
#include "phin/errors.hpp"

namespace phin {

namespace {

Mat diag_of_weights(const std::vector<int>& w, const Scalar& t) {
  std::vector<Scalar> d;
  d.reserve(w.size());
  for (int k : w) d.push_back(t.pow(k));
  return Mat::diagonal(d);
}

}  // namespace

Mat Cochar::evaluate(const Scalar& t) const {
  if (t.is_zero()) throw InvalidInput("a cocharacter is evaluated at a nonzero scalar");
  return conjugator * diag_of_weights(weights, t) * inverse(conjugator);
}

Mat Cochar::differential() const {
  std::vector<Scalar> d;
  for (int k : weights) d.emplace_back(k);
  return conjugator * Mat::diagonal(d) * inverse(conjugator);
}

Mat Cochar::eigenvector(std::size_t i, std::size_t j) const {
  // g e_ij g^{-1} = (column i of g) (row j of g^{-1})
  const Mat gi = inverse(conjugator);
  const std::size_t n = this->n();
  Mat out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = conjugator(r, i) * gi(j, c);
  return out;
}

Cochar diagonal_cochar(std::vector<int> weights) {
  Cochar c{Mat::identity(weights.size()), std::move(weights)};
  return c;
}

Subspace GradedDecomp::piece(int weight) const {
  auto it = pieces.find(weight);
  if (it != pieces.end()) return it->second;
  return Subspace(cochar.n() * cochar.n());
}

GradedDecomp grading(const Cochar& c) {
  const std::size_t n = c.n();
  if (c.conjugator.rows() != n || !c.conjugator.is_square()) {
    throw InvalidInput("cocharacter conjugator and weight vector disagree on n");
  }
  std::map<int, std::vector<Vec>> vectors;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) vectors[c.weights[i] - c.weights[j]].push_back(flatten(c.eigenvector(i, j)));
  GradedDecomp out{c, {}};
  for (auto& [w, vs] : vectors) out.pieces.emplace(w, Subspace::span(n * n, vs));
  return out;
}

Subspace threshold(const Cochar& c, int k) {
  const GradedDecomp g = grading(c);
  Subspace acc(c.n() * c.n());
  for (const auto& [w, piece] : g.pieces) {
    if (w >= k) acc = acc + piece;
  }
  return acc;
}

std::size_t ParabolicData::n() const {
  std::size_t n = 0;
  while (n * n < p_lie.ambient_dim()) ++n;
  return n;
}

Subspace ParabolicData::step(int k) const {
  if (steps.empty()) return k <= 0 ? Subspace::whole(p_lie.ambient_dim()) : Subspace(p_lie.ambient_dim());
  if (k < steps.begin()->first) return Subspace::whole(p_lie.ambient_dim());
  if (k > steps.rbegin()->first) return Subspace(p_lie.ambient_dim());
  return steps.at(k);
}

bool operator==(const ParabolicData& x, const ParabolicData& y) {
  if (!(x.p_lie == y.p_lie) || !(x.u_lie == y.u_lie)) return false;
  auto bounds = [](const ParabolicData& d) {
    if (d.steps.empty()) return std::pair{0, 0};
    return std::pair{d.steps.begin()->first, d.steps.rbegin()->first};
  };
  auto [xlo, xhi] = bounds(x);
  auto [ylo, yhi] = bounds(y);
  for (int k = std::min(xlo, ylo) - 1; k <= std::max(xhi, yhi) + 1; ++k) {
    if (!(x.step(k) == y.step(k))) return false;
  }
  return true;
}

ParabolicData parabolic_from(const Cochar& c) {
  const GradedDecomp g = grading(c);
  ParabolicData out;
  out.cochar = c;
  const int lo = g.pieces.begin()->first;
  const int hi = g.pieces.rbegin()->first;
  for (int k = lo; k <= hi; ++k) {
    Subspace acc(c.n() * c.n());
    for (const auto& [w, piece] : g.pieces) {
      if (w >= k) acc = acc + piece;
    }
    out.steps.emplace(k, acc);
  }
  out.p_lie = out.step(0);
  out.u_lie = out.step(1);
  out.levi_lie = g.piece(0);
  return out;
}

Cochar associated_cocharacter(const Mat& nil) {
  if (!nil.is_square()) throw InvalidInput("associated_cocharacter needs a square matrix");
  const JordanBasis jb = jordan_basis_nilpotent(nil);
  std::vector<int> weights;
  for (std::size_t m : jb.partition.parts) {
    const int top = static_cast<int>(m) - 1;
    for (int w = top; w >= -top; w -= 2) weights.push_back(w);
  }
  return Cochar{jb.conjugator, std::move(weights)};
}

ParabolicData parabolic_of(const Mat& nil) {
  if (!nil.is_square() || !is_nilpotent(nil)) throw InvalidInput("parabolic_of needs a nilpotent matrix");
  if (nil.is_zero()) throw InvalidInput("parabolic_of needs a nonzero nilpotent");
  return parabolic_from(associated_cocharacter(nil));
}

Mat ad_matrix(const Mat& m) { return ad_n(FrobTuple::lie({m})).matrix; }

Subspace centralizer_lie(const Mat& nil) { return kernel(ad_matrix(nil)); }

Subspace conjugate_subspace(const Mat& phi, const Subspace& s) {
  const std::size_t n = phi.rows();
  const Mat inv = inverse(phi);
  std::vector<Vec> images;
  for (const Vec& v : s.basis()) images.push_back(flatten(phi * unflatten(v, n) * inv));
  return Subspace::span(s.ambient_dim(), images);
}

bool stabilizes(const Mat& phi, const ParabolicData& par) {
  if (phi.rows() * phi.rows() != par.p_lie.ambient_dim()) throw InvalidInput("phi and parabolic disagree on n");
  for (const auto& [k, s] : par.steps) {
    if (!(conjugate_subspace(phi, s) == s)) return false;
  }
  return true;
}

std::string support_pattern(const Subspace& s, std::size_t n) {
  std::set<std::size_t> support;
  for (const Vec& v : s.basis())
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero()) support.insert(i);
  std::string out = "(";
  for (std::size_t r = 0; r < n; ++r) {
    if (r != 0) out += ';';
    for (std::size_t c = 0; c < n; ++c) {
      if (c != 0) out += ' ';
      out += support.count(r * n + c) ? '*' : '0';
    }
  }
  return out + ')';
}

}  // namespace phin
