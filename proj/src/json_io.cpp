#include "phin/json_io.hpp"

#include "phin/errors.hpp"

namespace phin::io {

json to_json(const Scalar& x) {
  auto [a, b] = x.to_strings();
  return json::array({a, b});
}

json to_json(const Mat& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const FrobTuple& t) {
  json out = json::array();
  for (const auto& m : t.mats()) out.push_back(to_json(m));
  return out;
}

json to_json(const Poly& f) {
  json out = json::array();
  for (const auto& c : f) out.push_back(to_json(c));
  return out;
}

json to_json(const Partition& part) { return json(part.parts); }

json to_json(const Cochar& c) { return {{"conjugator", to_json(c.conjugator)}, {"weights", c.weights}}; }

json subspace_as_matrices(const Subspace& s, std::size_t n) {
  json out = json::array();
  for (const Vec& v : s.basis()) out.push_back(to_json(unflatten(v, n)));
  return out;
}

json to_json(const ParabolicData& par) {
  const std::size_t n = par.n();
  json steps = json::object();
  for (const auto& [k, s] : par.steps) steps[std::to_string(k)] = s.dim();
  json out = {
      {"p_lie", subspace_as_matrices(par.p_lie, n)},
      {"u_lie", subspace_as_matrices(par.u_lie, n)},
      {"levi_lie", subspace_as_matrices(par.levi_lie, n)},
      {"dims", {{"p_lie", par.p_lie.dim()}, {"u_lie", par.u_lie.dim()}, {"levi_lie", par.levi_lie.dim()}}},
      {"pattern",
       {{"p_lie", support_pattern(par.p_lie, n)},
        {"u_lie", support_pattern(par.u_lie, n)},
        {"levi_lie", support_pattern(par.levi_lie, n)}}},
      {"step_dims", steps},
  };
  if (par.cochar) out["cochar"] = to_json(*par.cochar);
  return out;
}

json to_json(const ComplexReport& rep) {
  json out = {{"h0", rep.h0},           {"h1", rep.h1},           {"h2", rep.h2},
              {"rank_d0", rep.rank_d0}, {"rank_d1", rep.rank_d1}, {"filtered", rep.filtered},
              {"tangent_dim", rep.tangent_dim}};
  if (rep.filtered) out["fil0_dim"] = rep.fil0_dim;
  return out;
}

json to_json(const Gl2Report& rep) {
  json kernel = json::array();
  const std::size_t f = rep.kernel.ambient_dim() / 4;
  for (const Vec& v : rep.kernel.basis()) {
    json slots = json::array();
    for (const Mat& m : unflatten_tuple(v, 2, f)) slots.push_back(to_json(m));
    kernel.push_back(std::move(slots));
  }
  return {{"nm", to_json(rep.nm)},
          {"trace_nm", to_json(rep.trace_nm)},
          {"det_nm", to_json(rep.det_nm)},
          {"divisor_value", to_json(rep.divisor_value)},
          {"on_divisor", rep.on_divisor},
          {"charpoly_ad", to_json(rep.charpoly_ad)},
          {"kernel_dim", rep.kernel_dim},
          {"kernel", kernel}};
}

namespace {

json cardinality(const SubFiber& fiber) {
  if (fiber.infinite) return "P1";
  return fiber.rays.size();
}

}  // namespace

json to_json(const SubFiber& fiber) {
  json rays = json::array();
  for (const auto& r : fiber.rays) {
    rays.push_back({{"ray", to_json(r.ray)},
                    {"p_lie_pattern", support_pattern(r.parabolic.p_lie, 3)},
                    {"p_lie", subspace_as_matrices(r.parabolic.p_lie, 3)},
                    {"phi_in_parabolic", r.phi_in_parabolic}});
  }
  return {{"base_phi", to_json(fiber.base_phi)},
          {"kernel", subspace_as_matrices(fiber.kernel, 3)},
          {"kernel_dim", fiber.kernel.dim()},
          {"cardinality", cardinality(fiber)},
          {"rays", rays}};
}

json to_json(const SingularityCertificate& cert) {
  json out = {{"phi", to_json(cert.phi)},
              {"verdict", cert.verdict == Verdict::singular ? "SINGULAR" : "SMOOTH_UNKNOWN"},
              {"preimages", cert.fiber.infinite ? json("P1") : json(cert.fiber.preimages())},
              {"kernel_dim", cert.fiber.kernel.dim()},
              {"corroborated", cert.corroborated}};
  out["in_x_reg"] = cert.in_x_reg ? json(*cert.in_x_reg) : json(nullptr);
  out["tangent_span_dim"] = cert.tangent_span_dim ? json(*cert.tangent_span_dim) : json(nullptr);
  return out;
}

namespace {

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InvalidInput("expected a rational as a string or integer, got " + j.dump());
}

bool is_scalar(const json& j) {
  if (j.is_string() || j.is_number_integer()) return true;
  return j.is_array() && j.size() == 2 && (j[0].is_string() || j[0].is_number_integer()) &&
         (j[1].is_string() || j[1].is_number_integer());
}

bool is_square_matrix(const json& j) {
  if (!j.is_array() || j.empty()) return false;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != j.size()) return false;
    for (const auto& e : row)
      if (!is_scalar(e)) return false;
  }
  return true;
}

}  // namespace

Scalar scalar_from_json(const json& j, Prime p) {
  if (j.is_array()) {
    if (j.size() != 2) throw InvalidInput("a scalar pair needs exactly two components");
    return Scalar(rational_from_json(j[0]), rational_from_json(j[1]), p);
  }
  return Scalar(rational_from_json(j), 0, p);
}

Mat mat_from_json(const json& j, Prime p, std::optional<std::size_t> n) {
  if (!is_square_matrix(j)) throw InvalidInput("expected a square matrix of scalars, got " + j.dump());
  if (n && j.size() != *n) {
    throw InvalidInput("expected a " + std::to_string(*n) + " x " + std::to_string(*n) + " matrix");
  }
  const std::size_t size = j.size();
  Mat m(size, size);
  for (std::size_t r = 0; r < size; ++r)
    for (std::size_t c = 0; c < size; ++c) m(r, c) = scalar_from_json(j[r][c], p);
  return m;
}

FrobTuple tuple_from_json(const json& j, Prime p, TupleKind kind, std::optional<std::size_t> n,
                          std::optional<std::size_t> f) {
  std::vector<Mat> mats;
  if ((!f || *f == 1) && is_square_matrix(j)) {
    mats.push_back(mat_from_json(j, p, n));
  } else {
    if (!j.is_array() || j.empty()) throw InvalidInput("expected an array of matrices, got " + j.dump());
    if (f && j.size() != *f) throw InvalidInput("expected " + std::to_string(*f) + " matrices");
    for (const auto& m : j) mats.push_back(mat_from_json(m, p, n));
  }
  return kind == TupleKind::group ? FrobTuple::group(std::move(mats)) : FrobTuple::lie(std::move(mats));
}

std::string canonical(const json& j) { return j.dump() + "\n"; }

}  // namespace phin::io
