#include "phin/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <future>
#include <istream>
#include <iterator>
#include <map>
#include <thread>

#include "phin/json_io.hpp"
#include "phin/selftest.hpp"

namespace phin {

namespace {

using io::json;
using io::to_json;

struct Context {
  Prime p;
  const SessionConfig& config;
  const json& payload;

  const json& need(const char* key) const {
    if (!payload.is_object() || !payload.contains(key)) {
      throw InvalidInput(std::string("payload needs a \"") + key + "\" field");
    }
    return payload.at(key);
  }

  void check_bounds(std::size_t n, std::size_t f) const {
    if (n < 2 || n > 4) throw InvalidInput("n must be in 2..4, got " + std::to_string(n));
    if (f < 1 || f > 3) throw InvalidInput("f must be in 1..3, got " + std::to_string(f));
  }

  FrobTuple tuple(const char* key, TupleKind kind) const {
    FrobTuple t = io::tuple_from_json(need(key), p, kind, config.n, config.f);
    check_bounds(t.n(), t.f());
    return t;
  }

  Mat mat(const char* key, std::optional<std::size_t> n = std::nullopt) const {
    Mat m = io::mat_from_json(need(key), p, n ? n : config.n);
    check_bounds(m.rows(), config.f.value_or(1));
    return m;
  }

  ModuliPoint point() const { return validate_point(tuple("phi", TupleKind::group), tuple("nil", TupleKind::lie), p); }

  void require_f1(const char* what) const {
    if (config.f && *config.f != 1) throw InvalidInput(std::string(what) + " works with f = 1");
  }
};

using Handler = std::function<json(const Context&)>;

json cmd_validate(const Context& cx) {
  const ModuliPoint pt = cx.point();
  return {{"valid", true}, {"n", pt.n()}, {"f", pt.f()}};
}

json cmd_charpoly_ad(const Context& cx) {
  const Mat ad = ad_frobenius(cx.tuple("phi", TupleKind::group)).matrix;
  return {{"charpoly", to_json(charpoly(ad))}, {"squarefree_minpoly", minpoly_squarefree(ad)}};
}

json cmd_kernel(const Context& cx) {
  const FrobTuple phi = cx.tuple("phi", TupleKind::group);
  const Subspace k = kernel(one_minus_pad(phi, cx.p).matrix);
  json basis = json::array();
  for (const Vec& v : k.basis()) {
    json slots = json::array();
    for (const Mat& m : unflatten_tuple(v, phi.n(), phi.f())) slots.push_back(to_json(m));
    basis.push_back(std::move(slots));
  }
  return {{"dim", k.dim()}, {"basis", basis}};
}

json cmd_jordan_type(const Context& cx) {
  const Mat m = cx.mat("nil");
  return {{"nilpotent", true}, {"partition", to_json(jordan_type(m))}};
}

json cmd_assoc_cochar(const Context& cx) {
  const Mat m = cx.mat("nil");
  json out = {{"cochar", to_json(associated_cocharacter(m))}};
  out["parabolic"] = m.is_zero() ? json(nullptr) : to_json(parabolic_of(m));
  return out;
}

json cmd_canonical_point(const Context& cx) {
  const ModuliPoint pt = canonical_point(cx.mat("nil"), cx.p, cx.config.f.value_or(1));
  return {{"phi", to_json(pt.phi)}, {"nil", to_json(pt.nil)}};
}

json cmd_complex_dims(const Context& cx) { return to_json(complex_dims(cx.point())); }

json cmd_complex_dims_filtered(const Context& cx) {
  const ModuliPoint pt = cx.point();
  const std::vector<int> weights = cx.need("weights").get<std::vector<int>>();
  if (weights.size() != pt.n()) throw InvalidInput("weights must have length n");
  Cochar c = diagonal_cochar(weights);
  if (cx.payload.contains("conjugator")) {
    c.conjugator = io::mat_from_json(cx.payload.at("conjugator"), cx.p, pt.n());
    if (!is_invertible(c.conjugator)) throw InvalidInput("filtration conjugator is singular");
  }
  return to_json(filtered_complex_dims(pt, Filtration::from_cochar(c, pt.f())));
}

json cmd_tangent_dim(const Context& cx) {
  const ModuliPoint pt = cx.point();
  const std::size_t t = tangent_space(pt).dim();
  return {{"tangent_dim", t}, {"f_n2", pt.dim()}, {"excess", t - pt.dim()}};
}

json cmd_gl2_report(const Context& cx) { return to_json(gl2_report(cx.tuple("phi", TupleKind::group), cx.p)); }

json cmd_gl2_x0_tangent(const Context& cx) {
  const FrobTuple phi = cx.tuple("phi", TupleKind::group);
  const std::size_t total = gl2_x0_tangent(phi, cx.p);
  const std::size_t divisor = gl2_divisor_tangent_dim(phi, cx.p);
  return {{"tangent_dim", total}, {"divisor_tangent_dim", divisor}, {"kernel_dim", total - divisor}};
}

json cmd_reg_reconstruct(const Context& cx) { return to_json(reg_filtration_reconstruct(cx.point())); }

json cmd_sub_fiber(const Context& cx) {
  cx.require_f1("gl3-sub-fiber");
  return to_json(sub_fiber(cx.mat("phi", 3), cx.p));
}

json cmd_certificate(const Context& cx) {
  cx.require_f1("gl3-certificate");
  return to_json(singularity_certificate(cx.mat("phi", 3), cx.p));
}

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"validate", cmd_validate},
      {"charpoly-ad", cmd_charpoly_ad},
      {"kernel", cmd_kernel},
      {"jordan-type", cmd_jordan_type},
      {"assoc-cochar", cmd_assoc_cochar},
      {"canonical-point", cmd_canonical_point},
      {"complex-dims", cmd_complex_dims},
      {"complex-dims-filtered", cmd_complex_dims_filtered},
      {"tangent-dim", cmd_tangent_dim},
      {"gl2-report", cmd_gl2_report},
      {"gl2-x0-tangent", cmd_gl2_x0_tangent},
      {"reg-reconstruct", cmd_reg_reconstruct},
      {"gl3-sub-fiber", cmd_sub_fiber},
      {"gl3-certificate", cmd_certificate},
  };
  return table;
}

CommandResult error_result(int code, const char* kind, const std::string& message) {
  return {code, {{"error", {{"kind", kind}, {"message", message}}}}};
}

CommandResult run_selftest_command(const SessionConfig& config) {
  const std::vector<SelfCheck> checks = run_selftest(Prime(config.p));
  json list = json::array();
  bool all = true;
  for (const auto& c : checks) {
    json item = {{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) item["detail"] = c.detail;
    list.push_back(std::move(item));
    all = all && c.passed;
  }
  return {all ? exit_ok : exit_internal, {{"passed", all}, {"checks", list}}};
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, h] : handlers()) out.push_back(name);
    out.push_back("selftest");
    std::sort(out.begin(), out.end());
    return out;
  }();
  return names;
}

CommandResult run_command(const std::string& command, const json& payload, const SessionConfig& config) {
  try {
    if (config.n && (*config.n < 2 || *config.n > 4)) throw InvalidInput("--n must be in 2..4");
    if (config.f && (*config.f < 1 || *config.f > 3)) throw InvalidInput("--f must be in 1..3");
    const Prime p(config.p);
    if (command == "selftest") return run_selftest_command(config);
    auto it = handlers().find(command);
    if (it == handlers().end()) throw InvalidInput("unknown command '" + command + "'");
    return {exit_ok, it->second(Context{p, config, payload})};
  } catch (const RelationViolation& e) {
    CommandResult r = error_result(exit_invalid_input, "relation_violation", e.what());
    r.body["error"]["index"] = e.index();
    return r;
  } catch (const InvalidInput& e) {
    return error_result(exit_invalid_input, "invalid_input", e.what());
  } catch (const Unsupported& e) {
    return error_result(exit_unsupported, "unsupported", e.what());
  } catch (const InternalError& e) {
    return error_result(exit_internal, "internal", e.what());
  } catch (const json::exception& e) {
    return error_result(exit_invalid_input, "invalid_input", e.what());
  } catch (const std::exception& e) {
    return error_result(exit_internal, "internal", e.what());
  }
}

SessionOutput run_session(const SessionConfig& config, std::istream& in) {
  std::string text;
  if (config.payload) {
    text = *config.payload;
  } else if (config.input_path) {
    std::ifstream file(*config.input_path);
    if (!file) {
      CommandResult r = error_result(exit_invalid_input, "invalid_input", "cannot read " + *config.input_path);
      return {r.exit_code, io::canonical(r.body)};
    }
    text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
  } else if (config.command != "selftest") {
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }

  json payload = json::object();
  if (!text.empty()) {
    try {
      payload = json::parse(text);
    } catch (const json::parse_error& e) {
      CommandResult r = error_result(exit_invalid_input, "invalid_input", std::string("malformed JSON: ") + e.what());
      return {r.exit_code, io::canonical(r.body)};
    }
  }

  if (!config.batch) {
    CommandResult r = run_command(config.command, payload, config);
    return {r.exit_code, io::canonical(r.body)};
  }

  if (!payload.is_array()) {
    CommandResult r = error_result(exit_invalid_input, "invalid_input", "batch mode expects a JSON array");
    return {r.exit_code, io::canonical(r.body)};
  }
  const std::size_t width = std::max(1u, std::thread::hardware_concurrency());
  json results = json::array();
  int code = exit_ok;
  for (std::size_t start = 0; start < payload.size(); start += width) {
    std::vector<std::future<CommandResult>> jobs;
    for (std::size_t i = start; i < std::min(payload.size(), start + width); ++i) {
      const json& item = payload[i];
      jobs.push_back(
          std::async(std::launch::async, [&config, &item] { return run_command(config.command, item, config); }));
    }
    for (auto& job : jobs) {
      CommandResult r = job.get();
      code = std::max(code, r.exit_code);
      results.push_back(std::move(r.body));
    }
  }
  return {code, io::canonical(results)};
}

}  // namespace phin
