#include <doctest.h>

#include <sstream>

#include "phin/cli.hpp"

using namespace phin;
using nlohmann::json;

namespace {

SessionOutput run(const std::string& cmd, const std::string& payload, unsigned long p = 2, bool batch = false) {
  SessionConfig config;
  config.p = p;
  config.command = cmd;
  config.payload = payload;
  config.batch = batch;
  std::istringstream empty;
  return run_session(config, empty);
}

json body(const SessionOutput& out) { return json::parse(out.text); }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("validate and violation index") {
    const SessionOutput ok = run("validate", R"({"phi": [[1,0],[0,2]], "nil": [[0,1],[0,0]]})");
    CHECK(ok.exit_code == exit_ok);
    CHECK(body(ok)["valid"] == true);

    const SessionOutput bad = run("validate", R"({"phi": [[1,0],[0,1]], "nil": [[0,1],[0,0]]})");
    CHECK(bad.exit_code == exit_invalid_input);
    CHECK(body(bad)["error"]["kind"] == "relation_violation");
    CHECK(body(bad)["error"]["index"] == 0);
  }

  TEST_CASE("output is canonical and deterministic") {
    const std::string payload = R"({"phi": [[1,0,0],[0,2,0],[0,0,2]]})";
    const SessionOutput a = run("gl3-certificate", payload);
    const SessionOutput b = run("gl3-certificate", payload);
    CHECK(a.text == b.text);
    CHECK(a.text.back() == '\n');
    CHECK(a.text == body(a).dump() + "\n");
    const json c = body(a);
    CHECK(c["verdict"] == "SINGULAR");
    CHECK(c["preimages"] == "P1");
    CHECK(c["in_x_reg"] == false);
    CHECK(c["tangent_span_dim"].get<int>() >= 10);
  }

  TEST_CASE("scalars in Q(sqrt p)") {
    const json out = body(run("canonical-point", R"({"nil": [[0,1],[0,0]]})"));
    // diag(sqrt2 / 2, sqrt2)
    CHECK(out["phi"][0][0][0] == json::array({"0", "1/2"}));
    CHECK(out["phi"][0][1][1] == json::array({"0", "1"}));

    const SessionOutput in =
        run("validate", R"({"phi": [[["0","1/2"],"0"],["0",["0","1"]]], "nil": [[0,1],[0,0]]})");
    CHECK(in.exit_code == exit_ok);
  }

  TEST_CASE("subregular fiber and kernel commands") {
    const json fiber = body(run("gl3-sub-fiber", R"({"phi": [[1,0,0],[0,3,0],[0,0,9]]})", 3));
    CHECK(fiber["cardinality"] == 2);
    CHECK(fiber["rays"].size() == 2);
    const json k = body(run("kernel", R"({"phi": [[1,0,0],[0,2,0],[0,0,2]]})"));
    CHECK(k["dim"] == 2);
  }

  TEST_CASE("complex dimensions") {
    const json a = body(run("complex-dims", R"({"phi": [[1,0,0],[0,2,0],[0,0,2]], "nil": [[0,0,0],[0,0,0],[0,0,0]]})"));
    CHECK(a["h2"] == 2);
    CHECK(a["tangent_dim"] == 11);
    const json b = body(run("complex-dims-filtered",
                            R"({"phi": [[["0","1/2"],"0"],["0",["0","1"]]], "nil": [[0,1],[0,0]], "weights": [1,0]})"));
    CHECK(b["h1"] == 2);
  }

  TEST_CASE("exit codes") {
    CHECK(run("jordan-type", R"({"nil": [[1,0],[0,1]]})").exit_code == exit_invalid_input);
    CHECK(run("validate", "{not json").exit_code == exit_invalid_input);
    CHECK(run("no-such-command", "{}").exit_code == exit_invalid_input);
    CHECK(run("gl3-sub-fiber", R"({"phi": [[1,0],[0,2]]})").exit_code == exit_invalid_input);
    CHECK(run("gl2-x0-tangent", R"({"phi": [[1,0],[0,1]]})").exit_code == exit_invalid_input);
    CHECK(run("validate", R"({"phi": [[1]], "nil": [[0]]})").exit_code == exit_invalid_input);
  }

  TEST_CASE("batch mode keeps order and reports the worst exit code") {
    const std::string items = R"([{"nil": [[0,1,0],[0,0,1],[0,0,0]]}, {"nil": [[1,0],[0,1]]}, {"nil": [[0,1],[0,0]]}])";
    const SessionOutput out = run("jordan-type", items, 2, true);
    CHECK(out.exit_code == exit_invalid_input);
    const json b = body(out);
    REQUIRE(b.size() == 3);
    CHECK(b[0]["partition"] == json::array({3}));
    CHECK(b[1].contains("error"));
    CHECK(b[2]["partition"] == json::array({2}));
    CHECK(run("jordan-type", "{}", 2, true).exit_code == exit_invalid_input);
  }

  TEST_CASE("command list") {
    const auto& names = command_names();
    CHECK(names.size() == 15);
    CHECK(std::find(names.begin(), names.end(), "selftest") != names.end());
  }
}
