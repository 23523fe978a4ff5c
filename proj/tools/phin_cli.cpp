#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "phin/cli.hpp"

int main(int argc, char** argv) {
  phin::SessionConfig config;
  CLI::App app{"Exact computations with framed (phi, N)-modules for GL_n"};

  std::size_t n = 0;
  std::size_t f = 0;
  std::string input;
  std::string output;
  std::string payload;
  app.add_option("--p", config.p, "Rational prime p")->default_val(2);
  auto* n_opt = app.add_option("--n", n, "Matrix size, 2..4 (inferred from the payload if omitted)");
  auto* f_opt = app.add_option("--f", f, "Number of Frobenius slots, 1..3 (inferred if omitted)");
  app.add_option("--cmd", config.command, "Command to run")
      ->required()
      ->check(CLI::IsMember(phin::command_names()));
  auto* in_opt = app.add_option("--in", input, "Read the JSON payload from this file (default: stdin)");
  auto* payload_opt = app.add_option("--payload", payload, "Inline JSON payload");
  in_opt->excludes(payload_opt);
  auto* out_opt = app.add_option("--out", output, "Write the JSON result to this file (default: stdout)");
  app.add_flag("--batch", config.batch, "Payload is a JSON array; process each item independently");

  CLI11_PARSE(app, argc, argv);

  if (*n_opt) config.n = n;
  if (*f_opt) config.f = f;
  if (*in_opt) config.input_path = input;
  if (*payload_opt) config.payload = payload;
  if (*out_opt) config.output_path = output;

  const phin::SessionOutput result = phin::run_session(config, std::cin);
  if (config.output_path) {
    std::ofstream file(*config.output_path, std::ios::binary);
    if (!file) {
      std::cerr << "cannot write " << *config.output_path << "\n";
      return phin::exit_invalid_input;
    }
    file << result.text;
  } else {
    std::cout << result.text;
  }
  return result.exit_code;
}
