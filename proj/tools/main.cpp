#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "beurling/commands.hpp"
#include "beurling/config.hpp"
#include "beurling/errors.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw beurling::ConfigError("cannot read config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Generalized number system toolkit: enumerates the multiplicative "
      "semigroup of a prime system and runs counting, mean-value, and "
      "transform checks on it"};
  std::string command;
  std::string config_path;
  double xmax_override = 0.0;
  std::string out_override;
  double alpha_override = 0.0;
  bool quiet = false;

  app.add_option("command", command, "one of: gen diag mobius meanvalue zeta perron equiv convert")
      ->required();
  auto* opt_config =
      app.add_option("--config", config_path, "JSON config file");
  auto* opt_xmax =
      app.add_option("--xmax", xmax_override, "override x_max from the config");
  auto* opt_out =
      app.add_option("--out", out_override, "override the CSV output path");
  auto* opt_alpha = app.add_option("--alpha", alpha_override,
                                   "override alpha with a fixed value");
  app.add_flag("--quiet", quiet, "suppress the summary line");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    beurling::RunConfig config;
    if (opt_config->count() > 0) config = beurling::parse_config(read_file(config_path));
    if (opt_xmax->count() > 0) {
      if (!(xmax_override >= 2.0)) {
        throw beurling::ConfigError("--xmax must be >= 2");
      }
      config.x_max = xmax_override;
    }
    if (opt_out->count() > 0) config.output_path = out_override;
    if (opt_alpha->count() > 0) {
      config.alpha = alpha_override;
      config.alpha_is_grid = false;
    }
    return beurling::run_command(command, config, quiet);
  } catch (const beurling::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
