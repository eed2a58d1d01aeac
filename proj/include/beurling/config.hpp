#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "beurling/arithmetic.hpp"
#include "beurling/system.hpp"

namespace beurling {

// Multiplicative function description from the config file: a named preset
// (with a phase for "twist", a value for "constant", per-prime values for
// "completely_multiplicative") or an explicit prime-power value table keyed
// by "k,nu" strings.
struct FunctionSpec {
  std::string kind = "preset";  // "preset" or "table"
  std::string name = "unity";
  double alpha = 0.0;
  Complex constant_value{1.0, 0.0};
  std::vector<Complex> prime_values;
  std::map<std::pair<std::uint32_t, std::uint32_t>, Complex> table_values;
};

struct GridSpec {
  int points = 16;
  bool log_scale = true;
};

// Parameters for the contour command; required only there.
struct ContourConfig {
  bool present = false;
  double x = 0.0;
  double T = 0.0;
  double step = 0.0;
};

struct ConvertConfig {
  std::string direction = "from_f";  // or "from_g"
  int nu_max = 8;
};

// One batch run: a prime system, a multiplicative function, the range, and
// per-command knobs. Flags override individual fields after parsing.
struct RunConfig {
  SystemSpec system{SystemKind::classical, 0.0, {}};  // limit 0 = use x_max
  FunctionSpec function;
  double x_max = 1000.0;
  GridSpec grid;
  bool alpha_is_grid = false;
  double alpha = 0.0;
  double alpha_min = -2.0;
  double alpha_max = 2.0;
  double alpha_step = 0.25;
  std::vector<double> sigma_list{2.0, 1.5, 1.1, 1.01};
  std::vector<double> t_list{0.0};
  std::optional<double> a;  // candidate density; measured when absent
  Complex c{0.0, 0.0};
  std::string output_path = "out.csv";
  std::optional<std::string> cache_dir;
  EnumerationCaps caps;
  ContourConfig contour;
  ConvertConfig convert;
};

// Parses and validates a JSON config document. Unknown keys anywhere in the
// document are rejected; all violations throw ConfigError naming the field.
RunConfig parse_config(const std::string& text);

// The function the config describes.
PrimePowerFunction build_function(const FunctionSpec& spec);

// Evaluation grid over (1, x_max]: log scale uses x_max^{j/points} for
// j = 1..points, linear scale uses x_max*j/points.
std::vector<double> make_x_grid(const RunConfig& config);

// Materialized alpha search grid [alpha_min, alpha_max] in steps alpha_step.
std::vector<double> make_alpha_grid(const RunConfig& config);

}  // namespace beurling
