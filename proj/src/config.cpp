#include "beurling/config.hpp"

#include <charconv>
#include <cmath>
#include <set>

#include "json.hpp"

#include "beurling/errors.hpp"

namespace beurling {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& context, const std::string& what) {
  throw ConfigError("config: " + context + ": " + what);
}

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& context) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!allowed.count(it.key())) fail(context, "unknown key '" + it.key() + "'");
  }
}

double get_number(const json& obj, const char* key, const std::string& context) {
  const json& v = obj.at(key);
  if (!v.is_number()) fail(context, std::string(key) + " must be a number");
  return v.get<double>();
}

Complex get_complex(const json& v, const std::string& context) {
  if (v.is_number()) return Complex(v.get<double>(), 0.0);
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return Complex(v[0].get<double>(), v[1].get<double>());
  }
  fail(context, "expected a number or [re, im]");
}

SystemSpec parse_system(const json& obj) {
  reject_unknown_keys(obj, {"kind", "limit", "primes"}, "system");
  SystemSpec spec;
  std::string kind = obj.value("kind", std::string("classical"));
  if (kind == "classical") {
    spec.kind = SystemKind::classical;
  } else if (kind == "explicit") {
    spec.kind = SystemKind::explicit_list;
  } else if (kind == "li_spaced") {
    spec.kind = SystemKind::li_spaced;
  } else {
    fail("system", "unknown kind '" + kind + "'");
  }
  if (obj.contains("limit")) spec.limit = get_number(obj, "limit", "system");
  if (obj.contains("primes")) {
    const json& arr = obj.at("primes");
    if (!arr.is_array()) fail("system", "primes must be an array");
    for (const json& p : arr) {
      if (!p.is_number()) fail("system", "primes must be numbers");
      spec.primes.push_back(p.get<double>());
    }
  }
  if (spec.kind == SystemKind::explicit_list) {
    if (spec.primes.empty()) fail("system", "explicit system needs primes");
    for (std::size_t i = 0; i < spec.primes.size(); ++i) {
      if (!(spec.primes[i] > 1.0)) fail("system", "primes must exceed 1");
      if (i > 0 && spec.primes[i] < spec.primes[i - 1]) {
        fail("system", "primes must be non-decreasing");
      }
    }
  } else if (!spec.primes.empty()) {
    fail("system", "primes are only valid for kind 'explicit'");
  }
  return spec;
}

FunctionSpec parse_function(const json& obj) {
  reject_unknown_keys(obj, {"kind", "name", "alpha", "value", "prime_values",
                            "values"},
                      "function");
  FunctionSpec spec;
  spec.kind = obj.value("kind", std::string("preset"));
  if (spec.kind == "preset") {
    spec.name = obj.value("name", std::string("unity"));
    static const std::set<std::string> presets = {
        "unity",    "constant",  "moebius",
        "squarefree", "nu_alternating", "liouville",
        "twist",    "completely_multiplicative"};
    if (!presets.count(spec.name)) {
      fail("function", "unknown preset '" + spec.name + "'");
    }
    if (obj.contains("alpha")) {
      if (spec.name != "twist") fail("function", "alpha is only for twist");
      spec.alpha = get_number(obj, "alpha", "function");
    }
    if (obj.contains("value")) {
      if (spec.name != "constant") fail("function", "value is only for constant");
      spec.constant_value = get_complex(obj.at("value"), "function.value");
    }
    if (obj.contains("prime_values")) {
      if (spec.name != "completely_multiplicative") {
        fail("function", "prime_values is only for completely_multiplicative");
      }
      for (const json& v : obj.at("prime_values")) {
        spec.prime_values.push_back(get_complex(v, "function.prime_values"));
      }
    }
    if (spec.name == "completely_multiplicative" && spec.prime_values.empty()) {
      fail("function", "completely_multiplicative needs prime_values");
    }
    if (obj.contains("values")) fail("function", "values is only for tables");
  } else if (spec.kind == "table") {
    if (!obj.contains("values") || !obj.at("values").is_object()) {
      fail("function", "table kind needs a values object");
    }
    for (auto it = obj.at("values").begin(); it != obj.at("values").end();
         ++it) {
      const std::string& key = it.key();
      std::size_t comma = key.find(',');
      std::uint32_t k = 0, nu = 0;
      bool ok = comma != std::string::npos;
      if (ok) {
        auto r1 = std::from_chars(key.data(), key.data() + comma, k);
        auto r2 = std::from_chars(key.data() + comma + 1,
                                  key.data() + key.size(), nu);
        ok = r1.ec == std::errc() && r1.ptr == key.data() + comma &&
             r2.ec == std::errc() && r2.ptr == key.data() + key.size() &&
             nu >= 1;
      }
      if (!ok) fail("function.values", "keys must look like \"k,nu\"");
      spec.table_values[{k, nu}] = get_complex(it.value(), "function.values");
    }
    for (const char* stray : {"name", "alpha", "value", "prime_values"}) {
      if (obj.contains(stray)) {
        fail("function", std::string(stray) + " is only for presets");
      }
    }
  } else {
    fail("function", "kind must be 'preset' or 'table'");
  }
  return spec;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config: top level must be an object");
  reject_unknown_keys(doc,
                      {"system", "function", "x_max", "grid", "alpha",
                       "sigma_list", "t_list", "a", "c", "output_path",
                       "cache_dir", "caps", "perron", "convert"},
                      "top level");

  RunConfig config;
  if (doc.contains("system")) config.system = parse_system(doc.at("system"));
  if (doc.contains("function")) {
    config.function = parse_function(doc.at("function"));
  }
  if (doc.contains("x_max")) config.x_max = get_number(doc, "x_max", "top level");
  if (!(config.x_max >= 2.0)) fail("top level", "x_max must be >= 2");

  if (doc.contains("grid")) {
    const json& g = doc.at("grid");
    reject_unknown_keys(g, {"points", "scale"}, "grid");
    if (g.contains("points")) {
      config.grid.points = static_cast<int>(get_number(g, "points", "grid"));
    }
    if (config.grid.points < 2) fail("grid", "points must be >= 2");
    std::string scale = g.value("scale", std::string("log"));
    if (scale == "log") {
      config.grid.log_scale = true;
    } else if (scale == "linear") {
      config.grid.log_scale = false;
    } else {
      fail("grid", "scale must be 'log' or 'linear'");
    }
  }

  if (doc.contains("alpha")) {
    const json& a = doc.at("alpha");
    if (a.is_number()) {
      config.alpha = a.get<double>();
    } else if (a.is_object()) {
      reject_unknown_keys(a, {"min", "max", "step"}, "alpha");
      config.alpha_is_grid = true;
      config.alpha_min = get_number(a, "min", "alpha");
      config.alpha_max = get_number(a, "max", "alpha");
      config.alpha_step = get_number(a, "step", "alpha");
      if (!(config.alpha_step > 0.0) || config.alpha_max < config.alpha_min) {
        fail("alpha", "need min <= max and step > 0");
      }
    } else {
      fail("alpha", "expected a number or {min, max, step}");
    }
  }

  if (doc.contains("sigma_list")) {
    config.sigma_list.clear();
    for (const json& v : doc.at("sigma_list")) {
      if (!v.is_number()) fail("sigma_list", "entries must be numbers");
      config.sigma_list.push_back(v.get<double>());
    }
    if (config.sigma_list.empty()) fail("sigma_list", "must not be empty");
  }
  if (doc.contains("t_list")) {
    config.t_list.clear();
    for (const json& v : doc.at("t_list")) {
      if (!v.is_number()) fail("t_list", "entries must be numbers");
      config.t_list.push_back(v.get<double>());
    }
    if (config.t_list.empty()) fail("t_list", "must not be empty");
  }
  if (doc.contains("a")) config.a = get_number(doc, "a", "top level");
  if (doc.contains("c")) config.c = get_complex(doc.at("c"), "c");
  if (doc.contains("output_path")) {
    if (!doc.at("output_path").is_string()) {
      fail("output_path", "must be a string");
    }
    config.output_path = doc.at("output_path").get<std::string>();
  }
  if (doc.contains("cache_dir")) {
    if (!doc.at("cache_dir").is_string()) fail("cache_dir", "must be a string");
    config.cache_dir = doc.at("cache_dir").get<std::string>();
  }

  if (doc.contains("caps")) {
    const json& caps = doc.at("caps");
    reject_unknown_keys(caps, {"max_entries", "max_memory_estimate"}, "caps");
    if (caps.contains("max_entries")) {
      double v = get_number(caps, "max_entries", "caps");
      if (!(v > 0.0)) fail("caps", "max_entries must be positive");
      config.caps.max_entries = static_cast<std::uint64_t>(v);
    }
    if (caps.contains("max_memory_estimate")) {
      double v = get_number(caps, "max_memory_estimate", "caps");
      if (!(v > 0.0)) fail("caps", "max_memory_estimate must be positive");
      config.caps.max_memory_bytes = static_cast<std::uint64_t>(v);
    }
  }

  if (doc.contains("perron")) {
    const json& p = doc.at("perron");
    reject_unknown_keys(p, {"x", "T", "step"}, "perron");
    config.contour.present = true;
    config.contour.x = get_number(p, "x", "perron");
    config.contour.T = get_number(p, "T", "perron");
    config.contour.step = get_number(p, "step", "perron");
  }

  if (doc.contains("convert")) {
    const json& c = doc.at("convert");
    reject_unknown_keys(c, {"direction", "nu_max"}, "convert");
    config.convert.direction = c.value("direction", std::string("from_f"));
    if (config.convert.direction != "from_f" &&
        config.convert.direction != "from_g") {
      fail("convert", "direction must be 'from_f' or 'from_g'");
    }
    if (c.contains("nu_max")) {
      config.convert.nu_max = static_cast<int>(get_number(c, "nu_max", "convert"));
    }
    if (config.convert.nu_max < 1 || config.convert.nu_max > 64) {
      fail("convert", "nu_max must be in [1, 64]");
    }
  }

  return config;
}

PrimePowerFunction build_function(const FunctionSpec& spec) {
  if (spec.kind == "table") {
    return PrimePowerFunction::from_table(spec.table_values);
  }
  if (spec.name == "unity") return PrimePowerFunction::unity();
  if (spec.name == "constant") {
    return PrimePowerFunction::constant_fn(spec.constant_value);
  }
  if (spec.name == "moebius") return PrimePowerFunction::moebius_fn();
  if (spec.name == "squarefree") return PrimePowerFunction::squarefree_fn();
  if (spec.name == "nu_alternating") {
    return PrimePowerFunction::nu_alternating_fn();
  }
  if (spec.name == "liouville") return PrimePowerFunction::liouville_fn();
  if (spec.name == "twist") return PrimePowerFunction::twist(spec.alpha);
  return PrimePowerFunction::completely_multiplicative_fn(spec.prime_values);
}

std::vector<double> make_x_grid(const RunConfig& config) {
  std::vector<double> grid;
  grid.reserve(config.grid.points);
  for (int j = 1; j <= config.grid.points; ++j) {
    double frac = static_cast<double>(j) / config.grid.points;
    grid.push_back(config.grid.log_scale ? std::pow(config.x_max, frac)
                                         : config.x_max * frac);
  }
  return grid;
}

std::vector<double> make_alpha_grid(const RunConfig& config) {
  std::vector<double> grid;
  for (int j = 0;; ++j) {
    double a = config.alpha_min + j * config.alpha_step;
    if (a > config.alpha_max + 1e-9 * config.alpha_step) break;
    grid.push_back(a);
  }
  return grid;
}

}  // namespace beurling
