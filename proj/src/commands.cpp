#include "beurling/commands.hpp"

#include <cmath>
#include <iostream>
#include <sstream>

#include "beurling/bell.hpp"
#include "beurling/cache.hpp"
#include "beurling/counting.hpp"
#include "beurling/csv.hpp"
#include "beurling/errors.hpp"
#include "beurling/meanvalue.hpp"
#include "beurling/transforms.hpp"

namespace beurling {

namespace {

GeneralizedPrimeSystem make_system(const RunConfig& config) {
  SystemSpec spec = config.system;
  // A sieve or li-spaced system without an explicit limit covers the range.
  if (spec.kind != SystemKind::explicit_list && spec.limit <= 0.0) {
    spec.limit = config.x_max;
  }
  return build_system(spec);
}

IntegerTable make_table(const RunConfig& config,
                        const GeneralizedPrimeSystem& system) {
  return load_or_build(system, config.x_max, config.caps, config.cache_dir);
}

const char* flag(bool b) { return b ? "1" : "0"; }

const char* verdict_name(CriterionVerdict v) {
  switch (v) {
    case CriterionVerdict::converges: return "converges";
    case CriterionVerdict::diverges: return "diverges";
    default: return "inconclusive";
  }
}

std::string format_complex_list(const std::vector<Complex>& values) {
  bool all_real = true;
  for (const Complex& v : values) all_real = all_real && v.imag() == 0.0;
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out << ", ";
    if (all_real) {
      out << csv_double(values[i].real());
    } else {
      out << csv_double(values[i].real()) << (values[i].imag() < 0 ? "-" : "+")
          << csv_double(std::abs(values[i].imag())) << 'i';
    }
  }
  out << ')';
  return out.str();
}

void cmd_gen(const RunConfig& config, bool quiet) {
  GeneralizedPrimeSystem system = make_system(config);
  IntegerTable table = make_table(config, system);
  write_table_csv(table, config.output_path);
  if (!quiet) {
    std::cout << "N(" << csv_double(config.x_max) << ") = " << table.size()
              << ", a_hat = " << csv_double(table.density_estimate()) << '\n';
  }
}

void cmd_diag(const RunConfig& config, bool quiet) {
  GeneralizedPrimeSystem system = make_system(config);
  IntegerTable table = make_table(config, system);
  DiagnosticsReport report = diagnostics(system, table, make_x_grid(config));
  CsvFile out(config.output_path);
  out.line("x,N,N_over_x,psi,psi_over_x,mertens_dev,log_density_ratio");
  for (const auto& r : report.rows) {
    out.row({csv_double(r.x), std::to_string(r.N), csv_double(r.N_over_x),
             csv_double(r.psi), csv_double(r.psi_over_x),
             csv_double(r.mertens_dev), csv_double(r.log_density_ratio)});
  }
  if (!report.positive_density) {
    std::cerr << "warning: density hypothesis fails over the top decade "
                 "(relative deviation above 0.1)\n";
  }
  if (!report.chebyshev_bounded) {
    std::cerr << "warning: Chebyshev bound fails (psi/x above 5)\n";
  }
  if (!report.log_density_bounded) {
    std::cerr << "warning: logarithmic density ratio outside [0.2, 5]\n";
  }
  if (!quiet) {
    std::cout << "a = " << csv_double(report.density_estimate)
              << ", density_ok=" << flag(report.positive_density)
              << " chebyshev_ok=" << flag(report.chebyshev_bounded)
              << " log_density_ok=" << flag(report.log_density_bounded)
              << '\n';
  }
}

void cmd_mobius(const RunConfig& config, bool quiet) {
  GeneralizedPrimeSystem system = make_system(config);
  IntegerTable table = make_table(config, system);
  MeasureValues mu = mobius(table);
  CsvFile out(config.output_path);
  out.line("value,re_weight,im_weight");
  for (std::size_t i = 0; i < table.size(); ++i) {
    out.row({csv_double(table.entries[i].value),
             csv_double(mu.weights[i].real()),
             csv_double(mu.weights[i].imag())});
  }
  Complex M = measure_sum(mu, config.x_max);
  if (!quiet) {
    std::cout << "M(" << csv_double(config.x_max)
              << ")/x = " << csv_double(M.real() / config.x_max) << '\n';
  }
}

void cmd_meanvalue(const RunConfig& config, bool quiet) {
  GeneralizedPrimeSystem system = make_system(config);
  IntegerTable table = make_table(config, system);
  PrimePowerFunction f = build_function(config.function);
  MultiplicativePair pair = pair_from_f(f, system, config.x_max);
  double alpha = config.alpha;
  if (config.alpha_is_grid) {
    AlphaSearch search =
        find_alpha(pair.g, system, make_alpha_grid(config), config.x_max);
    alpha = search.best_alpha;
  }
  std::vector<double> x_grid = make_x_grid(config);
  std::vector<CompareRow> rows = compare(pair, table, alpha, x_grid);
  CriterionResult crit = criterion(pair.g, alpha, system, x_grid);
  CsvFile out(config.output_path);
  out.line("x,re_G_over_x,im_G_over_x,re_pred,im_pred,abs_err");
  for (const auto& r : rows) {
    out.row({csv_double(r.x), csv_double(r.G_over_x.real()),
             csv_double(r.G_over_x.imag()), csv_double(r.pred_over_x.real()),
             csv_double(r.pred_over_x.imag()), csv_double(r.abs_err)});
  }
  if (crit.negative_summands) {
    std::cerr << "warning: |g| exceeds 1 somewhere; criterion summands are "
                 "not all nonnegative and the mean-value hypotheses fail\n";
  }
  if (!quiet) {
    std::cout << "alpha = " << csv_double(alpha)
              << ", criterion " << verdict_name(crit.verdict)
              << ", |G/x - pred| = " << csv_double(rows.back().abs_err)
              << " at x = " << csv_double(rows.back().x) << '\n';
  }
}

void cmd_zeta(const RunConfig& config, bool quiet) {
  GeneralizedPrimeSystem system = make_system(config);
  IntegerTable table = make_table(config, system);
  double a = config.a ? *config.a : table.density_estimate();
  std::vector<ResidueScanRow> rows =
      zeta_residue_scan(table, config.sigma_list, a, config.t_list);
  CsvFile out(config.output_path);
  out.line("sigma,t,re,im,tail_bound");
  double worst = 0.0;
  bool tail_ok = true;
  for (const auto& r : rows) {
    out.row({csv_double(r.sigma), csv_double(r.t), csv_double(r.value.real()),
             csv_double(r.value.imag()), csv_double(r.tail_bound)});
    worst = std::max(worst, r.scaled);
  }
  {
    MellinEvaluation probe =
        zeta(table, Complex(config.sigma_list.front(), 0.0), table.x_max);
    tail_ok = probe.tail_valid;
  }
  if (!tail_ok) {
    std::cerr << "warning: density unstable over the top decade; tail "
                 "estimates are unreliable\n";
  }
  if (!quiet) {
    std::cout << "a = " << csv_double(a)
              << ", max scaled residual = " << csv_double(worst) << '\n';
  }
}

void cmd_perron(const RunConfig& config, bool quiet) {
  if (!config.contour.present) {
    throw ConfigError("perron command needs a \"perron\" block (x, T, step)");
  }
  GeneralizedPrimeSystem system = make_system(config);
  IntegerTable table = make_table(config, system);
  PrimePowerFunction f = build_function(config.function);
  ContourSpec spec{config.contour.x, config.contour.T, config.contour.step};
  PerronResult r = perron_check(f, table, spec);
  CsvFile out(config.output_path);
  out.line("x,re_contour,im_contour,re_direct,im_direct,rel_err");
  out.row({csv_double(r.x), csv_double(r.contour.real()),
           csv_double(r.contour.imag()), csv_double(r.direct.real()),
           csv_double(r.direct.imag()), csv_double(r.rel_err)});
  if (!quiet) {
    std::cout << "rel_err = " << csv_double(r.rel_err)
              << ", halving_err = " << csv_double(r.halving_err) << '\n';
  }
}

void cmd_equiv(const RunConfig& config, bool quiet) {
  if (config.alpha_is_grid) {
    throw ConfigError("equiv needs a numeric alpha, not a search grid");
  }
  GeneralizedPrimeSystem system = make_system(config);
  IntegerTable table = make_table(config, system);
  PrimePowerFunction f = build_function(config.function);
  std::vector<EquivalenceRow> rows =
      equivalence_report(f, table, config.c, config.alpha, make_x_grid(config));
  CsvFile out(config.output_path);
  out.line("x,lhs_resid,rhs_resid");
  for (const auto& r : rows) {
    out.row({csv_double(r.x), csv_double(r.lhs_resid),
             csv_double(r.rhs_resid)});
  }
  if (!quiet) {
    const auto& last = rows.back();
    std::cout << "at x = " << csv_double(last.x)
              << ": lhs = " << csv_double(last.lhs_resid)
              << ", rhs = " << csv_double(last.rhs_resid) << '\n';
  }
}

void cmd_convert(const RunConfig& config, bool quiet) {
  GeneralizedPrimeSystem system = make_system(config);
  PrimePowerFunction fn = build_function(config.function);
  int nu_max = config.convert.nu_max;
  std::vector<Complex> given(nu_max);
  for (int nu = 1; nu <= nu_max; ++nu) {
    given[nu - 1] = fn.base_value(system, 0, static_cast<std::uint32_t>(nu));
  }
  bool from_f = config.convert.direction == "from_f";
  std::vector<Complex> f_vals = from_f ? given : bell_f_from_g(given);
  std::vector<Complex> g_vals = from_f ? bell_g_from_f(given) : given;
  CsvFile out(config.output_path);
  out.line("nu,re_f,im_f,re_g,im_g");
  for (int nu = 1; nu <= nu_max; ++nu) {
    out.row({std::to_string(nu), csv_double(f_vals[nu - 1].real()),
             csv_double(f_vals[nu - 1].imag()),
             csv_double(g_vals[nu - 1].real()),
             csv_double(g_vals[nu - 1].imag())});
  }
  if (!quiet) {
    std::cout << (from_f ? "g" : "f") << "(p^1..p^" << nu_max
              << ") = " << format_complex_list(from_f ? g_vals : f_vals)
              << '\n';
  }
}

}  // namespace

int run_command(const std::string& name, const RunConfig& config, bool quiet) {
  try {
    if (name == "gen") {
      cmd_gen(config, quiet);
    } else if (name == "diag") {
      cmd_diag(config, quiet);
    } else if (name == "mobius") {
      cmd_mobius(config, quiet);
    } else if (name == "meanvalue") {
      cmd_meanvalue(config, quiet);
    } else if (name == "zeta") {
      cmd_zeta(config, quiet);
    } else if (name == "perron") {
      cmd_perron(config, quiet);
    } else if (name == "equiv") {
      cmd_equiv(config, quiet);
    } else if (name == "convert") {
      cmd_convert(config, quiet);
    } else {
      throw ConfigError("unknown command '" + name + "'");
    }
    return 0;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const NumericalError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const BeurlingError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace beurling
