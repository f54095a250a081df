#include "cli.hpp"

#include "movnorm/errors.hpp"
#include "movnorm/format.hpp"
#include "movnorm/harness.hpp"
#include "movnorm/matrix_json.hpp"
#include "movnorm/moving_norm.hpp"
#include "movnorm/operator_classes.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace movnorm::cli {

namespace {

const char* boolstr(bool b) { return b ? "true" : "false"; }

// Writes to `path`, or to `out` when the path is empty.
bool emit(const std::string& path, const std::string& text, std::ostream& out, std::ostream& err) {
  if (path.empty()) {
    out << text;
    return true;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    err << "error: cannot write " << path << "\n";
    return false;
  }
  f << text;
  return static_cast<bool>(f);
}

std::string curve_csv(const MovingNormCurve& c) {
  std::string s = "lambda,m,am\n";
  for (std::size_t i = 0; i < c.lambdas.size(); ++i) {
    s += format_double(c.lambdas[i]) + "," + format_double(c.m_values[i]) + "," + format_double(c.am_values[i]) + "\n";
  }
  return s;
}

nlohmann::json horizon_json(const HorizonResult& h) {
  return {{"value", h.value},
          {"bracket_lo", h.bracket_lo},
          {"bracket_hi", h.bracket_hi},
          {"flat_at_one", h.flat_at_one},
          {"iterations", h.iterations}};
}

nlohmann::json class_json(const ClassReport& r) {
  nlohmann::json j = {{"ne", r.ne},
                      {"monotone", r.monotone},
                      {"fne", r.fne},
                      {"fne_via_horizon", r.fne_via_horizon},
                      {"norm", r.norm},
                      {"min_sym_eig", r.min_sym_eig},
                      {"fne_gap", r.fne_gap}};
  if (r.ne) j["horizon"] = r.horizon;
  return j;
}

std::string summary_table(const std::vector<TheoremReport>& reports) {
  std::ostringstream s;
  for (const TheoremReport& r : reports) {
    s << (r.failures == 0 ? "PASS " : "FAIL ") << std::left << std::setw(30) << r.check_id
      << " trials=" << r.trials << " failures=" << r.failures << " skipped=" << r.skipped
      << " worst=" << format_double(r.worst_violation) << " tol=" << format_double(r.tolerance) << "\n";
  }
  return s.str();
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Moving norms, augmented moving norms and horizons of complex matrices"};
  app.require_subcommand(1);

  std::string matrix_file;
  std::string out_path;
  double lambda_max = 1.0;
  int steps = 101;
  bool as_json = false;

  auto* curve = app.add_subcommand("curve", "Sample lambda, m(lambda), am(lambda) as CSV");
  curve->add_option("matrix_file", matrix_file, "Matrix JSON file")->required();
  curve->add_option("--lambda-max", lambda_max, "Right end of the lambda grid")->capture_default_str();
  curve->add_option("--steps", steps, "Number of grid points, including both ends")->capture_default_str();
  curve->add_option("--out", out_path, "CSV output path (default: stdout)");

  auto* hor = app.add_subcommand("horizon", "Compute the horizon of a nonexpansive matrix");
  hor->add_option("matrix_file", matrix_file, "Matrix JSON file")->required();
  hor->add_flag("--json", as_json, "Print the result as JSON");

  auto* cls = app.add_subcommand("classify", "Report NE / monotone / FNE classification");
  cls->add_option("matrix_file", matrix_file, "Matrix JSON file")->required();
  cls->add_flag("--json", as_json, "Print the result as JSON");

  VerifyConfig config;
  std::uint64_t seed = 0;
  auto* ver = app.add_subcommand("verify", "Run the theorem checks on random ensembles");
  ver->add_option("--dims", config.dims, "Matrix dimensions")->delimiter(',')->capture_default_str();
  ver->add_option("--trials", config.trials, "Trials per check and dimension")->capture_default_str();
  ver->add_option("--seed", seed, "Run seed")->envname("MOVNORM_SEED")->capture_default_str();
  ver->add_option("--out", out_path, "Report JSON path (default: stdout)");
  ver->add_option("--threads", config.threads, "Worker threads (0: all cores)")->capture_default_str();
  ver->add_option("--checks", config.checks, "Only run these check ids")->delimiter(',');

  std::string check_id;
  std::size_t replay_dim = 2;
  std::uint64_t replay_seed = 0;
  auto* rep = app.add_subcommand("replay", "Re-run one trial from a report's worst_seed");
  rep->add_option("check_id", check_id, "Check id")->required();
  rep->add_option("--dim", replay_dim, "worst_dim from the report")->required();
  rep->add_option("--trial-seed", replay_seed, "worst_seed from the report")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitParse;
  }

  try {
    if (*curve) {
      const Matrix x = read_matrix_file(matrix_file);
      const auto c = sample_curve(x, lambda_max, steps);
      return emit(out_path, curve_csv(c), out, err) ? kExitOk : kExitParse;
    }
    if (*hor) {
      const Matrix x = read_matrix_file(matrix_file);
      const HorizonResult h = horizon(x);
      if (as_json) {
        out << horizon_json(h).dump() << "\n";
      } else {
        out << "value: " << format_double(h.value) << "\n"
            << "bracket: [" << format_double(h.bracket_lo) << ", " << format_double(h.bracket_hi) << "]\n"
            << "flat_at_one: " << boolstr(h.flat_at_one) << "\n"
            << "iterations: " << h.iterations << "\n";
      }
      return kExitOk;
    }
    if (*cls) {
      const Matrix x = read_matrix_file(matrix_file);
      const ClassReport r = classify(x);
      if (as_json) {
        out << class_json(r).dump() << "\n";
      } else {
        out << "ne: " << boolstr(r.ne) << "\n"
            << "monotone: " << boolstr(r.monotone) << "\n"
            << "fne: " << boolstr(r.fne) << "\n"
            << "fne_via_horizon: " << boolstr(r.fne_via_horizon) << "\n"
            << "norm: " << format_double(r.norm) << "\n"
            << "min_sym_eig: " << format_double(r.min_sym_eig) << "\n"
            << "fne_gap: " << format_double(r.fne_gap) << "\n";
        if (r.ne) out << "horizon: " << format_double(r.horizon) << "\n";
      }
      return kExitOk;
    }
    if (*ver) {
      config.seed = seed;
      const auto reports = run_all(config);
      const std::string json = reports_to_json(reports).dump(2) + "\n";
      if (!emit(out_path, json, out, err)) return kExitParse;
      (out_path.empty() ? err : out) << summary_table(reports);
      return any_failures(reports) ? kExitCheckFailed : kExitOk;
    }
    if (*rep) {
      const TrialResult r = replay_trial(check_id, replay_dim, replay_seed, ElementSource::ensembles());
      if (!r.evaluated) {
        out << "not evaluated (skipped=" << r.skipped << ")\n";
      } else {
        out << "violation: " << format_double(r.violation) << "\n";
      }
      return kExitOk;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const DimensionMismatch& e) {
    err << "dimension error: " << e.what() << "\n";
    return kExitDimension;
  } catch (const NotNonexpansive& e) {
    err << "not nonexpansive: " << e.what() << "\n";
    return kExitNotNonexpansive;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitParse;
}

} // namespace movnorm::cli
