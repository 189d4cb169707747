#include "distembed/cli/app.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "distembed/cli/experiments.hpp"
#include "distembed/cli/json_io.hpp"
#include "distembed/embedding.hpp"
#include "distembed/errors.hpp"
#include "distembed/spectral.hpp"

namespace distembed::cli {

namespace {

struct Arguments {
  std::string kernel;
  std::vector<std::string> measures;
  std::string spectral;
  std::string point;
  std::string order;
  std::string experiment;
  std::string params;
  std::string out;
  std::uint64_t seed = 0;
  std::optional<double> tol;
};

void print_complex(std::ostream& out, Complex v) {
  out << format_number(v.real());
  if (v.imag() != 0.0) out << ' ' << format_number(v.imag());
  out << '\n';
}

MultiIndex order_from_argument(const std::string& arg, std::size_t dim) {
  if (arg.empty()) return MultiIndex::zero(dim);
  const Json j = load_json_argument(arg.front() == '[' ? arg : "[" + arg + "]");
  std::vector<unsigned> q;
  for (const auto& e : j) {
    if (!e.is_number_unsigned()) throw SchemaError("--order: entries must be nonnegative integers");
    q.push_back(e.get<unsigned>());
  }
  if (q.size() != dim) throw SchemaError("--order: length differs from the measure dimension");
  return MultiIndex(std::move(q));
}

Point point_from_argument(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t");
  if (first != std::string::npos && arg[first] == '[') return point_from_json(load_json_argument(arg));
  try {
    return point_from_json(Json::parse(arg));
  } catch (const Json::exception&) {
    throw SchemaError("--point: expected a number or a JSON array");
  }
}

int run_experiment_command(const Arguments& a, std::ostream& out, std::ostream& err) {
  ExperimentOptions options;
  options.seed = a.seed;
  options.tolerance = a.tol;
  if (!a.params.empty()) options.params = load_json_argument(a.params);
  const auto report = run_experiment(a.experiment, options);
  if (!a.out.empty()) {
    std::ofstream csv(a.out, std::ios::binary);
    if (!csv) {
      err << "distembed: cannot write '" << a.out << "'\n";
      return kExitUsage;
    }
    csv << report.csv();
  }
  out << report.verdict().dump(2) << '\n';
  return report.passed() ? kExitOk : kExitExperimentFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kernel embeddings of generalized measures", "distembed"};
  app.require_subcommand(1);
  Arguments a;

  auto* norm_cmd = app.add_subcommand("norm", "RKHS norm of a measure");
  norm_cmd->add_option("--kernel", a.kernel, "Kernel JSON (file or inline)")->required();
  norm_cmd->add_option("--measure", a.measures, "Measure JSON (file or inline)")->required()->expected(1);

  auto* dist_cmd = app.add_subcommand("distance", "Kernel distance between two measures");
  dist_cmd->add_option("--kernel", a.kernel, "Kernel JSON (file or inline)")->required();
  dist_cmd->add_option("--measure", a.measures, "Measure JSON, given twice")->required()->expected(2);

  auto* eval_cmd = app.add_subcommand("embed-eval", "Evaluate the embedding (or a derivative) at a point");
  eval_cmd->add_option("--kernel", a.kernel, "Kernel JSON (file or inline)")->required();
  eval_cmd->add_option("--measure", a.measures, "Measure JSON (file or inline)")->required()->expected(1);
  eval_cmd->add_option("--point", a.point, "Evaluation point: number or JSON array")->required();
  eval_cmd->add_option("--order", a.order, "Derivative multi-index in y, e.g. [1] (default zero)");

  auto* spec_cmd = app.add_subcommand("spectral-norm", "Norm computed on the Fourier side");
  spec_cmd->add_option("--spectral", a.spectral, "Spectral measure JSON (file or inline)")->required();
  spec_cmd->add_option("--measure", a.measures, "Measure JSON (file or inline)")->required()->expected(1);

  auto* exp_cmd = app.add_subcommand("experiment", "Run a named experiment");
  exp_cmd->add_option("name", a.experiment, "Experiment name")
      ->required()
      ->check(CLI::IsMember(experiment_names()));
  exp_cmd->add_option("--params", a.params, "Experiment parameters as a JSON object (file or inline)");
  exp_cmd->add_option("--seed", a.seed, "Random seed");
  exp_cmd->add_option("--tol", a.tol, "Override the primary tolerance");
  exp_cmd->add_option("--out", a.out, "Write the report rows as CSV to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*exp_cmd) return run_experiment_command(a, out, err);
    if (*spec_cmd) {
      const auto lambda = spectral_from_json(load_json_argument(a.spectral));
      const auto d = measure_from_json(load_json_argument(a.measures[0]));
      out << format_number(std::sqrt(spectral_norm_squared(lambda, d))) << '\n';
      return kExitOk;
    }
    const Kernel k = kernel_from_json(load_json_argument(a.kernel));
    std::vector<GeneralizedMeasure> ms;
    for (const auto& m : a.measures) ms.push_back(measure_from_json(load_json_argument(m)));
    if (*norm_cmd) {
      out << format_number(norm(k, ms[0])) << '\n';
    } else if (*dist_cmd) {
      out << format_number(distance(k, ms[0], ms[1])) << '\n';
    } else {
      const Point y = point_from_argument(a.point);
      const MultiIndex q = order_from_argument(a.order, ms[0].dimension());
      print_complex(out, embed_eval_derivative(k, ms[0], q, y));
    }
    return kExitOk;
  } catch (const SchemaError& e) {
    err << "distembed: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Json::exception& e) {
    err << "distembed: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    err << "distembed: invalid input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnsupportedOrder& e) {
    err << "distembed: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnsupportedConfiguration& e) {
    err << "distembed: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NumericalInconsistency& e) {
    err << "distembed: numerical error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const QuadratureBudgetExceeded& e) {
    err << "distembed: numerical error: " << e.what() << '\n';
    return kExitNumerical;
  }
}

}  // namespace distembed::cli
