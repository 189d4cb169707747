#include "distembed/cli/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

#include "distembed/cpd.hpp"
#include "distembed/embedding.hpp"
#include "distembed/errors.hpp"
#include "distembed/spectral.hpp"

namespace distembed::cli {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 15);
  return std::string(buf, res.ptr);
}

namespace {

std::string format_cell(const Cell& c) {
  struct Visitor {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(double v) const { return format_number(v); }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(const std::string& s) const {
      if (s.find_first_of(",\"\n") == std::string::npos) return s;
      std::string out = "\"";
      for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
      }
      return out + "\"";
    }
  };
  return std::visit(Visitor{}, c);
}

Check make_check(std::string name, double value, std::string relation, double threshold) {
  bool ok = false;
  if (relation == "<=") ok = value <= threshold;
  else if (relation == ">=") ok = value >= threshold;
  else if (relation == "<") ok = value < threshold;
  else if (relation == ">") ok = value > threshold;
  else if (relation == "==") ok = value == threshold;
  return Check{std::move(name), value, std::move(relation), threshold, ok};
}

/// Reads experiment parameters with defaults, records the resolved values and
/// rejects unknown keys.
class ParamReader {
 public:
  ParamReader(const Json& params, std::string experiment)
      : params_(params), experiment_(std::move(experiment)) {
    if (!params_.is_object()) throw SchemaError(experiment_ + ": --params must be a JSON object");
  }

  double number(const char* key, double fallback, double lo = -std::numeric_limits<double>::max(),
                double hi = std::numeric_limits<double>::max()) {
    double v = fallback;
    if (params_.contains(key)) {
      const auto& j = params_.at(key);
      if (!j.is_number()) throw SchemaError(experiment_ + ": '" + key + "' must be a number");
      v = j.get<double>();
    }
    if (!(v >= lo && v <= hi)) {
      throw SchemaError(experiment_ + ": '" + key + "' out of range [" + format_number(lo) + ", " +
                        format_number(hi) + "]");
    }
    used_.insert(key);
    resolved_[key] = v;
    return v;
  }

  std::size_t count(const char* key, std::size_t fallback, std::size_t lo, std::size_t hi) {
    std::size_t v = fallback;
    if (params_.contains(key)) {
      const auto& j = params_.at(key);
      if (!j.is_number_integer() || j.get<std::int64_t>() < 0) {
        throw SchemaError(experiment_ + ": '" + key + "' must be a nonnegative integer");
      }
      v = j.get<std::size_t>();
    }
    if (v < lo || v > hi) {
      throw SchemaError(experiment_ + ": '" + key + "' out of range [" + std::to_string(lo) + ", " +
                        std::to_string(hi) + "]");
    }
    used_.insert(key);
    resolved_[key] = v;
    return v;
  }

  bool flag(const char* key, bool fallback) {
    bool v = fallback;
    if (params_.contains(key)) {
      if (!params_.at(key).is_boolean()) throw SchemaError(experiment_ + ": '" + key + "' must be a boolean");
      v = params_.at(key).get<bool>();
    }
    used_.insert(key);
    resolved_[key] = v;
    return v;
  }

  Json raw(const char* key, Json fallback) {
    used_.insert(key);
    Json v = params_.contains(key) ? params_.at(key) : std::move(fallback);
    resolved_[key] = v;
    return v;
  }

  Json finish() {
    for (const auto& [key, _] : params_.items()) {
      if (!used_.count(key)) throw SchemaError(experiment_ + ": unknown parameter '" + key + "'");
    }
    return resolved_;
  }

 private:
  const Json& params_;
  std::string experiment_;
  std::set<std::string> used_;
  Json resolved_ = Json::object();
};

double tolerance_or(const ExperimentOptions& o, double fallback) {
  if (!o.tolerance) return fallback;
  if (!(*o.tolerance > 0.0) || !std::isfinite(*o.tolerance)) {
    throw SchemaError("--tol must be a positive finite number");
  }
  return *o.tolerance;
}

// Unit-variance complex weights, random derivative orders, locations in
// [-half_width, half_width]^d.
GeneralizedMeasure random_measure(std::mt19937_64& rng, std::size_t dim, std::size_t max_atoms,
                                  unsigned max_order, double half_width) {
  std::uniform_int_distribution<std::size_t> count(1, max_atoms);
  std::uniform_int_distribution<unsigned> order(0, max_order);
  std::uniform_int_distribution<std::size_t> axis(0, dim - 1);
  std::uniform_real_distribution<double> loc(-half_width, half_width);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Atom> atoms;
  const std::size_t n = count(rng);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<unsigned> p(dim, 0);
    const unsigned total = order(rng);
    for (unsigned t = 0; t < total; ++t) ++p[axis(rng)];
    Point x(dim);
    for (auto& v : x) v = loc(rng);
    const double re = gauss(rng);
    const double im = gauss(rng);
    atoms.push_back(Atom{Complex(re, im), MultiIndex(std::move(p)), std::move(x)});
  }
  return GeneralizedMeasure(dim, std::move(atoms));
}

// Real zero-mass order-0 measure on [lo, hi]; the last weight absorbs the sum.
GeneralizedMeasure random_zero_mass(std::mt19937_64& rng, std::size_t atoms, double lo, double hi) {
  std::uniform_real_distribution<double> loc(lo, hi);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Atom> out;
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < atoms; ++i) {
    const double w = gauss(rng);
    sum += w;
    out.push_back(Atom{w, MultiIndex{0}, Point{loc(rng)}});
  }
  out.push_back(Atom{-sum, MultiIndex{0}, Point{loc(rng)}});
  return GeneralizedMeasure(1, std::move(out));
}

std::int64_t as_int(std::size_t v) { return static_cast<std::int64_t>(v); }

ExperimentReport nonmetrization(const ExperimentOptions& o) {
  ParamReader in(o.params, "nonmetrization");
  const double sigma = in.number("sigma", 1.0, 1e-6, 1e6);
  const std::size_t n_max = in.count("n_max", 64, 2, 256);
  const std::size_t min_nodes = in.count("min_nodes", 64, 2, 1u << 16);
  const std::size_t nodes_per_unit = in.count("nodes_per_unit", 16, 1, 1024);
  const std::size_t ratio_from = in.count("ratio_from", 16, 1, 1u << 16);
  const double ratio_lo = in.number("ratio_lo", 0.45);
  const double ratio_hi = in.number("ratio_hi", 0.55);
  const double doubling_tol = tolerance_or(o, 0.01);
  if (2 * ratio_from > n_max) throw SchemaError("nonmetrization: need n_max >= 2 * ratio_from");

  ExperimentReport r;
  r.name = "nonmetrization";
  r.metadata["params"] = in.finish();
  r.metadata["params"]["doubling_tolerance"] = doubling_tol;
  r.metadata["kernel"] = {{"family", "gaussian"}, {"params", {{"dim", 1}, {"sigma", sigma}}}};
  const Kernel k = kernels::gaussian(1, sigma);

  std::vector<double> norm_sq(n_max + 1);
  double worst_change = 0.0;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const std::size_t nodes = std::max(min_nodes, nodes_per_unit * n);
    const Box box{Interval{0.0, static_cast<double>(n)}};
    norm_sq[n] = norm_squared(k, discretize_uniform(box, nodes, true));
    const double doubled = norm_squared(k, discretize_uniform(box, 2 * nodes, true));
    const double change = std::abs(doubled - norm_sq[n]) / norm_sq[n];
    worst_change = std::max(worst_change, change);
    r.rows.push_back({{{"n", as_int(n)}, {"nodes", as_int(nodes)}},
                      {{"norm_sq", norm_sq[n]},
                       {"norm_sq_doubled_nodes", doubled},
                       {"node_doubling_change", change}}});
  }
  std::size_t increases = 0;
  double ratio_min = std::numeric_limits<double>::infinity();
  double ratio_max = -std::numeric_limits<double>::infinity();
  for (std::size_t n = 1; n <= n_max; ++n) {
    if (n + 1 <= n_max && !(norm_sq[n + 1] < norm_sq[n])) ++increases;
    Cell ratio;
    if (2 * n <= n_max) {
      const double q = norm_sq[2 * n] / norm_sq[n];
      ratio = q;
      if (n >= ratio_from) {
        ratio_min = std::min(ratio_min, q);
        ratio_max = std::max(ratio_max, q);
      }
    }
    r.rows[n - 1].values.emplace_back("ratio_2n", ratio);
  }
  r.checks.push_back(make_check("non_decreasing_steps", static_cast<double>(increases), "==", 0.0));
  r.checks.push_back(make_check("max_node_doubling_change", worst_change, "<", doubling_tol));
  r.checks.push_back(make_check("min_ratio_2n", ratio_min, ">=", ratio_lo));
  r.checks.push_back(make_check("max_ratio_2n", ratio_max, "<=", ratio_hi));
  return r;
}

ExperimentReport narrow_metrization(const ExperimentOptions& o) {
  ParamReader in(o.params, "narrow-metrization");
  const double sigma = in.number("sigma", 1.0, 1e-6, 1e6);
  const std::size_t n_near = in.count("n_near", 2000, 2, 1u << 20);
  const double near_final = in.number("near_final", 1e-3, 0.0);
  const std::size_t n_far = in.count("n_far", 20, 1, 1u << 20);
  const double far_tol = tolerance_or(o, 1e-6);

  ExperimentReport r;
  r.name = "narrow-metrization";
  r.metadata["params"] = in.finish();
  r.metadata["params"]["far_tolerance"] = far_tol;
  r.metadata["kernel"] = {{"family", "gaussian"}, {"params", {{"dim", 1}, {"sigma", sigma}}}};
  const Kernel k = kernels::gaussian(1, sigma);
  const auto origin = point_mass({0.0});
  const double psi0 = k({0.0}, {0.0}).real();

  std::size_t non_decreasing = 0;
  double previous = std::numeric_limits<double>::infinity();
  double last_near = 0.0;
  for (std::size_t n = 1; n <= n_near; ++n) {
    const double x = 1.0 / static_cast<double>(n);
    const double d = distance(k, point_mass({x}), origin);
    if (!(d < previous)) ++non_decreasing;
    previous = d;
    last_near = d;
    r.rows.push_back({{{"sequence", std::string("near")}, {"n", as_int(n)}, {"x", x}},
                      {{"distance", d}, {"distance_sq", d * d}}});
  }
  double far_gap = 0.0;
  double far_min = std::numeric_limits<double>::infinity();
  for (std::size_t n = 1; n <= n_far; ++n) {
    const double x = static_cast<double>(n);
    const double d = distance(k, point_mass({x}), origin);
    far_gap = std::abs(d * d - 2.0 * psi0);
    far_min = std::min(far_min, d * d);
    r.rows.push_back({{{"sequence", std::string("far")}, {"n", as_int(n)}, {"x", x}},
                      {{"distance", d}, {"distance_sq", d * d}, {"gap_to_2psi0", far_gap}}});
  }
  r.checks.push_back(make_check("near_non_decreasing_steps", static_cast<double>(non_decreasing), "==", 0.0));
  r.checks.push_back(make_check("near_final_distance", last_near, "<", near_final));
  r.checks.push_back(make_check("far_final_gap_to_2psi0", far_gap, "<=", far_tol));
  r.checks.push_back(make_check("far_min_distance_sq", far_min, ">", 0.5 * psi0));
  return r;
}

ExperimentReport periodic_null(const ExperimentOptions& o) {
  ParamReader in(o.params, "periodic-null");
  const double period = in.number("period", 2.0 * std::numbers::pi, 1e-6, 1e6);
  const std::size_t nodes = in.count("nodes", 16, 2, 1u << 16);
  const bool origin = in.flag("include_origin", true);
  const double gaussian_min = in.number("gaussian_min", 0.01, 0.0);
  const double tol = tolerance_or(o, 1e-12);

  ExperimentReport r;
  r.name = "periodic-null";
  r.metadata["params"] = in.finish();
  r.metadata["params"]["tolerance"] = tol;
  // cos(h) (+ 1): Lambda = delta_{+-1} / 2 (+ delta_0)
  Kernel periodic = kernels::cosine({1.0}, {{2.0 * std::numbers::pi / period}});
  if (origin) periodic = shift(periodic, 1.0);
  r.metadata["kernel"] = {{"family", "cosine"},
                          {"params", {{"amplitudes", {1.0}}, {"frequencies", {2.0 * std::numbers::pi / period}}}}};
  if (origin) r.metadata["kernel"]["transform"] = {{"shift", 1.0}};

  const auto d = periodic_null_distribution(period, nodes);
  const double mass = std::abs(total_mass(d));
  const double spec = std::sqrt(spectral_norm_squared(*periodic.spectrum(), d));
  const double gram = norm(periodic, d);
  const double gauss = norm(kernels::gaussian(), d);
  r.rows.push_back({{{"period", period}, {"nodes", as_int(nodes)}, {"include_origin", as_int(origin)}},
                    {{"total_mass", mass},
                     {"spectral_norm", spec},
                     {"gram_norm", gram},
                     {"gaussian_norm", gauss}}});
  r.checks.push_back(make_check("total_mass", mass, "<=", tol));
  r.checks.push_back(make_check("spectral_norm", spec, "<=", tol));
  r.checks.push_back(make_check("gaussian_norm", gauss, ">", gaussian_min));
  return r;
}

ExperimentReport sinc_null(const ExperimentOptions& o) {
  ParamReader in(o.params, "sinc-null");
  const double half_width = in.number("half_width", 40.0 * std::numbers::pi, 1e-3, 1e6);
  const std::size_t nodes = in.count("nodes", 8192, 16, 1u << 16);
  const double omega = in.number("omega", 2.5, 2.0, 1e6);
  const double gaussian_min = in.number("gaussian_min", 1e-3, 0.0);
  const std::size_t spd_points = in.count("spd_points", 20, 1, 2000);
  const double spd_range = in.number("spd_range", 50.0, 1e-6, 1e6);
  const double spd_tol = in.number("spd_tol", 1e-10, 0.0);
  const bool gram_route = in.flag("gram_route", true);
  const double tol = tolerance_or(o, 1e-4);

  ExperimentReport r;
  r.name = "sinc-null";
  r.metadata["params"] = in.finish();
  r.metadata["params"]["tolerance"] = tol;
  r.metadata["seed"] = o.seed;
  r.metadata["kernel"] = {{"family", "sinc"}};
  const Kernel sinc = kernels::sinc();

  const auto mu = sinc_null_measure(half_width, nodes, omega);
  const double spec = std::sqrt(spectral_norm_squared(spectra::sinc(), mu));
  const double gauss = norm(kernels::gaussian(), mu);
  Cell gram;
  if (gram_route) gram = norm(sinc, mu);

  std::mt19937_64 rng(o.seed);
  std::uniform_real_distribution<double> u(-spd_range, spd_range);
  std::vector<Atom> points;
  std::set<double> seen;
  while (points.size() < spd_points) {
    const double x = u(rng);
    if (seen.insert(x).second) points.push_back(Atom{1.0, MultiIndex{0}, Point{x}});
  }
  const auto spd = spd_check(sinc, points, spd_tol);

  r.rows.push_back({{{"half_width", half_width}, {"nodes", as_int(nodes)}, {"omega", omega}},
                    {{"sinc_spectral_norm", spec},
                     {"sinc_gram_norm", gram},
                     {"gaussian_norm", gauss},
                     {"spd_points", as_int(spd_points)},
                     {"spd_min_eigenvalue", spd.min_eigenvalue},
                     {"spd_verdict", to_string(spd.verdict)}}});
  r.checks.push_back(make_check("sinc_spectral_norm", spec, "<=", tol));
  r.checks.push_back(make_check("gaussian_norm", gauss, ">", gaussian_min));
  r.checks.push_back(make_check("spd_min_eigenvalue", spd.min_eigenvalue, ">", spd_tol));
  return r;
}

ExperimentReport brownian_cpd(const ExperimentOptions& o) {
  ParamReader in(o.params, "brownian-cpd");
  const std::size_t probes = in.count("probes", 20, 1, 10000);
  const std::size_t atoms = in.count("atoms", 4, 2, 1000);
  const double lo = in.number("lo", 0.1, 0.0, 1e6);
  const double hi = in.number("hi", 3.0, 0.0, 1e6);
  const double spectral_tol = in.number("spectral_tol", 1e-4, 0.0);
  const double tol = tolerance_or(o, 1e-10);
  if (!(lo < hi)) throw SchemaError("brownian-cpd: need lo < hi");

  ExperimentReport r;
  r.name = "brownian-cpd";
  r.metadata["params"] = in.finish();
  r.metadata["params"]["tolerance"] = tol;
  r.metadata["seed"] = o.seed;
  r.metadata["kernel"] = {{"family", "brownian"}};

  const auto abs_kernel = cpd_kernels::negative_abs();
  const auto dipole = point_mass({1.0}) - point_mass({2.0});
  const double form = cpd_quadratic_form(abs_kernel, dipole);
  const double spectral = cpd_spectral_form(abs_kernel, dipole);
  r.rows.push_back({{{"probe", std::string("dipole")}, {"side", std::string("+")}, {"atoms", as_int(2)}},
                    {{"cpd_form", form}, {"cpd_spectral_form", spectral}}});

  std::mt19937_64 rng(o.seed);
  std::vector<GeneralizedMeasure> measures;
  for (std::size_t i = 0; i < probes; ++i) {
    const bool positive = i % 2 == 0;
    measures.push_back(positive ? random_zero_mass(rng, atoms, lo, hi)
                                : random_zero_mass(rng, atoms, -hi, -lo));
  }
  const auto report = brownian_correspondence_check(measures, tol);
  for (std::size_t i = 0; i < probes; ++i) {
    const auto& p = report.probes[i];
    r.rows.push_back({{{"probe", std::to_string(i)},
                       {"side", std::string(i % 2 == 0 ? "+" : "-")},
                       {"atoms", as_int(measures[i].size())}},
                      {{"cpd_form", p.cpd_form},
                       {"min_form", p.min_form},
                       {"ratio", p.cpd_form != 0.0 ? p.min_form / p.cpd_form : std::nan("")},
                       {"residual", p.residual}}});
  }
  r.metadata["fitted_constant"] = report.fitted_constant;
  r.checks.push_back(make_check("dipole_cpd_form_error", std::abs(form - 2.0), "==", 0.0));
  r.checks.push_back(make_check("dipole_spectral_relative_error", std::abs(spectral - form) / form,
                                "<=", spectral_tol));
  r.checks.push_back(make_check("fitted_constant_error", std::abs(report.fitted_constant - 0.5), "<=", tol));
  r.checks.push_back(make_check("max_residual", report.max_residual, "<=", tol));
  return r;
}

ExperimentReport gram_vs_spectral(const ExperimentOptions& o) {
  ParamReader in(o.params, "gram-vs-spectral");
  const Json kernel_list =
      in.raw("kernels", Json::array({"gaussian", "cosine", "sinc", "constant"}));
  const std::size_t trials = in.count("trials", 100, 1, 100000);
  const std::size_t max_atoms = in.count("max_atoms", 5, 1, 1000);
  const unsigned max_order = static_cast<unsigned>(in.count("max_order", 2, 0, 4));
  const double half_width = in.number("half_width", 2.0, 0.0, 1e3);
  const double tol = tolerance_or(o, 1e-6);

  ExperimentReport r;
  r.name = "gram-vs-spectral";
  r.metadata["params"] = in.finish();
  r.metadata["params"]["tolerance"] = tol;
  r.metadata["seed"] = o.seed;

  if (!kernel_list.is_array() || kernel_list.empty()) {
    throw SchemaError("gram-vs-spectral: 'kernels' must be a nonempty array");
  }
  const std::map<std::string, Json> defaults{
      {"gaussian", {{"family", "gaussian"}}},
      {"cosine", {{"family", "cosine"}, {"params", {{"amplitudes", {1.0, 0.5}}, {"frequencies", {1.0, 2.5}}}}}},
      {"sinc", {{"family", "sinc"}}},
      {"constant", {{"family", "constant"}}},
  };
  std::mt19937_64 rng(o.seed);
  double worst = 0.0;
  Json kernels_used = Json::array();
  for (const auto& entry : kernel_list) {
    Json spec;
    if (entry.is_string()) {
      const auto it = defaults.find(entry.get<std::string>());
      if (it == defaults.end()) throw SchemaError("gram-vs-spectral: unknown kernel shorthand " + entry.dump());
      spec = it->second;
    } else {
      spec = entry;
    }
    const Kernel k = kernel_from_json(spec);
    if (k.spectrum() == nullptr) {
      throw SchemaError("gram-vs-spectral: kernel has no spectral measure: " + spec.dump());
    }
    kernels_used.push_back(spec);
    const std::string label = entry.is_string() ? entry.get<std::string>() : k.name();
    for (std::size_t t = 0; t < trials; ++t) {
      const auto d = random_measure(rng, k.dimension(), max_atoms, max_order, half_width);
      const double gram = norm_squared(k, d);
      const double spectral = spectral_norm_squared(*k.spectrum(), d);
      const double scale = std::max(std::abs(gram), std::abs(spectral));
      const double rel = scale == 0.0 ? 0.0 : std::abs(gram - spectral) / scale;
      worst = std::max(worst, rel);
      r.rows.push_back({{{"kernel", label}, {"trial", as_int(t)}},
                        {{"atoms", as_int(d.size())},
                         {"max_order", as_int(d.max_order())},
                         {"gram_norm_sq", gram},
                         {"spectral_norm_sq", spectral},
                         {"relative_difference", rel}}});
    }
  }
  r.metadata["kernels"] = kernels_used;
  r.checks.push_back(make_check("max_relative_difference", worst, "<=", tol));
  return r;
}

using Runner = std::function<ExperimentReport(const ExperimentOptions&)>;

const std::map<std::string, Runner>& registry() {
  static const std::map<std::string, Runner> r{
      {"nonmetrization", nonmetrization}, {"narrow-metrization", narrow_metrization},
      {"periodic-null", periodic_null},   {"sinc-null", sinc_null},
      {"brownian-cpd", brownian_cpd},     {"gram-vs-spectral", gram_vs_spectral},
  };
  return r;
}

}  // namespace

bool ExperimentReport::passed() const {
  return !rows.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::string ExperimentReport::csv() const {
  std::vector<std::string> columns;
  auto add = [&](const Record& rec) {
    for (const auto& [key, _] : rec) {
      if (std::find(columns.begin(), columns.end(), key) == columns.end()) columns.push_back(key);
    }
  };
  for (const auto& row : rows) {
    add(row.params);
    add(row.values);
  }
  std::ostringstream out;
  for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (i) out << ',';
      for (const Record* rec : {&row.params, &row.values}) {
        const auto it = std::find_if(rec->begin(), rec->end(),
                                     [&](const auto& kv) { return kv.first == columns[i]; });
        if (it != rec->end()) {
          out << format_cell(it->second);
          break;
        }
      }
    }
    out << '\n';
  }
  return out.str();
}

Json ExperimentReport::verdict() const {
  Json checks_json = Json::array();
  for (const auto& c : checks) {
    checks_json.push_back({{"name", c.name},
                           {"value", std::isfinite(c.value) ? Json(c.value) : Json(nullptr)},
                           {"relation", c.relation},
                           {"threshold", c.threshold},
                           {"passed", c.passed}});
  }
  return {{"experiment", name},
          {"verdict", passed() ? "pass" : "fail"},
          {"rows", rows.size()},
          {"checks", checks_json},
          {"metadata", metadata}};
}

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, _] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

ExperimentReport run_experiment(const std::string& name, const ExperimentOptions& options) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw SchemaError("unknown experiment '" + name + "'");
  return it->second(options);
}

}  // namespace distembed::cli
