#include "distembed/cli/json_io.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include "distembed/errors.hpp"

namespace distembed::cli {

namespace {

void allow_keys(const Json& j, std::initializer_list<const char*> keys, const std::string& what) {
  if (!j.is_object()) throw SchemaError(what + ": expected an object");
  for (const auto& [key, _] : j.items()) {
    bool known = false;
    for (const char* k : keys) known |= key == k;
    if (!known) throw SchemaError(what + ": unknown key '" + key + "'");
  }
}

double number(const Json& j, const std::string& what) {
  if (!j.is_number()) throw SchemaError(what + ": expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw SchemaError(what + ": not finite");
  return v;
}

double number_or(const Json& obj, const char* key, double fallback, const std::string& what) {
  return obj.contains(key) ? number(obj.at(key), what + "." + key) : fallback;
}

std::size_t dimension_or(const Json& obj, const char* key, std::size_t fallback,
                         const std::string& what) {
  if (!obj.contains(key)) return fallback;
  const auto& v = obj.at(key);
  if (!v.is_number_unsigned() || v.get<std::size_t>() == 0) {
    throw SchemaError(what + "." + key + ": expected a positive integer");
  }
  return v.get<std::size_t>();
}

std::vector<double> number_array(const Json& j, const std::string& what) {
  if (!j.is_array()) throw SchemaError(what + ": expected an array");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(number(j[i], what));
  return out;
}

Complex weight_from_json(const Json& j) {
  if (j.is_number()) return {number(j, "weight"), 0.0};
  const auto v = number_array(j, "weight");
  if (v.size() != 2) throw SchemaError("weight: expected [re, im]");
  return {v[0], v[1]};
}

Box box_from_json(const Json& j, const std::string& what) {
  if (!j.is_array() || j.empty()) throw SchemaError(what + ": expected [[lo, hi], ...]");
  Box box;
  for (const auto& iv : j) {
    const auto v = number_array(iv, what);
    if (v.size() != 2) throw SchemaError(what + ": each interval needs [lo, hi]");
    box.push_back(Interval{v[0], v[1]});
  }
  return box;
}

template <typename F>
auto translate(F&& f) {
  try {
    return f();
  } catch (const InvalidArgument& e) {
    throw SchemaError(e.what());
  } catch (const Json::exception& e) {
    throw SchemaError(e.what());
  }
}

}  // namespace

Json load_json_argument(const std::string& argument) {
  const auto first = argument.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (argument[first] == '{' || argument[first] == '[')) {
    try {
      return Json::parse(argument);
    } catch (const Json::parse_error& e) {
      throw SchemaError(std::string("invalid inline JSON: ") + e.what());
    }
  }
  std::ifstream in(argument);
  if (!in) throw SchemaError("cannot open '" + argument + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SchemaError("invalid JSON in '" + argument + "': " + e.what());
  }
}

Point point_from_json(const Json& j) {
  if (j.is_number()) return {number(j, "point")};
  return number_array(j, "point");
}

GeneralizedMeasure measure_from_json(const Json& j) {
  return translate([&] {
    allow_keys(j, {"dim", "atoms"}, "measure");
    if (!j.contains("dim")) throw SchemaError("measure: missing 'dim'");
    const std::size_t dim = dimension_or(j, "dim", 0, "measure");
    if (!j.contains("atoms") || !j.at("atoms").is_array()) {
      throw SchemaError("measure: 'atoms' must be an array");
    }
    std::vector<Atom> atoms;
    for (const auto& a : j.at("atoms")) {
      allow_keys(a, {"w", "p", "x"}, "atom");
      if (!a.contains("w") || !a.contains("x")) throw SchemaError("atom: needs 'w' and 'x'");
      Atom atom;
      atom.weight = weight_from_json(a.at("w"));
      atom.location = point_from_json(a.at("x"));
      if (atom.location.size() != dim) throw SchemaError("atom: location dimension differs from dim");
      if (a.contains("p")) {
        std::vector<unsigned> p;
        if (!a.at("p").is_array()) throw SchemaError("atom: 'p' must be an array");
        for (const auto& e : a.at("p")) {
          if (!e.is_number_unsigned()) throw SchemaError("atom: 'p' entries must be nonnegative integers");
          p.push_back(e.get<unsigned>());
        }
        atom.order = MultiIndex(std::move(p));
      } else {
        atom.order = MultiIndex::zero(dim);
      }
      atoms.push_back(std::move(atom));
    }
    return GeneralizedMeasure(dim, std::move(atoms));
  });
}

Json measure_to_json(const GeneralizedMeasure& m) {
  Json atoms = Json::array();
  for (const auto& a : m.atoms()) {
    Json p = Json::array();
    for (unsigned e : a.order.entries()) p.push_back(e);
    atoms.push_back({{"w", {a.weight.real(), a.weight.imag()}}, {"p", p}, {"x", a.location}});
  }
  return {{"dim", m.dimension()}, {"atoms", atoms}};
}

Kernel kernel_from_json(const Json& j) {
  return translate([&] {
    allow_keys(j, {"family", "params", "transform"}, "kernel");
    if (!j.contains("family") || !j.at("family").is_string()) {
      throw SchemaError("kernel: missing 'family'");
    }
    const auto family = j.at("family").get<std::string>();
    const Json params = j.value("params", Json::object());
    const std::string where = "kernel.params";

    auto build = [&]() -> Kernel {
      if (family == "gaussian" || family == "laplace") {
        allow_keys(params, {"dim", "sigma"}, where);
        const auto dim = dimension_or(params, "dim", 1, where);
        const double sigma = number_or(params, "sigma", 1.0, where);
        return family == "gaussian" ? kernels::gaussian(dim, sigma) : kernels::laplace(dim, sigma);
      }
      if (family == "imq") {
        allow_keys(params, {"dim", "c", "beta"}, where);
        return kernels::inverse_multiquadric(dimension_or(params, "dim", 1, where),
                                             number_or(params, "c", 1.0, where),
                                             number_or(params, "beta", 0.5, where));
      }
      if (family == "constant") {
        allow_keys(params, {"dim", "value"}, where);
        return kernels::constant(dimension_or(params, "dim", 1, where),
                                 number_or(params, "value", 1.0, where));
      }
      if (family == "cosine") {
        allow_keys(params, {"amplitudes", "frequencies"}, where);
        if (!params.contains("amplitudes") || !params.contains("frequencies")) {
          throw SchemaError("cosine kernel needs 'amplitudes' and 'frequencies'");
        }
        const auto amps = number_array(params.at("amplitudes"), where + ".amplitudes");
        std::vector<Point> freqs;
        const auto& f = params.at("frequencies");
        if (!f.is_array()) throw SchemaError(where + ".frequencies: expected an array");
        for (const auto& w : f) freqs.push_back(point_from_json(w));
        return kernels::cosine(amps, freqs);
      }
      if (family == "sinc" || family == "brownian") {
        allow_keys(params, {}, where);
        return family == "sinc" ? kernels::sinc() : kernels::brownian();
      }
      throw SchemaError("kernel: unknown family '" + family + "'");
    };

    Kernel k = build();
    if (j.contains("transform")) {
      const auto& t = j.at("transform");
      allow_keys(t, {"shift", "center"}, "kernel.transform");
      if (t.size() != 1) throw SchemaError("kernel.transform: exactly one of 'shift' or 'center'");
      if (t.contains("shift")) {
        k = shift(k, number(t.at("shift"), "kernel.transform.shift"));
      } else {
        k = center(k, measure_from_json(t.at("center")));
      }
    }
    return k;
  });
}

SpectralMeasure spectral_from_json(const Json& j) {
  return translate([&] {
    allow_keys(j, {"dim", "atoms", "density"}, "spectral");
    std::size_t dim = dimension_or(j, "dim", 0, "spectral");
    std::vector<SpectralAtom> atoms;
    if (j.contains("atoms")) {
      if (!j.at("atoms").is_array()) throw SchemaError("spectral.atoms: expected an array");
      for (const auto& a : j.at("atoms")) {
        allow_keys(a, {"xi", "w"}, "spectral atom");
        if (!a.contains("xi") || !a.contains("w")) throw SchemaError("spectral atom: needs 'xi' and 'w'");
        atoms.push_back(SpectralAtom{point_from_json(a.at("xi")), number(a.at("w"), "spectral atom w")});
        if (dim == 0) dim = atoms.back().location.size();
      }
    }
    std::vector<SpectralDensity> densities;
    if (j.contains("density")) {
      const auto& d = j.at("density");
      allow_keys(d, {"family", "box", "params"}, "spectral.density");
      if (!d.contains("family") || !d.at("family").is_string()) {
        throw SchemaError("spectral.density: missing 'family'");
      }
      const auto family = d.at("family").get<std::string>();
      const Json params = d.value("params", Json::object());
      const std::string where = "spectral.density.params";
      SpectralMeasure base(1);
      if (family == "gaussian") {
        allow_keys(params, {"sigma"}, where);
        if (dim == 0) dim = d.contains("box") ? d.at("box").size() : 1;
        base = spectra::gaussian(dim, number_or(params, "sigma", 1.0, where));
      } else if (family == "sinc") {
        allow_keys(params, {}, where);
        if (dim == 0) dim = 1;
        base = spectra::sinc();
      } else if (family == "uniform") {
        allow_keys(params, {"value"}, where);
        if (!d.contains("box")) throw SchemaError("uniform density needs a 'box'");
        const Box box = box_from_json(d.at("box"), "spectral.density.box");
        if (dim == 0) dim = box.size();
        const double value = number_or(params, "value", 1.0, where);
        if (value < 0.0) throw SchemaError("uniform density must be nonnegative");
        base = SpectralMeasure(dim, {}, {SpectralDensity{[value](PointView) { return value; }, box, "uniform"}});
      } else {
        throw SchemaError("spectral.density: unknown family '" + family + "'");
      }
      for (auto density : base.densities()) {
        if (d.contains("box") && family != "uniform") {
          density.box = box_from_json(d.at("box"), "spectral.density.box");
        }
        densities.push_back(std::move(density));
      }
    }
    if (dim == 0) throw SchemaError("spectral: cannot infer dimension; give 'dim'");
    return SpectralMeasure(dim, std::move(atoms), std::move(densities));
  });
}

}  // namespace distembed::cli
