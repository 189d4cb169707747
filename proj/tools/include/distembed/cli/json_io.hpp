#pragma once

#include <stdexcept>
#include <string>

#include "distembed/kernel.hpp"
#include "distembed/measure.hpp"
#include "distembed/spectral_measure.hpp"
#include "json.hpp"

namespace distembed::cli {

using Json = nlohmann::json;

/// Malformed or out-of-schema JSON input. Maps to exit code 2.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inline JSON when the argument starts with '{' or '[', else a file path.
Json load_json_argument(const std::string& argument);

/// {"dim": d, "atoms": [{"w": [re, im] | re, "p": [..], "x": [..]}, ...]}; "p" defaults to zeros.
GeneralizedMeasure measure_from_json(const Json& j);
Json measure_to_json(const GeneralizedMeasure& m);

/// {"family": ..., "params": {...}, "transform": {"shift": c} | {"center": <measure>}}
///   gaussian, laplace: dim = 1, sigma = 1
///   imq: dim = 1, c = 1, beta = 0.5
///   constant: dim = 1, value = 1
///   cosine: amplitudes [a_j], frequencies [[w_j]] (or [w_j] on the line)
///   sinc, brownian: no parameters
Kernel kernel_from_json(const Json& j);

/// {"dim": d, "atoms": [{"xi": [..], "w": r}], "density": {"family": ..., "box": [[lo, hi], ..], "params": {...}}}
///   density families: gaussian (sigma), sinc (no params, box [-1, 1]), uniform (value)
SpectralMeasure spectral_from_json(const Json& j);

/// Point as a JSON array or a bare number.
Point point_from_json(const Json& j);

}  // namespace distembed::cli
