#pragma once

#include <string>

#include "curvrad/metric_model.hpp"

namespace curvrad {

// Builds a model from a spec string:
//   euclidean:N          flat ℝᴺ
//   sphere2              unit sphere, colatitude/longitude chart
//   hyperbolic2          upper half-plane
//   expr:VARS:MATRIX     custom metric; VARS is a comma-separated list of
//                        coordinate names and MATRIX lists rows separated by
//                        ';' with entries separated by ',', for example
//                        "expr:x,y:1,0;0,1/y^2". The matrix must be square;
//                        mirrored entries must be written identically
//                        (whitespace aside).
// Custom metrics get finite-difference Christoffel symbols and a domain of
// points where the matrix is finite and positive definite.
// Unknown or malformed specs throw Error(Config).
MetricModel parse_model(const std::string& spec, double fd_step = 1e-5);

}  // namespace curvrad
