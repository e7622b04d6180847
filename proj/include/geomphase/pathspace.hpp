#pragma once

#include <functional>
#include <vector>

#include <json.hpp>

#include "geomphase/spectral.hpp"

namespace geomphase {

// A parameterized family t in [0,1] -> Hermitian matrix. Evaluation must be a
// pure function of t; concurrent evaluation at distinct t is safe.
struct ParameterPath {
    int dim = 0;
    std::function<Matrix(double)> evaluate;
    nlohmann::json descriptor;  // model name + parameters, see the CLI config schema
};

// H(t_i) at t_i = i/steps for i = 0..steps (endpoints included).
std::vector<Matrix> sample(const ParameterPath& path, int steps);

// Monotone map [0,1] -> [0,1] with f(0) = 0, f(1) = 1.
struct Reparametrization {
    std::string name;
    std::function<double(double)> map;
};

Reparametrization identity_reparam();
Reparametrization smoothstep_reparam();                // t^2 (3 - 2t)
Reparametrization power_reparam(double exponent);      // t^p, p > 0

// Throws NonMonotone unless f is strictly increasing on a dense grid with
// f(0) = 0 and f(1) = 1.
void validate_monotone(const Reparametrization& f, int grid = 1024);

// Path evaluating to path.evaluate(f(t)); endpoints are preserved bitwise.
ParameterPath reparametrize(const ParameterPath& path, const Reparametrization& f);

// Adapter for externally sampled data: entrywise linear interpolation between
// equally spaced samples. The result is only piecewise-smooth.
ParameterPath interpolated_path(std::vector<Matrix> samples, nlohmann::json descriptor = {});

}  // namespace geomphase
