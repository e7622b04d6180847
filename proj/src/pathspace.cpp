#include "geomphase/pathspace.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <utility>

namespace geomphase {

std::vector<Matrix> sample(const ParameterPath& path, int steps) {
    if (steps < 1) throw InvalidParameter("sample: steps must be >= 1");
    std::vector<Matrix> out;
    out.reserve(static_cast<std::size_t>(steps) + 1);
    for (int i = 0; i <= steps; ++i)
        out.push_back(path.evaluate(static_cast<double>(i) / steps));
    return out;
}

Reparametrization identity_reparam() {
    return {"identity", [](double t) { return t; }};
}

Reparametrization smoothstep_reparam() {
    return {"smoothstep", [](double t) { return t * t * (3.0 - 2.0 * t); }};
}

Reparametrization power_reparam(double exponent) {
    if (!(exponent > 0.0)) throw InvalidParameter("power_reparam: exponent must be > 0");
    return {"power(" + std::to_string(exponent) + ")",
            [exponent](double t) { return std::pow(t, exponent); }};
}

void validate_monotone(const Reparametrization& f, int grid) {
    if (grid < 2) throw InvalidParameter("validate_monotone: grid must be >= 2");
    if (f.map(0.0) != 0.0 || f.map(1.0) != 1.0)
        throw NonMonotone("reparametrization '" + f.name + "' must fix the endpoints 0 and 1");
    double prev = 0.0;
    for (int i = 1; i <= grid; ++i) {
        const double value = f.map(static_cast<double>(i) / grid);
        if (!(value > prev))
            throw NonMonotone("reparametrization '" + f.name +
                              "' is not strictly increasing near t = " +
                              std::to_string(static_cast<double>(i) / grid));
        prev = value;
    }
}

ParameterPath reparametrize(const ParameterPath& path, const Reparametrization& f) {
    validate_monotone(f);
    ParameterPath out;
    out.dim = path.dim;
    out.evaluate = [inner = path.evaluate, map = f.map](double t) { return inner(map(t)); };
    out.descriptor = {{"name", "reparametrized"},
                      {"map", f.name},
                      {"inner", path.descriptor}};
    return out;
}

ParameterPath interpolated_path(std::vector<Matrix> samples, nlohmann::json descriptor) {
    if (samples.empty()) throw InvalidParameter("interpolated_path: needs at least one sample");
    const int dim = static_cast<int>(samples.front().rows());
    for (const Matrix& H : samples)
        if (H.rows() != dim || H.cols() != dim)
            throw InvalidParameter("interpolated_path: inconsistent sample dimensions");

    auto data = std::make_shared<std::vector<Matrix>>(std::move(samples));
    ParameterPath out;
    out.dim = dim;
    if (descriptor.is_null())
        descriptor = {{"name", "interpolated"}, {"samples", data->size()}};
    out.descriptor = std::move(descriptor);
    out.evaluate = [data](double t) -> Matrix {
        const std::size_t segments = data->size() - 1;
        if (segments == 0) return data->front();
        const double x = std::clamp(t, 0.0, 1.0) * static_cast<double>(segments);
        const auto lo = static_cast<std::size_t>(std::min(x, static_cast<double>(segments - 1)));
        const double w = x - static_cast<double>(lo);
        if (w == 0.0) return (*data)[lo];
        return (1.0 - w) * (*data)[lo] + w * (*data)[lo + 1];
    };
    return out;
}

}  // namespace geomphase
