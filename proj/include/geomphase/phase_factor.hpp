#pragma once

#include <complex>

#include "geomphase/numeric.hpp"

namespace geomphase {

// A unit-modulus phase factor, or an explicit Undefined marker carrying the
// vanishing overlap magnitude that prevented its definition.
class PhaseFactor {
  public:
    static PhaseFactor defined(std::complex<double> unit_value) {
        PhaseFactor p;
        p.defined_ = true;
        p.value_ = unit_value;
        p.magnitude_ = std::abs(unit_value);
        return p;
    }

    static PhaseFactor undefined(double magnitude) {
        PhaseFactor p;
        p.defined_ = false;
        p.magnitude_ = magnitude;
        return p;
    }

    // Phi(z) = z/|z| when |z| >= undef_tol, Undefined(|z|) otherwise.
    static PhaseFactor of(std::complex<double> z, double undef_tol) {
        const double m = std::abs(z);
        if (m < undef_tol) return undefined(m);
        return defined(z / m);
    }

    bool is_defined() const { return defined_; }
    std::complex<double> value() const { return value_; }
    double magnitude() const { return magnitude_; }
    double angle() const { return std::arg(value_); }

  private:
    bool defined_ = false;
    std::complex<double> value_{0.0, 0.0};
    double magnitude_ = 0.0;
};

}  // namespace geomphase
