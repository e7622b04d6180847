#pragma once

#include <json.hpp>

#include "geomphase/config.hpp"
#include "geomphase/permutation.hpp"
#include "geomphase/phases.hpp"

namespace geomphase {

// JSON building blocks for the structured report format. Conventions:
// complex numbers as {re, im}; angles in radians; 1-based state indexes;
// Undefined phases rendered as {undefined: true, magnitude} and never as a
// number; a "sign" field of "+1"/"-1" appears when the value is within
// kSignThreshold of +-1.
inline constexpr double kSignThreshold = 1e-8;

nlohmann::json complex_json(std::complex<double> z);
nlohmann::json phase_json(const PhaseFactor& p);
nlohmann::json matrix_json(const Matrix& m);
nlohmann::json diagnostics_json(const TransportResult& result);

nlohmann::json sigmas_json(const Matrix& U, double undef_tol);
nlohmann::json gammas_json(const Matrix& U, double undef_tol);           // all cycles, l <= n
nlohmann::json independent_set_json(const Matrix& U, double undef_tol);  // or error record
nlohmann::json classification_json(const Matrix& U, double dominance_factor, double undef_tol);
nlohmann::json identities_json(const Matrix& U, double undef_tol);
nlohmann::json table_json(int n);

// Human-readable rendering of a full report document.
std::string render_text(const nlohmann::json& doc);

}  // namespace geomphase
