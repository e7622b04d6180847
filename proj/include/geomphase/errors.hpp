#pragma once

#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace geomphase {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonHermitianInput : Error {
    NonHermitianInput(double deviation, double tol)
        : Error("matrix is not Hermitian: max |H - H^dag| deviation " +
                std::to_string(deviation) + " exceeds tolerance " + std::to_string(tol)),
          deviation(deviation), tol(tol) {}
    double deviation;
    double tol;
};

// The phase algebra requires a nondegenerate spectrum; `t` locates the
// offending path point when the failure happened along a path (NaN otherwise).
struct DegenerateSpectrum : Error {
    DegenerateSpectrum(double gap, double gap_tol,
                       double t = std::numeric_limits<double>::quiet_NaN())
        : Error("adjacent eigenvalue gap " + std::to_string(gap) + " below gap_tol " +
                std::to_string(gap_tol) +
                (t == t ? " at t = " + std::to_string(t) : std::string{})),
          gap(gap), gap_tol(gap_tol), t(t) {}
    double gap;
    double gap_tol;
    double t;
};

// A step overlap fell below the tracking threshold: the sampling grid skipped
// structure (e.g. an avoided crossing narrower than the step).
struct LostTrack : Error {
    LostTrack(double t, int state_index, double overlap_magnitude)
        : Error("lost track of state " + std::to_string(state_index) + " near t = " +
                std::to_string(t) + ": step overlap magnitude " +
                std::to_string(overlap_magnitude) + " < 0.1"),
          t(t), state_index(state_index), overlap_magnitude(overlap_magnitude) {}
    double t;
    int state_index;
    double overlap_magnitude;
};

struct OrthogonalLink : Error {
    OrthogonalLink(int link_index, double magnitude)
        : Error("pancharatnam chain link " + std::to_string(link_index) +
                " is (numerically) orthogonal: |overlap| = " + std::to_string(magnitude)),
          link_index(link_index), magnitude(magnitude) {}
    int link_index;
    double magnitude;
};

// A cyclic product needs every constituent sigma defined; `links` lists the
// (j, k) pairs whose |U_jk| fell below the undefined threshold.
struct UndefinedConstituent : Error {
    explicit UndefinedConstituent(std::vector<std::pair<int, int>> undefined_links)
        : Error(describe(undefined_links)), links(std::move(undefined_links)) {}
    std::vector<std::pair<int, int>> links;

  private:
    static std::string describe(const std::vector<std::pair<int, int>>& ls) {
        std::string msg = "undefined sigma constituent(s):";
        for (const auto& [j, k] : ls)
            msg += " (" + std::to_string(j) + "," + std::to_string(k) + ")";
        return msg;
    }
};

struct IndexOutOfRange : Error {
    IndexOutOfRange(int index, int dim)
        : Error("state index " + std::to_string(index) + " outside 1.." + std::to_string(dim)),
          index(index), dim(dim) {}
    int index;
    int dim;
};

struct NonMonotone : Error {
    using Error::Error;
};

struct InvalidParameter : Error {
    using Error::Error;
};

struct DegenerateOnPath : Error {
    DegenerateOnPath(double theta, double gap)
        : Error("spectrum degenerate along the path near theta = " + std::to_string(theta) +
                " (gap " + std::to_string(gap) + ")"),
          theta(theta), gap(gap) {}
    double theta;
    double gap;
};

struct DimensionTooLarge : Error {
    DimensionTooLarge(int n, int cap)
        : Error("dimension " + std::to_string(n) + " exceeds the full-enumeration cap " +
                std::to_string(cap)),
          n(n), cap(cap) {}
    int n;
    int cap;
};

struct ConfigError : Error {
    ConfigError(std::string field, const std::string& what)
        : Error("config field '" + field + "': " + what), field(std::move(field)) {}
    std::string field;
};

}  // namespace geomphase
