// Scalar and dense-array aliases plus the error taxonomy used across the
// library. All numerics go through Eigen; fields are stored as dense
// matrices indexed (time step, state node).
#pragma once

#include <Eigen/Core>

#include <stdexcept>
#include <string>

namespace lagqvi {

using Real = double;
using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using BoolGrid = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>;

// Bad user input: malformed documents, out-of-range parameters,
// incommensurate discretizations. CLI exit code 3.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// A persisted artifact (field manifest, layer CSV) is missing or does not
// match the requesting problem. CLI exit code 4.
struct ArtifactError : std::runtime_error {
    explicit ArtifactError(const std::string& msg) : std::runtime_error(msg) {}
};

// A controller asked for an impulse the lag rules forbid (strict mode).
// CLI exit code 5.
struct AdmissibilityError : std::runtime_error {
    explicit AdmissibilityError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical failure inside a solver (e.g. fixed-point non-convergence).
struct SolveError : std::runtime_error {
    explicit SolveError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace lagqvi
