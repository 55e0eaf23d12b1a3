#pragma once

#include <stdexcept>
#include <string>

namespace kw {

/// Invalid problem data or mismatched grids.
class InvalidInput : public std::invalid_argument {
public:
    explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// Nonlinear solve failed; carries the last residual seen.
class SolveError : public std::runtime_error {
public:
    SolveError(const std::string& what, double last_residual)
        : std::runtime_error(what), last_residual_(last_residual) {}
    double last_residual() const { return last_residual_; }

private:
    double last_residual_;
};

/// Sup-norm ran past the configured cap on the continuation ladder.
/// The symptom of a violated sign/decay hypothesis.
class BlowUpError : public SolveError {
public:
    BlowUpError(const std::string& what, double sup_norm)
        : SolveError(what, sup_norm) {}
};

} // namespace kw
