#pragma once

#include <stdexcept>
#include <string>

namespace sdde {

/// Time step violates a stability or accuracy guard of an integrator.
struct StepTooLarge : std::runtime_error {
    explicit StepTooLarge(const std::string& what) : std::runtime_error(what) {}
};

/// Grid endpoints, step, or coverage are inconsistent.
struct BadGrid : std::runtime_error {
    explicit BadGrid(const std::string& what) : std::runtime_error(what) {}
};

/// A delayed lookup reaches back before the start of the past window.
struct HistoryTooShort : std::runtime_error {
    explicit HistoryTooShort(const std::string& what) : std::runtime_error(what) {}
};

/// Vector/matrix sizes do not match the model dimensions.
struct DimensionMismatch : std::runtime_error {
    explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};

/// Series too short for the requested spectral estimate.
struct PathTooShort : std::runtime_error {
    explicit PathTooShort(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed configuration document (syntax, unknown key).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Well-formed configuration that violates a guard of a downstream module.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sdde
