#ifndef MULTICENTRIC_ERRORS_HPP
#define MULTICENTRIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace multicentric {

/// Failures caused by bad input (dimensions, indices, malformed data).
/// The CLI maps these to exit code 2.
struct ValidationError : std::runtime_error {
    ValidationError(std::string name, const std::string& what)
        : std::runtime_error(what), name(std::move(name)) {}
    std::string name;
};

/// Failures of the numerics themselves (singular operators, defective
/// matrices, non-convergence).  The CLI maps these to exit code 3.
struct NumericalError : std::runtime_error {
    NumericalError(std::string name, const std::string& what)
        : std::runtime_error(what), name(std::move(name)) {}
    std::string name;
};

// validation
struct EmptyRoots : ValidationError {
    explicit EmptyRoots(const std::string& w) : ValidationError("EmptyRoots", w) {}
};
struct DuplicateRoots : ValidationError {
    explicit DuplicateRoots(const std::string& w) : ValidationError("DuplicateRoots", w) {}
};
struct IndexOutOfRange : ValidationError {
    explicit IndexOutOfRange(const std::string& w) : ValidationError("IndexOutOfRange", w) {}
};
struct DimensionMismatch : ValidationError {
    explicit DimensionMismatch(const std::string& w) : ValidationError("DimensionMismatch", w) {}
};
struct PointNotOnGrid : ValidationError {
    explicit PointNotOnGrid(const std::string& w) : ValidationError("PointNotOnGrid", w) {}
};
struct ConfigError : ValidationError {
    explicit ConfigError(const std::string& w) : ValidationError("ConfigError", w) {}
};
struct ParseError : ValidationError {
    explicit ParseError(const std::string& w) : ValidationError("ParseError", w) {}
};
struct ConjugateNotSupported : ValidationError {
    explicit ConjugateNotSupported(const std::string& w)
        : ValidationError("ConjugateNotSupported", w) {}
};

// numerical
struct NotInvertible : NumericalError {
    explicit NotInvertible(const std::string& w) : NumericalError("NotInvertible", w) {}
};
struct RootFindingFailed : NumericalError {
    explicit RootFindingFailed(const std::string& w) : NumericalError("RootFindingFailed", w) {}
};
struct Defective : NumericalError {
    explicit Defective(const std::string& w) : NumericalError("Defective", w) {}
};
struct NotCommuting : NumericalError {
    explicit NotCommuting(const std::string& w) : NumericalError("NotCommuting", w) {}
};
struct RandomCombinationFailed : NumericalError {
    explicit RandomCombinationFailed(const std::string& w)
        : NumericalError("RandomCombinationFailed", w) {}
};
struct ConstructionFailed : NumericalError {
    explicit ConstructionFailed(const std::string& w) : NumericalError("ConstructionFailed", w) {}
};

} // namespace multicentric

#endif
