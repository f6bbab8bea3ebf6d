#ifndef BCOLAB_ERRORS_HPP
#define BCOLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bcolab {

// Exit-code conventions used by the CLI:
//   0 pass/solved, 1 verified-false/none, 2 parse error,
//   3 precondition violated, 4 internal invariant breach.

/// Malformed input file. CLI exit code 2.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// An operation was called on input that violates its stated
/// preconditions (unknown vertex, disconnected source, budget
/// exceeded, ...). CLI exit code 3.
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

enum class ReductionErrorKind { Disconnected, ZeroWeight, ParityInfeasible };

/// Source instance rejected by the reduction.
class ReductionError : public PreconditionError {
public:
    ReductionError(ReductionErrorKind kind, const std::string& what)
        : PreconditionError(what), kind_(kind) {}
    ReductionErrorKind kind() const { return kind_; }

private:
    ReductionErrorKind kind_;
};

/// A structural property that the construction guarantees failed to
/// hold; indicates a bug, not bad input. CLI exit code 4.
class InternalInvariantError : public std::logic_error {
public:
    explicit InternalInvariantError(const std::string& what) : std::logic_error(what) {}
};

enum class ExtractionErrorKind {
    // Both or neither x-vertex of some edge is a b-vertex; the coloring
    // cannot have come from a correctly built target instance.
    MalformedColoring,
    // Per-edge extraction succeeded but the orientation is unbalanced;
    // unreachable unless the construction itself is broken.
    BalanceViolation,
};

class ExtractionError : public std::runtime_error {
public:
    ExtractionError(ExtractionErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ExtractionErrorKind kind() const { return kind_; }

private:
    ExtractionErrorKind kind_;
};

} // namespace bcolab

#endif
