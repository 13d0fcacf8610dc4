#pragma once

#include <stdexcept>
#include <string>

namespace ordercone {

// Base class for everything thrown by the library. `code()` is a stable
// machine-readable tag used by the CLI error payloads.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// Domain errors: the input is outside an operation's precondition.
class DomainError : public Error {
    using Error::Error;
};

struct NotPointedError : DomainError {
    explicit NotPointedError(const std::string& what)
        : DomainError("NotPointed", what) {}
};
struct NotGeneratingError : DomainError {
    explicit NotGeneratingError(const std::string& what)
        : DomainError("NotGenerating", what) {}
};
struct NotPositiveError : DomainError {
    explicit NotPositiveError(const std::string& what)
        : DomainError("NotPositive", what) {}
};
struct NotIdempotentError : DomainError {
    explicit NotIdempotentError(const std::string& what)
        : DomainError("NotIdempotent", what) {}
};
struct NotBandProjectionError : DomainError {
    explicit NotBandProjectionError(const std::string& what)
        : DomainError("NotBandProjection", what) {}
};
struct NotApplicableError : DomainError {
    explicit NotApplicableError(const std::string& what)
        : DomainError("NotApplicable", what) {}
};
struct TooManyFacetsError : DomainError {
    explicit TooManyFacetsError(const std::string& what)
        : DomainError("TooManyFacets", what) {}
};
struct DimensionMismatchError : DomainError {
    explicit DimensionMismatchError(const std::string& what)
        : DomainError("DimensionMismatch", what) {}
};
struct PreconditionError : DomainError {
    explicit PreconditionError(const std::string& what)
        : DomainError("PreconditionViolation", what) {}
};
struct InvalidArgumentError : DomainError {
    explicit InvalidArgumentError(const std::string& what)
        : DomainError("InvalidArgument", what) {}
};

// Parse errors: malformed files, rationals, or vectors.
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error("ParseError", what) {}
};

// Check errors: a cross-validated identity failed. These falsify the run and
// are never converted into a silent negative result.
class CheckError : public Error {
    using Error::Error;
};

struct TheoremViolation : CheckError {
    explicit TheoremViolation(const std::string& what)
        : CheckError("TheoremViolation", what) {}
};
struct PositivityContradiction : CheckError {
    explicit PositivityContradiction(const std::string& what)
        : CheckError("PositivityContradiction", what) {}
};
struct ValidationFailure : CheckError {
    explicit ValidationFailure(const std::string& what)
        : CheckError("ValidationFailure", what) {}
};
struct SearchExhausted : CheckError {
    explicit SearchExhausted(const std::string& what)
        : CheckError("SearchExhausted", what) {}
};

// Internal invariant breakage (certificate self-check failed, etc.).
struct InternalError : Error {
    explicit InternalError(const std::string& what)
        : Error("InternalError", what) {}
};

} // namespace ordercone
