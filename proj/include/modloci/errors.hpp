#pragma once

#include <stdexcept>
#include <string>

namespace modloci {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct UnknownVariable : Error {
    explicit UnknownVariable(const std::string& name)
        : Error("unknown variable: " + name) {}
};

struct NegativeExponent : Error {
    explicit NegativeExponent(const std::string& msg) : Error("negative exponent: " + msg) {}
};

struct ZeroPolynomial : Error {
    explicit ZeroPolynomial(const std::string& msg) : Error("zero polynomial: " + msg) {}
};

/// Thrown when a degree/step budget is exhausted.  Callers that produce
/// verdicts map this to "inconclusive", never to a silent answer.
struct ResourceLimit : Error {
    explicit ResourceLimit(const std::string& msg) : Error("resource limit: " + msg) {}
};

struct NotMonomialAndNotDeclared : Error {
    explicit NotMonomialAndNotDeclared(const std::string& msg)
        : Error("minimal primes unavailable: " + msg) {}
};

struct DeclaredDecompositionInconsistent : Error {
    explicit DeclaredDecompositionInconsistent(const std::string& msg)
        : Error("declared decomposition inconsistent: " + msg) {}
};

struct DecompositionUnavailable : Error {
    explicit DecompositionUnavailable(const std::string& msg)
        : Error("decomposition unavailable: " + msg) {}
};

struct NotCertifiedGorenstein : Error {
    explicit NotCertifiedGorenstein(const std::string& msg)
        : Error("ring is not a certified Gorenstein quotient: " + msg) {}
};

struct HypothesisNotCertified : Error {
    explicit HypothesisNotCertified(const std::string& msg)
        : Error("hypothesis not certified: " + msg) {}
};

/// A precondition gate: the statement under test does not apply.  This is
/// not a verdict.
struct HypothesisFailed : Error {
    explicit HypothesisFailed(const std::string& msg) : Error("hypothesis failed: " + msg) {}
};

struct WitnessNotFound : Error {
    explicit WitnessNotFound(const std::string& msg) : Error("witness not found: " + msg) {}
};

struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& msg)
        : Error("parse error at line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

struct ValidationError : Error {
    explicit ValidationError(const std::string& msg) : Error("validation error: " + msg) {}
};

}  // namespace modloci
