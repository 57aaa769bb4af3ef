#pragma once

#include <stdexcept>
#include <string>

namespace ribbongate {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input could not even be parsed (bad JSON, wrong tuple arity, ...).
struct MalformedInput : Error {
    explicit MalformedInput(const std::string& msg) : Error("malformed input: " + msg) {}
};

// Structurally broken diagram. Reason codes follow the validator.
enum class DiagramFault { DUPLICATE_ARC, OPEN_STRAND, SIGN_MISMATCH, NOT_PLANAR };

inline const char* to_string(DiagramFault f) {
    switch (f) {
        case DiagramFault::DUPLICATE_ARC: return "DUPLICATE_ARC";
        case DiagramFault::OPEN_STRAND: return "OPEN_STRAND";
        case DiagramFault::SIGN_MISMATCH: return "SIGN_MISMATCH";
        case DiagramFault::NOT_PLANAR: return "NOT_PLANAR";
    }
    return "UNKNOWN";
}

struct InvalidDiagram : Error {
    DiagramFault fault;
    InvalidDiagram(DiagramFault f, const std::string& msg)
        : Error(std::string("invalid diagram [") + to_string(f) + "]: " + msg), fault(f) {}
};

// A knot was required but the diagram has several components.
struct NotAKnot : Error {
    explicit NotAKnot(const std::string& msg) : Error("not a knot: " + msg) {}
};

struct BadParameter : Error {
    explicit BadParameter(const std::string& msg) : Error("bad parameter: " + msg) {}
};

struct NotSquare : Error {
    explicit NotSquare(const std::string& msg) : Error("matrix not square: " + msg) {}
};

struct ZeroPolynomial : Error {
    explicit ZeroPolynomial(const std::string& msg) : Error("zero polynomial: " + msg) {}
};

struct EvalAtZero : Error {
    explicit EvalAtZero(const std::string& msg) : Error("evaluation at zero: " + msg) {}
};

// Cobordism recipe composition errors.
struct EndMismatch : Error {
    explicit EndMismatch(const std::string& msg) : Error("end mismatch: " + msg) {}
};

struct NotAConcordance : Error {
    explicit NotAConcordance(const std::string& msg) : Error("not a concordance: " + msg) {}
};

struct MalformedRecipe : Error {
    explicit MalformedRecipe(const std::string& msg) : Error("malformed recipe: " + msg) {}
};

// A proposition's hypothesis does not hold for the given input.
struct HypothesisFailed : Error {
    explicit HypothesisFailed(const std::string& msg) : Error("hypothesis failed: " + msg) {}
};

// Internal cross-checks (dual-route computations) disagreeing is a bug, not
// a user error; keep it distinguishable from input problems.
struct InternalError : Error {
    explicit InternalError(const std::string& msg) : Error("internal error: " + msg) {}
};

}  // namespace ribbongate
