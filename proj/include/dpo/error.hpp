#pragma once

#include <stdexcept>
#include <string>

namespace dpo {

/// Base class for all errors thrown by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Syntax error while reading the text format. Carries a 1-based line number.
struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& reason)
        : Error("parse error at line " + std::to_string(line_) + ": " + reason), line(line_) {}
};

/// Structurally ill-formed graph (self-loop, parallel edge, unknown id, ...).
struct InvalidGraph : Error {
    explicit InvalidGraph(const std::string& reason) : Error("invalid graph: " + reason) {}
};

/// Rule whose sections do not assemble into a well-formed span.
struct IllFormedRule : Error {
    explicit IllFormedRule(const std::string& reason) : Error("ill-formed rule: " + reason) {}
};

struct NotConnected : Error {
    NotConnected() : Error("graph is not connected") {}
};

struct EmptyUnion : Error {
    EmptyUnion() : Error("union graph has no components") {}
};

struct InvalidPermutation : Error {
    explicit InvalidPermutation(const std::string& reason) : Error("invalid permutation: " + reason) {}
};

struct IncomparableComponents : Error {
    IncomparableComponents() : Error("monomorphisms map components that are not rule-isomorphic") {}
};

struct GroupTooLarge : Error {
    explicit GroupTooLarge(const std::string& reason) : Error("group too large: " + reason) {}
};

struct InvalidMatch : Error {
    explicit InvalidMatch(const std::string& reason) : Error("invalid match: " + reason) {}
};

struct InvalidDerivation : Error {
    explicit InvalidDerivation(const std::string& reason) : Error("invalid derivation: " + reason) {}
};

struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& reason) : Error("budget exceeded: " + reason) {}
};

struct DuplicateIsomorphicInput : Error {
    DuplicateIsomorphicInput() : Error("input graphs must be pairwise non-isomorphic") {}
};

} // namespace dpo
