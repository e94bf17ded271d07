#pragma once

#include <stdexcept>
#include <string>

namespace mzv {

/// Malformed textual input (words, compositions, polynomials, numbers).
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An argument outside an operation's domain, e.g. n > N or a word that is
/// not a product of z-letters.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Request to evaluate a non-admissible (divergent) multiple zeta value.
class DivergentError : public DomainError {
public:
    DivergentError() : DomainError("divergent: k1 must be ≥ 2") {}
};

}  // namespace mzv
