#pragma once

#include <stdexcept>
#include <string>

namespace multideal {

/// Malformed textual input: monomials, rationals, ideal documents.
class ParseError : public std::invalid_argument {
public:
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

/// Input that parses but lies outside an operation's domain
/// (zero ideal, negative exponent, dimension mismatch, bad shape).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

} // namespace multideal
