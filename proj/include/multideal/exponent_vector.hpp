#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace multideal {

/// Exponent vector of a monomial x^v; entries are nonnegative and the
/// length is fixed at construction.
class ExponentVector {
public:
    ExponentVector() = default;
    explicit ExponentVector(std::size_t dimension) : entries_(dimension, 0) {}
    explicit ExponentVector(std::vector<std::int64_t> entries);
    ExponentVector(std::initializer_list<std::int64_t> entries)
        : ExponentVector(std::vector<std::int64_t>(entries)) {}

    static ExponentVector ones(std::size_t dimension);

    std::size_t size() const { return entries_.size(); }
    std::int64_t operator[](std::size_t i) const { return entries_[i]; }
    std::span<const std::int64_t> entries() const { return entries_; }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    std::int64_t degree() const;
    bool is_zero() const;

    /// Componentwise order, i.e. x^this divides x^other.
    bool divides(const ExponentVector& other) const;

    friend ExponentVector operator+(const ExponentVector& a, const ExponentVector& b);
    /// max(a - b, 0) componentwise.
    friend ExponentVector saturating_sub(const ExponentVector& a, const ExponentVector& b);

    friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

private:
    std::vector<std::int64_t> entries_;
};

/// Graded lexicographic: lower degree first, ties broken so that the
/// lexicographically larger vector (more of the first variable) comes first.
bool grlex_less(const ExponentVector& a, const ExponentVector& b);

/// Render as a power product such as `x*z^2`, or `1` for the zero vector.
std::string format_monomial(const ExponentVector& v, std::span<const std::string> variables);

/// Reads a `*`-joined product of `name` / `name^k` factors, or the literal `1`.
/// Repeated names accumulate. Throws ParseError naming the offending token.
ExponentVector parse_monomial(std::string_view text, std::span<const std::string> variables);

} // namespace multideal
