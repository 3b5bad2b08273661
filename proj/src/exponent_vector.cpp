#include "multideal/exponent_vector.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "multideal/errors.hpp"

namespace multideal {

namespace {

void require_same_size(const ExponentVector& a, const ExponentVector& b) {
    if (a.size() != b.size())
        throw DomainError("exponent vectors of dimension " + std::to_string(a.size()) + " and " +
                          std::to_string(b.size()));
}

} // namespace

ExponentVector::ExponentVector(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {
    if (std::ranges::any_of(entries_, [](auto e) { return e < 0; }))
        throw DomainError("negative entry in exponent vector");
}

ExponentVector ExponentVector::ones(std::size_t dimension) {
    return ExponentVector(std::vector<std::int64_t>(dimension, 1));
}

std::int64_t ExponentVector::degree() const {
    std::int64_t d = 0;
    for (auto e : entries_) d += e;
    return d;
}

bool ExponentVector::is_zero() const {
    return std::ranges::all_of(entries_, [](auto e) { return e == 0; });
}

bool ExponentVector::divides(const ExponentVector& other) const {
    require_same_size(*this, other);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i] > other.entries_[i]) return false;
    return true;
}

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
    require_same_size(a, b);
    ExponentVector r = a;
    for (std::size_t i = 0; i < r.entries_.size(); ++i) r.entries_[i] += b.entries_[i];
    return r;
}

ExponentVector saturating_sub(const ExponentVector& a, const ExponentVector& b) {
    require_same_size(a, b);
    ExponentVector r = a;
    for (std::size_t i = 0; i < r.entries_.size(); ++i)
        r.entries_[i] = std::max<std::int64_t>(a.entries_[i] - b.entries_[i], 0);
    return r;
}

bool grlex_less(const ExponentVector& a, const ExponentVector& b) {
    const auto da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return std::ranges::lexicographical_compare(b.entries(), a.entries());
}

std::string format_monomial(const ExponentVector& v, std::span<const std::string> variables) {
    if (v.size() != variables.size()) throw DomainError("monomial dimension does not match variables");
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += variables[i];
        if (v[i] > 1) out += '^' + std::to_string(v[i]);
    }
    return out.empty() ? "1" : out;
}

ExponentVector parse_monomial(std::string_view text, std::span<const std::string> variables) {
    std::vector<std::int64_t> exps(variables.size(), 0);
    const std::string whole(text);

    auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
    std::size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && is_space(text[pos])) ++pos; };
    auto fail = [&](const std::string& token, const std::string& why) -> ParseError {
        return ParseError(why + " '" + token + "' in monomial '" + whole + "'");
    };

    skip_ws();
    if (pos == text.size()) throw ParseError("empty monomial");
    if (text[pos] == '1') {
        std::size_t end = pos + 1;
        while (end < text.size() && is_space(text[end])) ++end;
        if (end == text.size()) return ExponentVector(std::move(exps));
    }

    while (true) {
        skip_ws();
        const std::size_t start = pos;
        if (pos < text.size() && (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                ++pos;
        }
        if (pos == start) {
            const std::string token = pos < text.size() ? std::string(1, text[pos]) : "<end>";
            throw fail(token, "expected variable name, found");
        }
        const std::string name(text.substr(start, pos - start));
        const auto it = std::ranges::find(variables, name);
        if (it == variables.end()) throw fail(name, "unknown variable");

        std::int64_t power = 1;
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            skip_ws();
            const std::size_t num_start = pos;
            if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            const std::string literal(text.substr(num_start, pos - num_start));
            if (literal.empty() || literal == "-" || literal == "+")
                throw fail(name + "^", "missing exponent after");
            if (literal.front() == '-' || literal.find_first_not_of('0', literal.front() == '+') == std::string::npos)
                throw fail(literal, "exponent must be positive, got");
            if (literal.size() > 15) throw fail(literal, "exponent too large");
            power = std::stoll(literal);
        }
        exps[static_cast<std::size_t>(it - variables.begin())] += power;

        skip_ws();
        if (pos == text.size()) break;
        if (text[pos] != '*') throw fail(std::string(1, text[pos]), "unexpected token");
        ++pos;
    }
    return ExponentVector(std::move(exps));
}

} // namespace multideal
