#include "multideal/rational.hpp"

#include <cctype>
#include <ostream>

#include "multideal/errors.hpp"

namespace multideal {

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    if (i == text.size())
        throw ParseError("malformed rational '" + std::string(whole) + "'");
    BigInt value = 0;
    for (; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw ParseError("malformed rational '" + std::string(whole) + "'");
        value = value * 10 + (text[i] - '0');
    }
    return negative ? BigInt(-value) : value;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

} // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    if (den < 0) value_ = boost::multiprecision::cpp_rational(BigInt(-num), BigInt(-den));
    else value_ = boost::multiprecision::cpp_rational(num, den);
}

Rational Rational::parse(std::string_view text) {
    const auto whole = trim(text);
    const auto slash = whole.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(whole, whole));
    const auto num = parse_integer(trim(whole.substr(0, slash)), whole);
    const auto den_text = trim(whole.substr(slash + 1));
    if (!den_text.empty() && (den_text.front() == '+' || den_text.front() == '-'))
        throw ParseError("malformed rational '" + std::string(whole) + "'");
    const auto den = parse_integer(den_text, whole);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(whole) + "'");
    return Rational(num, den);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.sign() == 0) throw DomainError("division by zero");
    value_ /= o.value_;
    return *this;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
    return q;
}

BigInt Rational::floor() const { return floor_div(numerator(), denominator()); }
BigInt Rational::ceil() const { return ceil_div(numerator(), denominator()); }

std::string Rational::to_string() const {
    if (is_integer()) return numerator().str();
    return numerator().str() + "/" + denominator().str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

} // namespace multideal
