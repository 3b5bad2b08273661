#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "multideal/errors.hpp"
#include "multideal/monomial_ideal.hpp"
#include "multideal/rational.hpp"
#include "support/oracles.hpp"

using namespace multideal;
using multideal::testing::box_points;
using multideal::testing::random_ideal;

namespace {

const std::vector<std::string> xy{"x", "y"};
const std::vector<std::string> xyz{"x", "y", "z"};

MonomialIdeal ideal(const std::vector<std::string>& vars, const std::vector<std::string>& gens) {
    return MonomialIdeal::parse(vars, gens);
}

std::int64_t max_entry(const MonomialIdeal& a) {
    std::int64_t m = 0;
    for (const auto& g : a.generators())
        for (auto e : g) m = std::max(m, e);
    return m;
}

} // namespace

TEST_CASE("rational arithmetic stays in lowest terms") {
    const Rational a(BigInt(6), BigInt(-4));
    CHECK(a.numerator() == -3);
    CHECK(a.denominator() == 2);
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(7, 3) * Rational(3)) == Rational(7));
    CHECK(Rational(7, 3).floor() == 2);
    CHECK(Rational(7, 3).ceil() == 3);
    CHECK(Rational(-7, 3).floor() == -3);
    CHECK(Rational(-7, 3).ceil() == -2);
    CHECK(Rational(6).floor() == 6);
    CHECK(Rational(5, 6) < Rational(6, 7));
    CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
}

TEST_CASE("rational parsing and printing") {
    CHECK(Rational::parse("7/3") == Rational(7, 3));
    CHECK(Rational::parse(" 14/6 ") == Rational(7, 3));
    CHECK(Rational::parse("-2") == Rational(-2));
    CHECK(Rational::parse("21/20").to_string() == "21/20");
    CHECK(Rational::parse("10/5").to_string() == "2");
    CHECK(Rational::parse("123456789012345678901234567890/3").to_string() == "41152263004115226300411522630");
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("x"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/-2"), ParseError);
    CHECK_THROWS_AS(Rational::parse(""), ParseError);
}

TEST_CASE("parse_monomial") {
    CHECK(parse_monomial("x*y^2", xyz) == ExponentVector{1, 2, 0});
    CHECK(parse_monomial("1", xyz) == ExponentVector{0, 0, 0});
    CHECK(parse_monomial("x^2*x", xy) == ExponentVector{3, 0});
    CHECK(parse_monomial(" z * x ^ 3 ", xyz) == ExponentVector{3, 0, 1});

    SUBCASE("errors name the offending token") {
        auto message = [](std::string_view text, const std::vector<std::string>& vars) {
            try {
                parse_monomial(text, vars);
            } catch (const ParseError& e) {
                return std::string(e.what());
            }
            return std::string();
        };
        CHECK(message("x*q", xy).find("'q'") != std::string::npos);
        CHECK(message("x^0", xy).find("'0'") != std::string::npos);
        CHECK(message("x^-2", xy).find("'-2'") != std::string::npos);
        CHECK(message("x+y", xy).find("'+'") != std::string::npos);
        CHECK(!message("x*", xy).empty());
        CHECK(!message("x^", xy).empty());
        CHECK(!message("", xy).empty());
        CHECK(!message("2*x", xy).empty());
    }
}

TEST_CASE("minimalize") {
    CHECK(minimalize({{2, 0}, {3, 0}, {0, 1}}) == std::vector<ExponentVector>{{0, 1}, {2, 0}});
    CHECK(minimalize({}).empty());
    const auto antichain = minimalize({{1, 1}, {2, 0}, {0, 2}});
    CHECK(antichain.size() == 3);
    CHECK_THROWS_AS(minimalize({{1, 0}, {1, 0, 0}}), DomainError);
}

TEST_CASE("canonical generator order is graded lex") {
    const auto I = ideal({"x", "y", "z", "w"}, {"z*w", "y", "z^2", "x*z"});
    CHECK(I.to_string() == "y, x*z, z^2, z*w");
    CHECK(MonomialIdeal::unit(xy).to_string() == "1");
    CHECK(MonomialIdeal::zero(xy).to_string() == "0");
    CHECK(ideal(xy, {"x^3", "x*y", "1"}).is_unit());
}

TEST_CASE("ideal construction rejects bad rings") {
    CHECK_THROWS_AS(MonomialIdeal({"x", "x"}, {}), ParseError);
    CHECK_THROWS_AS(MonomialIdeal({"x", "2y"}, {}), ParseError);
    CHECK_THROWS_AS(MonomialIdeal(xy, {ExponentVector{1, 2, 3}}), DomainError);
    CHECK_THROWS_AS(ExponentVector({1, -1}), DomainError);
}

TEST_CASE("quotient_by_monomial") {
    const auto I = ideal(xy, {"x^2*y", "y^3"});
    const auto Q = quotient_by_monomial(I, {1, 1});
    CHECK(Q == ideal(xy, {"x", "y^2"}));
    // Brute-force membership on a box: v in (I : x^m) iff v + m in I.
    for (const auto& v : box_points(2, 5))
        CHECK(contains_monomial(Q, v) == contains_monomial(I, v + ExponentVector{1, 1}));

    CHECK(quotient_by_monomial(I, {0, 0}) == I);
    CHECK(quotient_by_monomial(ideal(xy, {"x"}), {1, 0}).is_unit());
    CHECK_THROWS_AS(quotient_by_monomial(I, {1, 1, 1}), DomainError);
}

TEST_CASE("product") {
    const auto m = ideal(xy, {"x", "y"});
    CHECK(product(m, m) == ideal(xy, {"x^2", "x*y", "y^2"}));
    const auto I = ideal(xy, {"x^2", "y^3"});
    CHECK(product(I, MonomialIdeal::unit(xy)) == I);
    CHECK(product(I, MonomialIdeal::zero(xy)).is_zero());
    CHECK_THROWS_AS(product(I, MonomialIdeal::unit(xyz)), DomainError);
}

TEST_CASE("contains_monomial") {
    const auto I = ideal(xy, {"x^2", "y^3"});
    CHECK(contains_monomial(I, {3, 0}));
    CHECK_FALSE(contains_monomial(I, {1, 2}));
    CHECK(contains_monomial(MonomialIdeal::unit(xy), {0, 0}));
    CHECK_FALSE(contains_monomial(MonomialIdeal::zero(xy), {5, 5}));
    CHECK_THROWS_AS(contains_monomial(I, {1}), DomainError);
}

TEST_CASE("property: ideal operations on random ideals") {
    std::mt19937 rng(20240607);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(trial % 2);
        const auto I = random_ideal(rng, n, 4, 3);
        const auto J = random_ideal(rng, n, 4, 3);
        const auto K = random_ideal(rng, n, 3, 2);
        const std::int64_t bound = max_entry(I) + max_entry(J) + max_entry(K) + 1;
        const auto box = box_points(n, bound);

        // Structural equality agrees with monomial-by-monomial equality.
        bool same = true;
        for (const auto& v : box) same = same && contains_monomial(I, v) == contains_monomial(J, v);
        CHECK(same == (I == J));

        // minimalize: idempotent and order independent.
        auto gens = I.generators();
        CHECK(minimalize(gens) == gens);
        std::shuffle(gens.begin(), gens.end(), rng);
        gens.push_back(gens.front() + ExponentVector::ones(n));
        CHECK(minimalize(gens) == I.generators());

        CHECK(product(I, J) == product(J, I));
        CHECK(product(product(I, J), K) == product(I, product(J, K)));

        const auto m = K.generators().front();
        const auto Q = quotient_by_monomial(I, m);
        for (const auto& v : box_points(n, max_entry(I) + 1))
            CHECK(contains_monomial(Q, v) == contains_monomial(I, v + m));
    }
}
