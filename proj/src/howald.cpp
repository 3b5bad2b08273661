#include "multideal/howald.hpp"

#include <algorithm>
#include <set>

#include "multideal/errors.hpp"

namespace multideal::howald {

namespace {

void require_nonzero(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) throw DomainError("multiplier ideals of the zero ideal are undefined");
}

void require_nonnegative(const Rational& c) {
    if (c.sign() < 0) throw DomainError("negative exponent c = " + c.to_string());
}

Rational dot_rational(const polyhedra::Facet& f, const ExponentVector& v) { return Rational(f.evaluate(v)); }

} // namespace

bool Interval::contains(const Rational& c) const {
    const bool above = lo_open ? c > lo : c >= lo;
    const bool below = hi_open ? c < hi : c <= hi;
    return above && below;
}

Interval default_interval(const MonomialIdeal& ideal) {
    return Interval{0, static_cast<long long>(ideal.dimension()), true, false};
}

MonomialIdeal multiplier_ideal(const MonomialIdeal& ideal, const polyhedra::NewtonPolyhedron& newton,
                               const Rational& c) {
    require_nonzero(ideal);
    require_nonnegative(c);
    const auto system = polyhedra::scale_system(newton, c);
    const MonomialIdeal interior(ideal.variables(), polyhedra::minimal_lattice_generators(system));
    return quotient_by_monomial(interior, ExponentVector::ones(ideal.dimension()));
}

MonomialIdeal multiplier_ideal(const MonomialIdeal& ideal, const Rational& c) {
    require_nonzero(ideal);
    require_nonnegative(c);
    return multiplier_ideal(ideal, polyhedra::newton_polyhedron(ideal.generators()), c);
}

bool in_multiplier_ideal(const MonomialIdeal& ideal, const ExponentVector& v, const Rational& c) {
    require_nonzero(ideal);
    require_nonnegative(c);
    if (v.size() != ideal.dimension()) throw DomainError("monomial dimension does not match ideal");
    return in_multiplier_ideal(polyhedra::newton_polyhedron(ideal.generators()), v, c);
}

bool in_multiplier_ideal(const polyhedra::NewtonPolyhedron& newton, const ExponentVector& v, const Rational& c) {
    require_nonnegative(c);
    if (v.size() != newton.dimension) throw DomainError("monomial dimension does not match polyhedron");
    const auto shifted = v + ExponentVector::ones(v.size());
    return std::ranges::all_of(newton.facets, [&](const polyhedra::Facet& f) {
        return f.offset == 0 || dot_rational(f, shifted) > c * Rational(f.offset);
    });
}

std::optional<ThresholdResult> threshold_of_monomial(const MonomialIdeal& ideal, const ExponentVector& v) {
    require_nonzero(ideal);
    if (v.size() != ideal.dimension()) throw DomainError("monomial dimension does not match ideal");
    const auto shifted = v + ExponentVector::ones(v.size());
    const auto newton = polyhedra::newton_polyhedron(ideal.generators());

    std::optional<ThresholdResult> best;
    for (const auto& f : newton.facets) {
        if (f.offset == 0) continue;
        const Rational value = dot_rational(f, shifted) / Rational(f.offset);
        if (!best || value < best->value) {
            best = ThresholdResult{value, {f}};
        } else if (value == best->value) {
            best->witnesses.push_back(f);
        }
    }
    return best;
}

Rational lct(const MonomialIdeal& ideal) {
    const auto t = threshold_of_monomial(ideal, ExponentVector(ideal.dimension()));
    if (!t) throw DomainError("the unit ideal has infinite log canonical threshold");
    return t->value;
}

std::vector<Rational> jumping_candidates(const polyhedra::NewtonPolyhedron& newton, const Rational& hi) {
    std::set<Rational> values;
    for (const auto& f : newton.facets) {
        if (f.offset == 0) continue;
        const auto limit_big = (hi * Rational(f.offset)).floor();
        std::int64_t base = 0;
        for (auto a : f.normal) base += a;
        if (limit_big < base) continue;
        if (limit_big - base > 50'000'000) throw DomainError("jumping interval too large");
        const auto limit = limit_big.convert_to<std::int64_t>();

        // Sums normal . w over w >= 1: the all-ones sum plus any
        // nonnegative combination of the positive normal entries.
        std::vector<char> reachable(static_cast<std::size_t>(limit - base + 1), 0);
        reachable[0] = 1;
        for (auto a : f.normal) {
            if (a <= 0) continue;
            for (std::size_t s = static_cast<std::size_t>(a); s < reachable.size(); ++s)
                if (reachable[s - static_cast<std::size_t>(a)]) reachable[s] = 1;
        }
        for (std::size_t s = 0; s < reachable.size(); ++s)
            if (reachable[s]) values.insert(Rational(BigInt(base + static_cast<std::int64_t>(s)), BigInt(f.offset)));
    }
    return {values.begin(), values.end()};
}

JumpingReport jumping_numbers(const MonomialIdeal& ideal, const Interval& interval) {
    require_nonzero(ideal);
    if (interval.lo.sign() < 0 || interval.lo >= interval.hi)
        throw DomainError("empty interval");
    JumpingReport report;
    if (ideal.is_unit()) return report;

    const auto newton = polyhedra::newton_polyhedron(ideal.generators());
    const auto candidates = jumping_candidates(newton, interval.hi);
    Rational previous = 0;
    for (const auto& c : candidates) {
        if (interval.contains(c)) {
            const auto at = multiplier_ideal(ideal, newton, c);
            const auto below = multiplier_ideal(ideal, newton, (previous + c) / Rational(2));
            if (at != below) {
                const auto lost = std::ranges::find_if(
                    below.generators(), [&](const auto& g) { return !contains_monomial(at, g); });
                report.numbers.push_back(c);
                report.ideals.push_back(at);
                report.witnesses.push_back(*lost);
            }
        }
        previous = c;
    }
    return report;
}

MonomialIdeal skoda_extend(const MonomialIdeal& ideal, const Rational& c, const Rational& base) {
    require_nonzero(ideal);
    if (base < Rational(static_cast<long long>(ideal.dimension())))
        throw DomainError("Skoda base " + base.to_string() + " is below the number of variables");
    if (c < base) throw DomainError("exponent " + c.to_string() + " is below the Skoda base " + base.to_string());

    const BigInt steps = (c - base).floor() + 1;
    const auto newton = polyhedra::newton_polyhedron(ideal.generators());
    auto result = multiplier_ideal(ideal, newton, c - Rational(steps));
    for (BigInt k = 0; k < steps; ++k) result = product(ideal, result);
    return result;
}

} // namespace multideal::howald
