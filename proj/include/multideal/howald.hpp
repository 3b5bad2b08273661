#pragma once

#include <optional>
#include <vector>

#include "multideal/monomial_ideal.hpp"
#include "multideal/polyhedra.hpp"
#include "multideal/rational.hpp"

namespace multideal::howald {

/// min { c : x^v not in J(I^c) } together with every facet attaining it.
struct ThresholdResult {
    Rational value;
    std::vector<polyhedra::Facet> witnesses;
};

/// Interval of exponents with independently open or closed ends.
struct Interval {
    Rational lo;
    Rational hi;
    bool lo_open = true;
    bool hi_open = false;

    bool contains(const Rational& c) const;
};

/// (0, n] for an ideal in n variables.
Interval default_interval(const MonomialIdeal& ideal);

struct JumpingReport {
    std::vector<Rational> numbers;
    /// ideals[k] = J(I^numbers[k]).
    std::vector<MonomialIdeal> ideals;
    /// A monomial in J(I^(c - eps)) but not in J(I^c), one per jumping number.
    std::vector<ExponentVector> witnesses;
};

/// J(I^c) = (x^v : q A v >= b') : x^1, for I nonzero and c >= 0.
MonomialIdeal multiplier_ideal(const MonomialIdeal& ideal, const Rational& c);
MonomialIdeal multiplier_ideal(const MonomialIdeal& ideal, const polyhedra::NewtonPolyhedron& newton,
                               const Rational& c);

/// Membership straight from the inequalities: v + 1 lies strictly above
/// c * Newt(I) on every facet with nonzero offset.
bool in_multiplier_ideal(const MonomialIdeal& ideal, const ExponentVector& v, const Rational& c);
bool in_multiplier_ideal(const polyhedra::NewtonPolyhedron& newton, const ExponentVector& v, const Rational& c);

/// std::nullopt means the threshold is infinite (the unit ideal).
std::optional<ThresholdResult> threshold_of_monomial(const MonomialIdeal& ideal, const ExponentVector& v);

/// Log canonical threshold; throws DomainError for the zero or unit ideal.
Rational lct(const MonomialIdeal& ideal);

/// Values normal.w / offset for integer w >= 1 over facets with nonzero
/// offset, restricted to (0, hi], sorted and deduplicated.
std::vector<Rational> jumping_candidates(const polyhedra::NewtonPolyhedron& newton, const Rational& hi);

/// Jumping numbers in `interval` with their multiplier ideals. Each
/// candidate is confirmed by comparing J(I^c) with J at the midpoint below it.
JumpingReport jumping_numbers(const MonomialIdeal& ideal, const Interval& interval);

/// J(I^c) via Skoda: I^k * J(I^(c - k)) with c - k in [base - 1, base).
/// Requires c >= base >= number of variables.
MonomialIdeal skoda_extend(const MonomialIdeal& ideal, const Rational& c, const Rational& base);

} // namespace multideal::howald
