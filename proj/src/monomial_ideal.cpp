#include "multideal/monomial_ideal.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "multideal/errors.hpp"

namespace multideal {

namespace {

void require_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.variables() != b.variables()) throw DomainError("ideals live in different rings");
}

bool valid_name(const std::string& name) {
    if (name.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
    return std::ranges::all_of(name, [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

} // namespace

std::vector<ExponentVector> minimalize(std::vector<ExponentVector> gens) {
    if (gens.empty()) return gens;
    const auto n = gens.front().size();
    for (const auto& g : gens)
        if (g.size() != n) throw DomainError("generators of mixed dimension");

    // After grlex sorting a divisor always precedes its multiples.
    std::ranges::sort(gens, grlex_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<ExponentVector> kept;
    for (auto& g : gens) {
        const bool redundant = std::ranges::any_of(kept, [&](const auto& k) { return k.divides(g); });
        if (!redundant) kept.push_back(std::move(g));
    }
    return kept;
}

MonomialIdeal::MonomialIdeal(std::vector<std::string> variables, std::vector<ExponentVector> generators)
    : variables_(std::move(variables)) {
    for (const auto& v : variables_)
        if (!valid_name(v)) throw ParseError("invalid variable name '" + v + "'");
    if (std::set<std::string>(variables_.begin(), variables_.end()).size() != variables_.size())
        throw ParseError("duplicate variable names");
    for (const auto& g : generators)
        if (g.size() != variables_.size())
            throw DomainError("generator of dimension " + std::to_string(g.size()) + " in a ring with " +
                              std::to_string(variables_.size()) + " variables");
    generators_ = minimalize(std::move(generators));
}

MonomialIdeal MonomialIdeal::unit(std::vector<std::string> variables) {
    const auto n = variables.size();
    return MonomialIdeal(std::move(variables), {ExponentVector(n)});
}

MonomialIdeal MonomialIdeal::zero(std::vector<std::string> variables) {
    return MonomialIdeal(std::move(variables), {});
}

MonomialIdeal MonomialIdeal::parse(std::vector<std::string> variables,
                                   const std::vector<std::string>& generators) {
    std::vector<ExponentVector> gens;
    gens.reserve(generators.size());
    for (const auto& g : generators) gens.push_back(parse_monomial(g, variables));
    return MonomialIdeal(std::move(variables), std::move(gens));
}

std::vector<std::string> MonomialIdeal::generator_strings() const {
    std::vector<std::string> out;
    out.reserve(generators_.size());
    for (const auto& g : generators_) out.push_back(format_monomial(g, variables_));
    return out;
}

std::string MonomialIdeal::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (const auto& s : generator_strings()) {
        if (!out.empty()) out += ", ";
        out += s;
    }
    return out;
}

bool contains_monomial(const MonomialIdeal& ideal, const ExponentVector& v) {
    if (v.size() != ideal.dimension()) throw DomainError("monomial dimension does not match ideal");
    return std::ranges::any_of(ideal.generators(), [&](const auto& g) { return g.divides(v); });
}

MonomialIdeal quotient_by_monomial(const MonomialIdeal& ideal, const ExponentVector& m) {
    if (m.size() != ideal.dimension()) throw DomainError("monomial dimension does not match ideal");
    std::vector<ExponentVector> gens;
    gens.reserve(ideal.generators().size());
    for (const auto& g : ideal.generators()) gens.push_back(saturating_sub(g, m));
    return MonomialIdeal(ideal.variables(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ring(a, b);
    std::vector<ExponentVector> gens;
    gens.reserve(a.generators().size() * b.generators().size());
    for (const auto& g : a.generators())
        for (const auto& h : b.generators()) gens.push_back(g + h);
    return MonomialIdeal(a.variables(), std::move(gens));
}

bool is_subideal(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ring(a, b);
    return std::ranges::all_of(a.generators(), [&](const auto& g) { return contains_monomial(b, g); });
}

} // namespace multideal
