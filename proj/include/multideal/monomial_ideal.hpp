#pragma once

#include <string>
#include <vector>

#include "multideal/exponent_vector.hpp"

namespace multideal {

/// Monomial ideal held as its minimal generating set in grlex order, so two
/// ideals are equal exactly when their generator lists are equal.
///
/// The unit ideal has the single generator 0; the zero ideal has none.
class MonomialIdeal {
public:
    /// Generators need not be minimal; they are minimalized and sorted.
    MonomialIdeal(std::vector<std::string> variables, std::vector<ExponentVector> generators);

    static MonomialIdeal unit(std::vector<std::string> variables);
    static MonomialIdeal zero(std::vector<std::string> variables);
    /// Parses each generator with parse_monomial.
    static MonomialIdeal parse(std::vector<std::string> variables,
                               const std::vector<std::string>& generators);

    const std::vector<std::string>& variables() const { return variables_; }
    const std::vector<ExponentVector>& generators() const { return generators_; }
    std::size_t dimension() const { return variables_.size(); }

    bool is_zero() const { return generators_.empty(); }
    bool is_unit() const { return generators_.size() == 1 && generators_.front().is_zero(); }

    std::vector<std::string> generator_strings() const;
    /// `y, x*z, z^2` style listing; `1` for the unit ideal, `0` for the zero ideal.
    std::string to_string() const;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    std::vector<std::string> variables_;
    std::vector<ExponentVector> generators_;
};

/// The <=-minimal elements, in grlex order. Throws DomainError on mixed dimensions.
std::vector<ExponentVector> minimalize(std::vector<ExponentVector> gens);

bool contains_monomial(const MonomialIdeal& ideal, const ExponentVector& v);

/// (I : x^m), generated by max(g - m, 0) over the generators g of I.
MonomialIdeal quotient_by_monomial(const MonomialIdeal& ideal, const ExponentVector& m);

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);

/// Inclusion a <= b of ideals: every generator of a lies in b.
bool is_subideal(const MonomialIdeal& a, const MonomialIdeal& b);

} // namespace multideal
