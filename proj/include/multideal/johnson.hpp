#pragma once

#include <cstdint>
#include <vector>

#include "multideal/exponent_vector.hpp"
#include "multideal/howald.hpp"
#include "multideal/rational.hpp"

namespace multideal::johnson {

/// Ideal of r x r minors of a generic m x n matrix.
struct DeterminantalShape {
    int m = 1;
    int n = 1;
    int r = 1;

    /// Throws DomainError unless 1 <= r <= min(m, n).
    void validate() const;
};

/// One factor I_size^(exponent) of a symbolic-power intersection.
struct SymbolicFactor {
    int minor_size = 0;
    std::int64_t exponent = 0;
    bool operator==(const SymbolicFactor&) const = default;
};

/// Formal intersection of symbolic powers, sorted by minor size. Factors
/// with exponent <= 0 are left out; no factors means the unit ideal.
struct SymbolicIntersection {
    std::vector<SymbolicFactor> factors;

    bool is_unit() const { return factors.empty(); }
    /// e.g. `I_2^(1) ∩ I_3^(1)`, or `(1)`.
    std::string to_string() const;
};

/// Indices of factors implied by another one through I_j^(b) ⊆ I_i^(a) for
/// j >= i and b >= a. Dropping them leaves the same ideal; nothing is rewritten.
std::vector<std::size_t> redundant_factors(const SymbolicIntersection& intersection);

/// Human-readable note on what the containment chain implies, or empty.
std::string containment_annotation(const SymbolicIntersection& intersection);

/// Exponents a_i = floor(c (r + 1 - i)) + 1 - (n - i + 1)(m - i + 1), i = 1..r.
std::vector<BigInt> det_exponents(const DeterminantalShape& shape, const Rational& c);

SymbolicIntersection det_multiplier_ideal(const DeterminantalShape& shape, const Rational& c);

/// min over i of (n - i + 1)(m - i + 1) / (r + 1 - i).
Rational det_lct(const DeterminantalShape& shape);

struct JumpingCandidate {
    Rational value;
    /// Minor sizes whose exponent steps up (to at least 1) at this value.
    std::vector<int> incrementing;
};

/// Values s / (r + 1 - i) with s >= (n - i + 1)(m - i + 1) inside the interval.
/// Candidates only: a step in a redundant factor does not change the ideal.
std::vector<JumpingCandidate> det_jumping_candidates(const DeterminantalShape& shape,
                                                    const howald::Interval& interval);

/// Terms of I_i^(a) = sum over partitions kappa of a of prod I_{i - 1 + kappa_j}.
struct FormalExpansion {
    int minor_size = 0;
    std::int64_t exponent = 0;
    /// Partitions of `exponent` before dropping terms with oversized minors.
    std::size_t partition_count = 0;
    /// Each term lists minor sizes in nonincreasing order.
    std::vector<std::vector<int>> terms;

    std::string to_string() const;
};

/// Partitions of a in decreasing-part order ({a}, {a-1,1}, ..., {1,...,1}).
std::vector<std::vector<int>> partitions(int a);

FormalExpansion symbolic_power_expansion(const DeterminantalShape& shape, int minor_size, std::int64_t exponent);

struct MinorTerm {
    int sign = 1;
    /// Over the m*n variables x_{i,j}, row-major.
    ExponentVector exponents;
};

struct MinorTermList {
    std::vector<int> rows;    // 1-based
    std::vector<int> columns; // 1-based
    std::vector<MinorTerm> terms;
};

/// Variable names x_i_j, row-major, matching MinorTerm::exponents.
std::vector<std::string> matrix_variables(const DeterminantalShape& shape);

/// Every r x r minor with its signed determinant expansion; rows and
/// columns range over r-subsets in lexicographic order.
std::vector<MinorTermList> minor_generators(const DeterminantalShape& shape);

} // namespace multideal::johnson
