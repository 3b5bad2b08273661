#include "multideal/johnson.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

#include "multideal/errors.hpp"

namespace multideal::johnson {

namespace {

// (n - i + 1)(m - i + 1): codimension of I_i in the generic matrix.
std::int64_t codimension(const DeterminantalShape& s, int i) {
    return static_cast<std::int64_t>(s.n - i + 1) * (s.m - i + 1);
}

void require_nonnegative(const Rational& c) {
    if (c.sign() < 0) throw DomainError("negative exponent c = " + c.to_string());
}

void partitions_into(int remaining, int largest, std::vector<int>& current, std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    for (int part = std::min(remaining, largest); part >= 1; --part) {
        current.push_back(part);
        partitions_into(remaining - part, part, current, out);
        current.pop_back();
    }
}

std::vector<std::vector<int>> subsets(int size, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> pick(static_cast<std::size_t>(k));
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        out.push_back(pick);
        int i = k - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == size - k + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

int permutation_sign(const std::vector<int>& perm) {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

} // namespace

void DeterminantalShape::validate() const {
    if (m < 1 || n < 1) throw DomainError("matrix dimensions must be positive");
    if (r < 1 || r > std::min(m, n))
        throw DomainError("minor size " + std::to_string(r) + " is outside 1.." + std::to_string(std::min(m, n)));
}

std::string SymbolicIntersection::to_string() const {
    if (factors.empty()) return "(1)";
    std::string out;
    for (const auto& f : factors) {
        if (!out.empty()) out += " ∩ ";
        out += "I_" + std::to_string(f.minor_size) + "^(" + std::to_string(f.exponent) + ")";
    }
    return out;
}

std::vector<std::size_t> redundant_factors(const SymbolicIntersection& intersection) {
    std::vector<std::size_t> out;
    const auto& fs = intersection.factors;
    for (std::size_t k = 0; k < fs.size(); ++k) {
        for (std::size_t l = 0; l < fs.size(); ++l) {
            if (l == k) continue;
            if (fs[l].minor_size >= fs[k].minor_size && fs[l].exponent >= fs[k].exponent) {
                out.push_back(k);
                break;
            }
        }
    }
    return out;
}

std::string containment_annotation(const SymbolicIntersection& intersection) {
    const auto redundant = redundant_factors(intersection);
    if (redundant.empty()) return {};
    SymbolicIntersection kept;
    for (std::size_t k = 0; k < intersection.factors.size(); ++k)
        if (std::ranges::find(redundant, k) == redundant.end()) kept.factors.push_back(intersection.factors[k]);
    std::string note = "by I_j^(b) ⊆ I_i^(a) for j >= i, b >= a this equals " + kept.to_string();
    if (kept.factors.size() == 1 && kept.factors.front().exponent == 1)
        note += " = I_" + std::to_string(kept.factors.front().minor_size);
    return note;
}

std::vector<BigInt> det_exponents(const DeterminantalShape& shape, const Rational& c) {
    shape.validate();
    require_nonnegative(c);
    std::vector<BigInt> a;
    for (int i = 1; i <= shape.r; ++i)
        a.push_back((c * Rational(shape.r + 1 - i)).floor() + 1 - codimension(shape, i));
    return a;
}

SymbolicIntersection det_multiplier_ideal(const DeterminantalShape& shape, const Rational& c) {
    const auto a = det_exponents(shape, c);
    SymbolicIntersection out;
    for (int i = 1; i <= shape.r; ++i) {
        const auto& e = a[static_cast<std::size_t>(i - 1)];
        if (e >= 1) {
            if (e > std::numeric_limits<std::int64_t>::max()) throw DomainError("symbolic exponent overflow");
            out.factors.push_back({i, e.convert_to<std::int64_t>()});
        }
    }
    return out;
}

Rational det_lct(const DeterminantalShape& shape) {
    shape.validate();
    Rational best(codimension(shape, 1), shape.r);
    for (int i = 2; i <= shape.r; ++i) best = std::min(best, Rational(codimension(shape, i), shape.r + 1 - i));
    return best;
}

std::vector<JumpingCandidate> det_jumping_candidates(const DeterminantalShape& shape,
                                                    const howald::Interval& interval) {
    shape.validate();
    if (interval.lo.sign() < 0 || interval.lo >= interval.hi) throw DomainError("empty interval");

    std::map<Rational, std::vector<int>> found;
    for (int i = 1; i <= shape.r; ++i) {
        const int k = shape.r + 1 - i;
        const BigInt first = std::max<BigInt>(codimension(shape, i), (interval.lo * Rational(k)).floor());
        const BigInt last = (interval.hi * Rational(k)).floor();
        if (last - first > 10'000'000) throw DomainError("jumping interval too large");
        for (BigInt s = first; s <= last; ++s) {
            const Rational value(s, BigInt(k));
            if (interval.contains(value)) found[value].push_back(i);
        }
    }
    std::vector<JumpingCandidate> out;
    for (auto& [value, sizes] : found) out.push_back({value, std::move(sizes)});
    return out;
}

std::vector<std::vector<int>> partitions(int a) {
    if (a < 0) throw DomainError("partitions of a negative integer");
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    partitions_into(a, a, current, out);
    return out;
}

std::string FormalExpansion::to_string() const {
    std::string out;
    for (const auto& term : terms) {
        if (!out.empty()) out += " + ";
        std::string product;
        for (auto size : term) {
            if (!product.empty()) product += "*";
            product += "I_" + std::to_string(size);
        }
        out += product;
    }
    return out.empty() ? "0" : out;
}

FormalExpansion symbolic_power_expansion(const DeterminantalShape& shape, int minor_size, std::int64_t exponent) {
    shape.validate();
    const int cap = std::min(shape.m, shape.n);
    if (minor_size < 1 || minor_size > cap)
        throw DomainError("minor size " + std::to_string(minor_size) + " is outside 1.." + std::to_string(cap));
    if (exponent < 1) throw DomainError("symbolic power exponent must be at least 1");
    if (exponent > 60) throw DomainError("symbolic power exponent too large to expand");

    FormalExpansion out;
    out.minor_size = minor_size;
    out.exponent = exponent;
    const auto parts = partitions(static_cast<int>(exponent));
    out.partition_count = parts.size();
    for (const auto& kappa : parts) {
        std::vector<int> term;
        for (auto k : kappa) term.push_back(minor_size - 1 + k);
        // Minors larger than the matrix vanish, and so does the whole product.
        if (term.front() > cap) continue;
        out.terms.push_back(std::move(term));
    }
    return out;
}

std::vector<std::string> matrix_variables(const DeterminantalShape& shape) {
    std::vector<std::string> names;
    for (int i = 1; i <= shape.m; ++i)
        for (int j = 1; j <= shape.n; ++j) names.push_back("x_" + std::to_string(i) + "_" + std::to_string(j));
    return names;
}

std::vector<MinorTermList> minor_generators(const DeterminantalShape& shape) {
    shape.validate();
    const auto nvars = static_cast<std::size_t>(shape.m) * static_cast<std::size_t>(shape.n);
    std::vector<int> identity(static_cast<std::size_t>(shape.r));
    std::iota(identity.begin(), identity.end(), 0);

    std::vector<MinorTermList> out;
    const auto row_sets = subsets(shape.m, shape.r);
    const auto col_sets = subsets(shape.n, shape.r);
    for (const auto& rows : row_sets) {
        for (const auto& cols : col_sets) {
            MinorTermList minor;
            for (auto i : rows) minor.rows.push_back(i + 1);
            for (auto j : cols) minor.columns.push_back(j + 1);
            auto perm = identity;
            do {
                std::vector<std::int64_t> e(nvars, 0);
                for (std::size_t k = 0; k < perm.size(); ++k) {
                    const auto row = static_cast<std::size_t>(rows[k]);
                    const auto col = static_cast<std::size_t>(cols[static_cast<std::size_t>(perm[k])]);
                    e[row * static_cast<std::size_t>(shape.n) + col] = 1;
                }
                minor.terms.push_back({permutation_sign(perm), ExponentVector(std::move(e))});
            } while (std::next_permutation(perm.begin(), perm.end()));
            out.push_back(std::move(minor));
        }
    }
    return out;
}

} // namespace multideal::johnson
