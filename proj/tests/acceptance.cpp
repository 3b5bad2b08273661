// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "multideal/howald.hpp"
#include "multideal/johnson.hpp"
#include "support/oracles.hpp"

using namespace multideal;
using multideal::testing::box_points;
using multideal::testing::HullOracle;
using multideal::testing::random_ideal;
using multideal::testing::random_rational;

namespace {

// Collects failure messages; a criterion passes when none were recorded.
class Checker {
public:
    void expect(bool ok, const std::string& what) {
        ++checks_;
        if (!ok && failures_.size() < 5) failures_.push_back(what);
        if (!ok) ++failed_;
    }
    bool ok() const { return failed_ == 0; }
    std::string summary() const {
        std::ostringstream s;
        s << checks_ << " checks";
        if (failed_) {
            s << ", " << failed_ << " failed:";
            for (const auto& f : failures_) s << " [" << f << "]";
        }
        return s.str();
    }

private:
    std::size_t checks_ = 0;
    std::size_t failed_ = 0;
    std::vector<std::string> failures_;
};

const std::vector<std::string> xyzw{"x", "y", "z", "w"};

MonomialIdeal paper_ideal() { return MonomialIdeal::parse(xyzw, {"x*y", "x*z", "y*z", "y*w", "z*w^2"}); }

double seconds_since(std::chrono::steady_clock::time_point t) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

// Fixed randomized suite shared by criteria 5-7: 8 ideals each in 2, 3 and 4 variables.
std::vector<MonomialIdeal> random_suite() {
    std::mt19937 rng(424242);
    std::vector<MonomialIdeal> out;
    for (std::size_t n = 2; n <= 4; ++n)
        for (int k = 0; k < 8; ++k) out.push_back(random_ideal(rng, n, 5, 3, 2));
    return out;
}

std::int64_t max_entry(const std::vector<ExponentVector>& gens) {
    std::int64_t m = 0;
    for (const auto& g : gens)
        for (auto e : g) m = std::max(m, e);
    return m;
}

void ac1(Checker& c) {
    const auto I = paper_ideal();
    const auto start = std::chrono::steady_clock::now();
    c.expect(howald::lct(I) == 2, "lct = 2");
    c.expect(howald::multiplier_ideal(I, Rational(7, 3)) == MonomialIdeal::parse(xyzw, {"y", "z*w", "z^2", "x*z"}),
             "J(I^7/3) = (y, zw, z^2, xz)");
    const auto report = howald::jumping_numbers(I, {0, 4, true, false});
    std::vector<Rational> expected;
    for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 1}, {7, 3}, {5, 2}, {8, 3}, {3, 1}, {10, 3}, {7, 2}, {11, 3}, {4, 1}})
        expected.emplace_back(BigInt(p), BigInt(q));
    c.expect(report.numbers == expected, "jumping numbers on (0,4]");
    const std::vector<MonomialIdeal> printed{
        MonomialIdeal::parse(xyzw, {"z", "y"}),
        MonomialIdeal::parse(xyzw, {"y", "z*w", "z^2", "x*z"}),
        MonomialIdeal::parse(xyzw, {"z*w", "y*w", "y*z", "x*z", "y^2", "x*y"}),
        MonomialIdeal::parse(xyzw, {"y*w", "y*z", "x*z", "y^2", "x*y", "z*w^2", "z^2*w"}),
        MonomialIdeal::parse(xyzw, {"y*z*w", "y^2*w", "y*z^2", "x*z^2", "y^2*z", "x*y*z", "x*y^2", "z^2*w^2"}),
    };
    for (std::size_t k = 0; k < printed.size(); ++k)
        c.expect(k < report.ideals.size() && report.ideals[k] == printed[k],
                 "ideal at jumping number #" + std::to_string(k + 1));
    c.expect(seconds_since(start) < 10.0, "runtime under 10 s");
}

void ac2(Checker& c) {
    const auto t = howald::threshold_of_monomial(paper_ideal(), {0, 0, 2, 1});
    c.expect(t.has_value() && t->value == 3, "threshold(z^2 w) = 3");
    const std::vector<polyhedra::Facet> witnesses{{{2, 2, 1, 1}, 3}, {{2, 2, 0, 1}, 2}};
    c.expect(t.has_value() && t->witnesses == witnesses, "witnesses {2x+2y+z+w >= 3, 2x+2y+w >= 2}");
}

void ac3(Checker& c) {
    c.expect(howald::lct(MonomialIdeal::parse({"x", "y"}, {"x^2", "x*y^2", "y^3"})) == Rational(5, 6),
             "lct(x^2, xy^2, y^3) = 5/6");
    c.expect(howald::lct(MonomialIdeal::parse({"x", "y", "z"}, {"x^2", "x*y", "y^5", "x*z^4"})) == Rational(21, 20),
             "lct(x^2, xy, y^5, xz^4) = 21/20");
}

void ac4(Checker& c) {
    using namespace johnson;
    c.expect(det_lct({4, 5, 2}) == 10, "det_lct(4,5,2) = 10");
    c.expect(det_lct({4, 5, 3}) == 6, "det_lct(4,5,3) = 6");
    c.expect(det_multiplier_ideal({4, 5, 2}, 10).factors == std::vector<SymbolicFactor>{{1, 1}}, "J(I_2^10) = I_1^(1)");
    c.expect(det_multiplier_ideal({4, 5, 2}, 11).factors == std::vector<SymbolicFactor>{{1, 3}}, "J(I_2^11) = I_1^(3)");
    const auto j = det_multiplier_ideal({4, 5, 3}, 6);
    c.expect(j.factors == std::vector<SymbolicFactor>{{2, 1}, {3, 1}}, "J(I_3^6) = I_2^(1) ∩ I_3^(1)");
    c.expect(redundant_factors(j) == std::vector<std::size_t>{0}, "I_2^(1) annotated redundant");
    c.expect(containment_annotation(j).ends_with("= I_3"), "annotation reduces to I_3");
}

void ac5(Checker& c, const std::vector<MonomialIdeal>& suite) {
    std::mt19937 rng(77);
    for (const auto& I : suite) {
        const auto newton = polyhedra::newton_polyhedron(I.generators());
        for (int k = 0; k < 12; ++k) {
            const auto exponent = random_rational(rng, 4, 6);
            const auto J = howald::multiplier_ideal(I, newton, exponent);
            const auto bound = std::max<std::int64_t>(max_entry(J.generators()), max_entry(I.generators())) + 1;
            for (const auto& v : box_points(I.dimension(), bound))
                c.expect(contains_monomial(J, v) == howald::in_multiplier_ideal(newton, v, exponent),
                         I.to_string() + " c=" + exponent.to_string() + " v=" + format_monomial(v, I.variables()));
        }
    }
}

void ac6(Checker& c, const std::vector<MonomialIdeal>& suite) {
    std::mt19937 rng(99);
    for (const auto& I : suite) {
        const auto name = I.to_string();
        const auto n = static_cast<long long>(I.dimension());
        const auto newton = polyhedra::newton_polyhedron(I.generators());
        c.expect(howald::multiplier_ideal(I, newton, 0).is_unit(), name + ": J(I^0) = (1)");
        c.expect(is_subideal(I, howald::multiplier_ideal(I, newton, 1)), name + ": I in J(I^1)");

        std::vector<Rational> grid;
        for (int k = 0; k < 10; ++k) grid.push_back(random_rational(rng, static_cast<int>(n) + 1, 5));
        std::ranges::sort(grid);
        for (std::size_t k = 0; k + 1 < grid.size(); ++k)
            c.expect(is_subideal(howald::multiplier_ideal(I, newton, grid[k + 1]),
                                 howald::multiplier_ideal(I, newton, grid[k])),
                     name + ": monotone at " + grid[k].to_string());

        const auto report = howald::jumping_numbers(I, howald::default_interval(I));
        for (std::size_t k = 0; k + 1 < report.numbers.size(); ++k) {
            const auto& a = report.numbers[k];
            const auto& b = report.numbers[k + 1];
            for (const auto& t : {(a + b) / Rational(2), a + (b - a) / Rational(7), b - (b - a) / Rational(11)})
                c.expect(howald::multiplier_ideal(I, newton, t) == report.ideals[k],
                         name + ": right-constant after " + a.to_string());
        }

        for (const auto& e : {Rational(n), Rational(3 * n + 1, 3), Rational(n + 1), Rational(2 * n + 3, 2), Rational(n + 2)})
            c.expect(howald::multiplier_ideal(I, newton, e) == product(I, howald::multiplier_ideal(I, newton, e - 1)),
                     name + ": Skoda at " + e.to_string());
    }
}

// Facet spans a face of dimension n - 1 (tight generators plus free coordinate directions).
bool spans_facet(const polyhedra::NewtonPolyhedron& p, const polyhedra::Facet& f) {
    std::vector<ExponentVector> tight;
    for (const auto& g : p.source_generators)
        if (f.evaluate(g) == f.offset) tight.push_back(g);
    if (tight.empty()) return false;
    testing::RMatrix dirs;
    for (std::size_t k = 1; k < tight.size(); ++k) {
        std::vector<Rational> d;
        for (std::size_t j = 0; j < p.dimension; ++j) d.emplace_back(tight[k][j] - tight[0][j]);
        dirs.push_back(d);
    }
    for (std::size_t j = 0; j < p.dimension; ++j) {
        if (f.normal[j] != 0) continue;
        std::vector<Rational> e(p.dimension, 0);
        e[j] = 1;
        dirs.push_back(e);
    }
    return testing::rank(dirs) == static_cast<int>(p.dimension) - 1;
}

void ac7(Checker& c, const std::vector<MonomialIdeal>& suite) {
    std::mt19937 rng(1234);
    for (const auto& I : suite) {
        const auto name = I.to_string();
        const auto p = polyhedra::newton_polyhedron(I.generators());
        for (const auto& f : p.facets) {
            std::int64_t g = 0;
            bool nonnegative = f.offset >= 0;
            for (auto a : f.normal) {
                g = std::gcd(g, a);
                nonnegative = nonnegative && a >= 0;
            }
            c.expect(g == 1 && nonnegative, name + ": primitive nonnegative facet");
            c.expect(std::ranges::all_of(I.generators(), [&](const auto& v) { return f.evaluate(v) >= f.offset; }),
                     name + ": facet sound");
            c.expect(std::ranges::any_of(I.generators(), [&](const auto& v) { return f.evaluate(v) == f.offset; }),
                     name + ": facet tight");
            c.expect(spans_facet(p, f), name + ": facet irredundant");
        }
        if (I.dimension() <= 3) {
            const HullOracle hull(I.generators());
            for (const auto& v : box_points(I.dimension(), max_entry(I.generators()) + 1)) {
                const bool in_system =
                    std::ranges::all_of(p.facets, [&](const auto& f) { return f.evaluate(v) >= f.offset; });
                c.expect(in_system == hull.contains({v.begin(), v.end()}), name + ": facet system complete");
            }
        }
        for (int k = 0; k < 4; ++k) {
            const auto exponent = random_rational(rng, 2, 4);
            const auto s = polyhedra::scale_system(p, exponent);
            const auto gens = polyhedra::minimal_lattice_generators(s);
            c.expect(minimalize(gens) == gens, name + ": lattice generators form an antichain");

            // Upward closure equals the solution set on the 10^n box.
            const MonomialIdeal closure(I.variables(), gens);
            for (const auto& v : box_points(s.dimension, 9))
                c.expect(contains_monomial(closure, v) == polyhedra::satisfies(s, v),
                         name + ": closure at c=" + exponent.to_string());

            c.expect(gens == testing::brute_force_minimal(s.dimension, s.rows, s.offsets),
                     name + ": lattice generators at c=" + exponent.to_string());
        }
    }
}

void ac8(Checker& c) {
    using namespace johnson;
    std::vector<std::size_t> p(9, 0);
    p[0] = 1;
    for (int part = 1; part <= 8; ++part)
        for (int s = part; s <= 8; ++s) p[static_cast<std::size_t>(s)] += p[static_cast<std::size_t>(s - part)];
    auto binomial = [](int n, int k) {
        std::size_t r = 1;
        for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
        return r;
    };

    for (int m = 1; m <= 5; ++m) {
        for (int n = 1; n <= 5; ++n) {
            for (int r = 1; r <= std::min(m, n); ++r) {
                const DeterminantalShape s{m, n, r};
                const auto tag = std::to_string(m) + "x" + std::to_string(n) + " r=" + std::to_string(r);
                const auto cands = det_jumping_candidates(s, {0, m * n, true, false});
                c.expect(!cands.empty() && cands.front().value == det_lct(s), tag + ": lct is least candidate");
                c.expect(det_multiplier_ideal(s, det_lct(s) - Rational(BigInt(1), BigInt(1000))).is_unit() &&
                             !det_multiplier_ideal(s, det_lct(s)).is_unit(),
                         tag + ": unit exactly below lct");
                auto previous = det_exponents(s, 0);
                for (int k = 1; k <= 6 * m * n; ++k) {
                    const auto now = det_exponents(s, Rational(BigInt(k), BigInt(6)));
                    for (std::size_t i = 0; i < now.size(); ++i)
                        c.expect(now[i] >= previous[i], tag + ": exponent monotone");
                    previous = now;
                }
                c.expect(minor_generators(s).size() == binomial(m, r) * binomial(n, r), tag + ": minor count");
            }
        }
    }
    for (int a = 1; a <= 8; ++a) {
        const auto e = symbolic_power_expansion({9, 9, 1}, 1, a);
        c.expect(e.partition_count == p[static_cast<std::size_t>(a)] && e.terms.size() == p[static_cast<std::size_t>(a)],
                 "p(" + std::to_string(a) + ") terms");
    }
}

} // namespace

int main() {
    const auto suite = random_suite();
    const std::vector<std::pair<std::string, std::function<void(Checker&)>>> criteria{
        {"AC1 worked four-variable example: lct, J(I^7/3), jumping numbers and ideals", ac1},
        {"AC2 threshold of z^2*w with witness facets", ac2},
        {"AC3 monomial lct values 5/6 and 21/20", ac3},
        {"AC4 determinantal lct and multiplier ideals (4x5, r = 2, 3)", ac4},
        {"AC5 generator route equals inequality oracle on 24 random ideals", [&](Checker& c) { ac5(c, suite); }},
        {"AC6 monotonicity, right-constancy, J(I^0), I in J(I), Skoda", [&](Checker& c) { ac6(c, suite); }},
        {"AC7 facet soundness, tightness, primitivity, irredundancy; lattice generators", [&](Checker& c) { ac7(c, suite); }},
        {"AC8 determinantal structure: lct, monotonicity, p(a), minor counts", ac8},
    };

    int failed = 0;
    for (const auto& [title, body] : criteria) {
        Checker checker;
        const auto start = std::chrono::steady_clock::now();
        try {
            body(checker);
        } catch (const std::exception& e) {
            checker.expect(false, std::string("exception: ") + e.what());
        }
        std::cout << (checker.ok() ? "PASS" : "FAIL") << "  " << title << "  (" << checker.summary() << ", "
                  << seconds_since(start) << " s)\n";
        if (!checker.ok()) ++failed;
    }
    std::cout << (failed == 0 ? "all acceptance criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
    return failed == 0 ? 0 : 1;
}
