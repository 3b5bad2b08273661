#include "multideal/polyhedra.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include <boost/dynamic_bitset.hpp>

#include "multideal/errors.hpp"

namespace multideal::polyhedra {

namespace {

using Vec = std::vector<BigInt>;

struct Ray {
    Vec coords;
    boost::dynamic_bitset<> tight;
};

BigInt dot(const Vec& a, const Vec& b) {
    BigInt s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

void make_primitive(Vec& v) {
    BigInt g = 0;
    for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
    if (g > 1)
        for (auto& x : v) x /= g;
}

std::int64_t to_int64(const BigInt& x) {
    if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
        throw DomainError("integer overflow in polyhedral computation");
    return x.convert_to<std::int64_t>();
}

// Extreme rays of { a : h . a >= 0 for every h in constraints }, where the
// first d constraints are linearly independent and their dual basis is
// supplied as `initial`.
std::vector<Ray> double_description(const std::vector<Vec>& constraints, std::vector<Ray> rays,
                                    std::size_t first_unprocessed) {
    const std::size_t d = constraints.front().size();
    for (std::size_t k = first_unprocessed; k < constraints.size(); ++k) {
        const auto& h = constraints[k];
        std::vector<BigInt> value(rays.size());
        std::vector<std::size_t> pos, zero, neg;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            value[r] = dot(h, rays[r].coords);
            const int s = value[r].sign();
            (s > 0 ? pos : s < 0 ? neg : zero).push_back(r);
        }
        if (neg.empty()) {
            for (auto r : zero) rays[r].tight.set(k);
            continue;
        }

        std::vector<Ray> next;
        next.reserve(pos.size() + zero.size());
        for (auto r : pos) next.push_back(rays[r]);
        for (auto r : zero) {
            next.push_back(rays[r]);
            next.back().tight.set(k);
        }
        for (auto p : pos) {
            for (auto q : neg) {
                const auto common = rays[p].tight & rays[q].tight;
                if (common.count() + 2 < d) continue;
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
                    if (r != p && r != q && common.is_subset_of(rays[r].tight)) adjacent = false;
                if (!adjacent) continue;

                Ray ray;
                ray.coords.resize(d);
                for (std::size_t i = 0; i < d; ++i)
                    ray.coords[i] = value[p] * rays[q].coords[i] - value[q] * rays[p].coords[i];
                make_primitive(ray.coords);
                ray.tight = common;
                ray.tight.set(k);
                next.push_back(std::move(ray));
            }
        }
        rays = std::move(next);
    }
    return rays;
}

bool checked_mul(std::int64_t a, std::int64_t b, std::int64_t& out) {
    return !__builtin_mul_overflow(a, b, &out);
}

} // namespace

std::int64_t Facet::evaluate(const ExponentVector& v) const {
    if (v.size() != normal.size()) throw DomainError("point dimension does not match facet");
    std::int64_t s = 0;
    for (std::size_t i = 0; i < normal.size(); ++i) s += normal[i] * v[i];
    return s;
}

bool facet_less(const Facet& a, const Facet& b) {
    if (a.offset != b.offset) return a.offset > b.offset;
    return std::ranges::lexicographical_compare(b.normal, a.normal);
}

NewtonPolyhedron newton_polyhedron(const std::vector<ExponentVector>& gens) {
    if (gens.empty()) throw DomainError("Newton polyhedron of the zero ideal");
    const std::size_t n = gens.front().size();
    if (n == 0) throw DomainError("Newton polyhedron in dimension 0");
    for (const auto& g : gens)
        if (g.size() != n) throw DomainError("generators of mixed dimension");

    auto points = gens;
    std::ranges::sort(points, grlex_less);
    points.erase(std::unique(points.begin(), points.end()), points.end());

    // Homogenized cone generators: (e_j, 0), then (v, 1) per point.
    const std::size_t d = n + 1;
    std::vector<Vec> constraints;
    for (std::size_t j = 0; j < n; ++j) {
        Vec h(d, 0);
        h[j] = 1;
        constraints.push_back(std::move(h));
    }
    for (const auto& p : points) {
        Vec h(d, 0);
        for (std::size_t j = 0; j < n; ++j) h[j] = p[j];
        h[n] = 1;
        constraints.push_back(std::move(h));
    }

    // Dual basis of the first d constraints: e_k - v0_k e_d for each k, and e_d.
    std::vector<Ray> rays;
    const auto& v0 = points.front();
    for (std::size_t k = 0; k < n; ++k) {
        Ray r;
        r.coords.assign(d, 0);
        r.coords[k] = 1;
        r.coords[n] = -v0[k];
        r.tight.resize(constraints.size());
        for (std::size_t j = 0; j < n; ++j)
            if (j != k) r.tight.set(j);
        r.tight.set(n);
        rays.push_back(std::move(r));
    }
    {
        Ray r;
        r.coords.assign(d, 0);
        r.coords[n] = 1;
        r.tight.resize(constraints.size());
        for (std::size_t j = 0; j < n; ++j) r.tight.set(j);
        rays.push_back(std::move(r));
    }

    rays = double_description(constraints, std::move(rays), d);

    NewtonPolyhedron result;
    result.dimension = n;
    result.source_generators = std::move(points);
    for (const auto& ray : rays) {
        Facet f;
        f.normal.resize(n);
        bool at_infinity = true;
        for (std::size_t j = 0; j < n; ++j) {
            f.normal[j] = to_int64(ray.coords[j]);
            if (f.normal[j] != 0) at_infinity = false;
        }
        if (at_infinity) continue;
        f.offset = to_int64(-ray.coords[n]);
        result.facets.push_back(std::move(f));
    }
    std::ranges::sort(result.facets, facet_less);
    return result;
}

ScaledSystem scale_system(const NewtonPolyhedron& polyhedron, const Rational& c) {
    if (c.sign() < 0) throw DomainError("negative exponent c = " + c.to_string());
    const std::int64_t p = to_int64(c.numerator());
    const std::int64_t q = to_int64(c.denominator());

    ScaledSystem system;
    system.dimension = polyhedron.dimension;
    for (const auto& f : polyhedron.facets) {
        std::vector<std::int64_t> row(f.normal.size());
        for (std::size_t j = 0; j < row.size(); ++j)
            if (!checked_mul(q, f.normal[j], row[j])) throw DomainError("exponent c too large");
        std::int64_t offset = 0;
        if (f.offset != 0) {
            if (!checked_mul(p, f.offset, offset) || offset == std::numeric_limits<std::int64_t>::max())
                throw DomainError("exponent c too large");
            ++offset;
        }
        system.rows.push_back(std::move(row));
        system.offsets.push_back(offset);
    }
    return system;
}

bool satisfies(const ScaledSystem& system, const ExponentVector& v) {
    if (v.size() != system.dimension) throw DomainError("point dimension does not match system");
    for (std::size_t i = 0; i < system.rows.size(); ++i) {
        __int128 s = 0;
        for (std::size_t j = 0; j < v.size(); ++j) s += static_cast<__int128>(system.rows[i][j]) * v[j];
        if (s < system.offsets[i]) return false;
    }
    return true;
}

std::vector<ExponentVector> minimal_lattice_generators(const ScaledSystem& system) {
    const std::size_t n = system.dimension;
    const std::size_t m = system.rows.size();
    if (n == 0) return {ExponentVector(0)};

    // A minimal w with w_j > 0 fails some row after lowering w_j, which
    // bounds w_j by ceil(b'_i / A_ij) over rows with A_ij > 0.
    std::vector<std::int64_t> bound(n, 0);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < m; ++i)
            if (system.rows[i][j] > 0 && system.offsets[i] > 0)
                bound[j] = std::max(bound[j], (system.offsets[i] + system.rows[i][j] - 1) / system.rows[i][j]);

    std::vector<ExponentVector> found;
    std::vector<std::int64_t> w(n, 0);
    std::vector<std::int64_t> partial(m, 0);

    auto deficit_free = [&] {
        for (std::size_t i = 0; i < m; ++i)
            if (partial[i] < system.offsets[i]) return false;
        return true;
    };
    auto is_minimal = [&] {
        for (std::size_t j = 0; j < n; ++j) {
            if (w[j] == 0) continue;
            bool fails = false;
            for (std::size_t i = 0; i < m && !fails; ++i)
                if (partial[i] - system.rows[i][j] < system.offsets[i]) fails = true;
            if (!fails) return false;
        }
        return true;
    };

    // Depth-first over coordinates; the last coordinate takes the least
    // value that satisfies every row, if any.
    auto recurse = [&](auto&& self, std::size_t j) -> void {
        if (j + 1 == n) {
            std::int64_t need = 0;
            for (std::size_t i = 0; i < m; ++i) {
                const std::int64_t deficit = system.offsets[i] - partial[i];
                if (deficit <= 0) continue;
                const std::int64_t a = system.rows[i][j];
                if (a == 0) return;
                need = std::max(need, (deficit + a - 1) / a);
            }
            if (need > bound[j]) return;
            w[j] = need;
            for (std::size_t i = 0; i < m; ++i) partial[i] += system.rows[i][j] * need;
            if (is_minimal()) found.emplace_back(w);
            for (std::size_t i = 0; i < m; ++i) partial[i] -= system.rows[i][j] * need;
            w[j] = 0;
            return;
        }
        for (std::int64_t value = 0; value <= bound[j]; ++value) {
            if (value > 0)
                for (std::size_t i = 0; i < m; ++i) partial[i] += system.rows[i][j];
            w[j] = value;
            const bool done = deficit_free();
            self(self, j + 1);
            // Anything larger in this coordinate dominates the point just found.
            if (done) break;
        }
        for (std::size_t i = 0; i < m; ++i) partial[i] -= system.rows[i][j] * w[j];
        w[j] = 0;
    };
    recurse(recurse, 0);

    std::ranges::sort(found, grlex_less);
    return found;
}

} // namespace multideal::polyhedra
