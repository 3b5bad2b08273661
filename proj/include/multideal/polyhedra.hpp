#pragma once

#include <cstdint>
#include <vector>

#include "multideal/exponent_vector.hpp"
#include "multideal/rational.hpp"

namespace multideal::polyhedra {

/// One inequality normal . v >= offset of a Newton polyhedron. The normal is
/// nonzero, nonnegative and primitive; the offset is nonnegative.
struct Facet {
    std::vector<std::int64_t> normal;
    std::int64_t offset = 0;

    std::int64_t evaluate(const ExponentVector& v) const;
    bool operator==(const Facet&) const = default;
};

/// Canonical facet order: larger offset first, then lexicographically larger normal.
bool facet_less(const Facet& a, const Facet& b);

/// Irredundant inequality description of conv(gens) + R^n_{>=0}.
struct NewtonPolyhedron {
    std::size_t dimension = 0;
    std::vector<Facet> facets;
    std::vector<ExponentVector> source_generators;
};

/// Integer system (q A) v >= b' describing the lattice points of
/// Int(c * Newt) for c = p/q, with b'_i = p b_i + 1 when b_i != 0 and 0 otherwise.
struct ScaledSystem {
    std::size_t dimension = 0;
    std::vector<std::vector<std::int64_t>> rows;
    std::vector<std::int64_t> offsets;
};

/// Facets of the Newton polyhedron of `gens`, in canonical order.
///
/// Runs a double-description pass on the cone spanned by (v, 1) for each
/// generator and (e_j, 0) for each coordinate; the dual rays are the facet
/// normals, and the one with zero normal part (the face at infinity) is
/// dropped. Duplicate and interior generators are harmless.
/// Throws DomainError on an empty or mixed-dimension generator set.
NewtonPolyhedron newton_polyhedron(const std::vector<ExponentVector>& gens);

/// Throws DomainError for negative c or if the scaled integers overflow.
ScaledSystem scale_system(const NewtonPolyhedron& polyhedron, const Rational& c);

bool satisfies(const ScaledSystem& system, const ExponentVector& v);

/// Minimal nonnegative integer solutions of the system, in grlex order. The
/// solution set is upward closed, so these generate it.
std::vector<ExponentVector> minimal_lattice_generators(const ScaledSystem& system);

} // namespace multideal::polyhedra
