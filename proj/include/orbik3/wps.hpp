// Singular-locus classification of hypersurfaces in weighted projective 3-space.
//
// A degree-d hypersurface in P(a0,a1,a2,a3) inherits cyclic quotient
// singularities from the ambient space: A_{a_i-1} at a vertex the surface
// passes through, and A_{g-1} points along an edge with g = gcd(a_i,a_j) > 1.
#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbik3/rational.hpp"

namespace orbik3 {

struct WeightSystem {
    std::array<long, 4> weights{};

    bool operator==(const WeightSystem&) const = default;
};

using ExponentVector = std::array<long, 4>;

// Empty support means GENERIC: all monomials of weighted degree d.
struct HypersurfaceSpec {
    WeightSystem weights;
    long degree = 0;
    std::vector<ExponentVector> support; // explicit support, empty = GENERIC

    bool generic() const { return support.empty(); }
};

enum class SingularLocus { Vertex, EdgePoint, Inherited };

struct SingularityRecord {
    long n = 0; // the n of A_n
    SingularLocus locus = SingularLocus::Inherited;
    int i = -1, j = -1;    // vertex index, or edge endpoints
    long multiplicity = 1; // number of distinct points of this type

    bool operator==(const SingularityRecord&) const = default;
};

struct VertexStatus {
    int index = 0;
    bool on_surface = false;
    std::optional<SingularityRecord> record;
};

struct SingularityReport {
    std::vector<SingularityRecord> records;
    long sum_n = 0;
    long b2 = 0;
    long chi_top = 0;
    bool is_k3 = false;
    bool inconsistent = false;
    std::vector<std::string> warnings;

    // Multiset of A_n labels, one entry per singular point, sorted descending.
    std::vector<long> labels() const {
        std::vector<long> out;
        for (const auto& r : records)
            for (long t = 0; t < r.multiplicity; ++t) out.push_back(r.n);
        std::sort(out.rbegin(), out.rend());
        return out;
    }
};

inline bool is_well_formed(const WeightSystem& w) {
    for (int skip = 0; skip < 4; ++skip) {
        long g = 0;
        for (int i = 0; i < 4; ++i)
            if (i != skip) g = std::gcd(g, w.weights[i]);
        if (g != 1) return false;
    }
    return true;
}

inline long weight_sum(const WeightSystem& w) {
    return std::accumulate(w.weights.begin(), w.weights.end(), 0L);
}

// Adjunction: omega trivial iff the degree equals the sum of the weights.
inline bool is_k3_candidate(const HypersurfaceSpec& spec) {
    return spec.degree == weight_sum(spec.weights);
}

// All exponent vectors of weighted degree d. Idempotent on explicit
// supports after validation: every explicit monomial must have degree d.
inline std::vector<ExponentVector> generic_support(const HypersurfaceSpec& spec) {
    const auto& a = spec.weights.weights;
    if (!spec.generic()) {
        for (const auto& e : spec.support) {
            long deg = 0;
            for (int i = 0; i < 4; ++i) deg += e[i] * a[i];
            if (deg != spec.degree)
                throw std::invalid_argument("support monomial of wrong weighted degree");
        }
        return spec.support;
    }
    std::vector<ExponentVector> out;
    if (spec.degree < 0) return out;
    ExponentVector e{};
    for (e[0] = 0; e[0] * a[0] <= spec.degree; ++e[0])
        for (e[1] = 0; e[0] * a[0] + e[1] * a[1] <= spec.degree; ++e[1])
            for (e[2] = 0; e[0] * a[0] + e[1] * a[1] + e[2] * a[2] <= spec.degree; ++e[2]) {
                long rest = spec.degree - e[0] * a[0] - e[1] * a[1] - e[2] * a[2];
                if (rest % a[3] == 0) {
                    e[3] = rest / a[3];
                    out.push_back(e);
                }
            }
    return out;
}

// Vertex i is off the surface iff the support contains the pure power x_i^k.
inline std::vector<VertexStatus> classify_vertices(const HypersurfaceSpec& spec) {
    const auto& a = spec.weights.weights;
    auto support = generic_support(spec);
    std::vector<VertexStatus> out;
    for (int i = 0; i < 4; ++i) {
        VertexStatus vs;
        vs.index = i;
        bool pure_power = false;
        for (const auto& e : support) {
            bool pure = e[i] > 0;
            for (int j = 0; j < 4 && pure; ++j)
                if (j != i && e[j] != 0) pure = false;
            if (pure) { pure_power = true; break; }
        }
        vs.on_surface = !pure_power;
        if (vs.on_surface && a[i] > 1) {
            SingularityRecord rec;
            rec.n = a[i] - 1;
            rec.locus = SingularLocus::Vertex;
            rec.i = i;
            vs.record = rec;
        }
        out.push_back(vs);
    }
    return out;
}

// Edge (i,j) with g = gcd(a_i,a_j) > 1 meets the surface in floor(d*g/(a_i*a_j))
// points, each an A_{g-1} singularity.
inline std::vector<SingularityRecord> classify_edges(const HypersurfaceSpec& spec) {
    const auto& a = spec.weights.weights;
    std::vector<SingularityRecord> out;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            long g = std::gcd(a[i], a[j]);
            if (g <= 1) continue;
            long count = (spec.degree * g) / (a[i] * a[j]);
            if (count < 1) continue;
            SingularityRecord rec;
            rec.n = g - 1;
            rec.locus = SingularLocus::EdgePoint;
            rec.i = i;
            rec.j = j;
            rec.multiplicity = count;
            out.push_back(rec);
        }
    return out;
}

inline SingularityReport singularity_report(const HypersurfaceSpec& spec) {
    if (!is_well_formed(spec.weights))
        throw std::invalid_argument("weight system is not well-formed");
    const auto& a = spec.weights.weights;
    auto support = generic_support(spec);
    SingularityReport rep;
    auto vertices = classify_vertices(spec);
    for (const auto& vs : vertices) {
        if (vs.record) {
            rep.records.push_back(*vs.record);
            if (a[vs.index] <= 1) rep.inconsistent = true;
            // Genericity is trusted; still flag singular vertices that lack a
            // monomial of shape x_i^k x_j, since quasismoothness is not proven.
            bool has_tilt = false;
            for (const auto& e : support) {
                for (int j = 0; j < 4 && !has_tilt; ++j) {
                    if (j == vs.index) continue;
                    bool shape = e[vs.index] > 0 && e[j] == 1;
                    for (int l = 0; l < 4 && shape; ++l)
                        if (l != vs.index && l != j && e[l] != 0) shape = false;
                    if (shape) has_tilt = true;
                }
                if (has_tilt) break;
            }
            if (!has_tilt)
                rep.warnings.push_back("vertex " + std::to_string(vs.index) +
                                       " has no monomial of shape x_i^k x_j; quasismoothness unverified");
        }
    }
    for (const auto& rec : classify_edges(spec)) rep.records.push_back(rec);
    for (const auto& rec : rep.records) rep.sum_n += rec.n * rec.multiplicity;
    rep.is_k3 = is_k3_candidate(spec);
    if (rep.is_k3) {
        rep.chi_top = 24 - rep.sum_n;
        rep.b2 = 22 - rep.sum_n;
    }
    return rep;
}

} // namespace orbik3
