// Weighted monomial counting, Hilbert functions of complete-intersection
// quotients, and the Picard generator data they determine.
#pragma once

#include <numeric>
#include <stdexcept>
#include <vector>

#include "orbik3/rational.hpp"
#include "orbik3/wps.hpp"

namespace orbik3 {

struct GradedRingSpec {
    std::vector<long> weights;
    std::vector<long> cut_degrees; // 0..2 entries, sorted ascending
};

struct GeneratorData {
    long degree = 1;    // Pic = <O(degree)>
    Int genus = 0;      // genus of the generating curve
    Int h_self = 0;     // H^2 = 2g - 2
    Rational orb_self;  // O(1)^2 = H^2 / degree^2
    Rational orb_self_naive; // d / (a0 a1 a2 a3), informational cross-check only
};

// Number of exponent vectors with sum e_i * a_i = d, by coin-counting DP.
inline Int count_monomials(const std::vector<long>& weights, long d) {
    if (d < 0) return 0;
    std::vector<Int> ways(static_cast<size_t>(d) + 1, 0);
    ways[0] = 1;
    for (long a : weights) {
        if (a <= 0) throw std::invalid_argument("weights must be positive");
        for (long j = a; j <= d; ++j) ways[j] += ways[j - a];
    }
    return ways[static_cast<size_t>(d)];
}

// Koszul inclusion-exclusion for a generic regular sequence of the cut degrees.
inline Int hilbert_ci(const GradedRingSpec& spec, long d) {
    const auto& cuts = spec.cut_degrees;
    if (cuts.size() > 2) throw std::invalid_argument("at most two cut degrees");
    auto n = [&](long k) { return count_monomials(spec.weights, k); };
    Int result = n(d);
    for (long c : cuts) result -= n(d - c);
    if (cuts.size() == 2) result += n(d - cuts[0] - cuts[1]);
    return result;
}

// Minimal degree whose generic member avoids every singular vertex: the lcm of
// the weights of vertices lying on the surface. Edge points are avoided by
// coefficient genericity and do not constrain the degree.
inline long generator_degree(const HypersurfaceSpec& spec, const SingularityReport& report) {
    (void)report;
    long result = 1;
    for (const auto& vs : classify_vertices(spec))
        if (vs.on_surface && spec.weights.weights[vs.index] > 1)
            result = lcm_l(result, spec.weights.weights[vs.index]);
    return result;
}

inline GeneratorData generator_data(const HypersurfaceSpec& spec, const SingularityReport& report) {
    GeneratorData data;
    data.degree = generator_degree(spec, report);
    const auto& w = spec.weights.weights;
    GradedRingSpec ring;
    ring.weights.assign(w.begin(), w.end());
    ring.cut_degrees = {spec.degree, data.degree};
    std::sort(ring.cut_degrees.begin(), ring.cut_degrees.end());
    // Adjunction on the K3: the generating curve has canonical sheaf O(degree),
    // so its genus is the dimension of sections in that degree.
    data.genus = hilbert_ci(ring, data.degree);
    data.h_self = 2 * data.genus - 2;
    data.orb_self = Rational(data.h_self, Int(data.degree) * data.degree);
    Int prod = 1;
    for (long a : w) prod *= a;
    data.orb_self_naive = Rational(spec.degree, prod);
    return data;
}

} // namespace orbik3
