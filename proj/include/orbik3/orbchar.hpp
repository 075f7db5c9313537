// Orbifold characteristic numbers: orbifold Euler numbers, Noether and Betti
// consistency checks, and the mu_Sing cyclotomic correction of orbifold
// Riemann-Roch for A_n points.
#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "orbik3/cyclotomic.hpp"
#include "orbik3/lattice.hpp"
#include "orbik3/rational.hpp"

namespace orbik3 {

struct MuLocalQuery {
    long m = 2; // group order; m = n + 1 for an A_n point
    long j = 0; // character index, 0 <= j < m
};

struct OrbCharReport {
    long euler_top = 0;
    Rational euler_orb;
    Rational mu_sing_trivial;
    std::array<long, 5> betti{};
};

// All m character values of the local correction at a C^2 / Z_m point with the
// action diag(zeta, zeta^-1):
//   mu(j) = (1/m) sum_{t=1}^{m-1} zeta^{jt} / ((1 - zeta^t)(1 - zeta^-t)).
// Computed exactly in Q(zeta_m); one inverse per t, shared across characters.
inline std::vector<Rational> mu_local_all(long m) {
    if (m < 2) throw std::invalid_argument("need m >= 2");
    CyclotomicField field(m);
    std::vector<Poly> acc(static_cast<size_t>(m));
    for (long t = 1; t < m; ++t) {
        Poly denom = field.mul(field.one_minus_root(t), field.one_minus_root(-t));
        Poly inv = field.inverse(denom);
        for (long j = 0; j < m; ++j)
            acc[static_cast<size_t>(j)] =
                field.add(acc[static_cast<size_t>(j)], field.mul(field.root_power(j * t), inv));
    }
    std::vector<Rational> out(static_cast<size_t>(m));
    for (long j = 0; j < m; ++j)
        out[static_cast<size_t>(j)] = field.rational_part(acc[static_cast<size_t>(j)]) / m;
    return out;
}

inline Rational mu_local(const MuLocalQuery& q) {
    if (q.m < 2) throw std::invalid_argument("need m >= 2");
    if (q.j < 0 || q.j >= q.m) throw std::invalid_argument("character index out of range");
    CyclotomicField field(q.m);
    Poly acc;
    for (long t = 1; t < q.m; ++t) {
        Poly denom = field.mul(field.one_minus_root(t), field.one_minus_root(-t));
        Poly term = field.mul(field.root_power(q.j * t), field.inverse(denom));
        acc = field.add(acc, term);
    }
    return field.rational_part(acc) / q.m;
}

inline Rational mu_local(long m, long j) { return mu_local(MuLocalQuery{m, j}); }

// mu_Sing of the structure sheaf: the trivial character at every A_n point.
inline Rational mu_sing_trivial(const std::vector<long>& singularities) {
    Rational acc;
    for (long n : singularities) acc += mu_local(n + 1, 0);
    return acc;
}

// Rank-2 Serre bundles with Z disjoint from the singular set restrict to
// O + O near each singular point, so the correction doubles.
inline Rational mu_sing_bundle_rank2(const std::vector<long>& singularities) {
    return 2 * mu_sing_trivial(singularities);
}

// e_orb = e - sum n_i / (n_i + 1)
inline Rational euler_orb(const SurfaceState& state) {
    Rational acc(state.euler);
    for (long n : state.singularities) acc -= Rational(n, n + 1);
    return acc;
}

// Noether with K^2 = 0 and chi(O) = 2: (e + sum n_i) / 12 == 2.
inline bool noether_check(const SurfaceState& state) {
    return Rational(state.euler + state.sum_n(), 12) == 2;
}

inline Rational chi_orb_structure(const std::vector<long>& singularities) {
    return 2 - mu_sing_trivial(singularities);
}

inline Rational chi_orb_line_self(const SurfaceState& state, const Rational& l_self) {
    return chi_orb_structure(state.singularities) + l_self / 2;
}

inline Rational chi_orb_line(const SurfaceState& state, const DivisorClass& l) {
    return chi_orb_line_self(state, intersect(state.lattice, l, l));
}

// chi(L) <= 2 + L^2/2, using mu_Sing(L) <= mu_Sing(O).
inline Rational chi_upper_bound(const Rational& l_self) { return 2 + l_self / 2; }

inline OrbCharReport orb_char_report(const SurfaceState& state) {
    OrbCharReport rep;
    rep.euler_top = state.euler;
    rep.euler_orb = euler_orb(state);
    rep.mu_sing_trivial = mu_sing_trivial(state.singularities);
    rep.betti = {1, 0, state.b2, 0, 1};
    return rep;
}

} // namespace orbik3
