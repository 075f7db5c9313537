// Numeric certificates for rank-2 stable bundles via the Serre construction,
// and the anomaly budget e_orb - (c2 - c1^2/2) whose sign fixes the slope
// parameter.
#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbik3/lattice.hpp"
#include "orbik3/orbchar.hpp"
#include "orbik3/rational.hpp"

namespace orbik3 {

struct StableBundleCertificate {
    int rank = 2;
    Rational c1;       // always 0 after twisting
    Rational c2;       // ell - Q^2
    long ell = 0;      // length of the Serre zero scheme
    Rational ell1;     // chi(2Q), or its upper bound in the orbifold case
    Rational q_self;
    bool orbifold = false;
    bool valid = false;
    std::map<std::string, ProfileResult> profile_results;
    std::vector<std::string> failures;
};

// Cartier case: Q ample with Q^2 = 2 gives chi(2Q) = 2 + (2Q)^2/2 = 6; any
// ell > 6 yields a locally free rank-2 extension with c2 = ell - 2.
inline StableBundleCertificate serre_feasibility(const LatticeBasis& basis, const DivisorClass& q,
                                                 long ell = 7) {
    auto ample = certify(basis, q);
    if (!ample.ample) throw std::invalid_argument("serre_feasibility requires an ample Q");
    if (ample.q_self != 2) throw std::invalid_argument("serre_feasibility requires Q^2 = 2");
    StableBundleCertificate cert;
    cert.q_self = ample.q_self;
    cert.ell1 = 2 + 2 * cert.q_self; // chi(2Q)
    if (ell <= 6) throw std::invalid_argument("need ell > chi(2Q) = 6");
    cert.ell = ell;
    cert.c2 = Rational(ell) - cert.q_self;
    cert.profile_results = ample.profile_results;
    cert.valid = true;
    return cert;
}

// Orbifold case on the A_1 blow-up of X_30. Basis: Hbar with Hbar^2 = 1/88,
// G with G^2 = -2, Hbar.G = 0; Q = a*Hbar - b*G. The effective-divisor bound
// is Q.Hbar > 2Q^2, and the chi bound uses mu_Sing(2Q) <= mu_Sing(O).
struct OrbifoldSerreInput {
    long a = 40;
    long b = 3;
    long ell = 3;
    Rational hbar_self = Rational(1, 88);
};

inline StableBundleCertificate orbifold_serre_x30(const OrbifoldSerreInput& in = {}) {
    StableBundleCertificate cert;
    cert.orbifold = true;
    cert.ell = in.ell;
    Rational q_self = Rational(in.a) * in.a * in.hbar_self - 2 * Rational(in.b) * in.b;
    cert.q_self = q_self;
    Rational q_hbar = Rational(in.a) * in.hbar_self;
    Rational q_g = 2 * Rational(in.b);
    cert.ell1 = 2 + 2 * q_self; // upper bound for chi(2Q)

    auto require = [&](bool ok, const std::string& what) {
        if (!ok) cert.failures.push_back(what);
    };
    require(q_self > 0, "Q^2 > 0");
    require(q_hbar > 0, "Q.Hbar > 0");
    require(q_g > 0, "Q.G > 0");
    require(cert.ell1 < in.ell, "chi(2Q) bound < ell");
    require(q_hbar > 2 * q_self, "Q.Hbar > 2 Q^2");
    cert.valid = cert.failures.empty();
    cert.c2 = Rational(in.ell) - q_self;
    return cert;
}

// First (a, b) in the box satisfying Q.Hbar > 2Q^2 > 0, i.e.
// a/88 > a^2/44 - 4 b^2 > 0; scanned b-major then a ascending.
inline std::optional<std::pair<long, long>> orbifold_first_solution(long a_max = 40, long b_max = 3) {
    for (long b = 1; b <= b_max; ++b)
        for (long a = 1; a <= a_max; ++a) {
            Rational lhs = Rational(a, 88);
            Rational mid = Rational(a, 44) * a - 4 * Rational(b) * b;
            if (lhs > mid && mid > 0) return std::make_pair(a, b);
        }
    return std::nullopt;
}

struct BudgetReport {
    std::string id;
    Rational euler_orb;
    Rational c2;
    Rational budget; // euler_orb - (c2 - c1^2/2)
    int alpha_prime_sign = 0;
};

inline BudgetReport anomaly_budget(const SurfaceState& state, const StableBundleCertificate& cert) {
    BudgetReport rep;
    rep.id = state.base_id;
    rep.euler_orb = euler_orb(state);
    rep.c2 = cert.c2;
    rep.budget = rep.euler_orb - (cert.c2 - cert.c1 * cert.c1 / 2);
    rep.alpha_prime_sign = sign_of(rep.budget);
    return rep;
}

} // namespace orbik3
