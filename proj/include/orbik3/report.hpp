// Structured report emission. Rationals are always serialized as strings to
// avoid precision loss; nlohmann keeps object keys sorted, so identical
// inputs give byte-identical reports.
#pragma once

#include <nlohmann/json.hpp>

#include "orbik3/bundles.hpp"
#include "orbik3/lattice.hpp"
#include "orbik3/orbchar.hpp"
#include "orbik3/seifert.hpp"
#include "orbik3/wps.hpp"

namespace orbik3 {

inline nlohmann::json report_json(const SingularityReport& rep) {
    nlohmann::json j;
    j["singularities"] = rep.labels();
    nlohmann::json recs = nlohmann::json::array();
    for (const auto& r : rep.records) {
        nlohmann::json rj;
        rj["n"] = r.n;
        rj["multiplicity"] = r.multiplicity;
        switch (r.locus) {
            case SingularLocus::Vertex:
                rj["locus"] = "vertex";
                rj["vertex"] = r.i;
                break;
            case SingularLocus::EdgePoint:
                rj["locus"] = "edge";
                rj["edge"] = {r.i, r.j};
                break;
            case SingularLocus::Inherited: rj["locus"] = "inherited"; break;
        }
        recs.push_back(rj);
    }
    j["records"] = recs;
    j["sum_n"] = rep.sum_n;
    j["is_k3"] = rep.is_k3;
    if (rep.is_k3) {
        j["b2"] = rep.b2;
        j["chi_top"] = rep.chi_top;
    }
    if (rep.inconsistent) j["inconsistent"] = true;
    if (!rep.warnings.empty()) j["warnings"] = rep.warnings;
    return j;
}

inline nlohmann::json report_json(const SurfaceState& state) {
    nlohmann::json j;
    j["id"] = state.base_id;
    j["singularities"] = state.singularities;
    j["b2"] = state.b2;
    j["euler"] = state.euler;
    j["h_self"] = state.lattice.h_self;
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto& b : state.lattice.blocks)
        blocks.push_back(b.is_pair() ? "Pair(" + std::to_string(b.n) + ")" : "Single");
    j["blocks"] = blocks;
    j["history"] = state.history;
    return j;
}

inline nlohmann::json report_json(const ProfileResult& res) {
    nlohmann::json j;
    j["pass"] = res.pass;
    if (!res.violations.empty()) j["violations"] = res.violations;
    return j;
}

inline nlohmann::json report_json(const AmpleCertificate& cert) {
    nlohmann::json j;
    j["q_self"] = rat_str(cert.q_self);
    j["ample"] = cert.ample;
    j["q_dot_h"] = rat_str(cert.pairings.q_h);
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& pp : cert.pairings.pairs) {
        nlohmann::json pj;
        pj["n"] = pp.n;
        pj["q_dot_c"] = rat_str(pp.q_c);
        pj["q_dot_cprime"] = rat_str(pp.q_cp);
        pairs.push_back(pj);
    }
    j["pair_blocks"] = pairs;
    nlohmann::json singles = nlohmann::json::array();
    for (const auto& sp : cert.pairings.singles) singles.push_back(rat_str(sp.q_g));
    j["single_blocks_q_dot_g"] = singles;
    nlohmann::json profiles;
    for (const auto& [name, res] : cert.profile_results) profiles[name] = report_json(res);
    if (!cert.profile_results.empty()) j["profiles"] = profiles;
    return j;
}

inline nlohmann::json report_json(const StableBundleCertificate& cert) {
    nlohmann::json j;
    j["rank"] = cert.rank;
    j["c1"] = rat_str(cert.c1);
    j["c2"] = rat_str(cert.c2);
    j["ell"] = cert.ell;
    j["ell1"] = rat_str(cert.ell1);
    j["q_self"] = rat_str(cert.q_self);
    j["orbifold"] = cert.orbifold;
    j["valid"] = cert.valid;
    if (!cert.failures.empty()) j["failures"] = cert.failures;
    nlohmann::json profiles;
    for (const auto& [name, res] : cert.profile_results) profiles[name] = report_json(res);
    if (!cert.profile_results.empty()) j["profiles"] = profiles;
    return j;
}

inline nlohmann::json report_json(const BudgetReport& rep) {
    nlohmann::json j;
    j["id"] = rep.id;
    j["euler_orb"] = rat_str(rep.euler_orb);
    j["c2"] = rat_str(rep.c2);
    j["budget"] = rat_str(rep.budget);
    j["alpha_prime_sign"] = rep.alpha_prime_sign;
    return j;
}

inline nlohmann::json report_json(const SeifertCertificate& cert) {
    nlohmann::json j;
    j["n"] = cert.params.n;
    j["c"] = cert.params.c;
    j["m"] = cert.params.m;
    j["k"] = cert.params.k;
    j["a"] = cert.params.a;
    j["b"] = cert.params.b;
    j["e_self"] = rat_str(cert.e_self);
    j["e_dot_c"] = rat_str(cert.e_dot_c);
    j["e_dot_cprime"] = rat_str(cert.e_dot_cp);
    nlohmann::json checks;
    for (const auto& [name, ok] : cert.checks) checks[name] = ok;
    j["checks"] = checks;
    j["valid"] = cert.valid;
    return j;
}

} // namespace orbik3
