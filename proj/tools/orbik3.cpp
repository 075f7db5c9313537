// orbik3 command-line front end.
// Exit codes: 0 = all checks pass, 1 = verification failure, 2 = bad input.
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "orbik3/catalog.hpp"
#include "orbik3/pipeline.hpp"
#include "orbik3/report.hpp"

using namespace orbik3;
using nlohmann::json;

namespace {

constexpr int kPass = 0, kFail = 1, kUsage = 2;

struct GlobalOpts {
    bool json = false;
    std::string catalog_path;
    std::string profile = "ample-only";
};

Catalog resolve_catalog(const GlobalOpts& g) {
    if (!g.catalog_path.empty()) return load_catalog(g.catalog_path);
    if (const char* env = std::getenv("ORBIK3_CATALOG")) return load_catalog(env);
    return default_catalog();
}

std::vector<long> parse_long_list(const std::string& s) {
    std::vector<long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        long v = std::stol(item, &pos);
        if (pos != item.size()) throw std::invalid_argument("bad integer list: " + s);
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty integer list");
    return out;
}

void emit(const GlobalOpts& g, const json& j, const std::string& text) {
    if (g.json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

std::string sing_str(const std::vector<long>& labels) {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < labels.size(); ++i) os << (i ? ", " : "") << "A" << labels[i];
    os << "}";
    return os.str();
}

// -------------------------------------------------------------------- analyze

int cmd_analyze(const GlobalOpts& g, const std::string& id, const std::string& weights_csv,
                long degree) {
    Catalog cat = resolve_catalog(g);
    HypersurfaceSpec spec;
    std::string label;
    if (!id.empty()) {
        spec = spec_for_base(cat.at(id));
        label = id;
    } else {
        auto w = parse_long_list(weights_csv);
        if (w.size() != 4) throw std::invalid_argument("need exactly 4 weights");
        std::copy(w.begin(), w.end(), spec.weights.weights.begin());
        spec.degree = degree;
        label = "P(" + weights_csv + ") degree " + std::to_string(degree);
    }
    auto rep = singularity_report(spec);
    json j = report_json(rep);
    j["input"] = label;
    std::ostringstream os;
    os << label << ": " << sing_str(rep.labels()) << "  sum_n = " << rep.sum_n << "\n";
    if (rep.is_k3)
        os << "  K3 candidate: b2 = " << rep.b2 << ", chi_top = " << rep.chi_top << "\n";
    else
        os << "  not a K3 candidate (degree != weight sum)\n";
    for (const auto& w : rep.warnings) os << "  warning: " << w << "\n";
    emit(g, j, os.str());
    return kPass;
}

// --------------------------------------------------------------------- blowup

int cmd_blowup(const GlobalOpts& g, const std::string& id, const std::string& chain_csv) {
    Catalog cat = resolve_catalog(g);
    SurfaceState state;
    if (chain_csv.empty()) {
        state = surface_state(cat, id);
    } else {
        state = base_state(cat, id);
        state.base_id = id;
        for (long n : parse_long_list(chain_csv)) state = blow_up(state, n);
    }
    json j = report_json(state);
    std::ostringstream os;
    os << state.base_id << ": " << sing_str(state.singularities) << "\n"
       << "  b2 = " << state.b2 << ", euler = " << state.euler
       << ", lattice rank = " << state.lattice.rank() << ", H^2 = " << state.lattice.h_self << "\n";
    emit(g, j, os.str());
    return kPass;
}

// ------------------------------------------------------------------- search-q

int cmd_search_q(const GlobalOpts& g, const std::string& id, const std::string& target_str,
                 long limit, SearchBounds bounds) {
    Catalog cat = resolve_catalog(g);
    auto profile = profile_from_name(g.profile);
    if (!profile) throw std::invalid_argument("unknown profile: " + g.profile);
    auto state = surface_state(cat, id);
    Rational target = parse_rational(target_str);
    auto results = search_q(state.lattice, target, *profile, bounds,
                            limit > 0 ? static_cast<size_t>(limit) : SIZE_MAX);
    json j;
    j["id"] = id;
    j["target"] = rat_str(target);
    j["profile"] = g.profile;
    j["tuples"] = json::array();
    for (const auto& t : results) j["tuples"].push_back(t);
    std::ostringstream os;
    os << id << ": " << results.size() << " tuple(s) with Q^2 = " << rat_str(target) << " ["
       << g.profile << "]\n";
    for (const auto& t : results) os << "  " << tuple_to_string(t) << "\n";
    emit(g, j, os.str());
    return results.empty() ? kFail : kPass;
}

// ------------------------------------------------------------------- verify-q

int cmd_verify_q(const GlobalOpts& g, const std::string& id, const std::string& tuple_csv) {
    Catalog cat = resolve_catalog(g);
    auto state = surface_state(cat, id);
    std::vector<long> tuple;
    if (!tuple_csv.empty()) {
        tuple = parse_long_list(tuple_csv);
    } else {
        const auto& e = cat.at(id);
        if (!e.expected || !e.expected->q_tuple)
            throw std::invalid_argument(id + " has no recorded tuple; pass --tuple");
        tuple = *e.expected->q_tuple;
    }
    auto cert = certify(state.lattice, class_from_tuple(state.lattice, tuple));
    json j = report_json(cert);
    j["id"] = id;
    j["tuple"] = tuple;
    std::ostringstream os;
    os << id << " " << tuple_to_string(tuple) << ": Q^2 = " << rat_str(cert.q_self)
       << ", ample = " << (cert.ample ? "yes" : "no") << "\n";
    for (const auto& [name, res] : cert.profile_results) {
        os << "  " << name << ": " << (res.pass ? "pass" : "fail") << "\n";
        for (const auto& v : res.violations) os << "    " << v << "\n";
    }
    emit(g, j, os.str());
    bool ok = cert.q_self == 2 && cert.ample;
    if (ok && g.profile != "ample-only") ok = cert.profile_results.at(g.profile).pass;
    return ok ? kPass : kFail;
}

// ------------------------------------------------------------------------- mu

int cmd_mu(const GlobalOpts& g, long m, long j_idx, bool all) {
    json j;
    j["m"] = m;
    std::ostringstream os;
    if (all) {
        auto values = mu_local_all(m);
        j["values"] = json::array();
        for (const auto& v : values) j["values"].push_back(rat_str(v));
        os << "mu_local(" << m << ", j) for j = 0.." << m - 1 << ":\n";
        for (long k = 0; k < m; ++k)
            os << "  j = " << k << ": " << rat_str(values[static_cast<size_t>(k)]) << "\n";
    } else {
        auto v = mu_local(m, j_idx);
        j["j"] = j_idx;
        j["value"] = rat_str(v);
        os << "mu_local(" << m << ", " << j_idx << ") = " << rat_str(v) << "\n";
    }
    emit(g, j, os.str());
    return kPass;
}

// --------------------------------------------------------------------- budget

int cmd_budget(const GlobalOpts& g, const std::string& id) {
    Catalog cat = resolve_catalog(g);
    std::vector<BudgetReport> reports;
    if (id == "all") {
        reports = budget_table(cat);
    } else {
        for (auto& rep : budget_table(cat))
            if (rep.id == id) reports.push_back(rep);
        if (reports.empty()) throw std::invalid_argument("unknown surface id: " + id);
    }
    json j = json::array();
    std::ostringstream os;
    bool all_positive = true;
    for (const auto& rep : reports) {
        j.push_back(report_json(rep));
        os << rep.id << ": e_orb = " << rat_str(rep.euler_orb) << ", c2 = " << rat_str(rep.c2)
           << ", budget = " << rat_str(rep.budget) << "\n";
        all_positive = all_positive && rep.budget > 0;
    }
    emit(g, j, os.str());
    return all_positive ? kPass : kFail;
}

// -------------------------------------------------------------------- seifert

int cmd_seifert(const GlobalOpts& g, long n, long c, long m, long k, const std::string& e_self,
                const std::string& e_dot_h, const std::string& hbar_self) {
    ErefPairings ep{parse_rational(e_self), parse_rational(e_dot_h), parse_rational(hbar_self)};
    SeifertCertificate cert = (m > 0 && k > 0) ? verify_seifert(make_parameters(n, c, m, k), ep)
                                               : find_parameters(n, c, ep);
    json j = report_json(cert);
    std::ostringstream os;
    os << "n = " << cert.params.n << ", c = " << cert.params.c << ", m = " << cert.params.m
       << ", k = " << cert.params.k << " -> a = " << cert.params.a << ", b = " << cert.params.b
       << "\n"
       << "  E^2 = " << rat_str(cert.e_self) << ", E.C = " << rat_str(cert.e_dot_c)
       << ", E.C' = " << rat_str(cert.e_dot_cp) << "\n";
    for (const auto& [name, ok] : cert.checks)
        os << "  " << name << ": " << (ok ? "pass" : "fail") << "\n";
    os << "  valid: " << (cert.valid ? "yes" : "no") << "\n";
    emit(g, j, os.str());
    return cert.valid ? kPass : kFail;
}

// ------------------------------------------------------------------- pipeline

json pipeline_json(const PipelineResult& res) {
    json j;
    j["id"] = res.id;
    j["state"] = report_json(res.state);
    j["bookkeeping_ok"] = res.bookkeeping_ok;
    j["route"] = res.orbifold_route ? "orbifold" : "cartier";
    if (res.q_tuple) {
        j["q_tuple"] = *res.q_tuple;
        j["q_tuple_source"] = res.q_from_table ? "table" : "search";
    }
    j["q_found"] = res.q_found;
    if (res.q_found) j["bundle"] = report_json(res.bundle);
    j["budget"] = rat_str(res.budget.budget);
    if (res.seifert) j["seifert"] = report_json(*res.seifert);
    j["seifert_trivial"] = res.seifert_trivial;
    j["verdict"] = res.pass ? "pass" : "fail";
    if (!res.pass) j["first_failure"] = res.first_failure;
    return j;
}

int cmd_pipeline(const GlobalOpts& g, const std::string& id) {
    Catalog cat = resolve_catalog(g);
    auto res = run_pipeline(cat, id);
    json j = pipeline_json(res);
    std::ostringstream os;
    os << id << ": " << sing_str(res.state.singularities) << ", euler = " << res.state.euler
       << "\n"
       << "  bookkeeping: " << (res.bookkeeping_ok ? "pass" : "fail") << "\n"
       << "  route: " << (res.orbifold_route ? "orbifold" : "cartier") << "\n";
    if (res.q_tuple)
        os << "  Q = " << tuple_to_string(*res.q_tuple) << " ["
           << (res.q_from_table ? "table" : "search") << "]\n";
    os << "  bundle certificate: " << (res.bundle.valid ? "valid" : "invalid")
       << " (c2 = " << rat_str(res.bundle.c2) << ")\n"
       << "  budget = " << rat_str(res.budget.budget) << "\n";
    if (res.seifert)
        os << "  seifert: n = " << res.seifert->params.n << ", m = " << res.seifert->params.m
           << ", k = " << res.seifert->params.k << " -> "
           << (res.seifert->valid ? "valid" : "invalid") << "\n";
    else if (res.seifert_trivial)
        os << "  seifert: trivial (no pair block)\n";
    os << "  verdict: " << (res.pass ? "pass" : "fail");
    if (!res.pass) os << " (first failure: " << res.first_failure << ")";
    os << "\n";
    emit(g, j, os.str());
    return res.pass ? kPass : kFail;
}

// --------------------------------------------------------------- verify-tables

int cmd_verify_tables(const GlobalOpts& g, const std::string& which) {
    Catalog cat = resolve_catalog(g);
    json j;
    std::ostringstream os;
    bool all_ok = true;

    auto do_q_table = [&](const std::string& label, const std::string& base) {
        auto rows = verify_q_table(cat, base);
        json rj = json::array();
        os << "Table " << label << " (" << base << " chains):\n";
        for (const auto& row : rows) {
            json r;
            r["id"] = row.id;
            r["singularities_ok"] = row.sing_ok;
            r["euler_ok"] = row.euler_ok;
            r["q_self"] = rat_str(row.q_self);
            r["ample"] = row.ample;
            r["strict"] = row.strict_pass;
            r["cartier"] = row.cartier_pass;
            if (row.expected_flagged) r["flagged"] = true;
            r["ok"] = row.ok;
            rj.push_back(r);
            os << "  " << row.id << ": Q^2 = " << rat_str(row.q_self)
               << ", ample = " << (row.ample ? "yes" : "no")
               << ", strict = " << (row.strict_pass ? "pass" : "fail")
               << (row.expected_flagged ? " [flagged discrepancy]" : "")
               << " -> " << (row.ok ? "ok" : "MISMATCH") << "\n";
            all_ok = all_ok && row.ok;
        }
        j["table" + label] = rj;
    };

    if (which == "1" || which == "all") do_q_table("1", "X36");
    if (which == "2" || which == "all") do_q_table("2", "X50");
    if (which == "3" || which == "all") {
        auto rows = verify_budget_table(cat);
        json rj = json::array();
        os << "Table 3 (budgets):\n";
        for (const auto& row : rows) {
            json r;
            r["id"] = row.id;
            r["computed"] = rat_str(row.computed);
            r["expected"] = rat_str(row.expected);
            r["ok"] = row.ok;
            rj.push_back(r);
            os << "  " << row.id << ": " << rat_str(row.computed) << " vs "
               << rat_str(row.expected) << " -> " << (row.ok ? "ok" : "MISMATCH") << "\n";
            all_ok = all_ok && row.ok;
        }
        j["table3"] = rj;
    }
    if (j.empty()) throw std::invalid_argument("which must be 1, 2, 3, or all");
    j["ok"] = all_ok;
    os << (all_ok ? "all rows behave as expected\n" : "unexpected mismatches present\n");
    emit(g, j, os.str());
    return all_ok ? kPass : kFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for singular K3 orbisurfaces"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand
    GlobalOpts g;
    app.add_flag("--json", g.json, "structured output");
    app.add_option("--catalog", g.catalog_path, "catalog file (default: embedded or $ORBIK3_CATALOG)");
    app.add_option("--profile", g.profile, "effective-bound profile: strict|cartier|ample-only")
        ->check(CLI::IsMember({"strict", "cartier", "ample-only"}));

    std::string id, weights_csv, chain_csv, tuple_csv, target = "2", which = "all";
    std::string e_self = "1", e_dot_h = "1", hbar_self = "1";
    long degree = 0, limit = 0, m = 0, jj = 0, k = 0, n = 2, c = 1;
    bool mu_all = false;
    SearchBounds bounds;

    auto* analyze = app.add_subcommand("analyze", "classify the singular locus");
    analyze->add_option("id", id, "catalog base id");
    analyze->add_option("--weights", weights_csv, "comma-separated weights");
    analyze->add_option("--degree", degree, "hypersurface degree");

    auto* blowup = app.add_subcommand("blowup", "apply a blow-up chain");
    blowup->add_option("id", id, "catalog id")->required();
    blowup->add_option("--chain", chain_csv, "comma-separated A_n labels (default: catalog chain)");

    auto* searchq = app.add_subcommand("search-q", "enumerate tuples with prescribed Q^2");
    searchq->add_option("id", id, "catalog id")->required();
    searchq->add_option("--target", target, "required Q^2 (default 2)");
    searchq->add_option("--limit", limit, "stop after this many tuples");
    searchq->add_option("--a0-max", bounds.a0_max, "bound on the leading coefficient");
    searchq->add_option("--coeff-max", bounds.coeff_max, "bound on block coefficients");

    auto* verifyq = app.add_subcommand("verify-q", "certify a divisor tuple");
    verifyq->add_option("id", id, "catalog id")->required();
    verifyq->add_option("--tuple", tuple_csv, "comma-separated tuple (default: catalog tuple)");

    auto* mu = app.add_subcommand("mu", "local orbifold Riemann-Roch correction");
    mu->add_option("--m", m, "group order")->required();
    mu->add_option("--j", jj, "character index");
    mu->add_flag("--all", mu_all, "all characters");

    auto* budget = app.add_subcommand("budget", "anomaly budget e_orb - c2");
    budget->add_option("id", id, "catalog id, or 'all'")->required();

    auto* seifert = app.add_subcommand("seifert", "Seifert bundle parameter certificates");
    seifert->add_option("--n", n, "index of the final A_n blow-up")->required();
    seifert->add_option("--c", c, "Cartier generator self-intersection")->required();
    seifert->add_option("--m", m, "m parameter (omit to search)");
    seifert->add_option("--k", k, "k parameter (omit to search)");
    seifert->add_option("--e-self", e_self, "Ebar^2");
    seifert->add_option("--e-dot-h", e_dot_h, "Ebar.Hbar");
    seifert->add_option("--hbar-self", hbar_self, "Hbar^2");

    auto* pipeline = app.add_subcommand("pipeline", "full feasibility run for one surface");
    pipeline->add_option("id", id, "catalog id")->required();

    auto* tables = app.add_subcommand("verify-tables", "re-derive the recorded tables");
    tables->add_option("which", which, "1, 2, 3, or all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    }

    try {
        if (analyze->parsed()) {
            if (id.empty() && weights_csv.empty())
                throw std::invalid_argument("need a catalog id or --weights/--degree");
            return cmd_analyze(g, id, weights_csv, degree);
        }
        if (blowup->parsed()) return cmd_blowup(g, id, chain_csv);
        if (searchq->parsed()) return cmd_search_q(g, id, target, limit, bounds);
        if (verifyq->parsed()) return cmd_verify_q(g, id, tuple_csv);
        if (mu->parsed()) return cmd_mu(g, m, jj, mu_all);
        if (budget->parsed()) return cmd_budget(g, id);
        if (seifert->parsed())
            return cmd_seifert(g, n, c, m, k, e_self, e_dot_h, hbar_self);
        if (pipeline->parsed()) return cmd_pipeline(g, id);
        if (tables->parsed()) return cmd_verify_tables(g, which);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    }
    return kUsage;
}
