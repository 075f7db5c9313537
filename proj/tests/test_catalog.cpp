#include <doctest.h>

#include "orbik3/catalog.hpp"
#include "orbik3/pipeline.hpp"
#include "orbik3/report.hpp"

using namespace orbik3;

TEST_CASE("default catalog shape") {
    Catalog cat = default_catalog();
    CHECK(cat.base_order == std::vector<std::string>{"X30", "X36", "X50"});
    CHECK(cat.surface_order.size() == 17);
    CHECK(cat.has("Xt9"));
    CHECK_FALSE(cat.has("Xt18"));
    CHECK_THROWS_AS(cat.at("nope"), std::invalid_argument);
    CHECK(table_ids(cat, "X36").size() == 8);
    CHECK(table_ids(cat, "X50").size() == 8); // Xt1 has no tuple
}

TEST_CASE("catalog round-trips through its serialized form") {
    Catalog cat = default_catalog();
    json j = catalog_to_json(cat);
    Catalog back = catalog_from_json(j);
    CHECK(back.base_order == cat.base_order);
    CHECK(back.surface_order == cat.surface_order);
    CHECK(back.known_discrepancies == cat.known_discrepancies);
    for (const auto& [id, e] : cat.entries) {
        const auto& b = back.at(id);
        CHECK(b.base == e.base);
        CHECK(b.weights == e.weights);
        CHECK(b.degree == e.degree);
        CHECK(b.chain == e.chain);
        CHECK(b.expected.has_value() == e.expected.has_value());
        if (e.expected) {
            CHECK(b.expected->singularities == e.expected->singularities);
            CHECK(b.expected->euler == e.expected->euler);
            CHECK(b.expected->q_tuple == e.expected->q_tuple);
            CHECK(b.expected->budget == e.expected->budget);
        }
    }
    // and the re-serialization is byte-identical
    CHECK(catalog_to_json(back).dump() == j.dump());
}

TEST_CASE("reports are deterministic") {
    Catalog cat = default_catalog();
    auto s1 = report_json(surface_state(cat, "Xt9")).dump();
    auto s2 = report_json(surface_state(cat, "Xt9")).dump();
    CHECK(s1 == s2);
    auto c1 = report_json(orbifold_serre_x30()).dump();
    auto c2 = report_json(orbifold_serre_x30()).dump();
    CHECK(c1 == c2);
}

TEST_CASE("pipeline passes for every derived surface") {
    Catalog cat = default_catalog();
    for (const auto& id : cat.surface_order) {
        auto res = run_pipeline(cat, id);
        INFO(id << " first failure: " << res.first_failure);
        CHECK(res.pass);
        CHECK(res.bookkeeping_ok);
        CHECK(res.q_found);
        CHECK(res.bundle.valid);
        CHECK(res.budget.budget > 0);
        CHECK(res.seifert_ok);
    }
    // the first chain routes through the orbifold certificate automatically
    CHECK(run_pipeline(cat, "Xt1").orbifold_route);
    CHECK_FALSE(run_pipeline(cat, "Xt2").orbifold_route);
}

TEST_CASE("pipeline rejects base ids and corrupted chains") {
    Catalog cat = default_catalog();
    CHECK_THROWS_AS(run_pipeline(cat, "X36"), std::invalid_argument);
    Catalog bad = cat;
    bad.entries["Xt2"].chain = {9}; // no A_9 to blow up
    CHECK_THROWS_AS(run_pipeline(bad, "Xt2"), std::invalid_argument);
}
