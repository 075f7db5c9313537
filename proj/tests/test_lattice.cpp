#include <doctest.h>

#include <random>

#include "orbik3/catalog.hpp"
#include "orbik3/lattice.hpp"
#include "orbik3/pipeline.hpp"

using namespace orbik3;

TEST_CASE("gram matrix of a mixed basis") {
    LatticeBasis basis;
    basis.h_self = 18;
    basis.blocks = {{3}, {1}};
    auto g = gram(basis);
    REQUIRE(basis.rank() == 4);
    CHECK(g[0][0] == 18);
    CHECK(g[1][1] == -6);  // L^2 = -n(n-1)
    CHECK(g[1][2] == -2);  // L.L' = -(n-1)
    CHECK(g[2][2] == -2);  // L'^2
    CHECK(g[3][3] == -2);  // G^2
    CHECK(g[0][1] == 0);
    CHECK(g[2][3] == 0);
}

TEST_CASE("intersect agrees with the gram matrix and is bilinear symmetric") {
    LatticeBasis basis;
    basis.h_self = 10;
    basis.blocks = {{1}, {4}, {2}, {6}};
    int r = basis.rank();
    auto g = gram(basis);
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> coeff(-9, 9);
    for (int trial = 0; trial < 200; ++trial) {
        DivisorClass u, v, w;
        for (int i = 0; i < r; ++i) {
            u.coeffs.emplace_back(coeff(rng));
            v.coeffs.emplace_back(coeff(rng));
            w.coeffs.emplace_back(coeff(rng));
        }
        Rational uv = intersect(basis, u, v);
        CHECK(uv == intersect(basis, v, u));
        // gram expansion
        Rational expanded;
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) expanded += u.coeffs[i] * v.coeffs[j] * g[i][j];
        CHECK(uv == expanded);
        // bilinearity in the first slot
        DivisorClass uw;
        for (int i = 0; i < r; ++i) uw.coeffs.push_back(u.coeffs[i] + 3 * w.coeffs[i]);
        CHECK(intersect(basis, uw, v) == uv + 3 * intersect(basis, w, v));
    }
}

TEST_CASE("blow-up bookkeeping") {
    Catalog cat = default_catalog();
    auto state = base_state(cat, "X36");
    CHECK(state.singularities == std::vector<long>{7, 6, 3, 2});
    CHECK(state.b2 == 4);
    CHECK(state.euler == 6);
    auto s1 = blow_up(state, 3);
    CHECK(s1.singularities == std::vector<long>{7, 6, 2, 1}); // A_3 -> A_1
    CHECK(s1.b2 == 6);
    CHECK(s1.euler == 8);
    CHECK(s1.lattice.blocks == std::vector<ExceptionalBlock>{{3}});
    auto s2 = blow_up(s1, 1);
    CHECK(s2.singularities == std::vector<long>{7, 6, 2});
    CHECK(s2.b2 == 7);
    CHECK(s2.euler == 9);
    CHECK_THROWS_AS(blow_up(s2, 5), std::invalid_argument);
}

TEST_CASE("every catalog chain reproduces the recorded singularities and euler numbers") {
    Catalog cat = default_catalog();
    for (const auto& id : cat.surface_order) {
        const auto& e = cat.at(id);
        REQUIRE(e.expected.has_value());
        auto state = surface_state(cat, id);
        CHECK(state.singularities == e.expected->singularities);
        CHECK(state.euler == e.expected->euler);
        CHECK(state.euler == 2 + state.b2);
    }
}

TEST_CASE("recorded tuples: self-intersection and ampleness") {
    Catalog cat = default_catalog();
    // every even-index chain tuple has Q^2 = 2 and is ample
    for (const auto& id : table_ids(cat, "X36")) {
        auto state = surface_state(cat, id);
        auto cert = certify(state.lattice, class_from_tuple(state.lattice, *cat.at(id).expected->q_tuple));
        CHECK(cert.q_self == 2);
        CHECK(cert.ample);
    }
    // odd-index chains: all but two rows give 2; the two defective rows give
    // exactly the values computed here (the catalog flags the first).
    auto q_self_of = [&](const std::string& id) {
        auto state = surface_state(cat, id);
        return certify(state.lattice, class_from_tuple(state.lattice, *cat.at(id).expected->q_tuple))
            .q_self;
    };
    CHECK(q_self_of("Xt3") == 2);
    CHECK(q_self_of("Xt5") == 70);
    CHECK(q_self_of("Xt7") == 2);
    CHECK(q_self_of("Xt9") == 2);
    CHECK(q_self_of("Xt11") == 2);
    CHECK(q_self_of("Xt13") == 2);
    CHECK(q_self_of("Xt15") == 94);
    CHECK(q_self_of("Xt17") == 2);
}

TEST_CASE("strict profile flags the known violations without failing ampleness") {
    Catalog cat = default_catalog();
    auto state = surface_state(cat, "Xt6");
    auto cert = certify(state.lattice, class_from_tuple(state.lattice, *cat.at("Xt6").expected->q_tuple));
    CHECK(cert.ample);
    CHECK_FALSE(cert.profile_results.at("strict").pass); // the (1, 3) block has Q.C' = 2
    CHECK(cert.profile_results.at("ample-only").pass);
}

TEST_CASE("search finds the recorded tuple and only verified tuples") {
    Catalog cat = default_catalog();
    auto state = surface_state(cat, "Xt2");
    auto results = search_q(state.lattice, Rational(2), Profile::AmpleOnly);
    bool found = false;
    for (const auto& t : results) {
        auto cert = certify(state.lattice, class_from_tuple(state.lattice, t));
        CHECK(cert.q_self == 2);
        CHECK(cert.ample);
        if (t == std::vector<long>{14, 11, 28}) found = true;
    }
    CHECK(found);
    // deterministic: a second run returns the identical list
    CHECK(results == search_q(state.lattice, Rational(2), Profile::AmpleOnly));
    // lexicographic order
    for (size_t i = 1; i < results.size(); ++i) CHECK(results[i - 1] < results[i]);
}

TEST_CASE("search provides replacements for the defective rows") {
    Catalog cat = default_catalog();
    for (const std::string id : {"Xt5", "Xt15"}) {
        auto state = surface_state(cat, id);
        auto results = search_q(state.lattice, Rational(2), Profile::AmpleOnly, {}, 1);
        REQUIRE_FALSE(results.empty());
        auto cert = certify(state.lattice, class_from_tuple(state.lattice, results[0]));
        CHECK(cert.q_self == 2);
        CHECK(cert.ample);
    }
}

TEST_CASE("search on a block-free lattice") {
    LatticeBasis basis;
    basis.h_self = 18;
    CHECK(search_q(basis, Rational(2)).empty());  // 18 a0^2 = 2 has no integer solution
    basis.h_self = 2;
    auto res = search_q(basis, Rational(2));
    REQUIRE(res.size() == 1);
    CHECK(res[0] == std::vector<long>{1});
}

TEST_CASE("tuple/class conversion") {
    LatticeBasis basis;
    basis.h_self = 18;
    basis.blocks = {{3}};
    auto d = class_from_tuple(basis, {14, 11, 28});
    CHECK(d.coeffs == std::vector<Rational>{14, -11, -28});
    CHECK(intersect(basis, d, d) == 2);
    CHECK_THROWS_AS(class_from_tuple(basis, {1, 2}), std::invalid_argument);
    CHECK(tuple_to_string({14, 11, 28}) == "(14, 11, 28)");
}
