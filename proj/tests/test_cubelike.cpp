#include <doctest.h>

#include <bit>

#include "hdg/cubelike.hpp"
#include "hdg/errors.hpp"
#include "hdg/spectral.hpp"
#include "oracle.hpp"

using namespace hdg;

TEST_CASE("connection set validation") {
    CHECK_THROWS_AS(ConnectionSet(0, {}), domain_error);
    CHECK_THROWS_AS(ConnectionSet(3, {0}), domain_error);
    CHECK_THROWS_AS(ConnectionSet(2, {4}), domain_error);     // exceeds dimension
    CHECK_THROWS_AS(ConnectionSet(3, {1, 1}), domain_error);  // duplicate
    CHECK(ConnectionSet(3, {4, 1}).elements() == std::vector<std::uint32_t>{1, 4});  // sorted
}

TEST_CASE("build") {
    CHECK(build(ConnectionSet(3, {1, 2, 4})) == hdgtest::cube(3));
    CHECK(build(ConnectionSet(2, {1, 2, 3})) == WeightedGraph::complete(4));

    // the d = k+1 degree case: 4-regular, connected, non-bipartite
    WeightedGraph g = build(ConnectionSet(3, {1, 2, 4, 3}));
    auto p = degree_profile(g);
    CHECK(p.is_regular);
    CHECK(p.degree == 4);
    CHECK(g.is_connected());
    CHECK_FALSE(g.is_bipartite());

    SUBCASE("always diagonalized by the standard Hadamard (exhaustive d=3)") {
        for (std::uint32_t mask = 0; mask < 128; ++mask) {
            std::vector<std::uint32_t> el;
            for (std::uint32_t e = 1; e < 8; ++e)
                if (mask >> (e - 1) & 1) el.push_back(e);
            CHECK(diagonalizes(build(ConnectionSet(3, el)).laplacian(), sylvester(3)));
        }
    }
}

TEST_CASE("sigma and pst_by_sigma") {
    CHECK(sigma(ConnectionSet(3, {1, 2, 4})) == 7);
    CHECK(sigma(ConnectionSet(2, {1, 2, 3})) == 0);

    auto pst = pst_by_sigma(ConnectionSet(3, {1, 2, 4}));
    CHECK(pst.verdict == Verdict::PST);
    CHECK(pst.certifying_rule == "Thm2.1");
    CHECK(pst.pairs == std::vector<std::pair<std::size_t, std::size_t>>{
                           {1, 8}, {2, 7}, {3, 6}, {4, 5}});
    CHECK(pst.time == PiTime{ratio(1, 2)});

    auto periodic = pst_by_sigma(ConnectionSet(2, {1, 2, 3}));
    CHECK(periodic.verdict == Verdict::PERIODIC);
    CHECK(periodic.pairs.empty());

    auto k2 = pst_by_sigma(ConnectionSet(1, {1}));
    CHECK(k2.verdict == Verdict::PST);
    CHECK(k2.pairs == std::vector<std::pair<std::size_t, std::size_t>>{{1, 2}});
}

TEST_CASE("code_weight_gcd") {
    CHECK(code_weight_gcd(ConnectionSet(3, {3, 5, 6})) == 2);   // even-weight code
    CHECK(code_weight_gcd(ConnectionSet(4, {15, 5, 10})) == 2); // weights 4, 2, 2
    CHECK(code_weight_gcd(ConnectionSet(3, {1, 2, 3})) == 1);   // odd word present
    CHECK_THROWS_AS(code_weight_gcd(ConnectionSet(3, {1, 2, 4})), domain_error);  // sigma != 0
}

TEST_CASE("decompose_standard") {
    CHECK(decompose_standard(hdgtest::cube(3).adjacency()).set ==
          ConnectionSet(3, {1, 2, 4}));
    CHECK_FALSE(decompose_standard(hdgtest::cube(3).adjacency()).loop_adjusted);

    auto loops = decompose_standard(RatMatrix::identity(8));
    CHECK(loops.loop_adjusted);
    CHECK(loops.set.elements().empty());

    CHECK(decompose_standard(build(ConnectionSet(2, {1, 2})).adjacency()).set ==
          ConnectionSet(2, {1, 2}));

    SUBCASE("round trip over every d=3 connection set") {
        for (std::uint32_t mask = 0; mask < 128; ++mask) {
            std::vector<std::uint32_t> el;
            for (std::uint32_t e = 1; e < 8; ++e)
                if (mask >> (e - 1) & 1) el.push_back(e);
            ConnectionSet c(3, el);
            CHECK(decompose_standard(build(c).adjacency()).set == c);
        }
    }

    CHECK_THROWS_AS(decompose_standard(hdgtest::path_graph(4).adjacency()),
                    certification_error);
    CHECK_THROWS_AS(decompose_standard(hdgtest::path_graph(3).adjacency()), domain_error);
    RatMatrix bad_diag = RatMatrix::identity(4);
    bad_diag(1, 1) = 0;
    CHECK_THROWS_AS(decompose_standard(bad_diag), certification_error);
}

TEST_CASE("spans_space matches BFS connectivity, odd-parity functionals match 2-coloring") {
    for (std::uint32_t mask = 0; mask < 128; ++mask) {
        std::vector<std::uint32_t> el;
        for (std::uint32_t e = 1; e < 8; ++e)
            if (mask >> (e - 1) & 1) el.push_back(e);
        ConnectionSet c(3, el);
        WeightedGraph g = build(c);
        CHECK(spans_space(c) == g.is_connected());

        // all_odd_weight is the u = 111 case of the bipartiteness witness
        bool all_odd = true;
        for (std::uint32_t e : el) all_odd = all_odd && std::popcount(e) % 2 == 1;
        CHECK(all_odd_weight(c) == all_odd);
        if (all_odd_weight(c)) CHECK(g.is_bipartite());

        // 2-colorable iff some functional u is odd on every element
        bool witness = false;
        for (std::uint32_t u = 1; u < 8; ++u) {
            bool odd_on_all = true;
            for (std::uint32_t e : el) odd_on_all = odd_on_all && std::popcount(u & e) % 2 == 1;
            witness = witness || odd_on_all;
        }
        CHECK(witness == g.is_bipartite());
    }
}

TEST_CASE("enumerate") {
    CHECK(enumerate(3, nullptr).size() == 128);
    CHECK(enumerate(2, [](const ConnectionSet& c) { return spans_space(c); }).size() == 4);

    auto pst_sets = enumerate(
        3, [](const ConnectionSet& c) { return sigma(c) != 0 && spans_space(c); });
    std::size_t brute = 0;
    for (const ConnectionSet& c : enumerate(3, nullptr)) {
        WeightedGraph g = build(c);
        std::uint32_t s = 0;
        for (std::uint32_t e : c.elements()) s ^= e;
        if (s != 0 && g.is_connected()) ++brute;
    }
    CHECK(pst_sets.size() == brute);

    // threaded enumeration returns the identical stream
    auto seq = enumerate(4, [](const ConnectionSet& c) { return spans_space(c); });
    auto par = enumerate(4, [](const ConnectionSet& c) { return spans_space(c); }, 4);
    CHECK(seq.size() == par.size());
    for (std::size_t i = 0; i < seq.size(); ++i) CHECK(seq[i] == par[i]);

    CHECK_THROWS_AS(enumerate(6, nullptr), capacity_error);
}

TEST_CASE("regular_pst_family") {
    // (3,4) is exactly the core set {e1, e2, e3, e1+e2}
    CHECK(regular_pst_family(3, 4) == build(ConnectionSet(3, {1, 2, 3, 4})));

    for (unsigned k = 3; k <= 5; ++k) {
        for (std::size_t deg = k + 1; deg <= (std::size_t{1} << k) - 2; ++deg) {
            CAPTURE(k);
            CAPTURE(deg);
            WeightedGraph g = regular_pst_family(k, deg);
            auto p = degree_profile(g);
            CHECK(p.is_regular);
            CHECK(p.degree == Rat(static_cast<long>(deg)));
            CHECK(g.is_connected());
            CHECK_FALSE(g.is_bipartite());
            auto dec = decompose_standard(g.adjacency());
            CHECK(pst_by_sigma(dec.set).verdict == Verdict::PST);
        }
    }

    CHECK_THROWS_AS(regular_pst_family(2, 3), domain_error);
    CHECK_THROWS_AS(regular_pst_family(3, 3), domain_error);
    CHECK_THROWS_AS(regular_pst_family(3, 7), domain_error);
}
