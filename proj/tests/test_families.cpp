#include <doctest.h>

#include <numbers>

#include "hdg/cubelike.hpp"
#include "hdg/errors.hpp"
#include "hdg/families.hpp"
#include "hdg/hadamard.hpp"
#include "hdg/spectral.hpp"
#include "oracle.hpp"

using namespace hdg;
using hdgtest::cube;

namespace {

SpectralCertificate cube_cert() { return certify(cube(3), sylvester(3)); }

using Pairs = std::vector<std::pair<std::size_t, std::size_t>>;

}  // namespace

TEST_CASE("pst_complement") {
    auto comp = pst_complement(cube_cert());
    CHECK(comp.certificate.graph() == complement(cube(3)));
    CHECK(degree_profile(comp.certificate.graph()).degree == 4);
    CHECK(comp.report.verdict == Verdict::PST);
    CHECK(comp.report.pairs == Pairs{{1, 8}, {2, 7}, {3, 6}, {4, 5}});  // pairs preserved
    CHECK(*comp.report.fidelity_checked >= 1.0 - kPstTolerance);

    // eigenvalue relation lambda -> n - lambda on nonzero columns
    auto orig = cube_cert();
    for (std::size_t j = 1; j < 8; ++j)
        CHECK(comp.certificate.eigenvalues()[j] == Rat(8) - orig.eigenvalues()[j]);

    // involution at the report level
    auto back = pst_complement(comp.certificate);
    CHECK(back.certificate.graph() == cube(3));
    CHECK(back.report.pairs == comp.report.pairs);

    CHECK_THROWS_AS(pst_complement(certify(WeightedGraph::complete(2), sylvester(1))),
                    domain_error);  // too small
    CHECK_THROWS_AS(pst_complement(certify(build(ConnectionSet(2, {1, 2, 3})), sylvester(2))),
                    domain_error);  // periodic, no PST pair
}

TEST_CASE("pst_self_join") {
    auto joined = pst_self_join(cube_cert());
    CHECK(joined.certificate.order() == 16);
    auto p = degree_profile(joined.certificate.graph());
    CHECK(p.is_regular);
    CHECK(p.degree == 11);  // 3 + 8
    CHECK(joined.report.verdict == Verdict::PST);
    bool has18 = false;
    for (auto pr : joined.report.pairs) has18 |= pr == std::pair<std::size_t, std::size_t>{1, 8};
    CHECK(has18);
    CHECK(*joined.report.fidelity_checked >= 1.0 - kPstTolerance);

    // joining the 5-regular complement with itself adds n = 8 to the degree
    auto inner = pst_complement(certify(build(ConnectionSet(3, {1, 2})), sylvester(3)));
    auto outer = pst_self_join(inner.certificate);
    CHECK(degree_profile(outer.certificate.graph()).degree == 13);
    CHECK(outer.report.verdict == Verdict::PST);
}

TEST_CASE("weighted_hypercube") {
    SUBCASE("unit weights give the antipodal cube") {
        auto c = weighted_hypercube({1, 1, 1});
        CHECK(c.certificate.graph() == cube(3));
        CHECK(c.report.pairs == Pairs{{1, 8}, {2, 7}, {3, 6}, {4, 5}});
    }

    SUBCASE("all-even weights are periodic") {
        auto c = weighted_hypercube({2, 2});
        CHECK(c.report.verdict == Verdict::PERIODIC);
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(evolve_fidelity(c.certificate.graph(), std::numbers::pi / 2, j, j) >=
                  1.0 - kPstTolerance);
    }

    SUBCASE("partner flips exactly the odd-weight coordinates") {
        auto c = weighted_hypercube({1, 2, 3});
        CHECK(c.report.verdict == Verdict::PST);
        Pairs want;
        for (std::size_t j = 0; j < 8; ++j)
            if (j < (j ^ 5)) want.push_back({j + 1, (j ^ 5) + 1});  // odd weights at coords 1, 3
        CHECK(c.report.pairs == want);
    }

    SUBCASE("exhaustive parity patterns up to n = 4") {
        for (unsigned n = 1; n <= 4; ++n) {
            for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << n); ++bits) {
                std::vector<Int> w;
                for (unsigned i = 0; i < n; ++i) w.push_back(bits >> i & 1 ? 1 : 2);
                auto c = weighted_hypercube(w);
                if (bits == 0) {
                    CHECK(c.report.verdict == Verdict::PERIODIC);
                } else {
                    CHECK(c.report.verdict == Verdict::PST);
                    Pairs want;
                    for (std::size_t j = 0; j < (std::size_t{1} << n); ++j)
                        if (j < (j ^ bits)) want.push_back({j + 1, (j ^ bits) + 1});
                    CHECK(c.report.pairs == want);
                }
            }
        }
    }

    CHECK_THROWS_AS(weighted_hypercube({1, 0, 1}), domain_error);
    CHECK_THROWS_AS(weighted_hypercube({}), domain_error);
}

TEST_CASE("regular_family") {
    CHECK(regular_family(3, 4).certificate.graph() == complement(cube(3)));
    CHECK(regular_family(3, 5).certificate.graph() ==
          complement(build(ConnectionSet(3, {1, 2}))));
    CHECK(regular_family(3, 6).certificate.graph() ==
          complement(build(ConnectionSet(3, {1}))));

    SUBCASE("(4,7) from the clique-union merge step") {
        auto c = regular_family(4, 7);
        auto p = degree_profile(c.certificate.graph());
        CHECK(p.is_regular);
        CHECK(p.degree == 7);
        CHECK(c.certificate.graph().is_connected());
        CHECK_FALSE(c.certificate.graph().is_bipartite());
        CHECK(c.report.verdict == Verdict::PST);
        CHECK(*c.report.fidelity_checked >= 1.0 - kPstTolerance);
    }

    CHECK_THROWS_AS(regular_family(3, 3), domain_error);
    CHECK_THROWS_AS(regular_family(3, 7), domain_error);
    CHECK_THROWS_AS(regular_family(2, 3), domain_error);
}

TEST_CASE("degree_coverage") {
    CHECK(degree_coverage(3) == std::vector<std::size_t>{4, 5, 6});

    auto c4 = degree_coverage(4);
    std::vector<std::size_t> want4;
    for (std::size_t d = 5; d <= 14; ++d) want4.push_back(d);
    CHECK(c4 == want4);

    auto c5 = degree_coverage(5);
    std::vector<std::size_t> want5;
    for (std::size_t d = 6; d <= 30; ++d) want5.push_back(d);
    CHECK(c5 == want5);

    CHECK_THROWS_AS(degree_coverage(2), domain_error);
}

TEST_CASE("example_4_4") {
    auto e = example_4_4();
    std::vector<Rat> want{0,  54, 64, 54, 64, 64, 64, 54, 54, 54, 44, 54,
                          44, 50, 60, 50, 60, 60, 60, 50, 50, 50, 40, 50};
    CHECK(e.certificate.eigenvalues() == want);

    CHECK(e.report.verdict == Verdict::PST);
    CHECK(e.report.certifying_rule == "Thm4.2-1(a),2(a)");
    CHECK(e.report.time == PiTime{ratio(1, 2)});
    bool has12 = false;
    for (auto pr : e.report.pairs) has12 |= pr == std::pair<std::size_t, std::size_t>{1, 2};
    CHECK(has12);
    CHECK(evolve_fidelity(e.certificate.graph(), std::numbers::pi / 2, 0, 1) >=
          1.0 - kPstTolerance);

    // the 12-vertex ingredient itself transfers between vertices 1 and 2;
    // recover it from the merged graph (same-half edges carry 5x its weight)
    // and rescale the thirds away before certifying
    const std::size_t n = 12;
    WeightedGraph g1(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (e.certificate.graph().weight(i, j) != 0)
                g1.set_edge(i, j, e.certificate.graph().weight(i, j) / 5);
    auto rescaled = rational_rescale(g1);
    CHECK(rescaled.t1 == PiTime{ratio(3, 2)});
    auto rep1 = pst_pairs(certify(rescaled.graph, catalog(12)));
    CHECK(rep1.verdict == Verdict::PST);
    bool g1_has12 = false;
    for (auto pr : rep1.pairs) g1_has12 |= pr == std::pair<std::size_t, std::size_t>{1, 2};
    CHECK(g1_has12);
}
