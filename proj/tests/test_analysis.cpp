#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "hdg/analysis.hpp"
#include "hdg/errors.hpp"
#include "hdg/spectral.hpp"
#include "oracle.hpp"

using namespace hdg;

TEST_CASE("timing_drop") {
    auto k2 = certify(WeightedGraph::complete(2), sylvester(1));
    auto cube = certify(hdgtest::cube(3), sylvester(3));
    const PiTime half{ratio(1, 2)};

    SUBCASE("zero offset") {
        auto d = timing_drop(cube, half, 0.0);
        CHECK(d.drop == 0.0);
        CHECK(d.ring_sum == doctest::Approx(1.0).epsilon(1e-12));
    }

    SUBCASE("K2 closed form") {
        const double h = 0.1;
        auto d = timing_drop(k2, half, h);
        // spectrum {0, 2}: ring = |1 + e^{2ih}|/2 = cos h, drop = sin^2 h
        CHECK(std::abs(d.ring_sum - std::abs(1.0 + std::polar(1.0, 2 * h)) / 2) < 1e-12);
        CHECK(std::abs(d.drop - std::sin(h) * std::sin(h)) < 1e-10);
        CHECK(std::abs(d.drop - (1.0 - d.ring_sum * d.ring_sum)) < 1e-10);
    }

    SUBCASE("cube ring against the full propagator trace") {
        const double h = 0.3;
        auto d = timing_drop(cube, half, h);
        // direct sum over the spectrum (0, 2, 2, 2, 4, 4, 4, 6)
        std::complex<double> s = 0.0;
        for (double lam : {0.0, 2.0, 2.0, 2.0, 4.0, 4.0, 4.0, 6.0}) s += std::polar(1.0, h * lam);
        CHECK(std::abs(d.ring_sum - std::abs(s) / 8) < 1e-12);
        // independent path: (1/n)|tr e^{ihL}|
        CHECK(std::abs(d.ring_sum - std::abs(hdgtest::expm_itl(hdgtest::cube(3), h).trace()) / 8) <
              1e-9);
        // and the drop against the expm oracle on the first pair (1, 8)
        double t = half.seconds();
        double expm_drop = hdgtest::expm_fidelity(hdgtest::cube(3), t, 0, 7) -
                           hdgtest::expm_fidelity(hdgtest::cube(3), t + h, 0, 7);
        CHECK(std::abs(d.drop - expm_drop) < 1e-9);
        CHECK(d.drop >= 0.0);
    }

    SUBCASE("window and precondition") {
        CHECK_THROWS_AS(timing_drop(cube, half, std::numbers::pi / 6), domain_error);
        CHECK_THROWS_AS(timing_drop(cube, half, -std::numbers::pi / 6), domain_error);
        auto periodic = certify(WeightedGraph::complete(4), sylvester(2));
        CHECK_THROWS_AS(timing_drop(periodic, half, 0.01), domain_error);
    }
}

TEST_CASE("fidelity_perturbation_bound") {
    CHECK(fidelity_perturbation_bound(0.0) == 0.0);
    CHECK(fidelity_perturbation_bound(1.0) == doctest::Approx(2.0));
    CHECK_THROWS_AS(fidelity_perturbation_bound(-0.1), domain_error);

    // K2 with edge weight 1 + eps: L5 = eps * L, ||t0 L5|| = pi * eps
    const double eps = 0.01;
    WeightedGraph perturbed(2);
    perturbed.set_edge(0, 1, ratio(101, 100));
    const double t0 = std::numbers::pi / 2;
    double loss = 1.0 - hdgtest::expm_fidelity(perturbed, t0, 0, 1);
    CHECK(loss == doctest::Approx(std::sin(eps * t0) * std::sin(eps * t0)));
    CHECK(loss <= fidelity_perturbation_bound(t0 * 2 * eps));
}

TEST_CASE("eigencount_solve") {
    SUBCASE("r <= 3 forces the order") {
        auto s1 = eigencount_solve(1);
        REQUIRE(s1.n.has_value());
        CHECK(*s1.n == 2);
        CHECK(s1.counts_at(2) == std::vector<Int>{1});

        auto s2 = eigencount_solve(2);
        CHECK(*s2.n == 4);
        CHECK(s2.counts_at(4) == std::vector<Int>{2, 1});

        auto s3 = eigencount_solve(3);
        CHECK(*s3.n == 8);
        CHECK(s3.counts_at(8) == std::vector<Int>{3, 3, 1});
        CHECK_FALSE(s3.n_max.has_value());
    }

    SUBCASE("r = 4 leaves a one-parameter family capped at 16") {
        auto s = eigencount_solve(4);
        CHECK_FALSE(s.n.has_value());
        REQUIRE(s.n_max.has_value());
        CHECK(*s.n_max == 16);
        REQUIRE(s.counts.size() == 4);
        CHECK(s.counts[0] == std::pair<Rat, Rat>{Rat(-2), ratio(3, 8)});
        CHECK(s.counts[1] == std::pair<Rat, Rat>{Rat(0), ratio(3, 8)});
        CHECK(s.counts[2] == std::pair<Rat, Rat>{Rat(2), ratio(1, 8)});
        CHECK(s.counts[3] == std::pair<Rat, Rat>{Rat(-1), ratio(1, 8)});
        CHECK(s.counts_at(16) == std::vector<Int>{4, 6, 4, 1});
        CHECK(s.counts_at(8) == std::vector<Int>{1, 3, 3, 0});
        CHECK_THROWS_AS(s.counts_at(12), domain_error);  // non-integer counts
    }

    CHECK_THROWS_AS(eigencount_solve(0), domain_error);
    CHECK_THROWS_AS(eigencount_solve(5), domain_error);
}

TEST_CASE("verify_sparsity_corpus") {
    SUBCASE("r = 2: the three 2-regular sets on Z_2^2") {
        auto rep = verify_sparsity_corpus(2, 3);
        CHECK(rep.hits.size() == 3);
        for (const auto& hit : rep.hits) {
            CHECK(hit.n == 4);
            CHECK(hit.eigencounts == std::vector<Int>{2, 1});
        }
        CHECK(rep.max_order == 4);
        CHECK(rep.bound_satisfied);
    }

    SUBCASE("r = 3: sigma = 0 members are filtered, the rest sit at n = 8") {
        auto rep = verify_sparsity_corpus(3, 4);
        CHECK(rep.corpus_size > rep.hits.size());  // {1,2,3} on d = 2 has sigma 0
        CHECK_FALSE(rep.hits.empty());
        auto forced = eigencount_solve(3).counts_at(8);
        for (const auto& hit : rep.hits) {
            CHECK(hit.n == 8);
            CHECK(hit.eigencounts == forced);
        }
        CHECK(rep.max_order == 8);
        CHECK(rep.bound_satisfied);
    }

    SUBCASE("r = 4 respects the n <= 16 cap") {
        auto rep = verify_sparsity_corpus(4, 4, 2);
        CHECK_FALSE(rep.hits.empty());
        for (const auto& hit : rep.hits) CHECK(hit.n <= 16);
        CHECK(rep.bound_satisfied);
    }

    CHECK_THROWS_AS(verify_sparsity_corpus(5, 3), domain_error);
    CHECK_THROWS_AS(verify_sparsity_corpus(3, 6), capacity_error);
}
