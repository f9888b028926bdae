#include <doctest.h>

#include <cmath>

#include "hdg/errors.hpp"
#include "hdg/quadratic.hpp"

using namespace hdg;

TEST_CASE("construction and validation") {
    QuadraticIrrational sqrt2(0, 1, 1, 2);
    CHECK_FALSE(sqrt2.is_rational());
    CHECK(sqrt2.value() == doctest::Approx(std::sqrt(2.0)));

    QuadraticIrrational golden(1, 1, 2, 5);  // (1 + sqrt 5)/2
    CHECK(golden.value() == doctest::Approx((1.0 + std::sqrt(5.0)) / 2));

    QuadraticIrrational rational(3, 0, 4, 7);  // b = 0 collapses to 3/4
    CHECK(rational.is_rational());
    CHECK(rational.d() == 1);

    CHECK_THROWS_AS(QuadraticIrrational(0, 1, 0, 2), domain_error);   // zero denominator
    CHECK_THROWS_AS(QuadraticIrrational(0, 1, 1, 4), domain_error);   // perfect square
    CHECK_THROWS_AS(QuadraticIrrational(0, 1, 1, 12), domain_error);  // 12 = 4*3
    CHECK_THROWS_AS(QuadraticIrrational(0, 1, 1, 1), domain_error);

    // negative denominator is normalized away
    QuadraticIrrational neg(1, -1, -2, 2);  // (-1 + sqrt 2)/2
    CHECK(neg.c() > 0);
    CHECK(neg.value() == doctest::Approx((std::sqrt(2.0) - 1.0) / 2));
}

TEST_CASE("compare_to_fraction") {
    QuadraticIrrational sqrt2(0, 1, 1, 2);
    CHECK(sqrt2.compare_to_fraction(1, 1) > 0);   // sqrt 2 > 1
    CHECK(sqrt2.compare_to_fraction(3, 2) < 0);   // sqrt 2 < 3/2
    CHECK(sqrt2.compare_to_fraction(2, 1) < 0);
    CHECK(sqrt2.compare_to_fraction(99, 70) < 0);
    CHECK(sqrt2.compare_to_fraction(140, 99) > 0);
    CHECK_THROWS_AS(sqrt2.compare_to_fraction(1, 0), domain_error);

    QuadraticIrrational five_halves(5, 0, 2, 3);
    CHECK(five_halves.compare_to_fraction(5, 2) == 0);
}

TEST_CASE("approximant_within_inverse_square") {
    QuadraticIrrational sqrt2(0, 1, 1, 2);
    // convergents qualify, coarse fractions don't
    CHECK(sqrt2.approximant_within_inverse_square(3, 2));
    CHECK(sqrt2.approximant_within_inverse_square(17, 12));
    CHECK(sqrt2.approximant_within_inverse_square(99, 70));
    CHECK_FALSE(sqrt2.approximant_within_inverse_square(3, 4));
    CHECK_FALSE(sqrt2.approximant_within_inverse_square(28, 20));  // 7/5 scaled breaks 1/v^2
}

TEST_CASE("continued fractions are exact and periodic") {
    QuadraticIrrational sqrt2(0, 1, 1, 2);
    CHECK(continued_fraction(sqrt2, 6) == std::vector<Int>{1, 2, 2, 2, 2, 2});

    QuadraticIrrational golden(1, 1, 2, 5);
    CHECK(continued_fraction(golden, 5) == std::vector<Int>{1, 1, 1, 1, 1});

    QuadraticIrrational sqrt3(0, 1, 1, 3);
    CHECK(continued_fraction(sqrt3, 6) == std::vector<Int>{1, 1, 2, 1, 2, 1});

    // shifted and scaled values keep integer-only arithmetic honest
    QuadraticIrrational shifted(-7, 3, 5, 2);  // (-7 + 3 sqrt 2)/5 ~ -0.5515
    auto terms = continued_fraction(shifted, 4);
    CHECK(terms[0] == -1);  // floor of a negative value

    CHECK_THROWS_AS(continued_fraction(QuadraticIrrational(3, 0, 4, 7), 3), domain_error);
}

TEST_CASE("pgst_approximants") {
    QuadraticIrrational sqrt2(0, 1, 1, 2);

    SUBCASE("odd/even class of sqrt 2") {
        auto a = pgst_approximants(sqrt2, ParityClass::OddEven, 5);
        REQUIRE(a.size() == 5);
        CHECK(a[0].u == 3);
        CHECK(a[0].v == 2);
        CHECK(a[1].u == 17);
        CHECK(a[1].v == 12);
        CHECK(a[2].u == 99);
        CHECK(a[2].v == 70);
        CHECK(a[3].u == 577);
        CHECK(a[3].v == 408);
        CHECK(a[4].u == 3363);
        CHECK(a[4].v == 2378);
    }

    SUBCASE("even/odd class of sqrt 2 comes from semiconvergents") {
        auto a = pgst_approximants(sqrt2, ParityClass::EvenOdd, 5);
        REQUIRE(a.size() == 5);
        CHECK(a[0].u == 2);
        CHECK(a[0].v == 1);
        CHECK(a[1].u == 4);
        CHECK(a[1].v == 3);
        CHECK(a[2].u == 10);
        CHECK(a[2].v == 7);
        CHECK(a[3].u == 24);
        CHECK(a[3].v == 17);
        CHECK(a[4].u == 58);
        CHECK(a[4].v == 41);
    }

    SUBCASE("odd/odd class of the golden ratio") {
        QuadraticIrrational golden(1, 1, 2, 5);
        auto a = pgst_approximants(golden, ParityClass::OddOdd, 4);
        bool has_5_3 = false;
        for (const auto& [u, v] : a) {
            CHECK(u % 2 == 1);
            CHECK(v % 2 == 1);
            CHECK_FALSE((u == 13 && v == 8));  // wrong class
            if (u == 5 && v == 3) has_5_3 = true;
        }
        CHECK(has_5_3);
    }

    SUBCASE("every class satisfies the exact certificate") {
        for (auto cls : {ParityClass::OddEven, ParityClass::EvenOdd, ParityClass::OddOdd}) {
            Int last_v = 0;
            for (const auto& [u, v] : pgst_approximants(sqrt2, cls, 6)) {
                CHECK(gcd(u, v) == 1);
                CHECK(sqrt2.approximant_within_inverse_square(u, v));
                CHECK(v > last_v);
                last_v = v;
            }
        }
    }

    CHECK_THROWS_AS(pgst_approximants(QuadraticIrrational(1, 0, 2, 3), ParityClass::OddOdd, 2),
                    domain_error);
}

TEST_CASE("scaled") {
    QuadraticIrrational sqrt2(0, 1, 1, 2);
    auto w = sqrt2.scaled(ratio(3, 2));
    CHECK(w.value() == doctest::Approx(1.5 * std::sqrt(2.0)));
    CHECK(w.d() == 2);
    CHECK_THROWS_AS(sqrt2.scaled(Rat(0)), domain_error);
}

TEST_CASE("parity class names") {
    for (auto cls : {ParityClass::OddEven, ParityClass::EvenOdd, ParityClass::OddOdd})
        CHECK(parse_parity_class(to_string(cls)) == cls);
    CHECK(parse_parity_class("oe") == ParityClass::OddEven);
    CHECK_THROWS_AS(parse_parity_class("??"), domain_error);
}
