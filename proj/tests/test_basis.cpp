#include <doctest.h>

#include <cmath>
#include <random>

#include "chlod/basis.hpp"
#include "oracles.hpp"

using chlod::BasisIndex;
using chlod::ShiftedInterval;

TEST_CASE("binomial coefficients") {
    CHECK(chlod::binomial(0, 0) == 1.0);
    CHECK(chlod::binomial(5, 2) == 10.0);
    CHECK(chlod::binomial(60, 30) == doctest::Approx(118264581564861424.0).epsilon(1e-14));
    CHECK(std::exp(chlod::log_binomial(40, 17)) ==
          doctest::Approx(static_cast<double>(oracles::binom_ld(40, 17))).epsilon(1e-12));
}

TEST_CASE("bernstein point values") {
    CHECK(chlod::bernstein({2, 1}, 0.5) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(chlod::bernstein({5, 0}, 0.0) == 1.0);  // exact Kronecker endpoints
    CHECK(chlod::bernstein({5, 3}, 0.0) == 0.0);
    CHECK(chlod::bernstein({5, 5}, 1.0) == 1.0);
    CHECK(chlod::bernstein({5, 2}, 1.0) == 0.0);
    // crosses the log-space switchover
    for (int m : {29, 30, 31, 32, 40, 60}) {
        for (int k = 0; k <= m; k += 3) {
            const double t = 0.3;
            CHECK(oracles::close_rel(chlod::bernstein({m, k}, t),
                                     oracles::naive_bernstein(m, k, t), 1e-12));
        }
    }
}

TEST_CASE("bernstein_row matches pointwise basis and sums to one") {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    for (int m : {1, 2, 5, 10, 20, 40, 60}) {
        for (int rep = 0; rep < 5; ++rep) {
            const double t = U(rng);
            const auto row = chlod::bernstein_row(m, t);
            REQUIRE(static_cast<int>(row.size()) == m + 1);
            double sum = 0.0;
            for (int k = 0; k <= m; ++k) {
                sum += row[k];
                CHECK(oracles::close_rel(row[k], oracles::naive_bernstein(m, k, t),
                                         1e-12));
            }
            CHECK(std::fabs(sum - 1.0) <= 1e-12);
        }
    }
}

TEST_CASE("partition of unity for all m <= 60") {
    for (int m = 1; m <= 60; ++m) {
        for (int i = 0; i <= 25; ++i) {
            const double t = static_cast<double>(i) / 25.0;
            double sum = 0.0;
            for (int k = 0; k <= m; ++k) sum += chlod::bernstein({m, k}, t);
            CHECK(std::fabs(sum - 1.0) <= 1e-10);
        }
    }
}

TEST_CASE("nonnegativity on [0,1]") {
    for (int m : {3, 17, 45}) {
        for (int k = 0; k <= m; ++k) {
            for (int i = 0; i <= 40; ++i) {
                CHECK(chlod::bernstein({m, k}, i / 40.0) >= 0.0);
            }
        }
    }
}

TEST_CASE("chlodowsky basis") {
    const double b = 3.7;
    CHECK(chlod::chlodowsky_basis({1, 1}, b, b) == 1.0);
    CHECK(chlod::chlodowsky_basis({2, 1}, b / 2, b) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(chlod::chlodowsky_basis({10, 4}, 3.0, 5.0) ==
          doctest::Approx(chlod::bernstein({10, 4}, 0.6)).epsilon(1e-14));
}

TEST_CASE("shifted interval validation and mapping") {
    CHECK_THROWS_AS(ShiftedInterval(1.0, 1.0, 2.0), chlod::ValidationError);
    CHECK_THROWS_AS(ShiftedInterval(0.0, 1.0, -1.0), chlod::ValidationError);
    const ShiftedInterval J(0.5, 2.0, 2.0);
    CHECK(J.left() == 1.0);
    CHECK(J.right() == 4.0);
    CHECK(J.width() == 3.0);
    CHECK(J.to_unit(1.0) == 0.0);
    CHECK(J.to_unit(4.0) == 1.0);
    CHECK(J.to_unit(2.5) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK_THROWS_WITH_AS(J.to_unit(0.5), doctest::Contains("outside domain"),
                         chlod::DomainError);
    // within tolerance: clamps instead of throwing
    CHECK(J.to_unit(1.0 - 1e-13) == 0.0);

    const ShiftedInterval E = ShiftedInterval::from_endpoints(-2.0, 3.0);
    CHECK(E.left() == -2.0);
    CHECK(E.right() == 3.0);
    CHECK(E.b() == 1.0);
}

TEST_CASE("shifted basis values") {
    const ShiftedInterval J(0.0, 2.0, 1.0);  // [0, 2]
    CHECK(chlod::shifted_basis({2, 1}, 1.0, J) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(chlod::shifted_basis({7, 0}, 0.0, J) == 1.0);
    CHECK(chlod::shifted_basis({7, 7}, 2.0, J) == 1.0);

    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    const ShiftedInterval K(-0.7, 1.3, 2.5);
    for (int m : {1, 4, 12, 33, 40}) {
        for (int rep = 0; rep < 4; ++rep) {
            const double x = K.left() + K.width() * U(rng);
            for (int k = 0; k <= m; ++k) {
                CHECK(oracles::close_rel(chlod::shifted_basis({m, k}, x, K),
                                         oracles::naive_shifted_basis(m, k, x, K),
                                         1e-12));
            }
        }
    }
}

TEST_CASE("shifted basis derivative: closed cases and finite differences") {
    const ShiftedInterval J(0.0, 1.0, 1.0);
    // symmetric bump has a flat top at the midpoint
    CHECK(std::fabs(chlod::shifted_basis_derivative({2, 1}, 0.5, J)) <= 1e-14);
    CHECK(chlod::shifted_basis_derivative({3, 0}, 0.0, J) ==
          doctest::Approx(-3.0).epsilon(1e-14));
    CHECK_THROWS_AS(chlod::shifted_basis_derivative({0, 0}, 0.5, J),
                    chlod::IndexError);

    const ShiftedInterval K(-0.4, 1.6, 1.5);
    const double h = 1e-6 * K.width();
    for (int m = 1; m <= 20; ++m) {
        for (int k = 0; k <= m; ++k) {
            for (int i = 1; i < 10; ++i) {
                const double x = K.left() + K.width() * i / 10.0;
                const double fd = (chlod::shifted_basis({m, k}, x + h, K) -
                                   chlod::shifted_basis({m, k}, x - h, K)) /
                                  (2.0 * h);
                const double an = chlod::shifted_basis_derivative({m, k}, x, K);
                CHECK(std::fabs(fd - an) <= 1e-6 * std::max(1.0, std::fabs(an)));
            }
        }
    }
}

TEST_CASE("basis mode location and dominance") {
    const ShiftedInterval J(0.0, 1.0, 1.0);
    const auto [xstar, vstar] = chlod::basis_mode({3, 2}, J);
    CHECK(xstar == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(vstar == doctest::Approx(chlod::binomial(3, 2) * 4.0 / 27.0).epsilon(1e-14));

    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    const ShiftedInterval K(0.25, 1.75, 3.0);
    for (int m = 1; m <= 30; ++m) {
        for (int k = 0; k <= m; ++k) {
            const auto [xs, vs] = chlod::basis_mode({m, k}, K);
            CHECK(oracles::close_rel(chlod::shifted_basis({m, k}, xs, K), vs, 1e-12));
            for (int rep = 0; rep < 30; ++rep) {
                const double x = K.left() + K.width() * U(rng);
                CHECK(chlod::shifted_basis({m, k}, x, K) <= vs * (1.0 + 1e-12) + 1e-300);
            }
        }
    }
}

TEST_CASE("index validation") {
    CHECK_THROWS_AS(chlod::bernstein({3, 4}, 0.5), chlod::IndexError);
    CHECK_THROWS_AS(chlod::bernstein({3, -1}, 0.5), chlod::IndexError);
    CHECK_THROWS_AS(chlod::bernstein({-1, 0}, 0.5), chlod::IndexError);
}
