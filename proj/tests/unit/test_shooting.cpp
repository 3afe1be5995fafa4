#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "majconf/analytic.hpp"
#include "majconf/numeric.hpp"

using namespace majconf;

TEST_CASE("single shots") {
    const PotentialParams p(0, 1);
    const auto ground = shoot_once(p, 1.0);
    CHECK(ground.node_count == 0);
    CHECK(std::abs(ground.mismatch) < 1e-8);

    const auto between = shoot_once(p, 2.0);
    CHECK(std::abs(between.mismatch) > 0.1);
    CHECK((between.node_count == 0 || between.node_count == 1));

    const auto second = shoot_once(p, 5.0);
    CHECK(second.node_count == 2);
    CHECK(std::abs(second.mismatch) < 1e-8);

    const auto odd = shoot_once(p, 7.0);
    CHECK(odd.node_count == 3);
    CHECK(std::abs(odd.mismatch) < 1e-8);
}

TEST_CASE("shot arguments") {
    const PotentialParams p(0, 1);
    CHECK_THROWS_AS(shoot_once(p, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(shoot_once(p, 1.0, Grid(-6, 6, 1001)), std::invalid_argument);
    try {
        shoot_once(p, 3.0, Grid(-40, 40, 4001));
        FAIL("expected overflow");
    } catch (const std::overflow_error& e) {
        CHECK(std::string(e.what()).find("3") != std::string::npos);
    }
}

TEST_CASE("level count is monotone in the trial") {
    std::size_t previous = 0;
    for (double t = 0.3; t < 20.0; t += 0.25) {
        const std::size_t c = shooting_level_count(t);
        CHECK(c >= previous);
        std::size_t below = 0;  // levels sit at odd integers
        while (2.0 * static_cast<double>(below) + 1.0 < t) ++below;
        CHECK(c == below);
        previous = c;
    }
}

TEST_CASE("eigenvalue search") {
    const PotentialParams p(2.0, 0.7);
    CHECK(std::abs(find_eigen_shooting(p, 0, 1e-10).beta_over_b - 1.0) < 1e-8);
    const auto third = find_eigen_shooting(p, 3, 1e-10);
    CHECK(std::abs(third.beta_over_b - 7.0) < 1e-7);
    CHECK(third.node_count == 3);
    CHECK(third.bracket.second - third.bracket.first < 1e-10);
    CHECK(third.bracket.first <= third.beta_over_b);
    CHECK(third.beta_over_b <= third.bracket.second);

    for (int n = 0; n <= 8; ++n) CHECK(find_eigen_shooting(p, n, 1e-10).node_count == n);
}

TEST_CASE("shooting energies match the closed form") {
    const PotentialParams p(0.0, 0.5);
    for (int n = 0; n <= 5; ++n) {
        const auto r = find_eigen_shooting(p, n, 1e-13);
        CHECK(std::abs(shooting_energy(p, r) - energy_level(n, 0.5, +1)) < 1e-6);
    }
}

TEST_CASE("tightening the bisection tightens the eigenvalue") {
    const PotentialParams p(0, 1);
    const double loose = std::abs(find_eigen_shooting(p, 2, 1e-4).beta_over_b - 5.0);
    const double tight = std::abs(find_eigen_shooting(p, 2, 1e-10).beta_over_b - 5.0);
    CHECK(tight < loose);
    CHECK(loose < 1e-4);
}

TEST_CASE("search arguments") {
    const PotentialParams p(0, 1);
    CHECK_THROWS_AS(find_eigen_shooting(p, -1, 1e-10), std::invalid_argument);
    CHECK_THROWS_AS(find_eigen_shooting(p, 1, 0.0), std::invalid_argument);
}

TEST_CASE("shooting and finite differences agree on lambda") {
    for (double b : {0.5, 1.0, 2.0}) {
        const PotentialParams p(1.0, b);
        const auto fd = fd_eigenvalues(p, default_grid(p), 7);
        for (int n = 0; n <= 6; ++n) {
            const double beta = b * find_eigen_shooting(p, n).beta_over_b;
            CHECK(std::abs(beta - fd.values[static_cast<std::size_t>(n)]) < 1e-3 * b);
        }
    }
}
