#include "doctest.h"

#include <stdexcept>

#include "majconf/algebra.hpp"

using namespace majconf;

namespace {
constexpr complex I{0.0, 1.0};

Matrix2c make(complex a, complex b, complex c, complex d) {
    Matrix2c m;
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = c;
    m(1, 1) = d;
    return m;
}
}  // namespace

TEST_CASE("majorana gamma matrices have the stated entries") {
    const GammaSet g = build_gamma_majorana();
    CHECK(max_abs_diff(g.gamma0, make(0.0, -I, I, 0.0)) == 0.0);
    CHECK(max_abs_diff(g.gamma1, make(I, 0.0, 0.0, -I)) == 0.0);
    CHECK(max_abs_diff(g.gamma0 * g.gamma0, Matrix2c::identity()) == 0.0);
    CHECK(g.metric[0] == -1);
    CHECK(g.metric[1] == +1);
}

TEST_CASE("anticommutator of pauli matrices") {
    using namespace pauli;
    CHECK(max_abs_diff(anticommutator(sigma1(), sigma1()), complex(2.0) * Matrix2c::identity()) == 0.0);
    CHECK(max_abs_diff(anticommutator(sigma1(), sigma2()), Matrix2c::zero()) == 0.0);
    const GammaSet g = build_gamma_majorana();
    CHECK(max_abs_diff(anticommutator(g.gamma0, g.gamma1), Matrix2c::zero()) == 0.0);
}

TEST_CASE("clifford relations hold exactly for the majorana set") {
    const CliffordReport r = check_clifford(build_gamma_majorana(), 1e-12);
    CHECK(r.passed);
    for (const auto& row : r.deviation)
        for (double d : row) CHECK(d == 0.0);
}

TEST_CASE("clifford report names the failing pair") {
    // {sigma2, i sigma2} = 2i I, while (i sigma2)^2 = -I is still correct.
    GammaSet g = build_gamma_majorana();
    g.gamma1 = I * pauli::sigma2();
    const CliffordReport r = check_clifford(g, 1e-12);
    CHECK_FALSE(r.passed);
    const auto pairs = r.failing_pairs();
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0] == std::array<int, 2>{0, 1});
    CHECK(r.deviation[0][1] == doctest::Approx(2.0));
    CHECK(r.deviation[1][1] == 0.0);
}

TEST_CASE("gamma1 = i sigma1 is another valid majorana choice") {
    // {sigma2, i sigma1} = i(sigma2 sigma1 + sigma1 sigma2) = 0 and (i sigma1)^2 = -I.
    GammaSet g = build_gamma_majorana();
    g.gamma1 = I * pauli::sigma1();
    CHECK(check_clifford(g, 1e-12).passed);
    CHECK(check_majorana_reality(g, 1e-12).passed);
}

TEST_CASE("real gamma0 passes clifford but fails reality") {
    GammaSet g = build_gamma_majorana();
    g.gamma0 = pauli::sigma1();
    CHECK(check_clifford(g, 1e-12).passed);
    const RealityReport r = check_majorana_reality(g, 1e-12);
    CHECK_FALSE(r.passed);
    CHECK(r.reality_deviation[0] == doctest::Approx(2.0));
    CHECK(r.reality_deviation[1] == 0.0);
}

TEST_CASE("majorana reality and adjoint relations") {
    const RealityReport r = check_majorana_reality(build_gamma_majorana(), 1e-12);
    CHECK(r.passed);
    CHECK(r.max_deviation() == 0.0);

    const GammaSet g = build_gamma_majorana();
    for (int mu = 0; mu < 2; ++mu)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) CHECK(g[mu](i, j).real() == 0.0);
}

TEST_CASE("dirac representation is not majorana") {
    const GammaSet dirac{pauli::sigma3(), I * pauli::sigma2(), {-1, +1}};
    CHECK(check_clifford(dirac, 1e-12).passed);
    const RealityReport r = check_majorana_reality(dirac, 1e-12);
    CHECK_FALSE(r.passed);
    CHECK(r.reality_deviation[0] > 1.0);
    CHECK(r.describe_failures().find("gamma0") != std::string::npos);
}

TEST_CASE("tolerance must be positive") {
    CHECK_THROWS_AS(check_majorana_reality(build_gamma_majorana(), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(check_clifford(build_gamma_majorana(), -1.0), std::invalid_argument);
}

TEST_CASE("i gamma^mu is real") {
    const RealOperatorBlocks op = real_operator_blocks(build_gamma_majorana());
    CHECK(op.time[0][1] == 1.0);
    CHECK(op.time[1][0] == -1.0);
    CHECK(op.space[0][0] == -1.0);
    CHECK(op.space[1][1] == 1.0);
    const GammaSet dirac{pauli::sigma3(), I * pauli::sigma2(), {-1, +1}};
    CHECK_THROWS_AS(real_operator_blocks(dirac), std::domain_error);
}
