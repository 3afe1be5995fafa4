#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

namespace majconf {

using complex = std::complex<double>;

/// 2x2 complex matrix. Row-major storage.
struct Matrix2c {
    std::array<std::array<complex, 2>, 2> entries{};

    static Matrix2c identity();
    static Matrix2c zero();

    complex operator()(int row, int col) const { return entries[row][col]; }
    complex& operator()(int row, int col) { return entries[row][col]; }

    Matrix2c conj() const;
    Matrix2c adjoint() const;

    friend Matrix2c operator+(const Matrix2c& a, const Matrix2c& b);
    friend Matrix2c operator-(const Matrix2c& a, const Matrix2c& b);
    friend Matrix2c operator*(const Matrix2c& a, const Matrix2c& b);
    friend Matrix2c operator*(complex s, const Matrix2c& a);
};

/// Largest absolute entry of a - b.
double max_abs_diff(const Matrix2c& a, const Matrix2c& b);

bool approx_equal(const Matrix2c& a, const Matrix2c& b, double tol = 1e-12);

namespace pauli {
Matrix2c sigma1();
Matrix2c sigma2();
Matrix2c sigma3();
}  // namespace pauli

/// Gamma matrices of 1+1 dimensions together with the metric signature
/// eta = diag(metric[0], metric[1]).
struct GammaSet {
    Matrix2c gamma0;
    Matrix2c gamma1;
    std::array<int, 2> metric{-1, +1};

    const Matrix2c& operator[](int mu) const { return mu == 0 ? gamma0 : gamma1; }
};

/// gamma0 = sigma2, gamma1 = i sigma3, eta = diag(-, +).
GammaSet build_gamma_majorana();

Matrix2c anticommutator(const Matrix2c& a, const Matrix2c& b);

struct CliffordReport {
    /// deviation[mu][nu] = max |{g^mu, g^nu} + 2 eta^{mu nu} I|
    std::array<std::array<double, 2>, 2> deviation{};
    double tolerance = 0.0;
    bool passed = false;

    double max_deviation() const;
    /// (mu, nu) pairs with mu <= nu whose deviation is not below tolerance.
    std::vector<std::array<int, 2>> failing_pairs() const;
};

/// Throws std::invalid_argument unless tol > 0.
CliffordReport check_clifford(const GammaSet& g, double tol = 1e-12);

struct RealityReport {
    /// max |(g^mu)* + g^mu| per matrix
    std::array<double, 2> reality_deviation{};
    /// max |(g^mu)^dagger - g^0 g^mu g^0| per matrix
    std::array<double, 2> adjoint_deviation{};
    double tolerance = 0.0;
    bool passed = false;

    double max_deviation() const;
    std::string describe_failures() const;
};

/// Checks (g^mu)* = -g^mu and (g^mu)^dagger = g^0 g^mu g^0.
/// Throws std::invalid_argument unless tol > 0.
RealityReport check_majorana_reality(const GammaSet& g, double tol = 1e-12);

/// Real 2x2 matrices i*gamma^0 and i*gamma^1; throws std::domain_error when
/// either has an imaginary part above tol.
struct RealOperatorBlocks {
    std::array<std::array<double, 2>, 2> time{};
    std::array<std::array<double, 2>, 2> space{};
};
RealOperatorBlocks real_operator_blocks(const GammaSet& g, double tol = 1e-12);

}  // namespace majconf
