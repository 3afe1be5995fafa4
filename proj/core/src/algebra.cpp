#include "majconf/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace majconf {

namespace {

constexpr complex I{0.0, 1.0};

void require_positive_tol(double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
}

}  // namespace

Matrix2c Matrix2c::identity() {
    Matrix2c m;
    m(0, 0) = 1.0;
    m(1, 1) = 1.0;
    return m;
}

Matrix2c Matrix2c::zero() { return Matrix2c{}; }

Matrix2c Matrix2c::conj() const {
    Matrix2c out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out(i, j) = std::conj(entries[i][j]);
    return out;
}

Matrix2c Matrix2c::adjoint() const {
    Matrix2c out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out(i, j) = std::conj(entries[j][i]);
    return out;
}

Matrix2c operator+(const Matrix2c& a, const Matrix2c& b) {
    Matrix2c out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out(i, j) = a(i, j) + b(i, j);
    return out;
}

Matrix2c operator-(const Matrix2c& a, const Matrix2c& b) {
    Matrix2c out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out(i, j) = a(i, j) - b(i, j);
    return out;
}

Matrix2c operator*(const Matrix2c& a, const Matrix2c& b) {
    Matrix2c out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
    return out;
}

Matrix2c operator*(complex s, const Matrix2c& a) {
    Matrix2c out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out(i, j) = s * a(i, j);
    return out;
}

double max_abs_diff(const Matrix2c& a, const Matrix2c& b) {
    double worst = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
    return worst;
}

bool approx_equal(const Matrix2c& a, const Matrix2c& b, double tol) {
    return max_abs_diff(a, b) <= tol;
}

namespace pauli {

Matrix2c sigma1() {
    Matrix2c m;
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    return m;
}

Matrix2c sigma2() {
    Matrix2c m;
    m(0, 1) = -I;
    m(1, 0) = I;
    return m;
}

Matrix2c sigma3() {
    Matrix2c m;
    m(0, 0) = 1.0;
    m(1, 1) = -1.0;
    return m;
}

}  // namespace pauli

GammaSet build_gamma_majorana() {
    return GammaSet{pauli::sigma2(), I * pauli::sigma3(), {-1, +1}};
}

Matrix2c anticommutator(const Matrix2c& a, const Matrix2c& b) { return a * b + b * a; }

double CliffordReport::max_deviation() const {
    double worst = 0.0;
    for (const auto& row : deviation)
        for (double d : row) worst = std::max(worst, d);
    return worst;
}

std::vector<std::array<int, 2>> CliffordReport::failing_pairs() const {
    std::vector<std::array<int, 2>> out;
    for (int mu = 0; mu < 2; ++mu)
        for (int nu = mu; nu < 2; ++nu)
            if (!(deviation[mu][nu] < tolerance)) out.push_back({mu, nu});
    return out;
}

CliffordReport check_clifford(const GammaSet& g, double tol) {
    require_positive_tol(tol);
    CliffordReport report;
    report.tolerance = tol;
    const Matrix2c id = Matrix2c::identity();
    for (int mu = 0; mu < 2; ++mu) {
        for (int nu = 0; nu < 2; ++nu) {
            const double eta = mu == nu ? g.metric[mu] : 0.0;
            const Matrix2c lhs = anticommutator(g[mu], g[nu]);
            report.deviation[mu][nu] = max_abs_diff(lhs, complex(-2.0 * eta) * id);
        }
    }
    report.passed = report.failing_pairs().empty();
    return report;
}

double RealityReport::max_deviation() const {
    return std::max({reality_deviation[0], reality_deviation[1], adjoint_deviation[0],
                     adjoint_deviation[1]});
}

std::string RealityReport::describe_failures() const {
    std::ostringstream os;
    for (int mu = 0; mu < 2; ++mu) {
        if (!(reality_deviation[mu] < tolerance))
            os << "gamma" << mu << " is not purely imaginary (deviation " << reality_deviation[mu]
               << "); ";
        if (!(adjoint_deviation[mu] < tolerance))
            os << "gamma" << mu << " adjoint != gamma0 gamma" << mu << " gamma0 (deviation "
               << adjoint_deviation[mu] << "); ";
    }
    return os.str();
}

RealityReport check_majorana_reality(const GammaSet& g, double tol) {
    require_positive_tol(tol);
    RealityReport report;
    report.tolerance = tol;
    for (int mu = 0; mu < 2; ++mu) {
        const Matrix2c& gm = g[mu];
        report.reality_deviation[mu] = max_abs_diff(gm.conj(), complex(-1.0) * gm);
        report.adjoint_deviation[mu] = max_abs_diff(gm.adjoint(), g.gamma0 * gm * g.gamma0);
    }
    report.passed = report.max_deviation() < tol;
    return report;
}

RealOperatorBlocks real_operator_blocks(const GammaSet& g, double tol) {
    RealOperatorBlocks blocks;
    for (int mu = 0; mu < 2; ++mu) {
        const Matrix2c ig = I * g[mu];
        auto& target = mu == 0 ? blocks.time : blocks.space;
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                if (std::abs(ig(i, j).imag()) > tol)
                    throw std::domain_error("i*gamma matrices are not real in this representation");
                target[i][j] = ig(i, j).real();
            }
        }
    }
    return blocks;
}

}  // namespace majconf
