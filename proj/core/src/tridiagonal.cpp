#include "majconf/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

namespace majconf {

void TridiagonalSym::validate() const {
    if (diag.empty()) throw std::invalid_argument("tridiagonal matrix is empty");
    if (offdiag.size() + 1 != diag.size())
        throw std::invalid_argument("off-diagonal must have dimension - 1 entries");
}

std::size_t sturm_count(const TridiagonalSym& a, double shift) {
    const std::size_t n = a.diag.size();
    // Pivot floor keeps the recurrence finite when a pivot hits zero exactly.
    constexpr double tiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
    std::size_t count = 0;
    double q = a.diag[0] - shift;
    for (std::size_t i = 0;; ++i) {
        if (q == 0.0) q = -tiny;
        if (q < 0.0) ++count;
        if (i + 1 == n) break;
        const double e = a.offdiag[i];
        q = (a.diag[i + 1] - shift) - e * e / q;
    }
    return count;
}

std::pair<double, double> gershgorin_bounds(const TridiagonalSym& a) {
    a.validate();
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    const std::size_t n = a.diag.size();
    for (std::size_t i = 0; i < n; ++i) {
        double radius = 0.0;
        if (i > 0) radius += std::abs(a.offdiag[i - 1]);
        if (i + 1 < n) radius += std::abs(a.offdiag[i]);
        lo = std::min(lo, a.diag[i] - radius);
        hi = std::max(hi, a.diag[i] + radius);
    }
    return {lo, hi};
}

unsigned default_thread_count() {
    if (const char* env = std::getenv("MAJ_CONFINE_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

struct Bisection {
    double value;
    double half_width;
    int iterations;
};

// index-th eigenvalue (0-based) inside [lo, hi].
Bisection bisect_eigenvalue(const TridiagonalSym& a, std::size_t index, double lo, double hi,
                            double tol) {
    int iterations = 0;
    while (hi - lo >= tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // bracket at machine resolution
        if (sturm_count(a, mid) > index)
            hi = mid;
        else
            lo = mid;
        ++iterations;
    }
    return {0.5 * (lo + hi), 0.5 * (hi - lo), iterations};
}

}  // namespace

EigenResult eigen_lowest_k(const TridiagonalSym& a, std::size_t k, double tol, unsigned threads) {
    a.validate();
    if (k < 1 || k > a.dimension())
        throw std::invalid_argument("k must lie in [1, " + std::to_string(a.dimension()) + "], got " +
                                    std::to_string(k));
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");

    auto [lo, hi] = gershgorin_bounds(a);
    // Widen so the Sturm count is exactly 0 at lo and n at hi.
    const double pad = 1e-12 * std::max({1.0, std::abs(lo), std::abs(hi)}) + tol;
    lo -= pad;
    hi += pad;

    std::vector<Bisection> found(k);
    auto work = [&](std::size_t first, std::size_t stride) {
        for (std::size_t j = first; j < k; j += stride) found[j] = bisect_eigenvalue(a, j, lo, hi, tol);
    };

    if (threads == 0) threads = default_thread_count();
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, k));
    if (threads <= 1) {
        work(0, 1);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
    }

    EigenResult result;
    result.values.reserve(k);
    result.iterations.reserve(k);
    for (const auto& b : found) {
        result.values.push_back(b.value);
        result.iterations.push_back(b.iterations);
        result.residual_bound = std::max(result.residual_bound, b.half_width);
    }
    return result;
}

}  // namespace majconf
