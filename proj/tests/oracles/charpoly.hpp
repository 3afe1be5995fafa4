#pragma once

// Test-only oracle: eigenvalues of a symmetric tridiagonal matrix as roots of
// its characteristic polynomial. Shares nothing with the Sturm-count solver:
// roots of p_k(x) = det(T_k - x I) are bracketed by the roots of p_{k-1}
// (interlacing); p_k is positive left of its first root and alternates sign
// across each root.

#include <algorithm>
#include <cmath>
#include <vector>

#include "majconf/tridiagonal.hpp"

namespace oracle {

// p_k(x) by the three-term recurrence p_k = (d_k - x) p_{k-1} - e_{k-1}^2 p_{k-2}.
inline double charpoly(const majconf::TridiagonalSym& a, std::size_t k, double x) {
    double prev = 1.0;
    double cur = a.diag[0] - x;
    for (std::size_t i = 1; i < k; ++i) {
        const double next = (a.diag[i] - x) * cur - a.offdiag[i - 1] * a.offdiag[i - 1] * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

// Root of p_k in [lo, hi] where p_k leaves the sign `left_sign`. The sign is
// dictated by interlacing rather than measured at lo: when a root of p_k sits
// within rounding of a root of p_{k-1}, p_k(lo) can come out with either sign.
inline double bisect_root(const majconf::TridiagonalSym& a, std::size_t k, double lo, double hi, int left_sign) {
    for (int it = 0; it < 300; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double fm = charpoly(a, k, mid);
        if (fm == 0.0) return mid;
        if ((fm > 0) == (left_sign > 0)) lo = mid;
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}

inline std::vector<double> charpoly_eigenvalues(const majconf::TridiagonalSym& a) {
    double bound = 0.0;
    for (double d : a.diag) bound = std::max(bound, std::abs(d));
    for (double e : a.offdiag) bound += 2.0 * std::abs(e);
    bound += 1.0;

    std::vector<double> roots{a.diag[0]};
    for (std::size_t k = 2; k <= a.diag.size(); ++k) {
        std::vector<double> edges{-bound};
        edges.insert(edges.end(), roots.begin(), roots.end());
        edges.push_back(bound);
        std::vector<double> next;
        for (std::size_t j = 0; j + 1 < edges.size(); ++j) next.push_back(bisect_root(a, k, edges[j], edges[j + 1], j % 2 == 0 ? +1 : -1));
        roots = std::move(next);
    }
    return roots;
}

}  // namespace oracle
