#include "kronecker/lp.hpp"

namespace kronecker {

std::optional<RatVector> nonnegative_combination(const IntMatrix& generators,
                                                 const RatVector& target) {
    const std::size_t m = target.size();       // equality rows
    const std::size_t n = generators.size();   // structural variables
    // Columns: n structural, m artificial, then rhs.
    const std::size_t width = n + m + 1;
    RatMatrix t(m, RatVector(width, Rational(0)));
    std::vector<std::size_t> basis(m);
    for (std::size_t r = 0; r < m; ++r) {
        const bool flip = target[r] < 0;
        for (std::size_t j = 0; j < n; ++j) {
            t[r][j] = flip ? Rational(-generators[j][r]) : Rational(generators[j][r]);
        }
        t[r][n + r] = 1;
        t[r][width - 1] = flip ? Rational(-target[r]) : target[r];
        basis[r] = n + r;
    }
    // Objective: minimize the sum of artificials, stored as reduced costs.
    RatVector cost(width, Rational(0));
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t j = 0; j < width; ++j) {
            if (j < n || j == width - 1) cost[j] -= t[r][j];
        }
    }
    while (true) {
        // Bland: first column with negative reduced cost
        std::size_t enter = width;
        for (std::size_t j = 0; j + 1 < width; ++j) {
            if (cost[j] < 0) {
                enter = j;
                break;
            }
        }
        if (enter == width) break;
        std::size_t leave = m;
        Rational best;
        for (std::size_t r = 0; r < m; ++r) {
            if (t[r][enter] > 0) {
                Rational ratio = t[r][width - 1] / t[r][enter];
                if (leave == m || ratio < best || (ratio == best && basis[r] < basis[leave])) {
                    best = ratio;
                    leave = r;
                }
            }
        }
        if (leave == m) break;  // unbounded direction cannot happen for phase one
        Rational piv = t[leave][enter];
        for (auto& x : t[leave]) x /= piv;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == leave || t[r][enter] == 0) continue;
            Rational f = t[r][enter];
            for (std::size_t j = 0; j < width; ++j) t[r][j] -= f * t[leave][j];
        }
        if (cost[enter] != 0) {
            Rational f = cost[enter];
            for (std::size_t j = 0; j < width; ++j) cost[j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }
    if (cost[width - 1] != 0) return std::nullopt;  // optimum -sum(artificials) != 0
    RatVector lambda(n, Rational(0));
    for (std::size_t r = 0; r < m; ++r) {
        if (basis[r] < n) lambda[basis[r]] = t[r][width - 1];
        else if (t[r][width - 1] != 0) return std::nullopt;
    }
    return lambda;
}

}  // namespace kronecker
