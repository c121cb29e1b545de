#pragma once

#include <vector>

namespace aos::linalg {

/// LU factorization with partial pivoting of a dense row-major n-by-n matrix.
struct LuFactors {
    int n = 0;
    std::vector<double> lu;   // packed L (unit diagonal) and U
    std::vector<int> perm;    // row permutation
    bool singular = false;
};

LuFactors lu_factor(std::vector<double> a, int n);

/// Solve A x = b given lu_factor(A). Undefined if factors.singular.
std::vector<double> lu_solve(const LuFactors& factors, std::vector<double> b);

/// Unique stationary distribution of a row-stochastic n-by-n matrix
/// (solves pi P = pi, sum pi = 1). Returns empty vector when the chain has
/// no unique stationary distribution (singular system) or the residual
/// exceeds `residual_tol`.
std::vector<double> stationary_distribution(const std::vector<double>& p, int n,
                                            double residual_tol = 1e-10);

}  // namespace aos::linalg
