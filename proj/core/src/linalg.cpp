#include "aos/linalg.hpp"

#include <cmath>
#include <cstdlib>

namespace aos::linalg {

LuFactors lu_factor(std::vector<double> a, int n) {
    LuFactors f;
    f.n = n;
    f.perm.resize(n);
    for (int i = 0; i < n; ++i) f.perm[i] = i;

    for (int k = 0; k < n; ++k) {
        int piv = k;
        double best = std::abs(a[k * n + k]);
        for (int i = k + 1; i < n; ++i) {
            const double v = std::abs(a[i * n + k]);
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        if (best < 1e-13) {
            f.singular = true;
            break;
        }
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(a[k * n + j], a[piv * n + j]);
            std::swap(f.perm[k], f.perm[piv]);
        }
        const double d = a[k * n + k];
        for (int i = k + 1; i < n; ++i) {
            const double m = a[i * n + k] / d;
            a[i * n + k] = m;
            if (m == 0.0) continue;
            for (int j = k + 1; j < n; ++j) a[i * n + j] -= m * a[k * n + j];
        }
    }
    f.lu = std::move(a);
    return f;
}

std::vector<double> lu_solve(const LuFactors& f, std::vector<double> b) {
    const int n = f.n;
    std::vector<double> x(n);
    for (int i = 0; i < n; ++i) x[i] = b[f.perm[i]];
    // forward substitution, unit lower triangle
    for (int i = 1; i < n; ++i) {
        double s = x[i];
        for (int j = 0; j < i; ++j) s -= f.lu[i * n + j] * x[j];
        x[i] = s;
    }
    // back substitution
    for (int i = n - 1; i >= 0; --i) {
        double s = x[i];
        for (int j = i + 1; j < n; ++j) s -= f.lu[i * n + j] * x[j];
        x[i] = s / f.lu[i * n + i];
    }
    return x;
}

std::vector<double> stationary_distribution(const std::vector<double>& p, int n,
                                            double residual_tol) {
    // (P^T - I) pi = 0 with the first equation replaced by sum(pi) = 1.
    std::vector<double> a(static_cast<size_t>(n) * n);
    std::vector<double> b(n, 0.0);
    for (int j = 0; j < n; ++j) a[j] = 1.0;
    b[0] = 1.0;
    for (int i = 1; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a[static_cast<size_t>(i) * n + j] = p[static_cast<size_t>(j) * n + i] - (i == j ? 1.0 : 0.0);

    LuFactors f = lu_factor(std::move(a), n);
    if (f.singular) return {};
    std::vector<double> pi = lu_solve(f, std::move(b));

    double residual = 0.0;
    for (int j = 0; j < n; ++j) {
        double acc = -pi[j];
        for (int i = 0; i < n; ++i) acc += pi[i] * p[static_cast<size_t>(i) * n + j];
        residual = std::max(residual, std::abs(acc));
    }
    double total = 0.0;
    for (double& v : pi) {
        if (v < 0.0 && v > -1e-9) v = 0.0;  // clip pivot noise
        if (v < 0.0) return {};
        total += v;
    }
    if (residual > residual_tol || std::abs(total - 1.0) > 1e-9) return {};
    return pi;
}

}  // namespace aos::linalg
