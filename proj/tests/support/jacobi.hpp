// Dense symmetric eigensolver (cyclic Jacobi) used as an independent oracle
// for matrix spectral radii. Test-only.
#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace oracle {

// Returns all eigenvalues of a dense symmetric matrix (row-major, n x n).
inline std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n) {
    auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
    for (int sweep = 0; sweep < 200; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off += at(i, j) * at(i, j);
        if (off < 1e-26) break;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::abs(at(p, q)) < 1e-300) continue;
                double theta = (at(q, q) - at(p, p)) / (2.0 * at(p, q));
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
    }
    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = at(i, i);
    return eig;
}

// Spectral radius (max |eigenvalue|) of a dense symmetric matrix.
inline double symmetric_spectral_radius(const std::vector<double>& a, std::size_t n) {
    double best = 0.0;
    for (double e : jacobi_eigenvalues(a, n)) best = std::max(best, std::abs(e));
    return best;
}

}  // namespace oracle
