#include "expsum/roots.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "expsum/errors.hpp"

namespace expsum {

namespace {

std::complex<double> horner(const std::vector<std::complex<double>>& c, std::complex<double> z) {
    std::complex<double> acc(0.0, 0.0);
    for (size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
    return acc;
}

} // namespace

std::vector<std::complex<double>> all_roots(const std::vector<std::complex<double>>& coeffs,
                                            double tol, int max_iter, double residual_gate) {
    std::vector<std::complex<double>> c = coeffs;
    double maxc = 0;
    for (auto& v : c) maxc = std::max(maxc, std::abs(v));
    while (!c.empty() && std::abs(c.back()) <= 1e-14 * maxc) c.pop_back();
    if (c.size() <= 1) return {};
    int n = static_cast<int>(c.size()) - 1;

    // monic normalization
    std::complex<double> lead = c.back();
    for (auto& v : c) v /= lead;

    std::mt19937 rng(0x5eed);
    std::uniform_real_distribution<double> unit(-0.5, 0.5);

    for (int attempt = 0; attempt < 8; ++attempt) {
        std::vector<std::complex<double>> z(static_cast<size_t>(n));
        std::complex<double> seed(0.4, 0.9), acc(1.0, 0.0);
        for (int i = 0; i < n; ++i) {
            z[static_cast<size_t>(i)] = acc;
            if (attempt > 0)
                z[static_cast<size_t>(i)] += std::complex<double>(unit(rng), unit(rng));
            acc *= seed;
        }
        bool converged = false;
        for (int it = 0; it < max_iter && !converged; ++it) {
            double worst = 0.0;
            for (int i = 0; i < n; ++i) {
                std::complex<double> denom(1.0, 0.0);
                for (int j = 0; j < n; ++j)
                    if (j != i) denom *= z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)];
                if (std::abs(denom) == 0.0) { worst = 1.0; break; } // collision; keep iterating
                std::complex<double> delta = horner(c, z[static_cast<size_t>(i)]) / denom;
                z[static_cast<size_t>(i)] -= delta;
                worst = std::max(worst, std::abs(delta) / std::max(1.0, std::abs(z[static_cast<size_t>(i)])));
            }
            converged = worst < tol;
        }
        if (!converged) continue;
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            if (std::abs(horner(c, z[static_cast<size_t>(i)])) > residual_gate * std::max(1.0, maxc))
                ok = false;
        if (ok) return z;
    }
    throw RootFindingDiverged("Durand-Kerner failed after restarts (degree " +
                              std::to_string(n) + ")");
}

} // namespace expsum
