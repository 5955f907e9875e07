#ifndef EXPSUM_ROOTS_HPP
#define EXPSUM_ROOTS_HPP

#include <complex>
#include <vector>

namespace expsum {

/// All complex roots of sum coeffs[i] z^i by Durand-Kerner simultaneous
/// iteration: relative tolerance on the root updates, residual gate on the
/// accepted roots, deterministic random-perturbation restarts on stagnation.
/// Throws RootFindingDiverged when no restart converges.
std::vector<std::complex<double>> all_roots(const std::vector<std::complex<double>>& coeffs,
                                            double tol = 1e-12, int max_iter = 500,
                                            double residual_gate = 1e-9);

} // namespace expsum

#endif
