#ifndef EXPSUM_SEQUENCES_HPP
#define EXPSUM_SEQUENCES_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "expsum/field.hpp"

namespace expsum {

/// The characteristic-2 sequence (G_u(a x, 1))_{x in F_q^*}; values are plain
/// integers, indexed by the element code of x (index 0 unused).
struct SequenceProfile {
    std::shared_ptr<const Field> field;
    long long u = 1;
    fe a = 1;
    bool coprime = true; // gcd(u, q-1) == 1; the two-valued correlation needs this
    std::vector<long long> values; // size q, values[x] = G_u(ax)

    long long at(fe x) const { return values[static_cast<size_t>(x)]; }
};

/// G_u(a, 1) at s = 1 as a plain integer (characteristic 2 only); the a = 0
/// boundary returns -1, the convention used inside the convolution identity.
long long g_int(const std::shared_ptr<const Field>& f, long long u, fe a);

SequenceProfile build_sequence(const std::shared_ptr<const Field>& f, long long u, fe a,
                               bool allow_noncoprime = false);

/// sum over x != 0 of G_u(ax) G_u(bx); exact integer.
long long cross_correlation(const SequenceProfile& pa, const SequenceProfile& pb);

/// A(h) = sum over x != 0 of G_u(ax) G_u(ahx), for every shift h != 0;
/// returned indexed by the code of h (index 0 unused).
std::vector<long long> autocorrelation_spectrum(const SequenceProfile& pa);

struct ConvolutionReport {
    long long lhs = 0; // sum over x != 0 of G_u(ax) G_u(b(c - x))
    long long rhs = 0; // q G_u(c (a^{u'} + b^{u'})^u) + G_u(bc)
    bool equal = false;
    long long u_prime = 1;
};
ConvolutionReport convolution_identity_check(const std::shared_ptr<const Field>& f, long long u,
                                             fe a, fe b, fe c);

/// "h,autocorrelation" rows.
std::string autocorrelation_csv(const SequenceProfile& pa);

} // namespace expsum

#endif
