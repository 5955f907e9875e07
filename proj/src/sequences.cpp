#include "expsum/sequences.hpp"

#include <numeric>
#include <sstream>

#include "expsum/errors.hpp"

namespace expsum {

long long g_int(const std::shared_ptr<const Field>& f, long long u, fe a) {
    if (f->p() != 2) throw WrongCharacteristic("integer-valued sums need characteristic 2");
    if (a == 0) return -1; // sum of chi(c^{-1}) over c != 0
    const long long m = f->q() - 1;
    const long long la = f->dlog(a);
    const long long um = u % m;
    long long acc = 0;
    for (long long k = 0; k < m; ++k) {
        fe y = f->add(f->exp_of(la + um * k), f->exp_of(m - k));
        acc += f->abs_trace(y) == 0 ? 1 : -1;
    }
    return acc;
}

SequenceProfile build_sequence(const std::shared_ptr<const Field>& f, long long u, fe a,
                               bool allow_noncoprime) {
    if (f->p() != 2) throw WrongCharacteristic("sequence family is defined over characteristic 2");
    if (a == 0) throw ZeroParameter("sequence parameter a must be nonzero");
    bool coprime = std::gcd(u, f->q() - 1) == 1;
    if (!coprime && !allow_noncoprime)
        throw NotCoprime("gcd(u, q-1) != 1; pass the override to explore anyway");
    SequenceProfile prof;
    prof.field = f;
    prof.u = u;
    prof.a = a;
    prof.coprime = coprime;
    prof.values.assign(static_cast<size_t>(f->q()), 0);
    for (fe x = 1; x < static_cast<fe>(f->q()); ++x)
        prof.values[x] = g_int(f, u, f->mul(a, x));
    return prof;
}

long long cross_correlation(const SequenceProfile& pa, const SequenceProfile& pb) {
    if (!pa.field->same_as(*pb.field) || pa.u != pb.u)
        throw ProfileMismatch("profiles disagree on the field or the exponent");
    long long acc = 0;
    for (fe x = 1; x < static_cast<fe>(pa.field->q()); ++x) acc += pa.at(x) * pb.at(x);
    return acc;
}

std::vector<long long> autocorrelation_spectrum(const SequenceProfile& pa) {
    const auto& f = pa.field;
    std::vector<long long> spec(static_cast<size_t>(f->q()), 0);
    for (fe h = 1; h < static_cast<fe>(f->q()); ++h) {
        long long acc = 0;
        for (fe x = 1; x < static_cast<fe>(f->q()); ++x)
            acc += pa.at(x) * pa.at(f->mul(h, x));
        spec[h] = acc;
    }
    return spec;
}

ConvolutionReport convolution_identity_check(const std::shared_ptr<const Field>& f, long long u,
                                             fe a, fe b, fe c) {
    if (f->p() != 2) throw WrongCharacteristic("convolution identity lives in characteristic 2");
    if (a == 0 || b == 0 || c == 0) throw ZeroParameter("a, b, c must be nonzero");
    if (std::gcd(u, f->q() - 1) != 1) throw NotCoprime("gcd(u, q-1) must be 1");
    ConvolutionReport r;
    for (fe x = 1; x < static_cast<fe>(f->q()); ++x)
        r.lhs += g_int(f, u, f->mul(a, x)) * g_int(f, u, f->mul(b, f->sub(c, x)));
    r.u_prime = mod_inverse_exponent(u, f->q() - 1);
    fe base = f->add(f->pow(a, r.u_prime), f->pow(b, r.u_prime));
    fe arg = base == 0 ? 0 : f->mul(c, f->pow(base, u));
    r.rhs = f->q() * g_int(f, u, arg) + g_int(f, u, f->mul(b, c));
    r.equal = r.lhs == r.rhs;
    return r;
}

std::string autocorrelation_csv(const SequenceProfile& pa) {
    std::vector<long long> spec = autocorrelation_spectrum(pa);
    std::ostringstream os;
    os << "h,autocorrelation\n";
    for (fe h = 1; h < static_cast<fe>(pa.field->q()); ++h) os << h << "," << spec[h] << "\n";
    return os.str();
}

} // namespace expsum
