#ifndef EXPSUM_CYCLOTOMIC_HPP
#define EXPSUM_CYCLOTOMIC_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "expsum/rational.hpp"

namespace expsum {

/// Exact element of Z[zeta_N] (rational coefficients allowed): a coefficient
/// vector c where the represented number is sum_i c[i] * zeta_N^i.
/// Canonical form is the remainder modulo the N-th cyclotomic polynomial, so
/// two values are equal as algebraic numbers iff their canonical coefficient
/// vectors coincide. For prime N this is the "counts[N-1] == 0" normal form.
class Cyclotomic {
public:
    Cyclotomic() : order_(1), c_(1) {}
    explicit Cyclotomic(long order);

    static Cyclotomic root(long order, long index, const Rat& weight = Rat(1));
    static Cyclotomic integer(const Rat& v);
    static Cyclotomic from_counts(long order, const std::vector<long long>& counts);

    long order() const { return order_; }
    const std::vector<Rat>& counts() const { return c_; }

    void add_root(long index, const Rat& weight = Rat(1));

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator-() const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic& operator+=(const Cyclotomic& o) { *this = *this + o; return *this; }
    Cyclotomic& operator-=(const Cyclotomic& o) { *this = *this - o; return *this; }
    Cyclotomic& operator*=(const Cyclotomic& o) { *this = *this * o; return *this; }

    Cyclotomic scaled(const Rat& r) const;
    Cyclotomic div_int(long long m) const;

    /// Reduce modulo Phi_order; idempotent.
    Cyclotomic canonical() const;
    /// Lift to a multiple of the current order (index i -> i * M/N).
    Cyclotomic promoted(long new_order) const;

    bool is_zero() const;
    bool equals(const Cyclotomic& o) const;
    bool operator==(const Cyclotomic& o) const { return equals(o); }
    bool operator!=(const Cyclotomic& o) const { return !equals(o); }

    /// True when the canonical form is a plain rational; writes it to *out.
    bool as_rational(Rat* out = nullptr) const;

    std::complex<double> to_complex() const;

    std::string str() const;

private:
    long order_;
    std::vector<Rat> c_; // length order_, coefficient of zeta^i
};

/// Coefficients of the N-th cyclotomic polynomial, low degree first (cached).
const std::vector<Rat>& cyclotomic_polynomial(long n);

} // namespace expsum

#endif
