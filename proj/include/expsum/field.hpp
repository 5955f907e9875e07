#ifndef EXPSUM_FIELD_HPP
#define EXPSUM_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace expsum {

/// Element code: base-p digits of the polynomial-basis representation,
/// code = sum rep[i] * p^i, so codes 0..p-1 are the prime subfield.
using fe = std::uint32_t;

long long enumeration_budget();
void set_enumeration_budget(long long b);

/// F_{p^e} with the canonical (lexicographically least, low-degree-first)
/// monic irreducible modulus and the least primitive element. Immutable
/// after construction; share via shared_ptr.
class Field {
public:
    static std::shared_ptr<const Field> make(long long p, int e, bool build_tables = true);
    static std::shared_ptr<const Field> make_with_modulus(long long p, const std::vector<int>& modulus,
                                                          bool build_tables = true);
    /// F_{q^s} as a relative extension of `base`, with the embedding of base
    /// elements attached. Results are cached for canonical bases.
    static std::shared_ptr<const Field> extension(const std::shared_ptr<const Field>& base, int s);

    int p() const { return p_; }
    int e() const { return e_; }
    long long q() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }
    fe generator() const { return generator_; }
    bool has_tables() const { return !exp_.empty(); }

    std::shared_ptr<const Field> base() const { return base_; }
    int ext_degree() const { return s_; } // this = F_{base.q ^ s}

    bool same_as(const Field& o) const {
        return p_ == o.p_ && e_ == o.e_ && modulus_ == o.modulus_;
    }

    // --- element arithmetic on codes ---
    fe add(fe x, fe y) const;
    fe sub(fe x, fe y) const;
    fe neg(fe x) const;
    fe mul(fe x, fe y) const;
    fe inv(fe x) const;
    fe pow(fe x, long long n) const; // negative n allowed for x != 0
    fe from_int(long long k) const;  // k mod p, as a prime-subfield element
    std::vector<int> rep(fe x) const;
    fe encode(const std::vector<int>& rep) const;

    long long dlog(fe x) const;     // x != 0, generator^result = x
    fe exp_of(long long k) const;   // generator^k

    /// Absolute trace to F_p, returned as an integer in [0, p).
    int abs_trace(fe x) const;

    // --- relative structure (target must lie on the base chain) ---
    fe embed_from(const Field& sub, fe x) const;
    fe trace_to(const Field& target, fe x) const;
    fe norm_to(const Field& target, fe x) const;

    /// Multiplication by plain polynomial arithmetic, bypassing the log
    /// tables; must agree with mul() everywhere.
    fe mul_raw(fe x, fe y) const;

private:
    Field() = default;
    void init_core(long long p, int e, const std::vector<int>& modulus, bool build_tables);
    const Field* find_in_chain(const Field& target) const;
    fe project_to(const Field& target, fe x) const;

    int p_ = 0;
    int e_ = 0;
    long long q_ = 0;
    std::vector<int> modulus_; // length e+1, monic, low-degree-first
    fe generator_ = 0;

    std::vector<fe> exp_;       // size q-1
    std::vector<int32_t> log_;  // size q, log_[0] = -1
    std::vector<uint16_t> tr_;  // absolute-trace table (e > 1 only)

    std::shared_ptr<const Field> base_;
    int s_ = 1;
    std::vector<fe> embed_;                  // base code -> code here
    std::unordered_map<fe, fe> unembed_;
};

bool is_prime(long long n);
std::vector<long long> prime_factors(long long n);
long long ipow_checked(long long b, int e, long long limit); // throws BudgetExceeded

/// u' with u*u' = 1 (mod modulus); u' = 1 when modulus <= 1.
long long mod_inverse_exponent(long long u, long long modulus);

/// "p^e" or "p^e/c0,c1,...,ce" (modulus coefficients low-degree-first).
std::shared_ptr<const Field> parse_field_spec(const std::string& spec);

} // namespace expsum

#endif
