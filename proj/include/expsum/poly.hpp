#ifndef EXPSUM_POLY_HPP
#define EXPSUM_POLY_HPP

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "expsum/field.hpp"

namespace expsum {

/// Polynomial over F_q, coefficients low-degree-first, canonical (trimmed).
struct Poly {
    std::shared_ptr<const Field> f;
    std::vector<fe> c;

    Poly() = default;
    Poly(std::shared_ptr<const Field> fld, std::vector<fe> coeffs);

    int degree() const { return static_cast<int>(c.size()) - 1; } // -1 for zero
    bool is_zero() const { return c.empty(); }
    bool is_monic() const { return !c.empty() && c.back() == 1; }
    fe leading() const { return c.empty() ? 0 : c.back(); }
    fe coeff(int i) const { return (i >= 0 && i < static_cast<int>(c.size())) ? c[static_cast<size_t>(i)] : 0; }

    bool operator==(const Poly& o) const { return c == o.c && f->same_as(*o.f); }
};

Poly poly_zero(std::shared_ptr<const Field> f);
Poly poly_x(std::shared_ptr<const Field> f);
Poly poly_const(std::shared_ptr<const Field> f, fe v);

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, fe v);
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
Poly poly_gcd(const Poly& a, const Poly& b); // monic
Poly poly_derivative(const Poly& a);
Poly poly_pow(const Poly& a, int n);
fe poly_eval(const Poly& a, fe x);
Poly poly_monic(const Poly& a);

bool is_irreducible(const Poly& a);
const std::vector<Poly>& monic_irreducibles(const std::shared_ptr<const Field>& f, int d);

/// Full factorization by trial division (desk scale): monic irreducible
/// factors with multiplicities; the leading coefficient is dropped.
std::vector<std::pair<Poly, int>> factorize(const Poly& a);

Poly squarefree_part(const Poly& a);
int distinct_root_count(const Poly& a); // sum of degrees of distinct irreducible factors
bool is_mth_power(const Poly& a, int m);

/// All monic polynomials of degree k (q^k of them), or the c_k != 0 stratum
/// (q^{k-1}(q-1)) when nonzero_constant is set. Deterministic order.
std::vector<Poly> enumerate_monic_polys(const std::shared_ptr<const Field>& f, int k,
                                        bool nonzero_constant);

/// Callback enumeration used in hot loops: coeffs are the k non-leading
/// coefficients, low-degree-first (the polynomial is x^k + sum coeffs[i] x^i).
void for_each_monic(const std::shared_ptr<const Field>& f, int k, bool nonzero_constant,
                    const std::function<void(const std::vector<fe>&)>& fn);

/// Comma-separated integer coefficients, low-degree-first; integers are taken
/// mod p as prime-subfield elements unless they index field elements (flag).
Poly parse_poly(const std::shared_ptr<const Field>& f, const std::string& s);

std::string poly_str(const Poly& a);

} // namespace expsum

#endif
