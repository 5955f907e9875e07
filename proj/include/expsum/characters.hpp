#ifndef EXPSUM_CHARACTERS_HPP
#define EXPSUM_CHARACTERS_HPP

#include <memory>
#include <optional>

#include "expsum/cyclotomic.hpp"
#include "expsum/field.hpp"

namespace expsum {

/// chi_a(x) = zeta_p ^ Tr(a x); a = 1 is the canonical character.
struct AdditiveChar {
    std::shared_ptr<const Field> field;
    fe a = 1;

    bool trivial() const { return a == 0; }
    /// Tr(a x) as an integer in [0, p).
    int index(fe x) const;
    /// chi^{(s)}(x) = chi(Tr^s_1(x)) for x in an extension on the base chain.
    int lifted_index(const std::shared_ptr<const Field>& ext, fe x) const;
    Cyclotomic value(fe x) const;
};

/// psi_j(g^k) = zeta_{q-1}^{jk}; psi(0) = 0; order m = (q-1)/gcd(j, q-1).
struct MultChar {
    std::shared_ptr<const Field> field;
    long long j = 1;

    bool trivial() const { return j % (field->q() - 1) == 0; }
    long long order() const;
    /// index in [0, q-1), or nullopt for the absorbing zero.
    std::optional<long long> eval(fe x) const;
    /// psi^{(s)}(x) = psi(Norm(x)).
    std::optional<long long> lifted_eval(const std::shared_ptr<const Field>& ext, fe x) const;
    Cyclotomic value(fe x) const;
};

/// Quadratic character eta (q odd): j = (q-1)/2.
MultChar quadratic_character(const std::shared_ptr<const Field>& f);

/// g(psi, chi) = sum_{c != 0} psi(c) chi(c), exact over zeta_{lcm(p, q-1)}.
Cyclotomic gauss_sum(const MultChar& psi, const AdditiveChar& chi);

} // namespace expsum

#endif
