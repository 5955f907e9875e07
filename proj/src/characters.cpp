#include "expsum/characters.hpp"

#include <numeric>

#include "expsum/errors.hpp"

namespace expsum {

int AdditiveChar::index(fe x) const {
    return field->abs_trace(field->mul(a, x));
}

int AdditiveChar::lifted_index(const std::shared_ptr<const Field>& ext, fe x) const {
    if (ext->same_as(*field)) return index(x);
    fe t = ext->trace_to(*field, x);
    return index(t);
}

Cyclotomic AdditiveChar::value(fe x) const {
    return Cyclotomic::root(field->p(), index(x));
}

long long MultChar::order() const {
    long long m = field->q() - 1;
    if (m == 0) return 1;
    return m / std::gcd(((j % m) + m) % m, m);
}

std::optional<long long> MultChar::eval(fe x) const {
    if (x == 0) return std::nullopt;
    long long m = field->q() - 1;
    if (m == 0) return 0;
    long long k = field->dlog(x);
    return ((j % m) * (k % m)) % m;
}

std::optional<long long> MultChar::lifted_eval(const std::shared_ptr<const Field>& ext, fe x) const {
    if (ext->same_as(*field)) return eval(x);
    if (x == 0) return std::nullopt;
    return eval(ext->norm_to(*field, x));
}

Cyclotomic MultChar::value(fe x) const {
    long long m = field->q() - 1;
    if (m == 0) m = 1;
    auto idx = eval(x);
    if (!idx) return Cyclotomic(m);
    return Cyclotomic::root(m, *idx);
}

MultChar quadratic_character(const std::shared_ptr<const Field>& f) {
    if (f->q() % 2 == 0) throw Error("quadratic character requires odd q");
    return MultChar{f, (f->q() - 1) / 2};
}

Cyclotomic gauss_sum(const MultChar& psi, const AdditiveChar& chi) {
    if (!psi.field->same_as(*chi.field))
        throw FieldMismatch("gauss_sum characters live over different fields");
    const auto& f = psi.field;
    long long m = f->q() - 1;
    if (m == 0) m = 1;
    long long n = std::lcm(static_cast<long long>(f->p()), m);
    Cyclotomic acc(n);
    for (long long c = 1; c < f->q(); ++c) {
        auto mi = psi.eval(static_cast<fe>(c));
        long long ai = chi.index(static_cast<fe>(c));
        acc.add_root(*mi * (n / m) + ai * (n / f->p()));
    }
    return acc.canonical();
}

} // namespace expsum
