#include "expsum/poly.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "expsum/errors.hpp"

namespace expsum {

namespace {
void trim(std::vector<fe>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}
void check_same_field(const Poly& a, const Poly& b) {
    if (!a.f->same_as(*b.f)) throw FieldMismatch("polynomials over different fields");
}
} // namespace

Poly::Poly(std::shared_ptr<const Field> fld, std::vector<fe> coeffs)
    : f(std::move(fld)), c(std::move(coeffs)) {
    trim(c);
}

Poly poly_zero(std::shared_ptr<const Field> f) { return Poly(std::move(f), {}); }
Poly poly_x(std::shared_ptr<const Field> f) { return Poly(std::move(f), {0, 1}); }
Poly poly_const(std::shared_ptr<const Field> f, fe v) { return Poly(std::move(f), {v}); }

Poly poly_add(const Poly& a, const Poly& b) {
    check_same_field(a, b);
    std::vector<fe> r(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < r.size(); ++i)
        r[i] = a.f->add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    return Poly(a.f, std::move(r));
}

Poly poly_sub(const Poly& a, const Poly& b) {
    check_same_field(a, b);
    std::vector<fe> r(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < r.size(); ++i)
        r[i] = a.f->sub(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    return Poly(a.f, std::move(r));
}

Poly poly_mul(const Poly& a, const Poly& b) {
    check_same_field(a, b);
    if (a.is_zero() || b.is_zero()) return poly_zero(a.f);
    std::vector<fe> r(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            r[i + j] = a.f->add(r[i + j], a.f->mul(a.c[i], b.c[j]));
    }
    return Poly(a.f, std::move(r));
}

Poly poly_scale(const Poly& a, fe v) {
    std::vector<fe> r = a.c;
    for (auto& x : r) x = a.f->mul(x, v);
    return Poly(a.f, std::move(r));
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    check_same_field(a, b);
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (a.degree() < b.degree()) return {poly_zero(a.f), a};
    std::vector<fe> rem = a.c;
    std::vector<fe> quot(static_cast<size_t>(a.degree() - b.degree() + 1), 0);
    fe lead_inv = a.f->inv(b.leading());
    for (int i = a.degree(); i >= b.degree(); --i) {
        fe cur = rem[static_cast<size_t>(i)];
        if (cur == 0) continue;
        fe qc = a.f->mul(cur, lead_inv);
        int shift = i - b.degree();
        quot[static_cast<size_t>(shift)] = qc;
        for (int j = 0; j <= b.degree(); ++j)
            rem[static_cast<size_t>(shift + j)] =
                a.f->sub(rem[static_cast<size_t>(shift + j)], a.f->mul(qc, b.c[static_cast<size_t>(j)]));
    }
    return {Poly(a.f, std::move(quot)), Poly(a.f, std::move(rem))};
}

Poly poly_monic(const Poly& a) {
    if (a.is_zero()) throw ZeroPolynomial("cannot normalize the zero polynomial");
    if (a.leading() == 1) return a;
    return poly_scale(a, a.f->inv(a.leading()));
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = poly_divmod(x, y).second;
        x = y;
        y = r;
    }
    if (x.is_zero()) return x;
    return poly_monic(x);
}

Poly poly_derivative(const Poly& a) {
    if (a.degree() < 1) return poly_zero(a.f);
    std::vector<fe> r(a.c.size() - 1, 0);
    for (size_t i = 1; i < a.c.size(); ++i)
        r[i - 1] = a.f->mul(a.c[i], a.f->from_int(static_cast<long long>(i)));
    return Poly(a.f, std::move(r));
}

Poly poly_pow(const Poly& a, int n) {
    Poly acc = poly_const(a.f, 1), b = a;
    while (n > 0) {
        if (n & 1) acc = poly_mul(acc, b);
        b = poly_mul(b, b);
        n >>= 1;
    }
    return acc;
}

fe poly_eval(const Poly& a, fe x) {
    fe acc = 0;
    for (size_t i = a.c.size(); i-- > 0;)
        acc = a.f->add(a.f->mul(acc, x), a.c[i]);
    return acc;
}

bool is_irreducible(const Poly& a) {
    if (a.degree() <= 0) return false;
    if (a.degree() == 1) return true;
    Poly m = poly_monic(a);
    for (int d = 1; 2 * d <= m.degree(); ++d)
        for (const Poly& g : monic_irreducibles(m.f, d))
            if (poly_divmod(m, g).second.is_zero()) return false;
    return true;
}

const std::vector<Poly>& monic_irreducibles(const std::shared_ptr<const Field>& f, int d) {
    static std::map<std::tuple<long long, std::vector<int>, int>, std::vector<Poly>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    std::tuple<long long, std::vector<int>, int> key(f->p(), f->modulus(), d);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    std::function<const std::vector<Poly>&(int)> build = [&](int deg) -> const std::vector<Poly>& {
        std::tuple<long long, std::vector<int>, int> k(f->p(), f->modulus(), deg);
        auto found = cache.find(k);
        if (found != cache.end()) return found->second;
        std::vector<Poly> out;
        long long count = 1;
        for (int i = 0; i < deg; ++i) {
            if (count > enumeration_budget() / f->q())
                throw BudgetExceeded("irreducible enumeration at degree " + std::to_string(deg));
            count *= f->q();
        }
        for (long long m = 0; m < count; ++m) {
            std::vector<fe> coeffs(static_cast<size_t>(deg) + 1, 0);
            long long t = m;
            for (int i = 0; i < deg; ++i) { coeffs[static_cast<size_t>(i)] = static_cast<fe>(t % f->q()); t /= f->q(); }
            coeffs[static_cast<size_t>(deg)] = 1;
            Poly cand(f, coeffs);
            bool irred = true;
            for (int dd = 1; irred && 2 * dd <= deg; ++dd)
                for (const Poly& g : build(dd))
                    if (poly_divmod(cand, g).second.is_zero()) { irred = false; break; }
            if (irred) out.push_back(std::move(cand));
        }
        cache[k] = std::move(out);
        return cache[k];
    };
    return build(d);
}

std::vector<std::pair<Poly, int>> factorize(const Poly& a) {
    if (a.is_zero()) throw ZeroPolynomial("cannot factor the zero polynomial");
    Poly rest = poly_monic(a);
    std::vector<std::pair<Poly, int>> out;
    for (int d = 1; 2 * d <= rest.degree(); ++d) {
        for (const Poly& g : monic_irreducibles(a.f, d)) {
            if (rest.degree() < 2 * d) break;
            int mult = 0;
            while (true) {
                auto [q, r] = poly_divmod(rest, g);
                if (!r.is_zero()) break;
                rest = q;
                ++mult;
            }
            if (mult > 0) out.emplace_back(g, mult);
        }
    }
    if (rest.degree() >= 1) out.emplace_back(rest, 1); // remaining factor is irreducible
    return out;
}

Poly squarefree_part(const Poly& a) {
    Poly out = poly_const(a.f, 1);
    for (const auto& [g, m] : factorize(a)) out = poly_mul(out, g);
    return out;
}

int distinct_root_count(const Poly& a) {
    int d = 0;
    for (const auto& [g, m] : factorize(a)) d += g.degree();
    return d;
}

bool is_mth_power(const Poly& a, int m) {
    if (m < 2) throw Error("is_mth_power requires m >= 2");
    for (const auto& [g, mult] : factorize(a))
        if (mult % m != 0) return false;
    return true;
}

void for_each_monic(const std::shared_ptr<const Field>& f, int k, bool nonzero_constant,
                    const std::function<void(const std::vector<fe>&)>& fn) {
    if (k == 0) {
        std::vector<fe> none;
        fn(none);
        return;
    }
    long long count = 1;
    for (int i = 0; i < k; ++i) {
        if (count > enumeration_budget() / f->q())
            throw BudgetExceeded("monic enumeration q^k at k=" + std::to_string(k));
        count *= f->q();
    }
    std::vector<fe> coeffs(static_cast<size_t>(k), 0);
    if (nonzero_constant) coeffs[0] = 1;
    while (true) {
        fn(coeffs);
        // odometer increment, low index fastest
        size_t i = 0;
        for (; i < coeffs.size(); ++i) {
            if (coeffs[i] + 1 < static_cast<fe>(f->q())) { ++coeffs[i]; break; }
            coeffs[i] = (i == 0 && nonzero_constant) ? 1 : 0;
        }
        if (i == coeffs.size()) break;
    }
}

std::vector<Poly> enumerate_monic_polys(const std::shared_ptr<const Field>& f, int k,
                                        bool nonzero_constant) {
    std::vector<Poly> out;
    for_each_monic(f, k, nonzero_constant, [&](const std::vector<fe>& coeffs) {
        std::vector<fe> c(coeffs);
        c.push_back(1);
        out.emplace_back(f, std::move(c));
    });
    return out;
}

Poly parse_poly(const std::shared_ptr<const Field>& f, const std::string& s) {
    std::vector<fe> coeffs;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        long long v = std::stoll(item);
        if (v >= 0 && v < f->q())
            coeffs.push_back(static_cast<fe>(v)); // element code
        else
            coeffs.push_back(f->from_int(v));
    }
    return Poly(f, std::move(coeffs));
}

std::string poly_str(const Poly& a) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = a.degree(); i >= 0; --i) {
        fe v = a.coeff(i);
        if (v == 0) continue;
        if (!first) os << " + ";
        if (i == 0 || v != 1) os << v;
        if (i > 0) {
            if (v != 1) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

} // namespace expsum
