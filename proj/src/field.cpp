#include "expsum/field.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <tuple>

#include "expsum/errors.hpp"

namespace expsum {

namespace {

std::atomic<long long> g_budget{1LL << 22};

// ---- polynomials over Z/p on int vectors, low-degree-first, used only
// ---- during field construction ----

void trim(std::vector<int>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

// remainder of a mod b, b monic
std::vector<int> pmod(std::vector<int> a, const std::vector<int>& b, int p) {
    trim(a);
    size_t db = b.size() - 1;
    while (a.size() > db) {
        int lead = a.back();
        size_t shift = a.size() - 1 - db;
        if (lead != 0)
            for (size_t j = 0; j <= db; ++j)
                a[shift + j] = static_cast<int>(((a[shift + j] - 1LL * lead * b[j]) % p + p) % p);
        a.pop_back();
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

bool pdivides(const std::vector<int>& d, const std::vector<int>& f, int p) {
    return pmod(f, d, p).empty();
}

// monic irreducibles of degree d over F_p, cached; bootstrap by trial division
const std::vector<std::vector<int>>& prime_irreducibles(int p, int d) {
    static std::map<std::pair<int, int>, std::vector<std::vector<int>>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, d);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    std::function<const std::vector<std::vector<int>>&(int)> build =
        [&](int deg) -> const std::vector<std::vector<int>>& {
        auto k = std::make_pair(p, deg);
        auto found = cache.find(k);
        if (found != cache.end()) return found->second;
        std::vector<std::vector<int>> out;
        long long count = 1;
        for (int i = 0; i < deg; ++i) count *= p;
        for (long long m = 0; m < count; ++m) {
            std::vector<int> f(static_cast<size_t>(deg) + 1, 0);
            long long t = m;
            for (int i = 0; i < deg; ++i) { f[static_cast<size_t>(i)] = static_cast<int>(t % p); t /= p; }
            f[static_cast<size_t>(deg)] = 1;
            bool irred = true;
            for (int dd = 1; irred && 2 * dd <= deg; ++dd)
                for (const auto& g : build(dd))
                    if (pdivides(g, f, p)) { irred = false; break; }
            if (irred) out.push_back(std::move(f));
        }
        cache[k] = std::move(out);
        return cache[k];
    };
    return build(d);
}

bool is_irreducible_over_fp(const std::vector<int>& f, int p) {
    int deg = static_cast<int>(f.size()) - 1;
    if (deg <= 0) return false;
    if (deg == 1) return true;
    for (int d = 1; 2 * d <= deg; ++d)
        for (const auto& g : prime_irreducibles(p, d))
            if (pdivides(g, f, p)) return false;
    return true;
}

} // namespace

long long enumeration_budget() { return g_budget.load(); }
void set_enumeration_budget(long long b) { g_budget.store(b); }

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<long long> prime_factors(long long n) {
    std::vector<long long> out;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

long long ipow_checked(long long b, int e, long long limit) {
    long long r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > limit / b)
            throw BudgetExceeded("field cardinality " + std::to_string(b) + "^" +
                                 std::to_string(e) + " exceeds budget " + std::to_string(limit));
        r *= b;
    }
    return r;
}

long long mod_inverse_exponent(long long u, long long modulus) {
    if (modulus <= 1) return 1;
    long long a = ((u % modulus) + modulus) % modulus;
    if (std::gcd(a, modulus) != 1)
        throw NotCoprime("gcd(" + std::to_string(u) + ", " + std::to_string(modulus) + ") != 1");
    long long t = 0, newt = 1, r = modulus, newr = a;
    while (newr != 0) {
        long long qq = r / newr;
        long long tmp = t - qq * newt; t = newt; newt = tmp;
        tmp = r - qq * newr; r = newr; newr = tmp;
    }
    long long res = ((t % modulus) + modulus) % modulus;
    return res == 0 ? 1 : res;
}

// ------------------------------------------------------------------

void Field::init_core(long long p, int e, const std::vector<int>& modulus, bool build_tables) {
    p_ = static_cast<int>(p);
    e_ = e;
    q_ = ipow_checked(p, e, enumeration_budget());
    modulus_ = modulus;

    // least primitive element
    std::vector<long long> rad = prime_factors(q_ - 1);
    for (fe g = 1; g < static_cast<fe>(q_); ++g) {
        bool primitive = q_ == 2 ? g == 1 : true;
        for (long long r : rad) {
            // pow without tables
            fe acc = 1, b = g;
            long long n = (q_ - 1) / r;
            while (n > 0) {
                if (n & 1) acc = mul_raw(acc, b);
                b = mul_raw(b, b);
                n >>= 1;
            }
            if (acc == 1) { primitive = false; break; }
        }
        if (primitive) { generator_ = g; break; }
    }

    if (build_tables) {
        exp_.resize(static_cast<size_t>(q_ - 1));
        log_.assign(static_cast<size_t>(q_), -1);
        fe x = 1;
        for (long long k = 0; k < q_ - 1; ++k) {
            exp_[static_cast<size_t>(k)] = x;
            log_[x] = static_cast<int32_t>(k);
            x = mul_raw(x, generator_);
        }
    }
    if (e_ > 1) {
        // absolute trace table via F_p-linearity over the basis traces
        std::vector<int> basis_tr(static_cast<size_t>(e_));
        for (int i = 0; i < e_; ++i) {
            fe xi = encode([&] { std::vector<int> v(static_cast<size_t>(e_), 0); v[static_cast<size_t>(i)] = 1; return v; }());
            fe acc = 0, t = xi;
            for (int j = 0; j < e_; ++j) {
                acc = add(acc, t);
                // t <- t^p
                fe b = t, r = 1;
                long long n = p_;
                while (n > 0) {
                    if (n & 1) r = mul_raw(r, b);
                    b = mul_raw(b, b);
                    n >>= 1;
                }
                t = r;
            }
            basis_tr[static_cast<size_t>(i)] = static_cast<int>(acc); // lies in prime subfield
        }
        tr_.resize(static_cast<size_t>(q_));
        for (long long c = 0; c < q_; ++c) {
            long long t = c;
            int acc = 0;
            for (int i = 0; i < e_; ++i) {
                acc = static_cast<int>((acc + (t % p_) * basis_tr[static_cast<size_t>(i)]) % p_);
                t /= p_;
            }
            tr_[static_cast<size_t>(c)] = static_cast<uint16_t>(acc);
        }
    }
}

std::shared_ptr<const Field> Field::make(long long p, int e, bool build_tables) {
    if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
    if (e < 1) throw Error("extension degree must be positive");
    ipow_checked(p, e, enumeration_budget());

    std::vector<int> modulus;
    if (e == 1) {
        modulus = {0, 1}; // x
    } else {
        // lexicographically least (low-degree-first) monic irreducible of degree e
        long long count = 1;
        for (int i = 0; i < e; ++i) count *= p;
        for (long long m = 0; m < count && modulus.empty(); ++m) {
            std::vector<int> f(static_cast<size_t>(e) + 1, 0);
            long long t = m;
            // lex order on (c_0, c_1, ..., c_{e-1}): c_0 is the most significant digit
            for (int i = e - 1; i >= 0; --i) { f[static_cast<size_t>(i)] = static_cast<int>(t % p); t /= p; }
            f[static_cast<size_t>(e)] = 1;
            if (is_irreducible_over_fp(f, static_cast<int>(p))) modulus = f;
        }
    }
    auto fld = std::shared_ptr<Field>(new Field());
    fld->init_core(p, e, modulus, build_tables);
    return fld;
}

std::shared_ptr<const Field> Field::make_with_modulus(long long p, const std::vector<int>& modulus,
                                                      bool build_tables) {
    if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
    std::vector<int> m = modulus;
    for (int& c : m) c = static_cast<int>(((c % p) + p) % p);
    if (m.size() < 2 || m.back() != 1) throw Error("modulus must be monic of degree >= 1");
    int e = static_cast<int>(m.size()) - 1;
    if (e > 1 && !is_irreducible_over_fp(m, static_cast<int>(p)))
        throw Error("modulus is reducible over F_p");
    auto fld = std::shared_ptr<Field>(new Field());
    fld->init_core(p, e, m, build_tables);
    return fld;
}

std::shared_ptr<const Field> Field::extension(const std::shared_ptr<const Field>& base, int s) {
    if (s < 1) throw Error("extension degree must be positive");
    if (s == 1) return base;

    static std::map<std::tuple<long long, std::vector<int>, int>, std::shared_ptr<const Field>> cache;
    static std::mutex mu;
    std::tuple<long long, std::vector<int>, int> key(base->p(), base->modulus(), s);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end() && it->second->base_ && it->second->base_->same_as(*base))
            return it->second;
    }

    auto canon = make(base->p(), base->e() * s);
    auto fld = std::shared_ptr<Field>(new Field(*canon));
    fld->base_ = base;
    fld->s_ = s;

    // embed F_p[x]/(base modulus) via the least root of the base modulus here
    fe root = 0;
    bool found = false;
    for (long long z = 0; z < fld->q_ && !found; ++z) {
        fe acc = 0;
        for (size_t i = base->modulus().size(); i-- > 0;) {
            acc = fld->mul(acc, static_cast<fe>(z));
            acc = fld->add(acc, fld->from_int(base->modulus()[i]));
        }
        if (acc == 0) { root = static_cast<fe>(z); found = true; }
    }
    if (!found) throw Error("internal: base modulus has no root in extension");

    fld->embed_.resize(static_cast<size_t>(base->q()));
    for (long long b = 0; b < base->q(); ++b) {
        std::vector<int> r = base->rep(static_cast<fe>(b));
        fe acc = 0;
        for (size_t i = r.size(); i-- > 0;) {
            acc = fld->mul(acc, root);
            acc = fld->add(acc, fld->from_int(r[i]));
        }
        fld->embed_[static_cast<size_t>(b)] = acc;
        fld->unembed_[acc] = static_cast<fe>(b);
    }

    std::lock_guard<std::mutex> lock(mu);
    cache[key] = fld;
    return fld;
}

std::vector<int> Field::rep(fe x) const {
    std::vector<int> v(static_cast<size_t>(e_));
    long long t = x;
    for (int i = 0; i < e_; ++i) { v[static_cast<size_t>(i)] = static_cast<int>(t % p_); t /= p_; }
    return v;
}

fe Field::encode(const std::vector<int>& r) const {
    long long code = 0;
    for (size_t i = r.size(); i-- > 0;) code = code * p_ + (((r[i] % p_) + p_) % p_);
    return static_cast<fe>(code);
}

fe Field::add(fe x, fe y) const {
    if (p_ == 2) return x ^ y;
    long long xa = x, yb = y, out = 0, m = 1;
    for (int i = 0; i < e_; ++i) {
        out += m * ((xa % p_ + yb % p_) % p_);
        xa /= p_; yb /= p_; m *= p_;
    }
    return static_cast<fe>(out);
}

fe Field::neg(fe x) const {
    if (p_ == 2) return x;
    long long xa = x, out = 0, m = 1;
    for (int i = 0; i < e_; ++i) {
        out += m * ((p_ - xa % p_) % p_);
        xa /= p_; m *= p_;
    }
    return static_cast<fe>(out);
}

fe Field::sub(fe x, fe y) const { return add(x, neg(y)); }

fe Field::mul_raw(fe x, fe y) const {
    if (x == 0 || y == 0) return 0;
    std::vector<int> a = rep(x), b = rep(y);
    std::vector<long long> prod(static_cast<size_t>(2 * e_ - 1), 0);
    for (int i = 0; i < e_; ++i) {
        if (a[static_cast<size_t>(i)] == 0) continue;
        for (int j = 0; j < e_; ++j)
            prod[static_cast<size_t>(i + j)] += 1LL * a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)];
    }
    // reduce mod modulus
    for (int i = 2 * e_ - 2; i >= e_; --i) {
        long long lead = prod[static_cast<size_t>(i)] % p_;
        if (lead == 0) continue;
        for (int j = 0; j <= e_; ++j)
            prod[static_cast<size_t>(i - e_ + j)] -= lead * modulus_[static_cast<size_t>(j)];
    }
    long long out = 0, m = 1;
    for (int i = 0; i < e_; ++i) {
        long long d = ((prod[static_cast<size_t>(i)] % p_) + p_) % p_;
        out += m * d;
        m *= p_;
    }
    return static_cast<fe>(out);
}

fe Field::mul(fe x, fe y) const {
    if (exp_.empty()) return mul_raw(x, y);
    if (x == 0 || y == 0) return 0;
    long long k = log_[x] + log_[y];
    if (k >= q_ - 1) k -= q_ - 1;
    return exp_[static_cast<size_t>(k)];
}

fe Field::inv(fe x) const {
    if (x == 0) throw DivisionByZero("inverse of zero field element");
    if (!exp_.empty()) {
        long long k = (q_ - 1 - log_[x]) % (q_ - 1);
        return exp_[static_cast<size_t>(k)];
    }
    return pow(x, q_ - 2);
}

fe Field::pow(fe x, long long n) const {
    if (x == 0) {
        if (n < 0) throw DivisionByZero("negative power of zero");
        return n == 0 ? 1 : 0;
    }
    long long m = n % (q_ - 1);
    if (m < 0) m += q_ - 1;
    if (!exp_.empty()) {
        long long k = (static_cast<long long>(log_[x]) * (m % (q_ - 1))) % (q_ - 1);
        return exp_[static_cast<size_t>(k)];
    }
    fe acc = 1, b = x;
    while (m > 0) {
        if (m & 1) acc = mul_raw(acc, b);
        b = mul_raw(b, b);
        m >>= 1;
    }
    return acc;
}

fe Field::from_int(long long k) const {
    long long r = ((k % p_) + p_) % p_;
    return static_cast<fe>(r);
}

long long Field::dlog(fe x) const {
    if (x == 0) throw DivisionByZero("discrete log of zero");
    if (exp_.empty()) throw Error("field built without log tables");
    return log_[x];
}

fe Field::exp_of(long long k) const {
    if (exp_.empty()) throw Error("field built without log tables");
    long long m = k % (q_ - 1);
    if (m < 0) m += q_ - 1;
    return exp_[static_cast<size_t>(m)];
}

int Field::abs_trace(fe x) const {
    if (e_ == 1) return static_cast<int>(x);
    return static_cast<int>(tr_[x]);
}

const Field* Field::find_in_chain(const Field& target) const {
    const Field* f = this;
    while (f) {
        if (f->same_as(target)) return f;
        f = f->base_.get();
    }
    return nullptr;
}

fe Field::project_to(const Field& target, fe x) const {
    // walk the base chain, unembedding one level at a time
    if (same_as(target)) return x;
    if (!base_)
        throw NotASubfield("element does not project to the requested field");
    auto it = unembed_.find(x);
    if (it == unembed_.end())
        throw NotASubfield("element is not in the embedded subfield image");
    return base_->project_to(target, it->second);
}

fe Field::embed_from(const Field& sub, fe x) const {
    if (same_as(sub)) return x;
    if (!base_) throw NotASubfield("no base chain to embed from");
    return embed_[base_->embed_from(sub, x)];
}

fe Field::trace_to(const Field& target, fe x) const {
    const Field* t = find_in_chain(target);
    if (!t || e_ % t->e() != 0)
        throw NotASubfield("trace target is not a subfield on the base chain");
    if (t == this || same_as(target)) return x;
    long long qt = t->q();
    int n = e_ / t->e();
    fe acc = x, term = x;
    for (int i = 1; i < n; ++i) {
        term = pow(term, qt);
        acc = add(acc, term);
    }
    return project_to(target, acc);
}

fe Field::norm_to(const Field& target, fe x) const {
    const Field* t = find_in_chain(target);
    if (!t || e_ % t->e() != 0)
        throw NotASubfield("norm target is not a subfield on the base chain");
    if (t == this || same_as(target)) return x;
    if (x == 0) return 0;
    long long expo = (q_ - 1) / (t->q() - 1);
    return project_to(target, pow(x, expo));
}

std::shared_ptr<const Field> parse_field_spec(const std::string& spec) {
    auto caret = spec.find('^');
    if (caret == std::string::npos) {
        long long p = std::stoll(spec);
        return Field::make(p, 1);
    }
    long long p = std::stoll(spec.substr(0, caret));
    std::string rest = spec.substr(caret + 1);
    auto slash = rest.find('/');
    if (slash == std::string::npos) {
        int e = std::stoi(rest);
        return Field::make(p, e);
    }
    int e = std::stoi(rest.substr(0, slash));
    std::vector<int> coeffs;
    std::stringstream ss(rest.substr(slash + 1));
    std::string item;
    while (std::getline(ss, item, ',')) coeffs.push_back(std::stoi(item));
    if (static_cast<int>(coeffs.size()) != e + 1)
        throw Error("modulus must list e+1 coefficients");
    return Field::make_with_modulus(p, coeffs);
}

} // namespace expsum
