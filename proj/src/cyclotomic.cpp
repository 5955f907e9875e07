#include "expsum/cyclotomic.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "expsum/errors.hpp"

namespace expsum {

Cyclotomic::Cyclotomic(long order) : order_(order), c_(static_cast<size_t>(order)) {
    if (order < 1) throw Error("Cyclotomic order must be >= 1");
}

Cyclotomic Cyclotomic::root(long order, long index, const Rat& weight) {
    Cyclotomic z(order);
    z.add_root(index, weight);
    return z;
}

Cyclotomic Cyclotomic::integer(const Rat& v) {
    Cyclotomic z(1);
    z.c_[0] = v;
    return z;
}

Cyclotomic Cyclotomic::from_counts(long order, const std::vector<long long>& counts) {
    Cyclotomic z(order);
    for (size_t i = 0; i < counts.size() && i < z.c_.size(); ++i)
        z.c_[i] = Rat(Int(counts[i]));
    return z;
}

void Cyclotomic::add_root(long index, const Rat& weight) {
    long i = index % order_;
    if (i < 0) i += order_;
    c_[static_cast<size_t>(i)] += weight;
}

Cyclotomic Cyclotomic::promoted(long new_order) const {
    if (new_order == order_) return *this;
    if (new_order % order_ != 0)
        throw OrderMismatch("cannot promote order " + std::to_string(order_) +
                            " to " + std::to_string(new_order));
    Cyclotomic z(new_order);
    long k = new_order / order_;
    for (long i = 0; i < order_; ++i) z.c_[static_cast<size_t>(i * k)] = c_[static_cast<size_t>(i)];
    return z;
}

namespace {
long common_order(long a, long b) {
    if (a % b == 0) return a;
    if (b % a == 0) return b;
    throw OrderMismatch("incompatible cyclotomic orders " + std::to_string(a) +
                        " and " + std::to_string(b));
}
} // namespace

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    long n = common_order(order_, o.order_);
    Cyclotomic x = promoted(n), y = o.promoted(n);
    for (long i = 0; i < n; ++i) x.c_[static_cast<size_t>(i)] += y.c_[static_cast<size_t>(i)];
    return x;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic z(*this);
    for (auto& v : z.c_) v = -v;
    return z;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    long n = common_order(order_, o.order_);
    Cyclotomic x = promoted(n), y = o.promoted(n);
    Cyclotomic z(n);
    for (long i = 0; i < n; ++i) {
        if (x.c_[static_cast<size_t>(i)] == Rat(0)) continue;
        for (long j = 0; j < n; ++j) {
            if (y.c_[static_cast<size_t>(j)] == Rat(0)) continue;
            z.c_[static_cast<size_t>((i + j) % n)] +=
                x.c_[static_cast<size_t>(i)] * y.c_[static_cast<size_t>(j)];
        }
    }
    return z;
}

Cyclotomic Cyclotomic::scaled(const Rat& r) const {
    Cyclotomic z(*this);
    for (auto& v : z.c_) v *= r;
    return z;
}

Cyclotomic Cyclotomic::div_int(long long m) const {
    if (m == 0) throw DivisionByZero("cyclotomic division by zero integer");
    return scaled(Rat(Int(1), Int(m)));
}

const std::vector<Rat>& cyclotomic_polynomial(long n) {
    static std::map<long, std::vector<Rat>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, by exact long division.
    std::function<std::vector<Rat>(long)> build = [&](long m) -> std::vector<Rat> {
        auto found = cache.find(m);
        if (found != cache.end()) return found->second;
        std::vector<Rat> num(static_cast<size_t>(m) + 1);
        num[0] = Rat(-1);
        num[static_cast<size_t>(m)] = Rat(1);
        for (long d = 1; d < m; ++d) {
            if (m % d != 0) continue;
            std::vector<Rat> phi = build(d);
            // num /= phi (exact, phi monic)
            size_t dn = num.size() - 1, dp = phi.size() - 1;
            std::vector<Rat> rem = num;
            std::vector<Rat> quot(dn - dp + 1);
            for (size_t i = dn;; --i) {
                Rat lead = rem[i];
                if (lead != Rat(0)) {
                    quot[i - dp] = lead;
                    for (size_t j = 0; j <= dp; ++j) rem[i - dp + j] -= lead * phi[j];
                }
                if (i == dp) break;
            }
            num = quot;
        }
        cache[m] = num;
        return num;
    };
    build(n);
    return cache[n];
}

Cyclotomic Cyclotomic::canonical() const {
    const std::vector<Rat>& phi = cyclotomic_polynomial(order_);
    size_t deg = phi.size() - 1; // = euler phi(order_)
    Cyclotomic z(*this);
    for (size_t i = z.c_.size(); i-- > deg;) {
        Rat lead = z.c_[i];
        if (lead == Rat(0)) continue;
        z.c_[i] = Rat(0);
        size_t shift = i - deg;
        for (size_t j = 0; j < deg; ++j)
            z.c_[shift + j] -= lead * phi[j];
    }
    return z;
}

bool Cyclotomic::is_zero() const {
    Cyclotomic z = canonical();
    for (const auto& v : z.c_)
        if (v != Rat(0)) return false;
    return true;
}

bool Cyclotomic::equals(const Cyclotomic& o) const {
    long n = common_order(order_, o.order_);
    Cyclotomic x = promoted(n).canonical();
    Cyclotomic y = o.promoted(n).canonical();
    return x.c_ == y.c_;
}

bool Cyclotomic::as_rational(Rat* out) const {
    Cyclotomic z = canonical();
    for (size_t i = 1; i < z.c_.size(); ++i)
        if (z.c_[i] != Rat(0)) return false;
    if (out) *out = z.c_[0];
    return true;
}

std::complex<double> Cyclotomic::to_complex() const {
    std::complex<double> acc(0.0, 0.0);
    const double two_pi = 6.283185307179586476925286766559;
    for (long i = 0; i < order_; ++i) {
        const Rat& v = c_[static_cast<size_t>(i)];
        if (v == Rat(0)) continue;
        double ang = two_pi * static_cast<double>(i) / static_cast<double>(order_);
        acc += to_double(v) * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return acc;
}

std::string Cyclotomic::str() const {
    Cyclotomic z = canonical();
    std::ostringstream os;
    bool first = true;
    for (long i = 0; i < z.order_; ++i) {
        const Rat& v = z.c_[static_cast<size_t>(i)];
        if (v == Rat(0)) continue;
        if (!first) os << " + ";
        os << to_string(v);
        if (i > 0) os << "*z" << z.order_ << "^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

} // namespace expsum
