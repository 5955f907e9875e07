#ifndef EXPSUM_SYMMETRIC_HPP
#define EXPSUM_SYMMETRIC_HPP

#include <algorithm>
#include <complex>
#include <functional>
#include <vector>

#include "expsum/cyclotomic.hpp"
#include "expsum/errors.hpp"
#include "expsum/field.hpp"
#include "expsum/rational.hpp"

namespace expsum {

// ---- coefficient-ring glue -------------------------------------------------
// Newton's power-sum recursion needs only +, -, *, and integer scaling; the
// inverse direction additionally needs exact division by 1..m_max.

inline Rat ring_scale_int(const Rat& x, long long n) { return x * Rat(Int(n)); }
inline Rat ring_div_int(const Rat& x, long long n) { return x / Rat(Int(n)); }
inline Rat ring_one_like(const Rat&) { return Rat(1); }

inline Cyclotomic ring_scale_int(const Cyclotomic& x, long long n) { return x.scaled(Rat(Int(n))); }
inline Cyclotomic ring_div_int(const Cyclotomic& x, long long n) { return x.div_int(n); }
inline Cyclotomic ring_one_like(const Cyclotomic& x) {
    return Cyclotomic::root(x.order(), 0);
}

inline std::complex<double> ring_scale_int(const std::complex<double>& x, long long n) {
    return x * static_cast<double>(n);
}
inline std::complex<double> ring_div_int(const std::complex<double>& x, long long n) {
    return x / static_cast<double>(n);
}
inline std::complex<double> ring_one_like(const std::complex<double>&) { return {1.0, 0.0}; }

/// Field element as a ring value; division by integers divisible by p is
/// refused (Newton inversion is unavailable in characteristic p for m >= p).
struct FqElem {
    std::shared_ptr<const Field> f;
    fe v = 0;
    FqElem operator+(const FqElem& o) const { return {f, f->add(v, o.v)}; }
    FqElem operator-(const FqElem& o) const { return {f, f->sub(v, o.v)}; }
    FqElem operator-() const { return {f, f->neg(v)}; }
    FqElem operator*(const FqElem& o) const { return {f, f->mul(v, o.v)}; }
    bool operator==(const FqElem& o) const { return v == o.v; }
};
inline FqElem ring_scale_int(const FqElem& x, long long n) {
    return {x.f, x.f->mul(x.v, x.f->from_int(n))};
}
inline FqElem ring_div_int(const FqElem& x, long long n) {
    if (n % x.f->p() == 0)
        throw RingLacksDivision("division by " + std::to_string(n) + " in characteristic " +
                                std::to_string(x.f->p()));
    return {x.f, x.f->mul(x.v, x.f->inv(x.f->from_int(n)))};
}
inline FqElem ring_one_like(const FqElem& x) { return {x.f, 1}; }

// ---- Newton's identities ---------------------------------------------------

/// p_1..p_{m_max} from e_1..e_k (e_j = 0 beyond k), by the division-free
/// recursion p_m = sum_{j<m} (-1)^{j-1} e_j p_{m-j} + (-1)^{m-1} m e_m.
template <class R>
std::vector<R> power_sums_from_elementary(const std::vector<R>& e, int m_max) {
    std::vector<R> p;
    if (m_max < 1) return p;
    R zero = e.empty() ? R{} : e[0] - e[0];
    auto e_at = [&](int j) -> R {
        return (j >= 1 && j <= static_cast<int>(e.size())) ? e[static_cast<size_t>(j - 1)] : zero;
    };
    p.reserve(static_cast<size_t>(m_max));
    for (int m = 1; m <= m_max; ++m) {
        R acc = ring_scale_int(e_at(m), (m % 2 == 1) ? m : -m);
        for (int j = 1; j < m; ++j) {
            R term = e_at(j) * p[static_cast<size_t>(m - j - 1)];
            acc = (j % 2 == 1) ? acc + term : acc - term;
        }
        p.push_back(acc);
    }
    return p;
}

/// e_1..e_{m_max} from p_1..p_{m_max}, inverting the recursion above:
/// m e_m = sum_{j=1}^m (-1)^{j-1} e_{m-j} p_j (with e_0 = 1).
template <class R>
std::vector<R> elementary_from_power_sums(const std::vector<R>& p, int m_max) {
    std::vector<R> e;
    if (m_max < 1) return e;
    if (static_cast<int>(p.size()) < m_max)
        throw Error("elementary_from_power_sums needs m_max power sums");
    R one = ring_one_like(p[0]);
    e.reserve(static_cast<size_t>(m_max));
    for (int m = 1; m <= m_max; ++m) {
        R acc = p[0] - p[0]; // zero
        for (int j = 1; j <= m; ++j) {
            R em_j = (m - j == 0) ? one : e[static_cast<size_t>(m - j - 1)];
            R term = em_j * p[static_cast<size_t>(j - 1)];
            acc = (j % 2 == 1) ? acc + term : acc - term;
        }
        e.push_back(ring_div_int(acc, m));
    }
    return e;
}

// ---- determinant cross-checks (naive expansion, sizes <= 6) ----------------

template <class R>
R naive_determinant(const std::vector<std::vector<R>>& a) {
    size_t n = a.size();
    if (n == 1) return a[0][0];
    R acc = a[0][0] - a[0][0];
    std::vector<std::vector<R>> minor(n - 1, std::vector<R>(n - 1, acc));
    for (size_t col = 0; col < n; ++col) {
        for (size_t i = 1; i < n; ++i) {
            size_t jj = 0;
            for (size_t j = 0; j < n; ++j) {
                if (j == col) continue;
                minor[i - 1][jj++] = a[i][j];
            }
        }
        R term = a[0][col] * naive_determinant(minor);
        acc = (col % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

/// p_m as the determinant with e's down the first column and a unit
/// superdiagonal.
template <class R>
R power_sum_determinant(const std::vector<R>& e, int m) {
    R zero = e[0] - e[0];
    R one = ring_one_like(e[0]);
    auto e_at = [&](int j) -> R {
        return (j >= 1 && j <= static_cast<int>(e.size())) ? e[static_cast<size_t>(j - 1)] : zero;
    };
    std::vector<std::vector<R>> a(static_cast<size_t>(m), std::vector<R>(static_cast<size_t>(m), zero));
    for (int i = 1; i <= m; ++i) {
        a[static_cast<size_t>(i - 1)][0] = ring_scale_int(e_at(i), i);
        for (int j = 2; j <= m; ++j) {
            int idx = i - j + 1;
            if (idx >= 1)
                a[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = e_at(idx);
            else if (idx == 0 && j == i + 1)
                a[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = one;
        }
    }
    return naive_determinant(a);
}

/// e_m = det(...)/m! with p's down the first column and superdiagonal 1..m-1.
template <class R>
R elementary_determinant(const std::vector<R>& p, int m) {
    R zero = p[0] - p[0];
    std::vector<std::vector<R>> a(static_cast<size_t>(m), std::vector<R>(static_cast<size_t>(m), zero));
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= m; ++j) {
            int idx = i - j + 1;
            if (j == i + 1)
                a[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] =
                    ring_scale_int(ring_one_like(p[0]), i);
            else if (idx >= 1)
                a[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = p[static_cast<size_t>(idx - 1)];
        }
    }
    R det = naive_determinant(a);
    for (int i = 2; i <= m; ++i) det = ring_div_int(det, i);
    return det;
}

// ---- Dickson polynomials of the first kind ---------------------------------

/// D_n^{(1)}(x_1..x_k, a) by the order-(k+1) linear recurrence with the
/// standard initial values D_0 = k+1, D_j = sum (-1)^{t-1} x_t D_{j-t}
/// + (-1)^j (k+1-j) x_j.
template <class R>
R dickson_first_kind(const std::vector<R>& xs, const R& a, int n) {
    int k = static_cast<int>(xs.size());
    R one = ring_one_like(a);
    std::vector<R> d;
    d.push_back(ring_scale_int(one, k + 1));
    for (int j = 1; j <= k && j <= n; ++j) {
        R acc = ring_scale_int(xs[static_cast<size_t>(j - 1)], (j % 2 == 0) ? (k + 1 - j) : -(k + 1 - j));
        for (int t = 1; t <= j; ++t) {
            R term = xs[static_cast<size_t>(t - 1)] * d[static_cast<size_t>(j - t)];
            acc = (t % 2 == 1) ? acc + term : acc - term;
        }
        d.push_back(acc);
    }
    for (int m = k + 1; m <= n; ++m) {
        R acc = ring_scale_int(a * d[static_cast<size_t>(m - k - 1)], (k % 2 == 0) ? 1 : -1);
        for (int t = 1; t <= k; ++t) {
            R term = xs[static_cast<size_t>(t - 1)] * d[static_cast<size_t>(m - t)];
            acc = (t % 2 == 1) ? acc + term : acc - term;
        }
        d.push_back(acc);
    }
    return d[static_cast<size_t>(n)];
}

/// Waring's explicit multi-index expansion of the n-th power sum in the
/// elementary symmetric functions (e_1..e_k, e_{k+1} = a). Desk scale only.
template <class R>
R dickson_waring(const std::vector<R>& xs, const R& a, int n) {
    int k = static_cast<int>(xs.size());
    if (n < 1) throw Error("dickson_waring requires n >= 1");
    if (k > 3 || n > 12) throw BudgetExceeded("waring expansion limited to k <= 3, n <= 12");
    std::vector<R> e = xs;
    e.push_back(a);
    int vars = k + 1;
    R zero = a - a;
    R acc = zero;
    // multi-indices (i_1..i_{k+1}) with sum j*i_j = n
    std::vector<int> idx(static_cast<size_t>(vars), 0);
    auto fact = [](int m) { long long r = 1; for (int i = 2; i <= m; ++i) r *= i; return r; };
    std::function<void(int, int)> rec = [&](int pos, int rem) {
        if (pos == vars) {
            if (rem != 0) return;
            int total = 0;
            for (int v : idx) total += v;
            if (total == 0) return;
            long long coef = n * fact(total - 1);
            for (int v : idx) coef /= fact(v);
            if ((n - total) % 2 != 0) coef = -coef;
            R term = ring_one_like(a);
            for (int j = 0; j < vars; ++j)
                for (int t = 0; t < idx[static_cast<size_t>(j)]; ++t) term = term * e[static_cast<size_t>(j)];
            acc = acc + ring_scale_int(term, coef);
            return;
        }
        for (int i = 0; (pos + 1) * i <= rem; ++i) {
            idx[static_cast<size_t>(pos)] = i;
            rec(pos + 1, rem - (pos + 1) * i);
        }
        idx[static_cast<size_t>(pos)] = 0;
    };
    rec(0, n);
    return acc;
}

/// Power-series coefficients of the generating function
/// (sum_{i<=k} (k+1-i)(-1)^i x_i z^i) / (sum_{i<=k+1} (-1)^i x_i z^i)
/// to order N, by long division (the denominator has constant term 1).
template <class R>
std::vector<R> dickson_series(const std::vector<R>& xs, const R& a, int n_terms) {
    int k = static_cast<int>(xs.size());
    R one = ring_one_like(a);
    R zero = a - a;
    std::vector<R> num(static_cast<size_t>(k) + 1, zero), den(static_cast<size_t>(k) + 2, zero);
    num[0] = ring_scale_int(one, k + 1);
    den[0] = one;
    for (int i = 1; i <= k; ++i) {
        num[static_cast<size_t>(i)] = ring_scale_int(xs[static_cast<size_t>(i - 1)], (i % 2 == 0) ? (k + 1 - i) : -(k + 1 - i));
        den[static_cast<size_t>(i)] = ring_scale_int(xs[static_cast<size_t>(i - 1)], (i % 2 == 0) ? 1 : -1);
    }
    den[static_cast<size_t>(k) + 1] = ring_scale_int(a, (k % 2 == 0) ? -1 : 1);
    std::vector<R> s;
    s.reserve(static_cast<size_t>(n_terms));
    for (int m = 0; m < n_terms; ++m) {
        R acc = (m <= k) ? num[static_cast<size_t>(m)] : zero;
        for (int i = 1; i <= std::min(m, k + 1); ++i)
            acc = acc - den[static_cast<size_t>(i)] * s[static_cast<size_t>(m - i)];
        s.push_back(acc);
    }
    return s;
}

/// Classical two-parameter Dickson polynomial: D_0 = 2, D_1 = x,
/// D_n = x D_{n-1} - a D_{n-2}; equals dickson_first_kind at k = 1.
template <class R>
R two_var_dickson(const R& x, const R& a, int n) {
    R d0 = ring_scale_int(ring_one_like(x), 2);
    if (n == 0) return d0;
    R d1 = x;
    for (int m = 2; m <= n; ++m) {
        R d2 = x * d1 - a * d0;
        d0 = d1;
        d1 = d2;
    }
    return d1;
}

} // namespace expsum

#endif
