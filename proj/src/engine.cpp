#include "expsum/engine.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "expsum/errors.hpp"
#include "expsum/roots.hpp"
#include "expsum/symmetric.hpp"

namespace expsum {

GSumSpec::GSumSpec(std::shared_ptr<const Field> f, long long u_, fe a_, fe b_)
    : field(std::move(f)), u(u_), a(a_), b(b_) {
    if (u < 1) throw Error("G_u requires u >= 1");
    if (a == 0) throw ZeroParameter("G_u requires a in F_q^*");
    if (a >= field->q() || b >= field->q()) throw FieldMismatch("a, b must be element codes of the field");
}

std::shared_ptr<const Field> get_extension(const std::shared_ptr<const Field>& base, int s) {
    return Field::extension(base, s);
}

namespace {

Cyclotomic counts_to_cyclo(int p, const std::vector<long long>& counts) {
    return Cyclotomic::from_counts(p, counts).canonical();
}

Poly embed_poly(const Poly& f, const std::shared_ptr<const Field>& ext) {
    std::vector<fe> c(f.c.size());
    for (size_t i = 0; i < f.c.size(); ++i) c[i] = ext->embed_from(*f.f, f.c[i]);
    return Poly(ext, std::move(c));
}

} // namespace

Cyclotomic weil_sum_brute(const Poly& f, const AdditiveChar& chi, int s) {
    if (!f.f->same_as(*chi.field)) throw FieldMismatch("polynomial and character fields differ");
    auto ext = get_extension(f.f, s);
    Poly fe_ = embed_poly(f, ext);
    fe ae = ext->embed_from(*chi.field, chi.a);
    std::vector<long long> counts(static_cast<size_t>(ext->p()), 0);
    for (long long c = 0; c < ext->q(); ++c) {
        fe v = poly_eval(fe_, static_cast<fe>(c));
        ++counts[static_cast<size_t>(ext->abs_trace(ext->mul(ae, v)))];
    }
    return counts_to_cyclo(ext->p(), counts);
}

Cyclotomic mult_sum_brute(const Poly& f, const MultChar& psi, int s) {
    if (!f.f->same_as(*psi.field)) throw FieldMismatch("polynomial and character fields differ");
    auto ext = get_extension(f.f, s);
    Poly fe_ = embed_poly(f, ext);
    long long m = psi.field->q() - 1;
    if (m == 0) m = 1;
    std::vector<long long> counts(static_cast<size_t>(m), 0);
    for (long long c = 0; c < ext->q(); ++c) {
        fe v = poly_eval(fe_, static_cast<fe>(c));
        if (v == 0) continue; // psi(0) = 0
        auto idx = psi.lifted_eval(ext, v);
        ++counts[static_cast<size_t>(*idx)];
    }
    return counts_to_cyclo(static_cast<int>(m), counts);
}

Cyclotomic g_sum_brute(const GSumSpec& spec, int s) {
    auto ext = get_extension(spec.field, s);
    const long long m = ext->q() - 1;
    const fe ae = ext->embed_from(*spec.field, spec.a);
    const fe be = spec.b == 0 ? 0 : ext->embed_from(*spec.field, spec.b);
    const long long la = ext->dlog(ae);
    const long long lb = be == 0 ? 0 : ext->dlog(be);
    const long long um = spec.u % m;
    std::vector<long long> counts(static_cast<size_t>(ext->p()), 0);
    for (long long k = 0; k < m; ++k) {
        fe t1 = ext->exp_of(la + um * k);
        fe y = (be == 0) ? t1 : ext->add(t1, ext->exp_of(lb + m - k));
        ++counts[static_cast<size_t>(ext->abs_trace(y))];
    }
    return counts_to_cyclo(ext->p(), counts);
}

Cyclotomic gfg_sum_brute(const Poly& f, const Poly& g, int s) {
    if (!f.f->same_as(*g.f)) throw FieldMismatch("f and g over different fields");
    if (f.degree() < 1 || g.degree() < 1) throw Error("G(f,g) requires deg f, deg g >= 1");
    auto ext = get_extension(f.f, s);
    Poly fe_ = embed_poly(f, ext), ge = embed_poly(g, ext);
    std::vector<long long> counts(static_cast<size_t>(ext->p()), 0);
    // summation over F_{q^s}^*: g(c^{-1}) is undefined at c = 0
    for (long long k = 0; k < ext->q() - 1; ++k) {
        fe c = ext->exp_of(k);
        fe v = ext->add(poly_eval(fe_, c), poly_eval(ge, ext->inv(c)));
        ++counts[static_cast<size_t>(ext->abs_trace(v))];
    }
    return counts_to_cyclo(ext->p(), counts);
}

namespace {

/// lambda on the non-leading coefficients of a monic degree-k polynomial
/// x^k + arr[k-1] x^{k-1} + ... + arr[0]; -1 encodes the absorbing zero.
/// Writing g = sum (-1)^j c_j x^{k-j}, the signed coefficients c_j are the
/// elementary symmetric functions of the roots, p_u follows by the
/// division-free Newton recursion, and
/// lambda(g) = chi(a p_u + b c_{k-1} / c_k).
int lambda_index_fast(const std::vector<fe>& arr, const GSumSpec& spec,
                      std::vector<fe>& cs, std::vector<fe>& ps) {
    const Field& F = *spec.field;
    const int k = static_cast<int>(arr.size());
    if (k == 0) return 0; // lambda(1) = 1
    if (arr[0] == 0) return -1;
    cs.assign(static_cast<size_t>(k) + 1, 0);
    cs[0] = 1;
    for (int j = 1; j <= k; ++j) {
        fe v = arr[static_cast<size_t>(k - j)];
        cs[static_cast<size_t>(j)] = (j % 2 == 0) ? v : F.neg(v);
    }
    const int u = static_cast<int>(spec.u);
    ps.assign(static_cast<size_t>(u) + 1, 0);
    for (int mth = 1; mth <= u; ++mth) {
        fe acc = 0;
        if (mth <= k) {
            fe t = F.mul(cs[static_cast<size_t>(mth)], F.from_int(mth));
            acc = (mth % 2 == 1) ? t : F.neg(t);
        }
        for (int j = 1; j < mth && j <= k; ++j) {
            fe t = F.mul(cs[static_cast<size_t>(j)], ps[static_cast<size_t>(mth - j)]);
            acc = (j % 2 == 1) ? F.add(acc, t) : F.sub(acc, t);
        }
        ps[static_cast<size_t>(mth)] = acc;
    }
    fe arg = F.mul(spec.a, ps[static_cast<size_t>(u)]);
    if (spec.b != 0) {
        fe ratio = F.mul(cs[static_cast<size_t>(k - 1)], F.inv(cs[static_cast<size_t>(k)]));
        arg = F.add(arg, F.mul(spec.b, ratio));
    }
    return F.abs_trace(arg);
}

} // namespace

std::optional<int> lambda_eval(const Poly& g, const GSumSpec& spec) {
    if (!g.f->same_as(*spec.field)) throw FieldMismatch("lambda argument over the wrong field");
    if (!g.is_monic() && !(g.degree() == 0 && g.coeff(0) == 1))
        throw NotMonic("lambda is defined on monic polynomials");
    std::vector<fe> arr(g.c.begin(), g.c.end() - 1);
    std::vector<fe> cs, ps;
    int idx = lambda_index_fast(arr, spec, cs, ps);
    if (idx < 0) return std::nullopt;
    return idx;
}

Cyclotomic phi_k_lambda_sum(int k, const GSumSpec& spec) {
    if (k == 0) return Cyclotomic::root(spec.field->p(), 0);
    std::vector<long long> counts(static_cast<size_t>(spec.field->p()), 0);
    std::vector<fe> cs, ps;
    for_each_monic(spec.field, k, /*nonzero_constant=*/true, [&](const std::vector<fe>& arr) {
        int idx = lambda_index_fast(arr, spec, cs, ps);
        ++counts[static_cast<size_t>(idx)];
    });
    return counts_to_cyclo(spec.field->p(), counts);
}

LPolynomial l_polynomial(const GSumSpec& spec, bool vanish_check) {
    long long q = spec.field->q();
    if (std::gcd(spec.u, q) != 1 && spec.b == 0)
        throw HypothesisViolated("requires gcd(u,q) = 1 or b != 0");
    LPolynomial L;
    L.provenance = "enumerated";
    for (int k = 0; k <= static_cast<int>(spec.u) + 1; ++k)
        L.A.push_back(phi_k_lambda_sum(k, spec));
    if (vanish_check)
        L.vanishing_verified = phi_k_lambda_sum(static_cast<int>(spec.u) + 2, spec).is_zero();
    return L;
}

SpectralSet spectral_from_lpoly(const LPolynomial& L) {
    SpectralSet sp;
    sp.source = L.provenance;
    // exact e_j = (-1)^j A_j
    for (size_t j = 1; j < L.A.size(); ++j) {
        Cyclotomic e = L.A[j];
        sp.exact_e.push_back(j % 2 == 1 ? -e : e);
    }
    std::vector<Cyclotomic> trimmed = L.A;
    while (trimmed.size() > 1 && trimmed.back().is_zero()) trimmed.pop_back();
    if (trimmed.size() < L.A.size())
        sp.source += " (degree dropped to " + std::to_string(trimmed.size() - 1) + ")";
    std::vector<std::complex<double>> coeffs;
    coeffs.reserve(trimmed.size());
    for (const auto& a : trimmed) coeffs.push_back(a.to_complex());
    if (coeffs.size() <= 1) return sp; // constant L, no omegas
    std::vector<std::complex<double>> zs = all_roots(coeffs);
    for (const auto& z : zs) sp.omegas.push_back(1.0 / z);
    return sp;
}

SpectralSet spectral_from_initial_sums(const std::vector<Cyclotomic>& values, int t) {
    if (static_cast<int>(values.size()) < t)
        throw Error("need t initial sums for spectral extraction");
    std::vector<Cyclotomic> p;
    for (int s = 0; s < t; ++s) p.push_back(-values[static_cast<size_t>(s)]);
    std::vector<Cyclotomic> e = elementary_from_power_sums(p, t);
    LPolynomial L;
    L.provenance = "initial-sums";
    L.A.push_back(Cyclotomic::integer(Rat(1)));
    for (int j = 1; j <= t; ++j) {
        Cyclotomic a = e[static_cast<size_t>(j - 1)];
        L.A.push_back(j % 2 == 1 ? -a : a);
    }
    return spectral_from_lpoly(L);
}

Cyclotomic predict_sum(const SpectralSet& sp, int s) {
    if (sp.exact_e.empty()) throw Error("spectral set lacks exact elementary functions");
    std::vector<Cyclotomic> p = power_sums_from_elementary(sp.exact_e, s);
    return (-p[static_cast<size_t>(s - 1)]).canonical();
}

KloostermanRoutes kloosterman_routes(const std::shared_ptr<const Field>& f, fe a, fe b, int s_max) {
    GSumSpec spec(f, 1, a, b);
    KloostermanRoutes out;
    for (int s = 1; s <= s_max; ++s) out.brute.push_back(g_sum_brute(spec, s));

    Cyclotomic k1 = out.brute[0];
    Cyclotomic qv = Cyclotomic::integer(Rat(Int(f->q())));
    // corrected recursion: the characteristic polynomial z^2 + k z + q forces
    // the factor q on the second term (the printed recursion omits it)
    Cyclotomic prev = Cyclotomic::integer(Rat(-2)); // k^{(0)} = -2
    Cyclotomic cur = k1;
    out.recursive.push_back(cur.canonical());
    for (int s = 2; s <= s_max; ++s) {
        Cyclotomic next = -(k1 * cur) - qv * prev;
        prev = cur;
        cur = next;
        out.recursive.push_back(cur.canonical());
    }
    for (int s = 1; s <= s_max; ++s)
        out.dickson.push_back((-two_var_dickson(-k1, qv, s)).canonical());
    return out;
}

LPolynomial closed_form_lpoly_u2(const std::shared_ptr<const Field>& f, fe a, fe b) {
    if (a == 0 || b == 0) throw ZeroParameter("closed forms require a, b != 0");
    const long long q = f->q();
    auto G = [&](long long u, fe aa, fe bb) {
        return g_sum_brute(GSumSpec(f, u, aa, bb), 1);
    };
    // With lambda built on the power sum p_2 = c_1^2 - 2 c_2, the degree-2 and
    // degree-3 strata collapse to Gauss-sum data:
    //   A_2 = sum_{c2 != 0} chi(-2 a c2) sum_{c1} chi(a c1^2 + b c1 / c2),
    //   A_3 = [sum_{c1} chi(a c1^2)] * q  (the c2-sum pins c3 = b / (2a)),
    // which in characteristic 2 degenerate to A_2 = q, A_3 = 0 (the c1-square
    // sum vanishes and the b-term averages a full additive character to zero).
    LPolynomial L;
    L.provenance = "closed-form";
    L.A.push_back(Cyclotomic::root(f->p(), 0));
    L.A.push_back(G(2, a, b));
    if (f->p() == 2) {
        L.A.push_back(Cyclotomic::integer(Rat(Int(q))));
        L.A.push_back(Cyclotomic(2));
        return L;
    }
    MultChar eta = quadratic_character(f);
    AdditiveChar chi{f, 1};
    Cyclotomic gs = gauss_sum(eta, chi);
    Rat eta_a = (*eta.eval(a) == 0) ? Rat(1) : Rat(-1);
    fe b2 = f->mul(b, b);
    fe four_a = f->mul(f->from_int(4), a);
    Cyclotomic a2 = gs * G(2, f->neg(f->mul(b2, f->inv(four_a))), f->neg(f->mul(f->from_int(2), a)));
    L.A.push_back(a2.scaled(eta_a));
    L.A.push_back(gs.scaled(eta_a * Rat(Int(q))));
    return L;
}

BoundReport verify_weil_bound(const SpectralSet& sp, const GSumSpec& spec) {
    BoundReport r;
    long long q = spec.field->q();
    r.hypotheses_ok = std::gcd(spec.u, q) == 1 && std::gcd(spec.u + 1, q) == 1 &&
                      spec.a != 0 && spec.b != 0;
    double sq = std::sqrt(static_cast<double>(q));
    r.min_ratio = 1e300;
    for (const auto& w : sp.omegas) {
        double ratio = std::abs(w) / sq;
        r.ratios.push_back(ratio);
        r.max_ratio = std::max(r.max_ratio, ratio);
        r.min_ratio = std::min(r.min_ratio, ratio);
    }
    if (sp.omegas.empty()) r.min_ratio = 0.0;
    r.violation = r.hypotheses_ok && r.max_ratio > 1.0 + 1e-6;
    return r;
}

std::vector<ProbeRow> probe_open_question(const std::vector<long long>& qs,
                                          const std::vector<long long>& us) {
    std::vector<ProbeRow> rows;
    for (long long q : qs) {
        std::vector<long long> pf = prime_factors(q);
        if (pf.size() != 1) throw NotPrime(std::to_string(q) + " is not a prime power");
        long long p = pf[0];
        int e = 0;
        for (long long t = q; t > 1; t /= p) ++e;
        auto f = Field::make(p, e);
        for (long long u : us) {
            for (fe a = 1; a < static_cast<fe>(q); ++a) {
                for (fe b = 1; b < static_cast<fe>(q); ++b) {
                    GSumSpec spec(f, u, a, b);
                    SpectralSet sp = spectral_from_lpoly(l_polynomial(spec));
                    BoundReport br = verify_weil_bound(sp, spec);
                    rows.push_back({q, u, a, b, br.min_ratio, br.max_ratio, br.hypotheses_ok});
                }
            }
        }
    }
    return rows;
}

std::string probe_csv(const std::vector<ProbeRow>& rows) {
    std::ostringstream os;
    os << "q,u,a,b,min_ratio,max_ratio,hypotheses_ok\n";
    os.setf(std::ios::fixed);
    os.precision(9);
    for (const auto& r : rows)
        os << r.q << "," << r.u << "," << r.a << "," << r.b << "," << r.min_ratio << ","
           << r.max_ratio << "," << (r.hypotheses_ok ? "true" : "false") << "\n";
    return os.str();
}

} // namespace expsum
