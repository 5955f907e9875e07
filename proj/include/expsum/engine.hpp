#ifndef EXPSUM_ENGINE_HPP
#define EXPSUM_ENGINE_HPP

#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "expsum/characters.hpp"
#include "expsum/cyclotomic.hpp"
#include "expsum/field.hpp"
#include "expsum/poly.hpp"

namespace expsum {

/// The sum G_u^{(s)}(a,b) = sum over c in F_{q^s}^* of chi^{(s)}(a c^u + b c^{-1}).
struct GSumSpec {
    std::shared_ptr<const Field> field;
    long long u = 1;
    fe a = 1;
    fe b = 1;

    GSumSpec(std::shared_ptr<const Field> f, long long u_, fe a_, fe b_);
};

struct LPolynomial {
    std::vector<Cyclotomic> A; // A_0..A_t, A_0 = 1
    std::string provenance;    // "enumerated" | "closed-form" | "initial-sums"
    std::optional<bool> vanishing_verified; // A_{t+1} == 0 check, when requested
    int degree_bound() const { return static_cast<int>(A.size()) - 1; }
};

struct SpectralSet {
    std::vector<std::complex<double>> omegas;
    std::vector<Cyclotomic> exact_e; // e_j = (-1)^j A_j, exact
    std::string source;
};

struct BoundReport {
    bool hypotheses_ok = false;
    double max_ratio = 0.0; // max |omega_j| / sqrt(q)
    double min_ratio = 0.0;
    bool violation = false; // only ever set when hypotheses_ok
    std::vector<double> ratios;
};

struct ProbeRow {
    long long q = 0;
    long long u = 0;
    fe a = 0, b = 0;
    double min_ratio = 0.0, max_ratio = 0.0;
    bool hypotheses_ok = false;
};

std::shared_ptr<const Field> get_extension(const std::shared_ptr<const Field>& base, int s);

// --- brute-force evaluators (exact cyclotomic accumulation) ---

/// S_s(f) over all of F_{q^s}.
Cyclotomic weil_sum_brute(const Poly& f, const AdditiveChar& chi, int s);

/// T_s(f) over all of F_{q^s}, psi(0) = 0 convention; exact over zeta_{q-1}.
Cyclotomic mult_sum_brute(const Poly& f, const MultChar& psi, int s);

/// G_u^{(s)}(a,b) over F_{q^s}^*.
Cyclotomic g_sum_brute(const GSumSpec& spec, int s);

/// G^{(s)}(f,g) = sum over c != 0 of chi^{(s)}(f(c) + g(1/c)).
Cyclotomic gfg_sum_brute(const Poly& f, const Poly& g, int s);

// --- the lambda / L-polynomial pipeline ---

/// lambda(g) for monic g: character index in [0,p), or nullopt when the
/// constant term vanishes (the absorbing zero).
std::optional<int> lambda_eval(const Poly& g, const GSumSpec& spec);

/// A_k = sum over Phi_k of lambda(g), enumerating the c_k != 0 stratum.
Cyclotomic phi_k_lambda_sum(int k, const GSumSpec& spec);

/// A_0..A_{u+1} by enumeration; optionally verifies A_{u+2} == 0 exactly.
LPolynomial l_polynomial(const GSumSpec& spec, bool vanish_check = false);

SpectralSet spectral_from_lpoly(const LPolynomial& L);

/// Newton extraction from t brute-forced initial sums (p_s = -value_s).
SpectralSet spectral_from_initial_sums(const std::vector<Cyclotomic>& values, int t);

/// Exact prediction of the s-th sum from the exact e_j of a spectral set.
Cyclotomic predict_sum(const SpectralSet& sp, int s);

// --- Kloosterman (u = 1) ---

struct KloostermanRoutes {
    std::vector<Cyclotomic> brute;     // k^{(1)}..k^{(s_max)}
    std::vector<Cyclotomic> recursive; // corrected k^{(s)} = -k k^{(s-1)} - q k^{(s-2)}
    std::vector<Cyclotomic> dickson;   // -D_s(-k, q)
};
KloostermanRoutes kloosterman_routes(const std::shared_ptr<const Field>& f, fe a, fe b, int s_max);

/// Closed-form L-polynomial for u = 2, dispatching on the characteristic.
LPolynomial closed_form_lpoly_u2(const std::shared_ptr<const Field>& f, fe a, fe b);

BoundReport verify_weil_bound(const SpectralSet& sp, const GSumSpec& spec);

std::vector<ProbeRow> probe_open_question(const std::vector<long long>& qs,
                                          const std::vector<long long>& us);
std::string probe_csv(const std::vector<ProbeRow>& rows);

} // namespace expsum

#endif
