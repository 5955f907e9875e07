#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "expsum/engine.hpp"
#include "expsum/errors.hpp"
#include "expsum/symmetric.hpp"

using namespace expsum;

namespace {
Poly random_monic(const std::shared_ptr<const Field>& f, int deg, std::mt19937& rng,
                  bool nonzero_constant) {
    std::uniform_int_distribution<long long> d(0, f->q() - 1);
    std::vector<fe> c(static_cast<size_t>(deg) + 1);
    for (auto& x : c) x = static_cast<fe>(d(rng));
    c.back() = 1;
    if (nonzero_constant && c[0] == 0) c[0] = 1;
    return Poly(f, std::move(c));
}
} // namespace

TEST_CASE("brute sums, pinned values") {
    auto f2 = Field::make(2, 1);
    AdditiveChar chi{f2, 1};
    // f = x: orthogonality
    CHECK(weil_sum_brute(poly_x(f2), chi, 1).is_zero());
    CHECK(weil_sum_brute(poly_x(f2), chi, 3).is_zero());
    // f = 0: every term is 1
    CHECK(weil_sum_brute(poly_zero(f2), chi, 2) == Cyclotomic::integer(Rat(4)));
    // f = x^2 over F_2
    CHECK(weil_sum_brute(Poly(f2, {0, 0, 1}), chi, 1).is_zero());

    auto f3 = Field::make(3, 1);
    MultChar eta = quadratic_character(f3);
    CHECK(mult_sum_brute(poly_x(f3), eta, 1).is_zero());
    CHECK(mult_sum_brute(Poly(f3, {0, 0, 1}), eta, 1) == Cyclotomic::integer(Rat(2)));
    // trivial psi counts the nonvanishing points
    MultChar triv{f3, 0};
    CHECK(mult_sum_brute(poly_x(f3), triv, 1) == Cyclotomic::integer(Rat(2)));
}

TEST_CASE("g_sum_brute, pinned values") {
    auto f2 = Field::make(2, 1);
    CHECK(g_sum_brute(GSumSpec(f2, 1, 1, 1), 1) == Cyclotomic::integer(Rat(1)));
    CHECK(g_sum_brute(GSumSpec(f2, 1, 1, 1), 2) == Cyclotomic::integer(Rat(3)));
    CHECK(g_sum_brute(GSumSpec(f2, 1, 1, 1), 3) == Cyclotomic::integer(Rat(-5)));
    // b = 0, gcd(u, q-1) = 1: the substitution d = a c^u sweeps F_q^*
    auto f8 = Field::make(2, 3);
    CHECK(g_sum_brute(GSumSpec(f8, 3, 5, 0), 1) == Cyclotomic::integer(Rat(-1)));
    CHECK_THROWS_AS(GSumSpec(f8, 1, 0, 1), ZeroParameter);
}

TEST_CASE("gfg reduces to g_sum") {
    auto f5 = Field::make(5, 1);
    for (fe a = 1; a < 5; ++a)
        for (fe b = 1; b < 5; ++b) {
            Poly f(f5, {0, 0, a});   // a x^2
            Poly g(f5, {0, b});      // b x
            for (int s = 1; s <= 3; ++s)
                CHECK(gfg_sum_brute(f, g, s) == g_sum_brute(GSumSpec(f5, 2, a, b), s));
        }
}

TEST_CASE("lambda basics") {
    auto f4 = Field::make(2, 2);
    GSumSpec spec(f4, 2, 1, 1);
    // degree-1 stratum: lambda(x - c) = chi(a c^u + b c^{-1})
    AdditiveChar chi{f4, 1};
    for (fe c = 1; c < 4; ++c) {
        Poly g(f4, {c, 1}); // x + c = x - c in char 2
        auto idx = lambda_eval(g, spec);
        REQUIRE(idx);
        CHECK(*idx == chi.index(f4->add(f4->mul(1, f4->mul(c, c)), f4->inv(c))));
    }
    // vanishing constant term
    CHECK_FALSE(lambda_eval(poly_x(f4), spec));
    CHECK_THROWS_AS(lambda_eval(Poly(f4, {1, 2}), spec), NotMonic);
}

TEST_CASE("lambda multiplicativity, random pairs") {
    std::mt19937 rng(101);
    for (auto [p, e] : {std::pair{2, 2}, {5, 1}}) {
        auto f = Field::make(p, e);
        GSumSpec spec(f, 2, 1, f->q() > 2 ? 2 : 1);
        for (int trial = 0; trial < 60; ++trial) {
            Poly g = random_monic(f, 1 + static_cast<int>(rng() % 3), rng, false);
            Poly h = random_monic(f, 1 + static_cast<int>(rng() % 3), rng, false);
            auto lg = lambda_eval(g, spec), lh = lambda_eval(h, spec);
            auto lgh = lambda_eval(poly_mul(g, h), spec);
            if (!lg || !lh) {
                CHECK_FALSE(lgh);
            } else {
                REQUIRE(lgh);
                CHECK(*lgh == (*lg + *lh) % p);
            }
        }
    }
}

TEST_CASE("phi_k sums and the degree-1 stratum") {
    for (auto [p, e] : {std::pair{2, 2}, {3, 1}, {5, 1}}) {
        auto f = Field::make(p, e);
        for (fe a = 1; a < f->q(); ++a)
            for (fe b = 1; b < f->q(); ++b) {
                GSumSpec spec(f, 2, a, b);
                CHECK(phi_k_lambda_sum(1, spec) == g_sum_brute(spec, 1));
            }
    }
}

TEST_CASE("substitution identity G_u(a,b) = G_u(a b^u, 1)") {
    for (auto [p, e] : {std::pair{2, 3}, {3, 2}, {7, 1}}) {
        auto f = Field::make(p, e);
        for (long long u = 1; u <= 3; ++u)
            for (fe a = 1; a < f->q(); ++a)
                for (fe b = 1; b < f->q(); ++b) {
                    fe abu = f->mul(a, f->pow(b, u));
                    CHECK(g_sum_brute(GSumSpec(f, u, a, b), 1) ==
                          g_sum_brute(GSumSpec(f, u, abu, 1), 1));
                }
    }
}

TEST_CASE("kloosterman l-polynomial: A_1 = k, A_2 = q") {
    for (auto [p, e] : {std::pair{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
        auto f = Field::make(p, e);
        for (fe a = 1; a < f->q(); ++a)
            for (fe b = 1; b < f->q(); ++b) {
                GSumSpec spec(f, 1, a, b);
                auto L = l_polynomial(spec);
                REQUIRE(L.A.size() == 3);
                CHECK(L.A[0] == Cyclotomic::root(p, 0));
                CHECK(L.A[1] == g_sum_brute(spec, 1));
                CHECK(L.A[2] == Cyclotomic::integer(Rat(Int(f->q()))));
            }
    }
}

TEST_CASE("hypothesis gate") {
    auto f4 = Field::make(2, 2);
    CHECK_THROWS_AS(l_polynomial(GSumSpec(f4, 2, 1, 0)), HypothesisViolated);
    CHECK_NOTHROW(l_polynomial(GSumSpec(f4, 3, 1, 0))); // gcd(3, 4) = 1
}

TEST_CASE("spectral pipeline on the Kloosterman anchor") {
    auto f2 = Field::make(2, 1);
    GSumSpec spec(f2, 1, 1, 1);
    auto L = l_polynomial(spec, true);
    REQUIRE(L.vanishing_verified);
    CHECK(*L.vanishing_verified);
    auto sp = spectral_from_lpoly(L);
    REQUIRE(sp.omegas.size() == 2);
    for (const auto& w : sp.omegas) CHECK(std::abs(std::abs(w) - std::sqrt(2.0)) < 1e-9);
    // omega_{1,2} = (-1 +- i sqrt(7)) / 2
    for (const auto& w : sp.omegas) {
        CHECK(std::abs(w.real() + 0.5) < 1e-9);
        CHECK(std::abs(std::abs(w.imag()) - std::sqrt(7.0) / 2) < 1e-9);
    }
    for (int s = 1; s <= 6; ++s) CHECK(predict_sum(sp, s) == g_sum_brute(spec, s));
}

TEST_CASE("trivial spectral cases") {
    LPolynomial L;
    L.provenance = "test";
    L.A = {Cyclotomic::integer(Rat(1)), Cyclotomic::integer(Rat(-1))}; // 1 - z
    auto sp = spectral_from_lpoly(L);
    REQUIRE(sp.omegas.size() == 1);
    CHECK(std::abs(sp.omegas[0] - std::complex<double>(1, 0)) < 1e-12);
    CHECK(predict_sum(sp, 3) == Cyclotomic::integer(Rat(-1))); // -(1^3)

    // t = 1 extraction recovers a single omega
    auto sp1 = spectral_from_initial_sums({Cyclotomic::integer(Rat(-7))}, 1);
    REQUIRE(sp1.omegas.size() == 1);
    CHECK(std::abs(sp1.omegas[0] - std::complex<double>(7, 0)) < 1e-9);
}

TEST_CASE("newton extraction equals enumeration") {
    auto f2 = Field::make(2, 1);
    GSumSpec spec(f2, 1, 1, 1);
    auto sp = spectral_from_initial_sums({g_sum_brute(spec, 1), g_sum_brute(spec, 2)}, 2);
    // e_1 = -1, e_2 = 2  =>  L = 1 + z + 2z^2
    REQUIRE(sp.exact_e.size() == 2);
    CHECK(sp.exact_e[0] == Cyclotomic::integer(Rat(-1)));
    CHECK(sp.exact_e[1] == Cyclotomic::integer(Rat(2)));

    auto spL = spectral_from_lpoly(l_polynomial(spec));
    auto key = [](const std::complex<double>& z) { return std::make_pair(z.real(), z.imag()); };
    auto a = sp.omegas, b = spL.omegas;
    std::sort(a.begin(), a.end(), [&](auto x, auto y) { return key(x) < key(y); });
    std::sort(b.begin(), b.end(), [&](auto x, auto y) { return key(x) < key(y); });
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) < 1e-8 * std::abs(b[i]));
}

TEST_CASE("kloosterman routes and conventions") {
    auto f2 = Field::make(2, 1);
    auto kr = kloosterman_routes(f2, 1, 1, 5);
    CHECK(kr.brute[0] == Cyclotomic::integer(Rat(1)));
    CHECK(kr.brute[1] == Cyclotomic::integer(Rat(3)));
    CHECK(kr.brute[2] == Cyclotomic::integer(Rat(-5)));
    for (int s = 0; s < 5; ++s) {
        CHECK(kr.brute[s] == kr.recursive[s]);
        CHECK(kr.brute[s] == kr.dickson[s]);
    }
    // -D_0(-k, q) = -2 is the s = 0 convention
    CHECK(-two_var_dickson(Cyclotomic::integer(Rat(-1)), Cyclotomic::integer(Rat(2)), 0) ==
          Cyclotomic::integer(Rat(-2)));
}

TEST_CASE("closed form u = 2 equals enumeration") {
    for (auto [p, e] : {std::pair{2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 1}, {7, 1}}) {
        auto f = Field::make(p, e);
        for (fe a = 1; a < f->q(); ++a)
            for (fe b = 1; b < f->q(); ++b) {
                auto closed = closed_form_lpoly_u2(f, a, b);
                auto enumerated = l_polynomial(GSumSpec(f, 2, a, b));
                REQUIRE(closed.A.size() == enumerated.A.size());
                for (size_t j = 0; j < closed.A.size(); ++j) CHECK(closed.A[j] == enumerated.A[j]);
            }
    }
    auto f5 = Field::make(5, 1);
    CHECK_THROWS_AS(closed_form_lpoly_u2(f5, 1, 0), ZeroParameter);
}

TEST_CASE("weil bound report") {
    auto f5 = Field::make(5, 1);
    GSumSpec spec(f5, 1, 2, 3);
    auto br = verify_weil_bound(spectral_from_lpoly(l_polynomial(spec)), spec);
    CHECK(br.hypotheses_ok);
    CHECK_FALSE(br.violation);
    CHECK(std::abs(br.max_ratio - 1.0) < 1e-9);
    CHECK(std::abs(br.min_ratio - 1.0) < 1e-9);

    auto f8 = Field::make(2, 3);
    GSumSpec spec8(f8, 2, 1, 1); // gcd(2, 8) = 2: bound not asserted
    auto br8 = verify_weil_bound(spectral_from_lpoly(l_polynomial(spec8)), spec8);
    CHECK_FALSE(br8.hypotheses_ok);
    CHECK_FALSE(br8.violation);
}

TEST_CASE("probe output") {
    // q = 5, u = 2: gcd(u, q) = gcd(u + 1, q) = 1, so the bound is asserted
    auto rows = probe_open_question({5}, {2});
    CHECK(rows.size() == 16);
    std::string csv = probe_csv(rows);
    CHECK(csv.rfind("q,u,a,b,min_ratio,max_ratio,hypotheses_ok\n", 0) == 0);
    for (const auto& r : rows) {
        CHECK(r.hypotheses_ok);
        CHECK(r.max_ratio <= 1.0 + 1e-6);
    }

    // q = 3, u = 2: gcd(u + 1, q) = 3, hypotheses not satisfied
    for (const auto& r : probe_open_question({3}, {2})) CHECK_FALSE(r.hypotheses_ok);
}
