#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "expsum/errors.hpp"
#include "expsum/poly.hpp"

using namespace expsum;

namespace {
Poly random_poly(const std::shared_ptr<const Field>& f, int deg, std::mt19937& rng) {
    std::uniform_int_distribution<long long> d(0, f->q() - 1);
    std::vector<fe> c(static_cast<size_t>(deg) + 1);
    for (auto& x : c) x = static_cast<fe>(d(rng));
    c.back() = static_cast<fe>(1 + d(rng) % (f->q() - 1));
    return Poly(f, std::move(c));
}
} // namespace

TEST_CASE("canonical form and basics") {
    auto f = Field::make(2, 1);
    Poly z = poly_zero(f);
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
    Poly p(f, {1, 0, 0});
    CHECK(p.degree() == 0);
    CHECK(poly_add(poly_x(f), poly_x(f)).is_zero());
    CHECK(poly_str(Poly(f, {1, 1, 1})) == "x^2 + x + 1");
}

TEST_CASE("divmod and gcd") {
    std::mt19937 rng(11);
    for (auto [p, e] : {std::pair{2, 2}, {3, 1}, {5, 1}}) {
        auto f = Field::make(p, e);
        for (int trial = 0; trial < 40; ++trial) {
            Poly a = random_poly(f, 1 + static_cast<int>(rng() % 5), rng);
            Poly b = random_poly(f, 1 + static_cast<int>(rng() % 3), rng);
            auto [q, r] = poly_divmod(a, b);
            CHECK(poly_add(poly_mul(q, b), r) == a);
            CHECK(r.degree() < b.degree());
            Poly g = poly_gcd(poly_mul(a, b), b);
            CHECK(poly_divmod(poly_monic(b), g).second.is_zero());
        }
    }
}

TEST_CASE("irreducibility over F_2") {
    auto f = Field::make(2, 1);
    CHECK(is_irreducible(Poly(f, {1, 1, 1})));       // x^2+x+1
    CHECK_FALSE(is_irreducible(Poly(f, {1, 0, 1}))); // x^2+1 = (x+1)^2
    CHECK(is_irreducible(Poly(f, {1, 1, 0, 1})));    // x^3+x+1
    CHECK(monic_irreducibles(f, 2).size() == 1);
    CHECK(monic_irreducibles(f, 3).size() == 2);
    CHECK(monic_irreducibles(f, 4).size() == 3);
}

TEST_CASE("factorization, distinct roots, m-th powers") {
    auto f = Field::make(2, 1);
    // x^2 (x+1): d = 2
    Poly a = poly_mul(poly_mul(poly_x(f), poly_x(f)), Poly(f, {1, 1}));
    CHECK(distinct_root_count(a) == 2);
    CHECK_FALSE(is_mth_power(a, 2));
    // (x^2+x+1)^2: a square, d = 2
    Poly b = poly_pow(Poly(f, {1, 1, 1}), 2);
    CHECK(is_mth_power(b, 2));
    CHECK(distinct_root_count(b) == 2);
    auto factors = factorize(b);
    REQUIRE(factors.size() == 1);
    CHECK(factors[0].first == Poly(f, {1, 1, 1}));
    CHECK(factors[0].second == 2);
    CHECK(squarefree_part(b) == Poly(f, {1, 1, 1}));
    // squarefree of degree n with n roots in the field
    auto f5 = Field::make(5, 1);
    Poly c = poly_mul(Poly(f5, {4, 1}), Poly(f5, {3, 1})); // (x+4)(x+3)
    CHECK(distinct_root_count(c) == 2);
}

TEST_CASE("factorize reassembles the input") {
    std::mt19937 rng(5);
    auto f = Field::make(3, 1);
    for (int trial = 0; trial < 30; ++trial) {
        Poly a = random_poly(f, 2 + static_cast<int>(rng() % 4), rng);
        Poly prod = poly_const(f, 1);
        for (const auto& [g, m] : factorize(a)) {
            CHECK(is_irreducible(g));
            prod = poly_mul(prod, poly_pow(g, m));
        }
        CHECK(prod == poly_monic(a));
    }
}

TEST_CASE("monic enumeration counts and uniqueness") {
    auto f2 = Field::make(2, 1);
    auto one = enumerate_monic_polys(f2, 1, true);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == Poly(f2, {1, 1}));

    auto f3 = Field::make(3, 1);
    CHECK(enumerate_monic_polys(f3, 2, true).size() == 6);

    auto f4 = Field::make(2, 2);
    auto all = enumerate_monic_polys(f4, 3, false);
    CHECK(all.size() == 64);
    std::set<std::vector<fe>> seen;
    for (const auto& p : all) seen.insert(p.c);
    CHECK(seen.size() == 64);

    // callback enumeration agrees
    size_t n = 0;
    for_each_monic(f4, 3, true, [&](const std::vector<fe>& c) {
        CHECK(c.size() == 3);
        CHECK(c[0] != 0);
        ++n;
    });
    CHECK(n == 48);
}

TEST_CASE("derivative and eval") {
    auto f = Field::make(5, 1);
    Poly p(f, {1, 2, 3}); // 3x^2 + 2x + 1
    CHECK(poly_derivative(p) == Poly(f, {2, 1})); // 6x + 2 = x + 2
    CHECK(poly_eval(p, 2) == (3 * 4 + 2 * 2 + 1) % 5);
    CHECK_THROWS_AS((void)poly_divmod(p, poly_zero(f)), DivisionByZero);
}

TEST_CASE("parse") {
    auto f = Field::make(3, 1);
    CHECK(parse_poly(f, "1,0,2") == Poly(f, {1, 0, 2}));
}
