#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "grk/laurent.hpp"

#include <random>
#include <vector>

using grk::LaurentPoly;
using grk::bar;
using grk::exact_div;
using grk::quantum_binomial;
using grk::quantum_factorial;
using grk::quantum_int;

namespace {

// Dense-array product, used as an independent check of the sparse multiply.
struct Dense {
    long lo = 0;
    std::vector<mpz_class> c;  // c[k] is the coefficient of q^(lo+k)
};

Dense to_dense(const LaurentPoly& p) {
    Dense d;
    if (p.is_zero()) return d;
    d.lo = p.min_exp();
    d.c.assign(p.max_exp() - p.min_exp() + 1, 0);
    for (const auto& [e, a] : p.terms()) d.c[e - d.lo] = a;
    return d;
}

LaurentPoly dense_mul(const LaurentPoly& f, const LaurentPoly& g) {
    if (f.is_zero() || g.is_zero()) return LaurentPoly();
    Dense a = to_dense(f), b = to_dense(g);
    std::vector<mpz_class> out(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) out[i + j] += a.c[i] * b.c[j];
    LaurentPoly r;
    for (size_t k = 0; k < out.size(); ++k)
        r.set_coeff(a.lo + b.lo + (long)k, out[k]);
    return r;
}

LaurentPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 6), expd(-5, 5), coeffd(-9, 9);
    LaurentPoly p;
    int n = nterms(rng);
    for (int k = 0; k < n; ++k)
        p += LaurentPoly::monomial(coeffd(rng), expd(rng));
    return p;
}

}  // namespace

TEST_CASE("constructors and basic accessors") {
    LaurentPoly z;
    CHECK(z.is_zero());
    CHECK(z.str() == "0");
    LaurentPoly five(5);
    CHECK(five.coeff(0) == 5);
    CHECK(five.min_exp() == 0);
    CHECK(five.max_exp() == 0);
    LaurentPoly nil(0);
    CHECK(nil.is_zero());
    auto m = LaurentPoly::monomial(-3, -2);
    CHECK(m.coeff(-2) == -3);
    CHECK(m.coeff(0) == 0);
    CHECK(LaurentPoly::monomial(0, 7).is_zero());
}

TEST_CASE("no zero coefficients are ever stored") {
    auto p = LaurentPoly::q(2) + LaurentPoly(3);
    p -= LaurentPoly::q(2);
    CHECK(p.terms().size() == 1);
    p.set_coeff(0, 0);
    CHECK(p.is_zero());
    auto a = LaurentPoly::q(1) + LaurentPoly(1);
    auto b = LaurentPoly::q(1) - LaurentPoly(1);
    auto prod = a * b;  // q^2 - 1, the cross terms cancel
    CHECK(prod.terms().size() == 2);
    CHECK(prod == LaurentPoly::q(2) - LaurentPoly(1));
}

TEST_CASE("arithmetic matches a dense convolution oracle") {
    std::mt19937 rng(20260823);
    for (int trial = 0; trial < 400; ++trial) {
        auto f = random_poly(rng), g = random_poly(rng);
        CHECK(f * g == dense_mul(f, g));
        CHECK(f + g == g + f);
        CHECK((f + g) - g == f);
        CHECK(f * g == g * f);
        auto h = random_poly(rng);
        CHECK(f * (g + h) == f * g + f * h);
        CHECK((f * g) * h == f * (g * h));
    }
}

TEST_CASE("shift and scale") {
    auto p = LaurentPoly::parse("q^-1 + 2 + 3*q^2");
    CHECK(p.shifted(3) == LaurentPoly::parse("q^2 + 2*q^3 + 3*q^5"));
    CHECK(p.scaled(-2) == LaurentPoly::parse("-2*q^-1 - 4 - 6*q^2"));
    CHECK(p.scaled(0).is_zero());
    CHECK(p.shifted(0) == p);
}

TEST_CASE("quantum integers, factorials, binomials") {
    CHECK(quantum_int(0).is_zero());
    CHECK(quantum_int(1) == LaurentPoly(1));
    CHECK(quantum_int(2) == LaurentPoly::parse("q^-1 + q"));
    CHECK(quantum_int(3) == LaurentPoly::parse("q^-2 + 1 + q^2"));
    CHECK(quantum_factorial(0) == LaurentPoly(1));
    CHECK(quantum_factorial(3) == LaurentPoly::parse("q^-3 + 2*q^-1 + 2*q + q^3"));
    CHECK(quantum_binomial(4, 2) == LaurentPoly::parse("q^-4 + q^-2 + 2 + q^2 + q^4"));

    for (long n = 0; n <= 8; ++n) {
        // [n]! = [n] [n-1]!
        if (n >= 1)
            CHECK(quantum_factorial(n) == quantum_int(n) * quantum_factorial(n - 1));
        for (long m = 0; m <= n; ++m) {
            auto b = quantum_binomial(n, m);
            CHECK(b == quantum_binomial(n, n - m));
            CHECK(b == bar(b));
            CHECK(!b.has_negative_coeff());
            // at q = 1 the quantum binomial is the ordinary one
            mpz_class ordinary;
            mpz_bin_uiui(ordinary.get_mpz_t(), n, m);
            CHECK(b.eval_at_one() == ordinary);
        }
    }
}

TEST_CASE("bar involution") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        auto f = random_poly(rng), g = random_poly(rng);
        CHECK(bar(bar(f)) == f);
        CHECK(bar(f * g) == bar(f) * bar(g));
        CHECK(bar(f + g) == bar(f) + bar(g));
    }
    CHECK(bar(LaurentPoly::parse("q^-2 + 3*q")) == LaurentPoly::parse("3*q^-1 + q^2"));
    CHECK(quantum_int(5).is_bar_invariant());
    CHECK(!LaurentPoly::q(1).is_bar_invariant());
    CHECK(LaurentPoly().is_bar_invariant());
}

TEST_CASE("coefficient predicates") {
    CHECK(LaurentPoly::parse("q + q^3").in_q_nonneg());
    CHECK(!LaurentPoly::parse("1 + q").in_q_nonneg());     // constant term
    CHECK(!LaurentPoly::parse("q^-1 + q").in_q_nonneg());  // negative exponent
    CHECK(!LaurentPoly::parse("q - q^2").in_q_nonneg());   // negative coefficient
    CHECK(LaurentPoly().in_q_nonneg());
    CHECK(LaurentPoly::parse("q - q^2").has_negative_coeff());
    CHECK(!quantum_int(4).has_negative_coeff());
}

TEST_CASE("exact division") {
    std::mt19937 rng(99);
    int nontrivial = 0;
    for (int trial = 0; trial < 400; ++trial) {
        auto f = random_poly(rng), g = random_poly(rng);
        if (g.is_zero()) continue;
        auto h = exact_div(f * g, g);
        REQUIRE(h.has_value());
        CHECK(*h == f);
        if (!f.is_zero()) ++nontrivial;
    }
    CHECK(nontrivial > 100);

    // (q + 1)/(q + q^-1) does not divide in Z[q,q^-1]
    CHECK(!exact_div(LaurentPoly::parse("1 + q"), LaurentPoly::parse("q^-1 + q")));
    // content obstruction: top coefficient divides but a later step fails
    CHECK(!exact_div(LaurentPoly::parse("q + 1"), LaurentPoly::parse("2*q + 1")));
    CHECK(!exact_div(LaurentPoly(1), LaurentPoly(2)));
    CHECK(exact_div(LaurentPoly(), LaurentPoly::q(1))->is_zero());
    CHECK_THROWS_AS((void)exact_div(LaurentPoly(1), LaurentPoly()), std::domain_error);

    // quantum binomials divide exactly by definition
    CHECK(*exact_div(quantum_factorial(6),
                     quantum_factorial(4) * quantum_factorial(2)) ==
          quantum_binomial(6, 2));
}

TEST_CASE("text form") {
    CHECK(LaurentPoly().str() == "0");
    CHECK(LaurentPoly(7).str() == "7");
    CHECK(LaurentPoly(-7).str() == "-7");
    CHECK(LaurentPoly::q(1).str() == "q");
    CHECK(LaurentPoly::q(-1).str() == "q^-1");
    CHECK(LaurentPoly::monomial(-1, 2).str() == "-q^2");
    CHECK(LaurentPoly::monomial(3, -2).str() == "3*q^-2");
    CHECK((LaurentPoly::monomial(3, -2) + LaurentPoly(1) + LaurentPoly::q(4)).str() ==
          "3*q^-2 + 1 + q^4");
    CHECK((LaurentPoly::q(2) - LaurentPoly(5)).str() == "-5 + q^2");
    CHECK((LaurentPoly::monomial(-2, 1) + LaurentPoly(1)).str() == "1 - 2*q");
    CHECK(quantum_factorial(3).str() == "q^-3 + 2*q^-1 + 2*q + q^3");
}

TEST_CASE("parse round trip") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 300; ++trial) {
        auto f = random_poly(rng);
        CHECK(LaurentPoly::parse(f.str()) == f);
    }
    CHECK(LaurentPoly::parse("0").is_zero());
    CHECK(LaurentPoly::parse("q") == LaurentPoly::q(1));
    CHECK(LaurentPoly::parse("-q^-3") == LaurentPoly::monomial(-1, -3));
    CHECK(LaurentPoly::parse("2*q^2 + q^2") == LaurentPoly::monomial(3, 2));
    CHECK_THROWS_AS(LaurentPoly::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(LaurentPoly::parse("q^"), std::invalid_argument);
    CHECK_THROWS_AS(LaurentPoly::parse("1 + + 2"), std::invalid_argument);
}

TEST_CASE("evaluation at q = 1") {
    CHECK(quantum_int(9).eval_at_one() == 9);
    CHECK(quantum_factorial(5).eval_at_one() == 120);
    CHECK(LaurentPoly::parse("q^-1 - 2 + q").eval_at_one() == 0);
}
