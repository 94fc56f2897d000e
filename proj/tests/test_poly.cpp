#include <doctest.h>

#include <random>

#include "pshf/bivariate.hpp"
#include "pshf/poly.hpp"

using namespace pshf;

namespace {

RationalPoly rand_poly(std::mt19937_64& rng, int nvars, int max_terms, int max_deg) {
    std::uniform_int_distribution<int> nt(1, max_terms), ex(0, max_deg), num(-9, 9), den(1, 9);
    std::vector<RationalPoly::Term> terms;
    const int k = nt(rng);
    for (int t = 0; t < k; ++t) {
        Monomial m;
        for (int v = 0; v < nvars; ++v) m.set_exp(v, ex(rng));
        terms.emplace_back(m, make_rat(num(rng), den(rng)));
    }
    return RationalPoly::from_terms(nvars, std::move(terms));
}

}  // namespace

TEST_CASE("monomial packing and graded-lex order") {
    Monomial a = Monomial::var(0, 2);           // x0^2
    Monomial b = Monomial::var(0) * Monomial::var(1);  // x0 x1
    Monomial c = Monomial::var(1, 3);           // x1^3
    CHECK(a.degree() == 2);
    CHECK(c.degree() == 3);
    CHECK(c > a);        // higher total degree first
    CHECK(a > b);        // same degree: lex with x0 most significant
    CHECK(a.exp(0) == 2);
    CHECK(b.divides(a * b));
    CHECK_FALSE(c.divides(a));
    CHECK((a * b) / b == a);
}

TEST_CASE("basic arithmetic: (x1+y1)(x1-y1) = x1^2 - y1^2") {
    // n = 1: variables (x1, y1) at indices (0, 1).
    auto x = RationalPoly::variable(2, 0), y = RationalPoly::variable(2, 1);
    auto prod = (x + y) * (x - y);
    CHECK(prod == x * x - y * y);
    CHECK(prod.term_count() == 2);
}

TEST_CASE("add(P, -P) has an empty term map") {
    auto x = RationalPoly::variable(2, 0), y = RationalPoly::variable(2, 1);
    auto p = x * x * y + y.scaled(make_rat(3, 7));
    auto z = p + (-p);
    CHECK(z.is_zero());
    CHECK(z.term_count() == 0);
}

TEST_CASE("substitute u^2 v + u v^2 with dM=x1^2, dN=y1^2") {
    auto P = BivariatePoly::p21();
    auto x = RationalPoly::variable(2, 0), y = RationalPoly::variable(2, 1);
    auto rho = P.compose(x * x, y * y);
    // Expected by hand: x1^4 y1^2 + x1^2 y1^4.
    auto expect = x.pow(4) * y.pow(2) + x.pow(2) * y.pow(4);
    CHECK(rho == expect);
}

TEST_CASE("evaluation") {
    SUBCASE("dN at y=(1,0,...) is 1") {
        // n = 2: vars (x1,x2,y1,y2)
        auto dN = RationalPoly::variable(4, 2).pow(2) + RationalPoly::variable(4, 3).pow(2);
        CHECK(dN.eval_exact({Rat(0), Rat(0), Rat(1), Rat(0)}) == 1);
    }
    SUBCASE("(x-y)^2/2 at (3,1) is 2") {
        auto x = RationalPoly::variable(2, 0), y = RationalPoly::variable(2, 1);
        auto d = ((x - y) * (x - y)).scaled(make_rat(1, 2));
        CHECK(d.eval_exact({Rat(3), Rat(1)}) == 2);
        std::vector<double> pt{3.0, 1.0};
        CHECK(d.eval_double(pt) == doctest::Approx(2.0));
    }
    SUBCASE("rho = dM^2 dN + dM dN^2 with A=0, n=1 at (1,1) is 2") {
        auto x = RationalPoly::variable(2, 0), y = RationalPoly::variable(2, 1);
        auto rho = BivariatePoly::p21().compose(x * x, y * y);
        CHECK(rho.eval_exact({Rat(1), Rat(1)}) == 2);
    }
}

TEST_CASE("gradient") {
    auto x1 = RationalPoly::variable(4, 0);
    auto p = x1 * x1;
    CHECK(p.derivative(0) == x1.scaled(2));
    CHECK(p.derivative(1).is_zero());
    CHECK(p.derivative(2).is_zero());

    SUBCASE("central difference agrees with symbolic gradient") {
        std::mt19937_64 rng(2026);
        std::uniform_real_distribution<double> U(-1, 1);
        auto q = rand_poly(rng, 4, 12, 4);
        const double h = 1e-5;
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<double> w(4), dir(4);
            for (auto& t : w) t = U(rng);
            for (auto& t : dir) t = U(rng);
            std::vector<double> wp = w, wm = w;
            for (int i = 0; i < 4; ++i) {
                wp[i] += h * dir[i];
                wm[i] -= h * dir[i];
            }
            const double fd = (q.eval_double(wp) - q.eval_double(wm)) / (2 * h);
            double sym = 0;
            for (int i = 0; i < 4; ++i) sym += q.derivative(i).eval_double(w) * dir[i];
            CHECK(std::abs(fd - sym) <= 1e-6 * std::max(1.0, std::abs(sym)));
        }
    }
}

TEST_CASE("ring axioms on seeded random polynomials") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 25; ++trial) {
        auto a = rand_poly(rng, 3, 8, 5), b = rand_poly(rng, 3, 8, 5), c = rand_poly(rng, 3, 8, 5);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("exact division") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 25; ++trial) {
        auto a = rand_poly(rng, 3, 6, 4), b = rand_poly(rng, 3, 6, 4);
        if (b.is_zero()) continue;
        auto prod = a * b;
        CHECK(prod.divide_exact(b) == a);
        auto [q, r] = prod.divmod(b);
        CHECK(q == a);
        CHECK(r.is_zero());
    }
    SUBCASE("divmod remainder reconstructs") {
        std::mt19937_64 rng2(100);
        for (int trial = 0; trial < 25; ++trial) {
            auto f = rand_poly(rng2, 2, 10, 6), g = rand_poly(rng2, 2, 4, 3);
            if (g.is_zero()) continue;
            auto [q, r] = f.divmod(g);
            CHECK(q * g + r == f);
        }
    }
}

TEST_CASE("homogeneity and degree") {
    auto P = BivariatePoly::p315();
    CHECK(P.is_homogeneous());
    CHECK(P.degree() == 4);
    auto Q = P + BivariatePoly::u();
    CHECK_FALSE(Q.is_homogeneous());
}

TEST_CASE("polynomial JSON round trip") {
    auto P = BivariatePoly::p21();
    auto j = P.to_json();
    auto Q = BivariatePoly::from_json(j);
    CHECK(P == Q);
    CHECK(j.is_array());
    CHECK(j.size() == 2);
    CHECK(j[0].contains("exps"));
    CHECK(j[0].contains("re"));
    CHECK(j[0].contains("im"));
}

TEST_CASE("bivariate helpers") {
    auto P21 = BivariatePoly::p21();
    // hessian det of u^2v + uv^2: -4(u^2 + uv + v^2)
    auto HR = P21.hessian_det();
    auto u = BivariatePoly::u(), v = BivariatePoly::v();
    CHECK(HR == (u * u + u * v + v * v).scaled(-4));
    CHECK(P21.eval(Rat(1), Rat(1)) == 2);
    CHECK(P21.coeff(2, 1) == 1);
    CHECK(P21.coeff(1, 2) == 1);
    CHECK(P21.coeff(3, 0) == 0);
}
