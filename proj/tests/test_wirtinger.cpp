#include <doctest.h>

#include <random>

#include "pshf/cpoly.hpp"
#include "pshf/jordan.hpp"
#include "pshf/subspace.hpp"

using namespace pshf;

namespace {

RationalPoly rand_real_poly(std::mt19937_64& rng, int nvars) {
    std::uniform_int_distribution<int> nt(1, 10), ex(0, 3), num(-9, 9), den(1, 9);
    std::vector<RationalPoly::Term> terms;
    for (int t = 0, k = nt(rng); t < k; ++t) {
        Monomial m;
        for (int v = 0; v < nvars; ++v) m.set_exp(v, ex(rng));
        terms.emplace_back(m, make_rat(num(rng), den(rng)));
    }
    return RationalPoly::from_terms(nvars, std::move(terms));
}

}  // namespace

TEST_CASE("d dN/dz_j = -i y_j") {
    const int n = 3;
    RationalPoly dN = distance_form_N(n).to_poly();
    for (int j = 0; j < n; ++j) {
        auto d = wirtinger(dN, j, Wirt::dz);
        CHECK(real_part(d).is_zero());
        CHECK(imag_part(d) == -RationalPoly::variable(2 * n, n + j));
    }
}

TEST_CASE("d dM/dz_j = (1 + i a)(x_j - a y_j)/(1+a^2) for diag a") {
    const Rat a = make_rat(2, 5);
    JordanSpec s;
    s.n = 2;
    s.blocks.push_back(RealBlock{a, 1, Rat(1)});
    s.blocks.push_back(RealBlock{a, 1, Rat(1)});
    RationalPoly dM = closed_form_distance(s).to_poly();
    const Rat D = 1 + a * a;
    for (int j = 0; j < 2; ++j) {
        auto d = wirtinger(dM, j, Wirt::dz);
        auto lin = RationalPoly::variable(4, j) - RationalPoly::variable(4, 2 + j).scaled(a);
        CHECK(real_part(d) == lin.scaled(1 / D));
        CHECK(imag_part(d) == lin.scaled(a / D));
    }
}

TEST_CASE("wirtinger of a constant is zero") {
    auto c = RationalPoly::constant(4, make_rat(7, 3));
    CHECK(wirtinger(c, 0, Wirt::dz).is_zero());
    CHECK(wirtinger(c, 1, Wirt::dzbar).is_zero());
}

TEST_CASE("dzbar of a real polynomial is the conjugate of dz") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 10; ++t) {
        auto p = rand_real_poly(rng, 4);
        for (int j = 0; j < 2; ++j) CHECK(wirtinger(p, j, Wirt::dzbar) == conj(wirtinger(p, j, Wirt::dz)));
    }
}

TEST_CASE("operators commute across indices and kinds") {
    std::mt19937_64 rng(37);
    for (int t = 0; t < 10; ++t) {
        auto p = complexify(rand_real_poly(rng, 6));
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                if (j == k) continue;
                CHECK(wirtinger(wirtinger(p, j, Wirt::dz), k, Wirt::dz) ==
                      wirtinger(wirtinger(p, k, Wirt::dz), j, Wirt::dz));
                CHECK(wirtinger(wirtinger(p, j, Wirt::dz), k, Wirt::dzbar) ==
                      wirtinger(wirtinger(p, k, Wirt::dzbar), j, Wirt::dz));
            }
    }
}

TEST_CASE("Hermitian symmetry of mixed second derivatives of a real polynomial") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 10; ++t) {
        auto p = rand_real_poly(rng, 4);
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                CHECK(hessian_entry(p, j, k) == conj(hessian_entry(p, k, j)));
    }
}

TEST_CASE("4 d^2/dz_j dzbar_j equals the (x_j, y_j) Laplacian") {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 10; ++t) {
        auto p = rand_real_poly(rng, 4);
        const int n = 2;
        for (int j = 0; j < n; ++j) {
            auto lap = p.derivative(j).derivative(j) + p.derivative(n + j).derivative(n + j);
            auto mixed = hessian_entry(p, j, j);
            CHECK(imag_part(mixed).is_zero());
            CHECK(real_part(mixed).scaled(4) == lap);
        }
    }
}

TEST_CASE("complex polynomial invariants") {
    auto x = RationalPoly::variable(2, 0), y = RationalPoly::variable(2, 1);
    auto z = make_complex(x, y);  // x + i y
    SUBCASE("conjugation flips the imaginary part") {
        CHECK(real_part(conj(z)) == x);
        CHECK(imag_part(conj(z)) == -y);
    }
    SUBCASE("z * conj(z) is real") {
        auto n = z * conj(z);
        CHECK(imag_part(n).is_zero());
        CHECK(real_part(n) == x * x + y * y);
        CHECK(norm_sq(z) == x * x + y * y);
    }
    SUBCASE("index out of range raises") {
        CHECK_THROWS_AS(wirtinger(x, 5, Wirt::dz), MathError);
    }
}
