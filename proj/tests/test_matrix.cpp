#include <doctest.h>

#include <random>

#include "pshf/matrix.hpp"

using namespace pshf;

namespace {

RatMatrix rand_matrix(std::mt19937_64& rng, int r, int c) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    RatMatrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = make_rat(num(rng), den(rng));
    return m;
}

}  // namespace

TEST_CASE("rank and nullspace") {
    RatMatrix m(2, 4);
    // rows (1,0,1,0) and (0,1,0,1)
    m(0, 0) = 1;
    m(0, 2) = 1;
    m(1, 1) = 1;
    m(1, 3) = 1;
    CHECK(m.rank() == 2);
    auto ker = m.nullspace();
    REQUIRE(ker.size() == 2);
    for (const auto& v : ker)
        for (int i = 0; i < 2; ++i) CHECK(dot(m.row(i), v) == 0);
}

TEST_CASE("solve and det") {
    std::mt19937_64 rng(42);
    for (int t = 0; t < 20; ++t) {
        RatMatrix a = rand_matrix(rng, 3, 3);
        if (a.det() == 0) continue;
        RatVec b{make_rat(1, 3), make_rat(-2, 5), make_rat(7, 2)};
        RatVec x = a.solve(b);
        RatVec ax = a.apply(x);
        CHECK(ax == b);
    }
    RatMatrix id = RatMatrix::identity(4);
    CHECK(id.det() == 1);
    CHECK(id.trace() == 4);
}

TEST_CASE("determinant matches permutation expansion on 3x3") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 30; ++t) {
        RatMatrix a = rand_matrix(rng, 3, 3);
        // brute-force oracle
        Rat d = a(0, 0) * a(1, 1) * a(2, 2) + a(0, 1) * a(1, 2) * a(2, 0) + a(0, 2) * a(1, 0) * a(2, 1) -
                a(0, 2) * a(1, 1) * a(2, 0) - a(0, 0) * a(1, 2) * a(2, 1) - a(0, 1) * a(1, 0) * a(2, 2);
        CHECK(a.det() == d);
    }
}

TEST_CASE("symmetric Jacobi eigenvalues") {
    // [[2,1],[1,2]] has eigenvalues 1 and 3.
    std::vector<double> a{2, 1, 1, 2};
    auto ev = symmetric_eigenvalues(a, 2);
    CHECK(ev[0] == doctest::Approx(1.0));
    CHECK(ev[1] == doctest::Approx(3.0));
}

TEST_CASE("hermitian eigenvalues via real embedding") {
    // [[1, i],[-i, 1]] has eigenvalues 0 and 2.
    std::vector<double> re{1, 0, 0, 1}, im{0, 1, -1, 0};
    auto ev = hermitian_eigenvalues(re, im, 2);
    CHECK(ev[0] == doctest::Approx(0.0));
    CHECK(ev[1] == doctest::Approx(2.0));
}
