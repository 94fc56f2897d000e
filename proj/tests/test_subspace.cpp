#include <doctest.h>

#include <random>

#include "pshf/jordan.hpp"
#include "pshf/subspace.hpp"

using namespace pshf;

namespace {

JordanSpec diag_spec(std::vector<Rat> a) {
    JordanSpec s;
    s.n = static_cast<int>(a.size());
    for (auto& x : a) s.blocks.push_back(RealBlock{x, 1, Rat(1)});
    return s;
}

JordanSpec rand_semisimple(std::mt19937_64& rng, int max_n) {
    std::uniform_int_distribution<int> nn(1, max_n), num(-9, 9), den(1, 9), kind(0, 2);
    JordanSpec s;
    s.n = 0;
    const int target = nn(rng);
    while (s.n < target) {
        if (target - s.n >= 2 && kind(rng) == 0) {
            s.blocks.push_back(ComplexBlock{make_rat(num(rng), den(rng)), make_rat(num(rng), den(rng)), 1, Rat(0)});
            s.n += 2;
        } else {
            s.blocks.push_back(RealBlock{make_rat(num(rng), den(rng)), 1, Rat(0)});
            s.n += 1;
        }
    }
    return s;
}

}  // namespace

TEST_CASE("jordan_matrix examples") {
    SUBCASE("RealBlock a=0 size=2 delta=1 gives [[0,1],[0,0]]") {
        JordanSpec s;
        s.n = 2;
        s.blocks.push_back(RealBlock{Rat(0), 2, Rat(1)});
        auto A = jordan_matrix(s);
        CHECK(A(0, 0) == 0);
        CHECK(A(0, 1) == 1);
        CHECK(A(1, 0) == 0);
        CHECK(A(1, 1) == 0);
    }
    SUBCASE("ComplexBlock c=1 b=1 pairs=1 gives [[1,-1],[1,1]]") {
        JordanSpec s;
        s.n = 2;
        s.blocks.push_back(ComplexBlock{Rat(1), Rat(1), 1, Rat(1)});
        auto A = jordan_matrix(s);
        CHECK(A(0, 0) == 1);
        CHECK(A(0, 1) == -1);
        CHECK(A(1, 0) == 1);
        CHECK(A(1, 1) == 1);
    }
    SUBCASE("RealBlock a=0 size=1 gives [[0]]") {
        JordanSpec s;
        s.n = 1;
        s.blocks.push_back(RealBlock{Rat(0), 1, Rat(1)});
        auto A = jordan_matrix(s);
        CHECK(A(0, 0) == 0);
    }
    SUBCASE("dimension mismatch raises a spec error") {
        JordanSpec s;
        s.n = 3;
        s.blocks.push_back(RealBlock{Rat(0), 2, Rat(1)});
        CHECK_THROWS_AS(jordan_matrix(s), SpecError);
    }
}

TEST_CASE("subspace_basis from the definition") {
    SUBCASE("A = 0 (n=2): basis of i R^2") {
        auto b = subspace_basis(RatMatrix(2, 2));
        REQUIRE(b.vectors.size() == 2);
        CHECK(b.vectors[0] == RatVec{Rat(0), Rat(0), Rat(1), Rat(0)});
        CHECK(b.vectors[1] == RatVec{Rat(0), Rat(0), Rat(0), Rat(1)});
    }
    SUBCASE("A = [[1]]: single vector (1,1)") {
        RatMatrix a(1, 1);
        a(0, 0) = 1;
        auto b = subspace_basis(a);
        CHECK(b.vectors[0] == RatVec{Rat(1), Rat(1)});
    }
    SUBCASE("A = [[a,delta],[0,a]]") {
        RatMatrix a(2, 2);
        a(0, 0) = make_rat(2, 3);
        a(0, 1) = make_rat(1, 2);
        a(1, 1) = make_rat(2, 3);
        auto b = subspace_basis(a);
        CHECK(b.vectors[0] == RatVec{make_rat(2, 3), Rat(0), Rat(1), Rat(0)});
        CHECK(b.vectors[1] == RatVec{make_rat(1, 2), make_rat(2, 3), Rat(0), Rat(1)});
    }
}

TEST_CASE("orthogonal_complement") {
    SUBCASE("complement of span{(1,1)} is span{(1,-1)}") {
        SubspaceBasis b;
        b.dim = 1;
        b.vectors = {RatVec{Rat(1), Rat(1)}};
        auto c = orthogonal_complement(b);
        REQUIRE(c.vectors.size() == 1);
        CHECK(c.vectors[0][0] * 1 + c.vectors[0][1] * 1 == 0);
        CHECK(c.vectors[0][0] != 0);
    }
    SUBCASE("complement of M(0) = iR^n is R^n") {
        auto b = subspace_basis(RatMatrix(3, 3));
        auto c = orthogonal_complement(b);
        REQUIRE(c.vectors.size() == 3);
        for (const auto& v : c.vectors)
            for (int j = 3; j < 6; ++j) CHECK(v[j] == 0);
    }
    SUBCASE("complement of M(diag(a,..,a)) is span{e_j - a f_j}") {
        const Rat a = make_rat(3, 7);
        RatMatrix A(3, 3);
        for (int i = 0; i < 3; ++i) A(i, i) = a;
        auto c = orthogonal_complement(subspace_basis(A));
        REQUIRE(c.vectors.size() == 3);
        // span check: each vector must be a combination of e_j - a f_j; here the
        // kernel basis happens to be exactly those vectors up to scaling.
        for (const auto& v : c.vectors) {
            for (int j = 0; j < 3; ++j) CHECK(v[3 + j] == -a * v[j]);
        }
    }
    SUBCASE("rank-deficient input raises") {
        SubspaceBasis b;
        b.dim = 2;
        b.vectors = {RatVec{Rat(1), Rat(1)}, RatVec{Rat(2), Rat(2)}};
        CHECK_THROWS_AS(orthogonal_complement(b), MathError);
    }
    SUBCASE("orthogonality invariants") {
        std::mt19937_64 rng(5);
        std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
        for (int t = 0; t < 5; ++t) {
            RatMatrix A(3, 3);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) A(i, j) = make_rat(num(rng), den(rng));
            auto basis = subspace_basis(A);
            auto comp = orthogonal_complement(basis);
            CHECK(comp.pairwise_orthogonal());
            for (const auto& g : comp.vectors)
                for (const auto& m : basis.vectors) CHECK(dot(g, m) == 0);
        }
    }
}

TEST_CASE("distance_form examples") {
    SUBCASE("A=[[1]]: d = (x-y)^2/2") {
        RatMatrix a(1, 1);
        a(0, 0) = 1;
        auto f = distance_form(subspace_basis(a));
        CHECK(f.Q(0, 0) == make_rat(1, 2));
        CHECK(f.Q(0, 1) == make_rat(-1, 2));
        CHECK(f.Q(1, 0) == make_rat(-1, 2));
        CHECK(f.Q(1, 1) == make_rat(1, 2));
        CHECK(f.eval(RatVec{Rat(3), Rat(1)}) == 2);
    }
    SUBCASE("N = R^n: d = sum y_j^2") {
        auto f = distance_form_N(2);
        f.validate_projector();
        CHECK(f.eval(RatVec{Rat(5), Rat(7), Rat(2), Rat(3)}) == 13);
    }
    SUBCASE("A=0 n=2: d = x1^2 + x2^2") {
        auto f = distance_form(subspace_basis(RatMatrix(2, 2)));
        CHECK(f.eval(RatVec{Rat(1), Rat(2), Rat(9), Rat(4)}) == 5);
    }
}

TEST_CASE("closed_form_distance equals distance_form for semisimple specs") {
    SUBCASE("diag(a1, a2)") {
        auto s = diag_spec({make_rat(1, 3), make_rat(-1, 2)});
        auto f1 = closed_form_distance(s);
        auto f2 = distance_form(subspace_basis(jordan_matrix(s)));
        CHECK(f1.Q == f2.Q);
    }
    SUBCASE("one complex block (c,b)") {
        JordanSpec s;
        s.n = 2;
        s.blocks.push_back(ComplexBlock{make_rat(1, 5), make_rat(1, 3), 1, Rat(0)});
        auto f1 = closed_form_distance(s);
        auto f2 = distance_form(subspace_basis(jordan_matrix(s)));
        CHECK(f1.Q == f2.Q);
        // (x1-cy1+by2)^2 + (x2-cy2-by1)^2 over 1+b^2+c^2
        const Rat D = 1 + make_rat(1, 3) * make_rat(1, 3) + make_rat(1, 5) * make_rat(1, 5);
        RatVec w{Rat(1), Rat(0), Rat(0), Rat(0)};
        CHECK(f1.eval(w) == 1 / D);
    }
    SUBCASE("ComplexBlock(c=0,b=0) reduces to A=0") {
        JordanSpec s;
        s.n = 2;
        s.blocks.push_back(ComplexBlock{Rat(0), Rat(0), 1, Rat(0)});
        auto f = closed_form_distance(s);
        CHECK(f.eval(RatVec{Rat(1), Rat(1), Rat(0), Rat(0)}) == 2);
    }
    SUBCASE("random semisimple specs, exact Q equality") {
        std::mt19937_64 rng(11);
        for (int t = 0; t < 10; ++t) {
            auto s = rand_semisimple(rng, 4);
            auto f1 = closed_form_distance(s);
            auto f2 = distance_form(subspace_basis(jordan_matrix(s)));
            CHECK(f1.Q == f2.Q);
        }
    }
    SUBCASE("non-semisimple raises") {
        JordanSpec s;
        s.n = 2;
        s.blocks.push_back(RealBlock{Rat(0), 2, Rat(1)});
        CHECK_THROWS_AS(closed_form_distance(s), SpecError);
    }
}

TEST_CASE("projector invariants") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    for (int t = 0; t < 6; ++t) {
        const int n = 1 + (t % 4);
        RatMatrix A(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) A(i, j) = make_rat(num(rng), den(rng));
        auto f = distance_form(subspace_basis(A));
        CHECK(f.Q == f.Q.transposed());
        CHECK(f.Q * f.Q == f.Q);
        CHECK(f.Q.trace() == n);
        CHECK(f.Q.rank() == n);
    }
}

TEST_CASE("oracle equivalence: exact least-squares projection") {
    // d(w) from the quadratic form must match |w - B^T (B B^T)^{-1} B w|^2
    // exactly in rational arithmetic, for seeded random points and A, n <= 4.
    std::mt19937_64 rng(20260810);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9), nn(1, 4);
    int points_done = 0;
    while (points_done < 1000) {
        const int n = nn(rng);
        RatMatrix A(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) A(i, j) = make_rat(num(rng), den(rng));
        auto basis = subspace_basis(A);
        auto f = distance_form(basis);
        RatMatrix B(n, 2 * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < 2 * n; ++j) B(i, j) = basis.vectors[i][j];
        RatMatrix G = B * B.transposed();
        for (int pt = 0; pt < 25; ++pt, ++points_done) {
            RatVec w(2 * n);
            for (auto& x : w) x = make_rat(num(rng), den(rng));
            RatVec alpha = G.solve(B.apply(w));
            RatVec proj = B.transposed().apply(alpha);
            Rat d = 0;
            for (int i = 0; i < 2 * n; ++i) d += (w[i] - proj[i]) * (w[i] - proj[i]);
            CHECK(f.eval(w) == d);
        }
    }
}

TEST_CASE("perturbation residual of Lemma 1") {
    SUBCASE("delta = 0 gives the zero form") {
        JordanSpec s;
        s.n = 2;
        s.blocks.push_back(RealBlock{Rat(0), 2, Rat(1)});
        auto qs = perturbation_residual(s, {Rat(0)});
        CHECK(qs[0].Q.is_zero());
    }
    SUBCASE("first-order decay for RealBlock size 2") {
        JordanSpec s;
        s.n = 2;
        s.blocks.push_back(RealBlock{Rat(0), 2, Rat(1)});
        auto qs = perturbation_residual(s, {make_rat(1, 1000), make_rat(1, 10000)});
        const Rat m1 = qs[0].Q.max_abs_entry(), m2 = qs[1].Q.max_abs_entry();
        CHECK(m1 > 0);
        CHECK(m2 > 0);
        const double ratio = rat_to_double(m1 / m2);
        CHECK(ratio >= 5.0);   // conservative first-order bound
        CHECK(ratio < 20.0);   // approximately 10
    }
    SUBCASE("q_delta is a homogeneous degree-2 form by construction") {
        JordanSpec s;
        s.n = 4;
        s.blocks.push_back(ComplexBlock{make_rat(1, 4), make_rat(1, 8), 2, Rat(1)});
        auto qs = perturbation_residual(s, {make_rat(1, 100)});
        auto p = qs[0].to_poly();
        CHECK(p.is_homogeneous());
        CHECK(p.degree() == 2);
    }
    SUBCASE("no non-degenerate block raises") {
        JordanSpec s = diag_spec({Rat(1)});
        CHECK_THROWS_AS(perturbation_residual(s, {Rat(1)}), SpecError);
    }
}

TEST_CASE("perturbation decay ratios at 1e-2, 1e-3, 1e-4") {
    auto ratios = [](const JordanSpec& s) {
        auto qs = perturbation_residual(
            s, {make_rat(1, 100), make_rat(1, 1000), make_rat(1, 10000)});
        std::vector<double> r;
        for (std::size_t i = 0; i + 1 < qs.size(); ++i)
            r.push_back(rat_to_double(qs[i].Q.max_abs_entry() / qs[i + 1].Q.max_abs_entry()));
        return r;
    };
    SUBCASE("RealBlock size 2") {
        JordanSpec s;
        s.n = 2;
        s.blocks.push_back(RealBlock{make_rat(1, 4), 2, Rat(1)});
        for (double r : ratios(s)) CHECK(r >= 5.0);
    }
    SUBCASE("ComplexBlock pairs 2") {
        JordanSpec s;
        s.n = 4;
        s.blocks.push_back(ComplexBlock{make_rat(1, 16), make_rat(1, 16), 2, Rat(1)});
        for (double r : ratios(s)) CHECK(r >= 5.0);
    }
}

TEST_CASE("JordanSpec JSON") {
    auto j = nlohmann::json::parse(R"({
        "n": 3,
        "blocks": [
            {"type": "real", "a": "1/4", "size": 1},
            {"type": "complex", "b": "1/16", "c": "-1/16", "pairs": 1, "delta": "1/2"}
        ]
    })");
    auto s = JordanSpec::from_json(j);
    CHECK(s.n == 3);
    CHECK(s.blocks.size() == 2);
    CHECK(std::get<RealBlock>(s.blocks[0]).a == make_rat(1, 4));
    CHECK(std::get<ComplexBlock>(s.blocks[1]).c == make_rat(-1, 16));
    auto round = JordanSpec::from_json(s.to_json());
    CHECK(round.n == s.n);
    CHECK(jordan_matrix(round) == jordan_matrix(s));

    CHECK_THROWS_AS(JordanSpec::from_json(nlohmann::json::parse(R"({"n":2,"blocks":[]})")), SpecError);
    CHECK_THROWS_AS(
        JordanSpec::from_json(nlohmann::json::parse(R"({"n":1,"blocks":[{"type":"real","a":"1/0"}]})")),
        SpecError);
}

TEST_CASE("case tags and theta") {
    auto s1 = diag_spec({make_rat(1, 4), make_rat(1, 4)});
    CHECK(s1.case_tag() == "diag-uniform");
    auto s2 = diag_spec({make_rat(1, 4), make_rat(-1, 4)});
    CHECK(s2.case_tag() == "diag-pair");
    JordanSpec s3;
    s3.n = 2;
    s3.blocks.push_back(ComplexBlock{make_rat(1, 16), make_rat(1, 16), 1, Rat(1)});
    CHECK(s3.case_tag() == "complex-2x2");
    // theta for a = 1/4: (1/4)/sqrt(1+1/16) = 1/sqrt(17)
    CHECK(s1.theta_r(2) == doctest::Approx(1.0 / std::sqrt(17.0)));
}
