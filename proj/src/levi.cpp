#include "pshf/levi.hpp"

#include <cstdint>

#include "pshf/polydet.hpp"

namespace pshf {

namespace {

// Small deterministic generator for exact rational sample points.
struct RatGen {
    std::uint64_t s;
    explicit RatGen(std::uint64_t seed) : s(seed) {}
    std::uint64_t next() {
        s += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    Rat rat(int max_num = 9, int max_den = 9) {
        const long num = static_cast<long>(next() % (2 * max_num + 1)) - max_num;
        const long den = static_cast<long>(next() % max_den) + 1;
        return make_rat(num, den);
    }
};

}  // namespace

PshCandidate build_candidate(const JordanSpec& spec, const BivariatePoly& P, std::string p_id) {
    spec.validate();
    PshCandidate c;
    c.spec = spec;
    c.P = P;
    c.p_id = std::move(p_id);
    c.n = spec.n;
    c.QM = distance_form_for(spec);
    c.QN = distance_form_N(spec.n);
    c.dM = c.QM.to_poly();
    c.dN = c.QN.to_poly();
    c.rho = P.compose(c.dM, c.dN);
    c.Delta = (P.partial_u() + P.partial_v()).compose(c.dM, c.dN).scaled(make_rat(1, 2));

    // rho and grad rho vanish on M when P(0,v) = 0 and on N when P(u,0) = 0
    // (both hold for the homogeneous candidates with zero set M u N).
    const RatMatrix A = jordan_matrix(spec);
    RatGen gen(0x9277u ^ static_cast<std::uint64_t>(spec.n));
    auto check_zero_on = [&](const RatVec& w) {
        std::vector<Rat> pt(w.begin(), w.end());
        if (c.rho.eval_exact(pt) != 0) throw MathError("rho does not vanish on M u N");
        for (int k = 0; k < 2 * c.n; ++k)
            if (c.rho.derivative(k).eval_exact(pt) != 0)
                throw MathError("grad rho does not vanish on M u N");
    };
    const auto zero2 = RationalPoly::zero(2);
    const bool kills_M = P.poly().substitute({zero2, RationalPoly::variable(2, 1)}).is_zero();
    const bool kills_N = P.poly().substitute({RationalPoly::variable(2, 0), zero2}).is_zero();
    if (kills_M)
        for (const auto& bvec : subspace_basis(A).vectors) check_zero_on(bvec);
    if (kills_N)
        for (int j = 0; j < c.n; ++j) {
            RatVec w(2 * c.n);
            w[j] = 1;
            check_zero_on(w);  // basis of N = R^n
        }
    for (int t = 0; t < 8; ++t) {
        std::vector<Rat> pt(2 * c.n);
        for (auto& x : pt) x = gen.rat();
        if (c.rho.eval_exact(pt) < 0) throw MathError("rho negative at a sample point");
    }
    return c;
}

void HermitianPolyMatrix::check_hermitian() const {
    for (int j = 0; j < r; ++j) {
        if (!imag_part(at(j, j)).is_zero()) throw MathError("Hessian diagonal entry not real");
        for (int k = j + 1; k < r; ++k)
            if (!(at(j, k) == conj(at(k, j)))) throw MathError("Hessian matrix not Hermitian");
    }
}

std::vector<ComplexPoly> wirtinger_gradient(const RationalPoly& f) {
    const int n = f.nvars() / 2;
    std::vector<ComplexPoly> g;
    g.reserve(n);
    const ComplexPoly cf = complexify(f);
    for (int j = 0; j < n; ++j) g.push_back(wirtinger(cf, j, Wirt::dz));
    return g;
}

RationalPoly grad_norm_sq(const std::vector<ComplexPoly>& g, int r) {
    RationalPoly acc = RationalPoly::zero(g[0].nvars());
    for (int j = 0; j < r; ++j) acc += norm_sq(g[j]);
    return acc;
}

RationalPoly re_pairing(const std::vector<ComplexPoly>& gM, const std::vector<ComplexPoly>& gN, int r) {
    RationalPoly acc = RationalPoly::zero(gM[0].nvars());
    for (int j = 0; j < r; ++j) acc += real_part(gM[j] * conj(gN[j]));
    return acc;
}

RationalPoly z_jk(const std::vector<ComplexPoly>& gM, const std::vector<ComplexPoly>& gN, int j, int k) {
    RationalPoly mm = norm_sq(gM[j]) + norm_sq(gM[k]);
    RationalPoly nn = norm_sq(gN[j]) + norm_sq(gN[k]);
    ComplexPoly cr = gM[j] * conj(gN[j]) + gM[k] * conj(gN[k]);
    return mm * nn - norm_sq(cr);
}

HermitianPolyMatrix complex_hessian(const PshCandidate& c, int r) {
    if (r < 1 || r > c.n) throw SpecError("complex_hessian: r out of range");
    HermitianPolyMatrix H;
    H.r = r;
    H.e.reserve(static_cast<std::size_t>(r) * r);

    // Direct path.
    for (int j = 0; j < r; ++j)
        for (int k = 0; k < r; ++k) H.e.push_back(hessian_entry(c.rho, j, k));

    // Structured path: chain rule through P.
    const RationalPoly Pu = c.P.partial_u().compose(c.dM, c.dN);
    const RationalPoly Pv = c.P.partial_v().compose(c.dM, c.dN);
    const RationalPoly Puu = c.P.partial_u().partial_u().compose(c.dM, c.dN);
    const RationalPoly Pvv = c.P.partial_v().partial_v().compose(c.dM, c.dN);
    const RationalPoly Puv = c.P.partial_u().partial_v().compose(c.dM, c.dN);
    const auto gM = wirtinger_gradient(c.dM);
    const auto gN = wirtinger_gradient(c.dN);
    const ComplexPoly cPu = complexify(Pu), cPv = complexify(Pv);
    const ComplexPoly cPuu = complexify(Puu), cPvv = complexify(Pvv), cPuv = complexify(Puv);
    for (int j = 0; j < r; ++j)
        for (int k = 0; k < r; ++k) {
            ComplexPoly entry = cPuu * gM[j] * conj(gM[k]) + cPvv * gN[j] * conj(gN[k]) +
                                cPuv * (gM[j] * conj(gN[k]) + gN[j] * conj(gM[k])) +
                                cPu * hessian_entry(c.dM, j, k) + cPv * hessian_entry(c.dN, j, k);
            if (!(entry == H.at(j, k)))
                throw MathError("complex Hessian dual-path mismatch at (" + std::to_string(j) + "," +
                                std::to_string(k) + ")");
        }

    H.check_hermitian();
    return H;
}

RationalPoly minor_det(const HermitianPolyMatrix& H, int r) {
    if (r < 1 || r > H.r) throw SpecError("minor_det: r out of range");
    std::vector<ComplexPoly> block;
    block.reserve(static_cast<std::size_t>(r) * r);
    for (int j = 0; j < r; ++j)
        for (int k = 0; k < r; ++k) block.push_back(H.at(j, k));
    // Fraction-free entry-times-minor expansion beats Bareiss here: Bareiss
    // forms products of two size-(k d) intermediates, the expansion only
    // entry-times-minor products.
    const ComplexPoly det = r <= 2 ? bareiss_det(block, r) : subset_expansion_det(block, r);
    if (!imag_part(det).is_zero())
        throw MathError("minor determinant has a nonzero imaginary part");
    return real_part(det);
}

bool poly_equal(const RationalPoly& a, const RationalPoly& b, const std::string& context, Witness* w) {
    if (a == b) return true;
    if (w) {
        const RationalPoly d = a - b;
        const auto& [m, coef] = d.leading_term();
        w->context = context;
        w->monomial = m.str(d.nvars());
        w->lhs = rat_str(a.coeff_of(m));
        w->rhs = rat_str(b.coeff_of(m));
    }
    return false;
}

bool poly_equal(const ComplexPoly& a, const ComplexPoly& b, const std::string& context, Witness* w) {
    if (a == b) return true;
    if (w) {
        const ComplexPoly d = a - b;
        const auto& [m, coef] = d.leading_term();
        w->context = context;
        w->monomial = m.str(d.nvars());
        w->lhs = gq_str(a.coeff_of(m));
        w->rhs = gq_str(b.coeff_of(m));
    }
    return false;
}

namespace {

GaussQ det2(const GQMat2& m) { return m[0] * m[3] - m[1] * m[2]; }
GaussQ tr2(const GQMat2& m) { return m[0] + m[3]; }
GaussQ dot2(const GQVec2& a, const GQVec2& b) { return a[0] * b[0] + a[1] * b[1]; }
GQVec2 apply2(const GQMat2& m, const GQVec2& x) {
    return {m[0] * x[0] + m[1] * x[1], m[2] * x[0] + m[3] * x[1]};
}

bool gq_check(const GaussQ& lhs, const GaussQ& rhs, const std::string& context, Witness* w) {
    if (lhs == rhs) return true;
    if (w) {
        w->context = context;
        w->monomial = "1";
        w->lhs = gq_str(lhs);
        w->rhs = gq_str(rhs);
    }
    return false;
}

}  // namespace

bool verify_lemma2(const GQMat2& B, const std::vector<std::pair<GQVec2, GQVec2>>& pairs, Witness* w) {
    if (pairs.empty()) throw SpecError("verify_lemma2: need at least one pair");
    GQMat2 sum = {GaussQ(Rat(0)), GaussQ(Rat(0)), GaussQ(Rat(0)), GaussQ(Rat(0))};
    for (const auto& [u, v] : pairs) {
        sum[0] += u[0] * v[0];
        sum[1] += u[0] * v[1];
        sum[2] += u[1] * v[0];
        sum[3] += u[1] * v[1];
    }
    GQMat2 total = B;
    for (int i = 0; i < 4; ++i) total[i] += sum[i];

    // det(B + sum u v^T) = det B + Tr(B) sum v^T u - sum v^T B u + det(sum u v^T)
    GaussQ rhs = det2(B);
    {
        GaussQ acc;
        for (const auto& [u, v] : pairs) acc += dot2(v, u);
        rhs += tr2(B) * acc;
    }
    for (const auto& [u, v] : pairs) rhs -= dot2(v, apply2(B, u));
    rhs += det2(sum);
    if (!gq_check(det2(total), rhs, "lemma2 main identity", w)) return false;

    // det(sum u v^T) = (1/2) sum_{l,m} (u_l^T v_l u_m^T v_m - u_l^T v_m u_m^T v_l)
    GaussQ half_sum;
    for (const auto& [ul, vl] : pairs)
        for (const auto& [um, vm] : pairs)
            half_sum += dot2(ul, vl) * dot2(um, vm) - dot2(ul, vm) * dot2(um, vl);
    half_sum = half_sum * GaussQ(make_rat(1, 2));
    return gq_check(det2(sum), half_sum, "lemma2 rank-one-sum determinant", w);
}

bool verify_charpoly_identity(const RatMatrix& B, Witness* w) {
    const int r = B.rows();
    if (r != B.cols() || r > 5) throw SpecError("verify_charpoly_identity: need square r <= 5");
    // det(B + lambda I) as a univariate polynomial in lambda.
    std::vector<RationalPoly> m;
    m.reserve(static_cast<std::size_t>(r) * r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            RationalPoly e = RationalPoly::constant(1, B(i, j));
            if (i == j) e += RationalPoly::variable(1, 0);
            m.push_back(std::move(e));
        }
    const RationalPoly chi = bareiss_det(std::move(m), r);

    // Coefficient of lambda^j must equal the sum of principal minors of order r - j.
    for (int j = 0; j <= r; ++j) {
        Rat minor_sum = 0;
        const int order = r - j;
        // enumerate index subsets of size `order`
        std::vector<int> idx(order);
        auto rec = [&](auto&& self, int start, int depth) -> void {
            if (depth == order) {
                minor_sum += B.principal_minor(idx);
                return;
            }
            for (int i = start; i < r; ++i) {
                idx[depth] = i;
                self(self, i + 1, depth + 1);
            }
        };
        if (order == 0)
            minor_sum = 1;
        else
            rec(rec, 0, 0);
        const Rat coef = chi.coeff_of(Monomial::var(0, j));
        if (coef != minor_sum) {
            if (w) {
                w->context = "charpoly coefficient of lambda^" + std::to_string(j);
                w->monomial = "lambda^" + std::to_string(j);
                w->lhs = rat_str(coef);
                w->rhs = rat_str(minor_sum);
            }
            return false;
        }
    }
    return true;
}

bool verify_lemma3_diag(const JordanSpec& spec, const BivariatePoly& P, int r, Witness* w) {
    for (const auto& b : spec.blocks)
        if (!std::holds_alternative<RealBlock>(b) || std::get<RealBlock>(b).size != 1)
            throw SpecError("verify_lemma3_diag: spec must be real diagonal");
    if (r < 1 || r > spec.n) throw SpecError("verify_lemma3_diag: r out of range");

    const PshCandidate c = build_candidate(spec, P, "inline");
    const RationalPoly lhs = minor_det(complex_hessian(c, r), r);

    const RationalPoly Puu = P.partial_u().partial_u().compose(c.dM, c.dN);
    const RationalPoly Pvv = P.partial_v().partial_v().compose(c.dM, c.dN);
    const RationalPoly Puv = P.partial_u().partial_v().compose(c.dM, c.dN);
    const auto gM = wirtinger_gradient(c.dM);
    const auto gN = wirtinger_gradient(c.dN);
    const RationalPoly dMr = grad_norm_sq(gM, r);
    const RationalPoly dNr = grad_norm_sq(gN, r);
    const RationalPoly reT = re_pairing(gM, gN, r);

    if (r == 1) {
        const RationalPoly rhs = c.Delta + Puu * dMr + Pvv * dNr + (Puv * reT).scaled(2);
        return poly_equal(lhs, rhs, "lemma3 r=1 determinant formula", w);
    }

    RationalPoly zsum = RationalPoly::zero(2 * c.n);
    for (int j = 0; j < r; ++j)
        for (int k = j + 1; k < r; ++k) zsum += z_jk(gM, gN, j, k);
    const RationalPoly detHR = P.hessian_det().compose(c.dM, c.dN);
    const RationalPoly E =
        c.Delta * c.Delta + c.Delta * (Puu * dMr + Pvv * dNr + (Puv * reT).scaled(2)) + detHR * zsum;

    // lhs must equal Delta^{r-2} * E; build the product by repeated
    // small-by-large multiplication.
    RationalPoly rhs = E;
    for (int i = 0; i < r - 2; ++i) rhs = c.Delta * rhs;
    if (!poly_equal(lhs, rhs, "lemma3 r>=2 determinant formula", w)) return false;

    if (spec.n == 2 && r == 2) {
        // |(d dM/dz)_2|^2 = dM and |(d dN/dz)_2|^2 = dN as polynomials.
        if (!poly_equal(dMr, c.dM, "lemma3 n=r=2: |(d dM/dz)_2|^2 = dM", w)) return false;
        if (!poly_equal(dNr, c.dN, "lemma3 n=r=2: |(d dN/dz)_2|^2 = dN", w)) return false;
    }
    return true;
}

bool verify_lemma3_complex(const Rat& b, const Rat& c_, const BivariatePoly& P, Witness* w) {
    JordanSpec spec;
    spec.n = 2;
    spec.blocks.push_back(ComplexBlock{c_, b, 1, Rat(1)});
    const PshCandidate c = build_candidate(spec, P, "inline");
    const RationalPoly lhs = minor_det(complex_hessian(c, 2), 2);

    const Rat D = 1 + b * b + c_ * c_;
    const RationalPoly Pu = P.partial_u().compose(c.dM, c.dN);
    const RationalPoly Pv = P.partial_v().compose(c.dM, c.dN);
    const RationalPoly Puu = P.partial_u().partial_u().compose(c.dM, c.dN);
    const RationalPoly Pvv = P.partial_v().partial_v().compose(c.dM, c.dN);
    const RationalPoly Puv = P.partial_u().partial_v().compose(c.dM, c.dN);
    const auto gM = wirtinger_gradient(c.dM);
    const auto gN = wirtinger_gradient(c.dN);

    // The Hessian of dM is (1/2) I + (b/D) * i * [[0,1],[-1,0]].
    const GaussQ ib_over_D(Rat(0), b / D);
    if (!poly_equal(hessian_entry(c.dM, 0, 1), ComplexPoly::constant(4, ib_over_D),
                    "complex block: d^2 dM/dz1 dzbar2", w))
        return false;

    // Contractions against K2 = [[0,-1],[1,0]] used by the rank-one expansion:
    // xi^T K2 eta = xi_2 eta_1 - xi_1 eta_2.
    auto k2_form = [](const ComplexPoly& x1, const ComplexPoly& x2, const ComplexPoly& e1,
                      const ComplexPoly& e2) { return x2 * e1 - x1 * e2; };
    const ComplexPoly ctrM = k2_form(gM[0], gM[1], conj(gM[0]), conj(gM[1]));
    const ComplexPoly ctrN = k2_form(gN[0], gN[1], conj(gN[0]), conj(gN[1]));
    const ComplexPoly ctrX =
        k2_form(gM[0], gM[1], conj(gN[0]), conj(gN[1])) + k2_form(gN[0], gN[1], conj(gM[0]), conj(gM[1]));
    const RationalPoly J = imag_part(gN[1] * conj(gM[0]) - gN[0] * conj(gM[1]));
    if (!poly_equal(ctrM, complexify(c.dM).scaled(GaussQ(Rat(0), -2 * b / D)),
                    "complex block: xi_M^T K2 conj(xi_M) = -(2 i b / (1+b^2+c^2)) dM", w))
        return false;
    if (!poly_equal(ctrN, ComplexPoly::zero(4), "complex block: xi_N^T K2 conj(xi_N) = 0", w)) return false;
    if (!poly_equal(ctrX, scale_i(complexify(J)).scaled(GaussQ(Rat(2))),
                    "complex block: mixed K2 contraction = 2 i Im(dN_2 conj(dM_1) - dN_1 conj(dM_2))", w))
        return false;

    const RationalPoly ReS = re_pairing(gM, gN, 2);
    const ComplexPoly SMN = gM[0] * conj(gN[0]) + gM[1] * conj(gN[1]);
    const RationalPoly detHR = P.hessian_det().compose(c.dM, c.dN);
    const RationalPoly eps = Pu.scaled(b / D);

    RationalPoly rhs = c.Delta * c.Delta +
                       c.Delta * (Puu * c.dM + Pvv * c.dN + (Puv * ReS).scaled(2)) +
                       detHR * (c.dM * c.dN - norm_sq(SMN)) - eps * eps -
                       (c.dM * Puu * Pu).scaled(2 * b * b / (D * D)) + (eps * Puv * J).scaled(2);
    return poly_equal(lhs, rhs, "lemma3 complex-block determinant formula", w);
}

}  // namespace pshf
