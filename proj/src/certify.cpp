#include "pshf/certify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <mutex>

namespace pshf {

std::string float17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

nlohmann::ordered_json SampleReport::to_json(bool with_timings) const {
    nlohmann::ordered_json j;
    j["poly_id"] = poly_id;
    j["samples"] = samples;
    j["seed"] = seed;
    j["minimum"] = float17(minimum);
    j["argmin"] = nlohmann::ordered_json::array();
    for (double x : argmin) j["argmin"].push_back(float17(x));
    j["argmin_index"] = argmin_index;
    if (with_timings) j["elapsed_sec"] = float17(elapsed_sec);
    return j;
}

SampleReport sphere_min(const CompiledPoly& poly, long samples, std::uint64_t seed,
                        const std::string& id) {
    if (samples < 1) throw SpecError("sphere_min: samples must be >= 1");
    const auto t0 = std::chrono::steady_clock::now();
    const int dim = poly.nvars;

    struct Best {
        double val = std::numeric_limits<double>::infinity();
        long idx = -1;
    };
    std::vector<Best> best(static_cast<std::size_t>(worker_count()) + 1);
    parallel_chunks(samples, [&](int worker, long b, long e) {
        Best local;
        std::vector<double> pt;
        for (long i = b; i < e; ++i) {
            pt = sphere_point(seed, i, dim);
            const double v = poly.eval(pt.data());
            if (v < local.val) {
                local.val = v;
                local.idx = i;
            }
        }
        best[worker] = local;
    });
    Best overall;
    for (const auto& b : best)
        if (b.idx >= 0 && (b.val < overall.val || (b.val == overall.val && b.idx < overall.idx)))
            overall = b;

    SampleReport rep;
    rep.poly_id = id;
    rep.samples = samples;
    rep.seed = seed;
    rep.minimum = overall.val;
    rep.argmin_index = overall.idx;
    rep.argmin = sphere_point(seed, overall.idx, dim);
    double n2 = 0.0;
    for (double x : rep.argmin) n2 += x * x;
    if (std::abs(std::sqrt(n2) - 1.0) > 1e-12) throw MathError("sphere_min: argmin off the sphere");
    if (std::abs(poly.eval(rep.argmin.data()) - rep.minimum) >
        1e-12 * std::max(1.0, std::abs(rep.minimum)))
        throw MathError("sphere_min: argmin re-evaluation mismatch");
    rep.elapsed_sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

SampleReport sphere_min(const RationalPoly& poly, long samples, std::uint64_t seed,
                        const std::string& id) {
    if (!poly.is_homogeneous())
        throw MathError("sphere_min: polynomial is not homogeneous");
    return sphere_min(CompiledPoly::from(poly), samples, seed, id);
}

nlohmann::ordered_json Certificate::to_json(bool with_timings) const {
    nlohmann::ordered_json j;
    j["case"] = case_tag;
    j["spec"] = spec_json;
    j["poly"] = p_id;
    if (!p_paper_backed) j["poly_note"] = "uncertified by paper";
    j["theta"] = nlohmann::ordered_json::array();
    for (double t : theta) j["theta"].push_back(float17(t));
    j["tolerance"] = float17(tolerance);
    j["minors"] = nlohmann::ordered_json::array();
    for (const auto& r : per_r) j["minors"].push_back(r.to_json(with_timings));
    j["verdict"] = pass ? "sampled-positive" : "fail";
    return j;
}

Certificate certify_psh(const JordanSpec& spec, const BivariatePoly& P, const std::string& p_id,
                        long samples, std::uint64_t seed) {
    spec.validate();
    if (spec.n > 6)
        throw SpecError("certify_psh: symbolic minors limited to n <= 6; lower the dimension");
    if (!P.is_homogeneous() || P.degree() < 2)
        throw SpecError("certify_psh: P must be homogeneous of degree >= 2");
    const PshCandidate cand = build_candidate(spec, P, p_id);

    // {rho = 0} = {grad rho = 0} on M u N, sampled exactly at random
    // rational points of both subspaces.
    {
        const RatMatrix A = jordan_matrix(spec);
        SplitMix64 g(seed ^ 0x70736850ULL);
        auto rnd_rat = [&]() {
            return make_rat(static_cast<long>(g.next() % 19) - 9, static_cast<long>(g.next() % 9) + 1);
        };
        for (int t = 0; t < 8; ++t) {
            RatVec tv(spec.n);
            for (auto& x : tv) x = rnd_rat();
            RatVec on_m(2 * spec.n), on_n(2 * spec.n);
            const RatVec At = A.apply(tv);
            for (int i = 0; i < spec.n; ++i) {
                on_m[i] = At[i];
                on_m[spec.n + i] = tv[i];
                on_n[i] = tv[i];
            }
            for (const auto& w : {on_m, on_n}) {
                if (cand.rho.eval_exact(w) != 0) throw MathError("certify: rho nonzero on M u N");
                for (int k = 0; k < 2 * spec.n; ++k)
                    if (cand.rho.derivative(k).eval_exact(w) != 0)
                        throw MathError("certify: grad rho nonzero on M u N");
            }
        }
    }

    Certificate cert;
    cert.case_tag = spec.case_tag();
    cert.spec_json = spec.to_json();
    cert.p_id = p_id;
    cert.p_paper_backed = (p_id == "p21" || p_id == "p315");
    const HermitianPolyMatrix H = complex_hessian(cand, spec.n);
    bool all_pass = true;
    for (int r = 1; r <= spec.n; ++r) {
        const RationalPoly det = minor_det(H, r);
        if (!det.is_homogeneous() || det.degree() != (2 * P.degree() - 2) * r)
            throw MathError("certify: minor determinant has unexpected degree");
        const CompiledPoly cp = CompiledPoly::from(det);
        const double tol_r = 1e-14 * cp.max_abs_coeff();
        SampleReport rep = sphere_min(cp, samples, seed + static_cast<std::uint64_t>(r),
                                      p_id + ".detH" + std::to_string(r));
        cert.tolerance = std::max(cert.tolerance, tol_r);
        if (!(rep.minimum > tol_r)) all_pass = false;
        cert.per_r.push_back(std::move(rep));
        cert.theta.push_back(spec.theta_r(r));
    }
    cert.pass = all_pass;
    return cert;
}

Family family_from_string(const std::string& s) {
    if (s == "diag-uniform") return Family::DiagUniform;
    if (s == "diag-pair") return Family::DiagPair;
    if (s == "complex-equal") return Family::ComplexEqual;
    throw SpecError("unknown family: " + s);
}

std::string family_name(Family f) {
    switch (f) {
        case Family::DiagUniform: return "diag-uniform";
        case Family::DiagPair: return "diag-pair";
        case Family::ComplexEqual: return "complex-equal";
    }
    throw SpecError("bad family");
}

JordanSpec family_spec(Family f, int n, const Rat& t) {
    JordanSpec s;
    switch (f) {
        case Family::DiagUniform:
            s.n = n;
            for (int i = 0; i < n; ++i) s.blocks.push_back(RealBlock{t, 1, Rat(1)});
            break;
        case Family::DiagPair:
            if (n != 2) throw SpecError("diag-pair family requires n = 2");
            s.n = 2;
            s.blocks.push_back(RealBlock{t, 1, Rat(1)});
            s.blocks.push_back(RealBlock{-t, 1, Rat(1)});
            break;
        case Family::ComplexEqual:
            if (n != 2) throw SpecError("complex-equal family requires n = 2");
            s.n = 2;
            s.blocks.push_back(ComplexBlock{t, t, 1, Rat(1)});
            break;
    }
    return s;
}

nlohmann::ordered_json ThresholdReport::to_json() const {
    nlohmann::ordered_json j;
    j["family"] = family;
    j["n"] = n;
    j["poly"] = p_id;
    j["samples"] = samples;
    j["seed"] = seed;
    j["tol"] = float17(tol);
    j["unbounded"] = unbounded;
    j["threshold"] = unbounded ? "inf" : float17(threshold);
    j["last_pass"] = float17(last_pass);
    if (!unbounded) j["first_fail"] = float17(first_fail);
    j["monotone"] = monotone;
    j["probes"] = nlohmann::ordered_json::array();
    for (const auto& p : probes) {
        nlohmann::ordered_json pj;
        pj["scalar"] = float17(p.scalar);
        pj["pass"] = p.pass;
        j["probes"].push_back(pj);
    }
    return j;
}

ThresholdReport empirical_threshold(Family family, int n, const BivariatePoly& P,
                                    const std::string& p_id, long samples, double tol,
                                    std::uint64_t seed) {
    if (tol <= 0) throw SpecError("empirical_threshold: tol must be positive");
    ThresholdReport rep;
    rep.family = family_name(family);
    rep.n = n;
    rep.p_id = p_id;
    rep.samples = samples;
    rep.seed = seed;
    rep.tol = tol;

    auto probe = [&](double t) {
        const bool ok =
            certify_psh(family_spec(family, n, rat_from_double(t)), P, p_id, samples, seed).pass;
        rep.probes.push_back({t, ok});
        return ok;
    };

    double lo = 0.0, hi = 0.125;
    while (probe(hi)) {
        lo = hi;
        hi *= 2;
        if (hi > 10.0) {
            rep.unbounded = true;
            rep.last_pass = lo;
            rep.threshold = std::numeric_limits<double>::infinity();
            return rep;
        }
    }
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (probe(mid))
            lo = mid;
        else
            hi = mid;
    }
    rep.last_pass = lo;
    rep.first_fail = hi;
    rep.threshold = 0.5 * (lo + hi);
    double max_pass = -1.0, min_fail = std::numeric_limits<double>::infinity();
    for (const auto& p : rep.probes)
        if (p.pass)
            max_pass = std::max(max_pass, p.scalar);
        else
            min_fail = std::min(min_fail, p.scalar);
    rep.monotone = max_pass < min_fail;
    return rep;
}

double domination_constant(const RationalPoly& Q, const RationalPoly& R, long samples,
                           std::uint64_t seed) {
    if (!Q.is_homogeneous() || !R.is_homogeneous())
        throw SpecError("domination: inputs must be homogeneous");
    if (Q.degree() != R.degree() || Q.degree() % 2 != 0)
        throw SpecError("domination: degrees must match and be even");
    if (Q.nvars() != R.nvars()) throw SpecError("domination: variable counts differ");
    const CompiledPoly cq = CompiledPoly::from(Q), cr = CompiledPoly::from(R);
    double best = std::numeric_limits<double>::infinity();
    for (long i = 0; i < samples; ++i) {
        const auto pt = sphere_point(seed, i, cq.nvars);
        const double q = cq.eval(pt.data());
        if (q <= 0) throw MathError("domination: Q not positive at a sample point");
        const double r = std::abs(cr.eval(pt.data()));
        if (r > 1e-300) best = std::min(best, q / r);
    }
    return best;
}

void CaseReport::add(const std::string& n, bool ok, const std::string& detail) {
    checks.push_back({n, ok, detail});
    if (!ok) pass = false;
}

nlohmann::ordered_json CaseReport::to_json() const {
    nlohmann::ordered_json j;
    j["name"] = name;
    j["pass"] = pass;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json cj;
        cj["check"] = c.name;
        cj["pass"] = c.pass;
        if (!c.detail.empty()) cj["detail"] = c.detail;
        j["checks"].push_back(cj);
    }
    return j;
}

namespace {

RationalPoly xv(ExtVar v) { return RationalPoly::variable(kExtVars, v); }

// Minimum of a W-quadratic a W^2 + b W + c over W >= 2 by vertex evaluation.
Rat w_quadratic_min(const Rat& a, const Rat& b, const Rat& c) {
    const Rat vertex = -b / (2 * a);
    if (a > 0 && vertex >= 2) return c - b * b / (4 * a);
    return 4 * a + 2 * b + c;
}

std::string exact_approx(const Rat& x) {
    return rat_str(x) + " ~= " + float17(rat_to_double(x));
}

}  // namespace

CaseReport verify_case1_identities(int r, std::uint64_t seed) {
    CaseReport rep;
    rep.name = "case1 (diag, P = u^2 v + u v^2, theta = 1/4)";
    if (r < 2) throw SpecError("verify_case1_identities: r >= 2 required");

    // (i) Z_{jk} resummation as an exact identity in x, y for uniform
    // diagonal specs with n = r.
    {
        SplitMix64 g(seed);
        const Rat a_rand =
            make_rat(static_cast<long>(g.next() % 19) - 9, static_cast<long>(g.next() % 9) + 1);
        for (const Rat& aval : {make_rat(1, 3), a_rand}) {
            JordanSpec s;
            s.n = r;
            for (int i = 0; i < r; ++i) s.blocks.push_back(RealBlock{aval, 1, Rat(1)});
            const QuadraticForm QM = closed_form_distance(s);
            const RationalPoly dM = QM.to_poly(), dN = distance_form_N(r).to_poly();
            const auto gM = wirtinger_gradient(dM), gN = wirtinger_gradient(dN);
            RationalPoly zsum = RationalPoly::zero(2 * r);
            for (int j = 0; j < r; ++j)
                for (int k = j + 1; k < r; ++k) zsum += z_jk(gM, gN, j, k);
            const Rat D = 1 + aval * aval;
            auto lin = [&](int j) {
                return RationalPoly::variable(2 * r, j) -
                       RationalPoly::variable(2 * r, r + j).scaled(aval);
            };
            auto yvar = [&](int j) { return RationalPoly::variable(2 * r, r + j); };
            RationalPoly pair_form = RationalPoly::zero(2 * r);
            for (int j = 0; j < r; ++j)
                for (int k = j + 1; k < r; ++k) {
                    RationalPoly t = lin(j) * yvar(k) - lin(k) * yvar(j);
                    pair_form += (t * t).scaled(1 / D);
                }
            RationalPoly ytil = RationalPoly::zero(2 * r);
            for (int j = 0; j < r; ++j) ytil += lin(j) * yvar(j);
            const RationalPoly lagrange =
                grad_norm_sq(gM, r) * grad_norm_sq(gN, r) - (ytil * ytil).scaled(1 / D);
            Witness w1, w2;
            const bool ok1 = poly_equal(zsum, pair_form, "sum Z_jk vs pairwise-square form", &w1);
            const bool ok2 = poly_equal(zsum, lagrange, "sum Z_jk vs Lagrange form", &w2);
            rep.add("Z-sum pairwise squares (a=" + rat_str(aval) + ", n=r=" + std::to_string(r) + ")",
                    ok1, ok1 ? "" : w1.str());
            rep.add("Z-sum Lagrange identity (a=" + rat_str(aval) + ")", ok2, ok2 ? "" : w2.str());
            // 0 <= sum Z <= d_{M,r} d_{N,r}: the gap to the upper bound is the
            // scaled square Ytilde^2/(1+a^2).
            const RationalPoly gap = grad_norm_sq(gM, r) * grad_norm_sq(gN, r) - zsum;
            rep.add("Z-sum upper-bound gap is Ytilde^2/(1+a^2) (a=" + rat_str(aval) + ")",
                    gap == (ytil * ytil).scaled(1 / D));
        }
    }

    // (ii) regrouped expansion of Psi_{r,1/4} in the ring with s^2 = p q.
    const auto ring = ExtensionRing::sqrt_pq();
    auto E = [&](const RationalPoly& p) { return ExtensionPoly(ring, p); };
    const auto u = xv(EU), v = xv(EV), p = xv(EP), q = xv(EQ), s = xv(ES);
    const RationalPoly delta = (u * u + (u * v).scaled(4) + v * v).scaled(make_rat(1, 2));
    const ExtensionPoly psi =
        E(delta * delta + delta * ((v * p).scaled(2) + (u * q).scaled(2) - (u + v) * s) -
          ((u * u + u * v + v * v) * p * q).scaled(4));
    const RationalPoly t7 = u.pow(4).scaled(make_rat(1, 10)) - (u.pow(3) * v).scaled(make_rat(41, 32)) +
                            (u * u * v * v).scaled(make_rat(9, 2)) -
                            (u * v.pow(3)).scaled(make_rat(41, 32)) + v.pow(4).scaled(make_rat(1, 10));
    const RationalPoly t8 = (u.pow(4) + v.pow(4)).scaled(make_rat(1, 40));
    const ExtensionPoly regrouped =
        E(u * v * ((p * v).scaled(2) + (q * u).scaled(2) - (p * q).scaled(4))) +
        E((u * u + v * v) * ((u * v).scaled(2) + u * q + p * v - (p * q).scaled(4))) +
        E(u * u * v * (q.scaled(2) - s.scaled(make_rat(5, 2)) + u.scaled(make_rat(25, 32)))) +
        E(v * v * u * (p.scaled(2) - s.scaled(make_rat(5, 2)) + v.scaled(make_rat(25, 32)))) +
        E(u.pow(3).scaled(make_rat(1, 8)) * (u - s.scaled(4) + v.scaled(4))) +
        E(v.pow(3).scaled(make_rat(1, 8)) * (v - s.scaled(4) + u.scaled(4))) + E(t7) + E(t8);
    {
        Witness w;
        const bool ok = poly_equal(psi.value(), regrouped.value(), "Psi_{r,1/4} regrouping", &w);
        rep.add("Psi_{r,1/4} equals the regrouped sum in the s^2 = pq ring", ok, ok ? "" : w.str());
        rep.add("symmetric quartic coefficients are (1/10, -41/32, 9/2, -41/32, 1/10)",
                t7.coeff_of(Monomial::var(EU, 4)) == make_rat(1, 10) &&
                    t7.coeff_of(Monomial::var(EU, 3) * Monomial::var(EV)) == make_rat(-41, 32) &&
                    t7.coeff_of(Monomial::var(EU, 2) * Monomial::var(EV, 2)) == make_rat(9, 2) &&
                    t7.coeff_of(Monomial::var(EU) * Monomial::var(EV, 3)) == make_rat(-41, 32) &&
                    t7.coeff_of(Monomial::var(EV, 4)) == make_rat(1, 10));
        rep.add("residual term is (dM^4 + dN^4)/40",
                t8 == (xv(EU).pow(4) + xv(EV).pow(4)).scaled(make_rat(1, 40)));
    }

    // first-minor bound: the regrouped right side differs from the exact
    // expression by exactly u q + v p (nonnegative on the bound's domain).
    {
        const RationalPoly phi1 = delta + (v * p).scaled(2) + (u * q).scaled(2) - (u + v) * s;
        const RationalPoly rhs = u * (u.scaled(make_rat(1, 8)) - s + q) +
                                 v * (v.scaled(make_rat(1, 8)) - s + p) +
                                 (u * u + v * v).scaled(make_rat(3, 8)) + (u * v).scaled(2);
        Witness w;
        const bool ok = poly_equal(phi1 - rhs, u * q + v * p, "H1 regrouping difference", &w);
        rep.add("H1 bound regrouping difference equals dM d_{N,1} + dN d_{M,1}", ok, ok ? "" : w.str());
    }

    // (iii) W-quadratic positivity over W >= 2 by vertex evaluation.
    {
        const Rat mn = w_quadratic_min(make_rat(1, 10), make_rat(-41, 32), make_rat(43, 10));
        const Rat vertex = make_rat(41, 32) / make_rat(2, 10);
        const Rat at2 = make_rat(4, 10) - make_rat(41, 16) + make_rat(43, 10);
        rep.add("W-quadratic vertex at 205/32", vertex == make_rat(205, 32), exact_approx(vertex));
        rep.add("W-quadratic minimum 43/10 - 8405/2048 = 2007/10240 > 0",
                mn == make_rat(43, 10) - make_rat(8405, 2048) && mn == make_rat(2007, 10240) && mn > 0,
                exact_approx(mn));
        rep.add("W-quadratic value at W=2 is 171/80 = 2.1375", at2 == make_rat(171, 80),
                exact_approx(at2));
    }

    // (iv) sampled final lower bound at a modest sample count (the acceptance
    // suite re-runs this at full scale).
    {
        JordanSpec s2;
        s2.n = 2;
        s2.blocks.push_back(RealBlock{make_rat(1, 4), 1, Rat(1)});
        s2.blocks.push_back(RealBlock{make_rat(1, 4), 1, Rat(1)});
        const double slack = case1_lower_bound_slack(s2, 2, 20000, seed);
        rep.add("sampled bound det H_2 >= (dM^4 + dN^4)/40 at a=1/4", slack >= -1e-12,
                "min slack " + float17(slack));
    }
    return rep;
}

double case1_lower_bound_slack(const JordanSpec& spec, int r, long samples, std::uint64_t seed) {
    const PshCandidate cand = build_candidate(spec, BivariatePoly::p21(), "p21");
    const RationalPoly det = minor_det(complex_hessian(cand, r), r);
    const RationalPoly bound =
        (cand.dM.pow(2 * r) + cand.dN.pow(2 * r)).scaled(make_rat(1, 5 * (1L << (r + 1))));
    const CompiledPoly cd = CompiledPoly::from(det), cb = CompiledPoly::from(bound);
    double worst = std::numeric_limits<double>::infinity();
    std::mutex mu;
    parallel_chunks(samples, [&](int, long b, long e) {
        double local = std::numeric_limits<double>::infinity();
        for (long i = b; i < e; ++i) {
            const auto pt = sphere_point(seed, i, cd.nvars);
            local = std::min(local, cd.eval(pt.data()) - cb.eval(pt.data()));
        }
        std::lock_guard<std::mutex> lk(mu);
        worst = std::min(worst, local);
    });
    return worst;
}

CaseReport verify_case2_identities() {
    CaseReport rep;
    rep.name = "case2 (diag(a,a), P = u^3 v + 5 u^2 v^2 + u v^3, theta = 2/3)";
    const BivariatePoly P = BivariatePoly::p315();
    const BivariatePoly U = BivariatePoly::u(), V = BivariatePoly::v();
    const BivariatePoly delta = (P.partial_u() + P.partial_v()).scaled(make_rat(1, 2));
    const BivariatePoly detHR = P.hessian_det();

    rep.add("Delta = (u^3 + 13 u^2 v + 13 u v^2 + v^3)/2",
            delta == (U.pow(3) + (U * U * V).scaled(13) + (U * V * V).scaled(13) + V.pow(3))
                         .scaled(make_rat(1, 2)));
    rep.add("det H^R(P) = -3(3u^4 + 20u^3v + 94u^2v^2 + 20uv^3 + 3v^4)",
            detHR == (U.pow(4).scaled(3) + (U.pow(3) * V).scaled(20) + (U * U * V * V).scaled(94) +
                      (U * V.pow(3)).scaled(20) + V.pow(4).scaled(3))
                         .scaled(-3));

    // R, S, T recomputed from the r = 2 determinant formula.
    const BivariatePoly R = BivariatePoly() - detHR;
    const BivariatePoly S = (delta * P.partial_u().partial_v()).scaled(-2);
    const BivariatePoly T = delta * delta +
                            delta * (P.partial_u().partial_u() * U + P.partial_v().partial_v() * V) +
                            detHR * (U * V);
    {
        const BivariatePoly Rexp = (U.pow(4).scaled(3) + (U.pow(3) * V).scaled(20) +
                                    (U * U * V * V).scaled(94) + (U * V.pow(3)).scaled(20) +
                                    V.pow(4).scaled(3))
                                       .scaled(3);
        const BivariatePoly Sexp =
            (U.pow(5).scaled(3) + (U.pow(4) * V).scaled(59) + (U.pow(3) * V * V).scaled(302) +
             (U * U * V.pow(3)).scaled(302) + (U * V.pow(4)).scaled(59) + V.pow(5).scaled(3))
                .scaled(-1);
        const BivariatePoly Texp =
            (U.pow(6) + (U.pow(5) * V).scaled(22) + (U.pow(4) * V * V).scaled(403) +
             (U.pow(3) * V.pow(3)).scaled(44) + (U * U * V.pow(4)).scaled(403) +
             (U * V.pow(5)).scaled(22) + V.pow(6))
                .scaled(make_rat(1, 4));
        rep.add("R = 3(3u^4 + 20u^3v + 94u^2v^2 + 20uv^3 + 3v^4)", R == Rexp);
        rep.add("S = -(3u^5 + 59u^4v + 302u^3v^2 + 302u^2v^3 + 59uv^4 + 3v^5)", S == Sexp);
        rep.add("T = (u^6 + 22u^5v + 403u^4v^2 + 44u^3v^3 + 403u^2v^4 + 22uv^5 + v^6)/4", T == Texp);
        rep.add("T spot checks: u^5v -> 22/4, u^4v^2 -> 403/4, u^3v^3 -> 44/4",
                T.coeff(5, 1) == make_rat(22, 4) && T.coeff(4, 2) == make_rat(403, 4) &&
                    T.coeff(3, 3) == make_rat(44, 4));
    }

    // Discriminant S^2 theta^2 - 4 R T at theta = 2/3.
    {
        const BivariatePoly disc = (S * S).scaled(make_rat(4, 9)) - (R * T).scaled(4);
        const long coefs[11] = {45,     906,    25889, 127768, 582402, -207076,
                                582402, 127768, 25889, 906,    45};
        BivariatePoly expect;
        for (int k = 0; k <= 10; ++k)
            expect = expect + (BivariatePoly::u().pow(10 - k) * BivariatePoly::v().pow(k)).scaled(coefs[k]);
        expect = expect.scaled(make_rat(-1, 9));
        rep.add("discriminant at theta=2/3 matches the degree-10 display coefficient-by-coefficient",
                disc == expect);
        bool palindromic = true;
        for (int k = 0; k <= 10; ++k)
            if (disc.coeff(10 - k, k) != disc.coeff(k, 10 - k)) palindromic = false;
        rep.add("discriminant is symmetric under u <-> v", palindromic);
        bool neg = true;
        for (int i = 0; i <= 64; ++i) {
            if (disc.eval(make_rat(i, 64), 1 - make_rat(i, 64)) >= 0) neg = false;
        }
        rep.add("discriminant negative on the positive-quadrant segment", neg);
    }

    // R Y^2 + theta S Y + T instantiated as an exact identity in x, y.
    {
        const Rat a = make_rat(2, 5);
        JordanSpec s;
        s.n = 2;
        s.blocks.push_back(RealBlock{a, 1, Rat(1)});
        s.blocks.push_back(RealBlock{a, 1, Rat(1)});
        const PshCandidate cand = build_candidate(s, P, "p315");
        const RationalPoly lhs = minor_det(complex_hessian(cand, 2), 2);
        RationalPoly ytil = RationalPoly::zero(4);
        for (int j = 0; j < 2; ++j)
            ytil += (RationalPoly::variable(4, j) - RationalPoly::variable(4, 2 + j).scaled(a)) *
                    RationalPoly::variable(4, 2 + j);
        const Rat D = 1 + a * a;
        const RationalPoly rhs = R.compose(cand.dM, cand.dN) * (ytil * ytil).scaled(1 / D) +
                                 S.compose(cand.dM, cand.dN) * ytil.scaled(a / D) +
                                 T.compose(cand.dM, cand.dN);
        Witness w;
        const bool ok = poly_equal(lhs, rhs, "R Y^2 + theta S Y + T instantiation", &w);
        rep.add("det H_2 = R Y^2 + theta S Y + T as an exact identity in x,y (a=2/5)", ok,
                ok ? "" : w.str());
    }

    // H1 regrouping at theta = 2/3 in the ring with m^2 = d_{M,1}, w^2 = d_{N,1}.
    {
        const auto ring = ExtensionRing::roots_pq();
        auto E = [&](const RationalPoly& x) { return ExtensionPoly(ring, x); };
        const auto u = xv(EU), v = xv(EV), p = xv(EP), q = xv(EQ), m = xv(EM), wv = xv(EW);
        auto biv = [&](const BivariatePoly& b) { return b.poly().substitute({u, v}); };
        const ExtensionPoly lhs =
            E(biv(delta) + biv(P.partial_u().partial_u()) * p + biv(P.partial_v().partial_v()) * q -
              (biv(P.partial_u().partial_v()) * (m * wv)).scaled(make_rat(4, 3)));
        const ExtensionPoly rhs =
            E(((u * wv - v * m) * (u * wv - v * m)).scaled(make_rat(4, 3))) +
            E(u * u * (u.scaled(make_rat(1, 2)) - (m * wv).scaled(4) + q.scaled(8))) +
            E(v * v * (v.scaled(make_rat(1, 2)) - (m * wv).scaled(4) + p.scaled(8))) +
            E((u * v).scaled(6) * (u - (m * wv).scaled(2) + v)) +
            E((u * v).scaled(6) * (m - wv) * (m - wv)) +
            E((p * v * v + q * u * u).scaled(make_rat(2, 3))) +
            E((u * v).scaled(make_rat(1, 2)) * (u + v));
        Witness w;
        const bool ok = poly_equal(lhs.value(), rhs.value(), "H1 regrouping at theta=2/3", &w);
        rep.add("H1 lower-bound regrouping in the root extension ring", ok, ok ? "" : w.str());
    }
    return rep;
}

CaseReport verify_case3_identities(std::uint64_t seed) {
    CaseReport rep;
    rep.name = "case3 (2x2 block [[c,-b],[b,c]], P = u^2 v + u v^2, |b|,|c| <= 1/16)";

    // (i) the three displayed Re/Im expressions, exact in x, y.
    SplitMix64 g(seed ^ 0xCA5E3ULL);
    auto rnd_small = [&]() {
        return make_rat(static_cast<long>(g.next() % 9) - 4, 16 + static_cast<long>(g.next() % 16));
    };
    const std::vector<std::pair<Rat, Rat>> bcs = {{make_rat(1, 16), make_rat(1, 16)},
                                                  {rnd_small(), rnd_small()},
                                                  {Rat(0), Rat(0)}};
    for (const auto& [b, c] : bcs) {
        JordanSpec s;
        s.n = 2;
        s.blocks.push_back(ComplexBlock{c, b, 1, Rat(1)});
        const RationalPoly dM = closed_form_distance(s).to_poly();
        const RationalPoly dN = distance_form_N(2).to_poly();
        const auto gM = wirtinger_gradient(dM), gN = wirtinger_gradient(dN);
        const Rat D = 1 + b * b + c * c;
        auto var = [&](int i) { return RationalPoly::variable(4, i); };
        const RationalPoly L1 = var(0) - var(2).scaled(c) + var(3).scaled(b);
        const RationalPoly L2 = var(1) - var(3).scaled(c) - var(2).scaled(b);

        Witness w1, w2, w3;
        const bool ok1 = poly_equal(real_part(gM[0] * conj(gN[0])),
                                    (var(2) * (L1.scaled(c) + L2.scaled(b))).scaled(-1 / D),
                                    "Re(dM_1 dNbar_1) display", &w1);
        const bool ok2 = poly_equal(
            re_pairing(gM, gN, 2),
            (var(3) * L1 - var(2) * L2).scaled(b / D) - (var(2) * L1 + var(3) * L2).scaled(c / D),
            "Re(sum dM_j dNbar_j) display", &w2);
        const bool ok3 = poly_equal(imag_part(gN[1] * conj(gM[0]) - gN[0] * conj(gM[1])),
                                    (var(2) * L2 - var(3) * L1).scaled(1 / D),
                                    "Im(dN_2 dMbar_1 - dN_1 dMbar_2) display", &w3);
        const std::string tag = " (b=" + rat_str(b) + ", c=" + rat_str(c) + ")";
        rep.add("Re(dM/dz1 dN/dzbar1) expansion" + tag, ok1, ok1 ? "" : w1.str());
        rep.add("Re(sum_j dM/dz_j dN/dzbar_j) expansion" + tag, ok2, ok2 ? "" : w2.str());
        rep.add("Im pairing expansion" + tag, ok3, ok3 ? "" : w3.str());
    }

    // (ii) Cauchy-Schwarz bounds, sampled on the sphere.
    {
        const Rat b = make_rat(1, 16), c = make_rat(1, 16);
        JordanSpec s;
        s.n = 2;
        s.blocks.push_back(ComplexBlock{c, b, 1, Rat(1)});
        const RationalPoly dM = closed_form_distance(s).to_poly();
        const RationalPoly dN = distance_form_N(2).to_poly();
        const auto gM = wirtinger_gradient(dM), gN = wirtinger_gradient(dN);
        const double bd = rat_to_double(b), cd = rat_to_double(c);
        const double D = 1 + bd * bd + cd * cd;
        const CompiledPoly cdM = CompiledPoly::from(dM), cdN = CompiledPoly::from(dN);
        const CompiledPoly cre1 = CompiledPoly::from(real_part(gM[0] * conj(gN[0])));
        const CompiledPoly cres = CompiledPoly::from(re_pairing(gM, gN, 2));
        const CompiledPoly cj =
            CompiledPoly::from(imag_part(gN[1] * conj(gM[0]) - gN[0] * conj(gM[1])));
        const double k1 = std::sqrt(bd * bd + cd * cd) / std::sqrt(D);
        const double k2 = (std::abs(bd) + std::abs(cd)) / std::sqrt(D);
        const double k3 = 1.0 / std::sqrt(D);
        double s1 = 1e300, s2 = 1e300, s3 = 1e300;
        const long N = 100000;
        for (long i = 0; i < N; ++i) {
            const auto pt = sphere_point(seed, i, 4);
            const double root = std::sqrt(std::max(0.0, cdM.eval(pt.data()) * cdN.eval(pt.data())));
            s1 = std::min(s1, k1 * root - std::abs(cre1.eval(pt.data())));
            s2 = std::min(s2, k2 * root - std::abs(cres.eval(pt.data())));
            s3 = std::min(s3, k3 * root - std::abs(cj.eval(pt.data())));
        }
        rep.add("|Re(dM_1 dNbar_1)| <= sqrt(b^2+c^2)/sqrt(1+b^2+c^2) sqrt(dM dN) sampled",
                s1 >= -1e-12, "min slack " + float17(s1));
        rep.add("|Re(sum)| <= (|b|+|c|)/sqrt(1+b^2+c^2) sqrt(dM dN) sampled", s2 >= -1e-12,
                "min slack " + float17(s2));
        rep.add("|Im pairing| <= 1/sqrt(1+b^2+c^2) sqrt(dM dN) sampled", s3 >= -1e-12,
                "min slack " + float17(s3));
    }

    // (iii) final regrouped decomposition at |b| = |c| = 1/16 in the ring
    // with m^2 = dM, w^2 = dN.
    {
        const auto ring = ExtensionRing::roots_uv();
        const auto u = xv(EU), v = xv(EV), m = xv(EM), wv = xv(EW);
        const RationalPoly mw = m * wv;
        const ExtensionPoly E2(
            ring,
            u.pow(4).scaled(make_rat(1, 4)) + (u * u * v * v).scaled(make_rat(17, 2)) +
                v.pow(4).scaled(make_rat(1, 4)) -
                (v * v * ((u * u).scaled(12) + (u * v).scaled(8) + v * v)).scaled(make_rat(1, 256)) -
                ((u * u + (u * v).scaled(8) + (v * v).scaled(3)) * (u + v) * mw).scaled(make_rat(1, 8)) -
                ((u * u + (u * v).scaled(4) + v * v) * (u + v) * mw).scaled(make_rat(1, 8)));
        auto sq = [&](const RationalPoly& x) { return ExtensionPoly(ring, x * x); };
        const ExtensionPoly E3 =
            ExtensionPoly(ring, (u * v * v).scaled(make_rat(1, 2))) * sq(m.scaled(2) - wv) +
            ExtensionPoly(ring, (u * u * v).scaled(make_rat(1, 128))) * sq(m.scaled(7) - wv.scaled(16)) +
            ExtensionPoly(ring, u.pow(3).scaled(make_rat(1, 8))) * sq(m - wv) +
            ExtensionPoly(ring, v.pow(3).scaled(make_rat(1, 8))) * sq(m.scaled(2) - wv) +
            ExtensionPoly(ring,
                          (u.pow(3) * v).scaled(make_rat(67, 128)) + u.pow(4).scaled(make_rat(1, 256)) +
                              u.pow(4).scaled(make_rat(31, 256)) -
                              (u.pow(3) * v).scaled(make_rat(33, 32)) +
                              (u * u * v * v).scaled(make_rat(285, 64)) -
                              (u * v.pow(3)).scaled(make_rat(33, 32)) + v.pow(4).scaled(make_rat(31, 256)));
        Witness w;
        const bool ok = poly_equal(E2.value(), E3.value(), "final regrouped decomposition", &w);
        rep.add("final decomposition identity in the root extension ring (|b|=|c|=1/16)", ok,
                ok ? "" : w.str());
    }

    // (iv) residual W-quadratic over W >= 2.
    {
        const Rat mn = w_quadratic_min(make_rat(31, 256), make_rat(-33, 32), make_rat(539, 128));
        const Rat vertex = make_rat(33, 32) / (make_rat(31, 256) * 2);
        rep.add("W-quadratic vertex at 132/31", vertex == make_rat(132, 31), exact_approx(vertex));
        rep.add("W-quadratic minimum 7997/3968 > 0", mn == make_rat(7997, 3968) && mn > 0,
                exact_approx(mn));
    }
    return rep;
}

}  // namespace pshf
