#include "pshf/bivariate.hpp"

#include "pshf/cpoly.hpp"

namespace pshf {

BivariatePoly::BivariatePoly(RationalPoly p) : p_(std::move(p)) {
    if (p_.nvars() != 2) throw MathError("bivariate polynomial must have 2 variables");
}

BivariatePoly BivariatePoly::u() { return BivariatePoly(RationalPoly::variable(2, 0)); }
BivariatePoly BivariatePoly::v() { return BivariatePoly(RationalPoly::variable(2, 1)); }

BivariatePoly BivariatePoly::p21() {
    auto U = u(), V = v();
    return U * U * V + U * V * V;
}

BivariatePoly BivariatePoly::p315() {
    auto U = u(), V = v();
    return U * U * U * V + (U * U * V * V).scaled(5) + U * V * V * V;
}

BivariatePoly BivariatePoly::hessian_det() const {
    const BivariatePoly uu = partial_u().partial_u();
    const BivariatePoly vv = partial_v().partial_v();
    const BivariatePoly uv = partial_u().partial_v();
    return uu * vv - uv * uv;
}

RationalPoly BivariatePoly::compose(const RationalPoly& f, const RationalPoly& g) const {
    return p_.substitute({f, g});
}

Rat BivariatePoly::eval(const Rat& uu, const Rat& vv) const {
    return p_.eval_exact({uu, vv});
}

Rat BivariatePoly::coeff(int eu, int ev) const {
    Monomial m;
    m.set_exp(0, eu);
    m.set_exp(1, ev);
    return p_.coeff_of(m);
}

BivariatePoly BivariatePoly::from_json(const nlohmann::json& j) {
    return BivariatePoly(poly_from_json(j, 2));
}

nlohmann::ordered_json BivariatePoly::to_json() const { return poly_to_json(p_); }

namespace {

template <class C>
nlohmann::ordered_json terms_to_json(const Poly<C>& p) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& [m, c] : p.terms()) {
        nlohmann::ordered_json t;
        t["exps"] = m.exps(p.nvars());
        if constexpr (std::is_same_v<C, Rat>) {
            t["re"] = rat_str(c);
            t["im"] = "0";
        } else {
            t["re"] = rat_str(c.re);
            t["im"] = rat_str(c.im);
        }
        out.push_back(t);
    }
    return out;
}

}  // namespace

nlohmann::ordered_json poly_to_json(const RationalPoly& p) { return terms_to_json(p); }
nlohmann::ordered_json poly_to_json(const Poly<GaussQ>& p) { return terms_to_json(p); }

RationalPoly poly_from_json(const nlohmann::json& j, int nvars) {
    if (!j.is_array()) throw SpecError("polynomial JSON must be a list of terms");
    std::vector<RationalPoly::Term> terms;
    for (const auto& t : j) {
        const auto exps = t.at("exps").get<std::vector<int>>();
        if (static_cast<int>(exps.size()) != nvars)
            throw SpecError("polynomial term has wrong exponent count");
        Monomial m;
        for (int i = 0; i < nvars; ++i) m.set_exp(i, exps[i]);
        Rat re = t.contains("re") ? (t.at("re").is_string() ? parse_rat(t.at("re").get<std::string>())
                                                            : Rat(t.at("re").get<long>()))
                                  : Rat(0);
        if (t.contains("im")) {
            Rat im = t.at("im").is_string() ? parse_rat(t.at("im").get<std::string>())
                                            : Rat(t.at("im").get<long>());
            if (im != 0) throw SpecError("expected a real polynomial (im = 0)");
        }
        terms.emplace_back(m, re);
    }
    return RationalPoly::from_terms(nvars, std::move(terms));
}

}  // namespace pshf
