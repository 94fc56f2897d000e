#pragma once

#include <string>

#include "pshf/poly.hpp"

#include <json.hpp>

namespace pshf {

// Polynomial in the two abstract variables (u, v); u is variable 0.
class BivariatePoly {
public:
    BivariatePoly() : p_(RationalPoly::zero(2)) {}
    explicit BivariatePoly(RationalPoly p);

    static BivariatePoly u();
    static BivariatePoly v();
    static BivariatePoly constant(const Rat& c) { return BivariatePoly(RationalPoly::constant(2, c)); }
    // The two polynomials used throughout: u^2 v + u v^2 and u^3 v + 5 u^2 v^2 + u v^3.
    static BivariatePoly p21();
    static BivariatePoly p315();

    const RationalPoly& poly() const { return p_; }
    bool is_zero() const { return p_.is_zero(); }
    int degree() const { return p_.degree(); }
    bool is_homogeneous() const { return p_.is_homogeneous(); }

    BivariatePoly partial_u() const { return BivariatePoly(p_.derivative(0)); }
    BivariatePoly partial_v() const { return BivariatePoly(p_.derivative(1)); }

    // det of [[P_uu, P_uv], [P_uv, P_vv]].
    BivariatePoly hessian_det() const;

    // P(f, g) in the ambient ring of f and g.
    RationalPoly compose(const RationalPoly& f, const RationalPoly& g) const;

    Rat eval(const Rat& uu, const Rat& vv) const;

    Rat coeff(int eu, int ev) const;

    friend BivariatePoly operator+(const BivariatePoly& a, const BivariatePoly& b) { return BivariatePoly(a.p_ + b.p_); }
    friend BivariatePoly operator-(const BivariatePoly& a, const BivariatePoly& b) { return BivariatePoly(a.p_ - b.p_); }
    friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) { return BivariatePoly(a.p_ * b.p_); }
    BivariatePoly scaled(const Rat& c) const { return BivariatePoly(p_.scaled(c)); }
    friend bool operator==(const BivariatePoly& a, const BivariatePoly& b) { return a.p_ == b.p_; }

    static BivariatePoly from_json(const nlohmann::json& j);
    nlohmann::ordered_json to_json() const;
    std::string str() const { return p_.str(); }

private:
    RationalPoly p_;
};

// Polynomial serialization shared by all exact polynomial types:
// a JSON list of {"exps": [...], "re": "p/q", "im": "p/q"}.
nlohmann::ordered_json poly_to_json(const RationalPoly& p);
nlohmann::ordered_json poly_to_json(const Poly<GaussQ>& p);
RationalPoly poly_from_json(const nlohmann::json& j, int nvars);

}  // namespace pshf
