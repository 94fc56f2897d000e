#pragma once

#include "pshf/poly.hpp"

namespace pshf {

// Polynomial with Gaussian-rational coefficients; conjugation and the
// Wirtinger operators live here. Real/imaginary parts are recoverable as
// RationalPoly values.
using ComplexPoly = Poly<GaussQ>;

inline ComplexPoly complexify(const RationalPoly& p) {
    std::vector<ComplexPoly::Term> t;
    t.reserve(p.term_count());
    for (const auto& [m, c] : p.terms()) t.emplace_back(m, GaussQ(c));
    return ComplexPoly::from_terms(p.nvars(), std::move(t));
}

inline ComplexPoly make_complex(const RationalPoly& re, const RationalPoly& im) {
    std::vector<ComplexPoly::Term> t;
    for (const auto& [m, c] : re.terms()) t.emplace_back(m, GaussQ(c));
    for (const auto& [m, c] : im.terms()) t.emplace_back(m, GaussQ(Rat(0), c));
    return ComplexPoly::from_terms(re.nvars(), std::move(t));
}

inline RationalPoly real_part(const ComplexPoly& p) {
    std::vector<RationalPoly::Term> t;
    for (const auto& [m, c] : p.terms())
        if (c.re != 0) t.emplace_back(m, c.re);
    return RationalPoly::from_terms(p.nvars(), std::move(t));
}

inline RationalPoly imag_part(const ComplexPoly& p) {
    std::vector<RationalPoly::Term> t;
    for (const auto& [m, c] : p.terms())
        if (c.im != 0) t.emplace_back(m, c.im);
    return RationalPoly::from_terms(p.nvars(), std::move(t));
}

inline ComplexPoly conj(const ComplexPoly& p) {
    std::vector<ComplexPoly::Term> t;
    t.reserve(p.term_count());
    for (const auto& [m, c] : p.terms()) t.emplace_back(m, c.conj());
    return ComplexPoly::from_terms(p.nvars(), std::move(t));
}

inline ComplexPoly scale_i(const ComplexPoly& p) { return p.scaled(GaussQ(Rat(0), Rat(1))); }

// Wirtinger derivatives in 2n real variables ordered (x_1..x_n, y_1..y_n):
//   d/dz_j = (d/dx_j - i d/dy_j)/2,   d/dzbar_j = (d/dx_j + i d/dy_j)/2,
// with j zero-based here.
enum class Wirt { dz, dzbar };

inline ComplexPoly wirtinger(const ComplexPoly& p, int j, Wirt kind) {
    const int nv = p.nvars();
    if (nv % 2 != 0) throw MathError("wirtinger: odd variable count");
    const int n = nv / 2;
    if (j < 0 || j >= n) throw MathError("wirtinger: index out of range");
    const ComplexPoly px = p.derivative(j);
    const ComplexPoly py = p.derivative(n + j);
    const GaussQ half(make_rat(1, 2));
    const GaussQ half_i = kind == Wirt::dz ? GaussQ(Rat(0), make_rat(-1, 2)) : GaussQ(Rat(0), make_rat(1, 2));
    return px.scaled(half) + py.scaled(half_i);
}

inline ComplexPoly wirtinger(const RationalPoly& p, int j, Wirt kind) {
    return wirtinger(complexify(p), j, kind);
}

// Entry (j,k) of the complex Hessian: d^2 f / dz_j dzbar_k.
inline ComplexPoly hessian_entry(const RationalPoly& f, int j, int k) {
    return wirtinger(wirtinger(f, k, Wirt::dzbar), j, Wirt::dz);
}

inline RationalPoly norm_sq(const ComplexPoly& p) {
    RationalPoly r = real_part(p), i = imag_part(p);
    return r * r + i * i;
}

}  // namespace pshf
