#include "pshf/extension.hpp"

namespace pshf {

ExtensionRing& ExtensionRing::bind_square(ExtVar var, RationalPoly square) {
    if (square.nvars() != kExtVars) throw MathError("relation polynomial must live in the extension ring");
    for (int v = 0; v < kExtVars; ++v)
        if (bound(v))
            for (const auto& [m, c] : square.terms())
                if (m.exp(v) > 0) throw MathError("relation right-hand side contains a bound variable");
    // Also forbid binding a variable used in an existing relation RHS.
    for (int v = 0; v < kExtVars; ++v)
        if (square_of_[v])
            for (const auto& [m, c] : square_of_[v]->terms())
                if (m.exp(var) > 0) throw MathError("variable already appears in a relation");
    square_of_[var] = std::move(square);
    return *this;
}

RationalPoly ExtensionRing::reduce(const RationalPoly& p) const {
    if (p.nvars() != kExtVars) throw MathError("extension reduce: wrong variable count");
    RationalPoly out = RationalPoly::zero(kExtVars);
    for (const auto& [m, c] : p.terms()) {
        RationalPoly term = RationalPoly::constant(kExtVars, c);
        Monomial residual;
        for (int v = 0; v < kExtVars; ++v) {
            const int e = m.exp(v);
            if (e == 0) continue;
            if (square_of_[v]) {
                if (e >= 2) term = term * square_of_[v]->pow(e / 2);
                if (e % 2) residual.set_exp(v, 1);
            } else {
                residual.set_exp(v, e);
            }
        }
        out += term * RationalPoly::monomial(kExtVars, residual, Rat(1));
    }
    // Relation RHS are free of bound variables, so one pass normalizes.
    for (const auto& [m, c] : out.terms())
        for (int v = 0; v < kExtVars; ++v)
            if (square_of_[v] && m.exp(v) >= 2) throw MathError("extension reduce: not confluent");
    return out;
}

ExtensionRing ExtensionRing::sqrt_pq() {
    ExtensionRing r;
    r.bind_square(ES, RationalPoly::variable(kExtVars, EP) * RationalPoly::variable(kExtVars, EQ));
    return r;
}

ExtensionRing ExtensionRing::roots_pq() {
    ExtensionRing r;
    r.bind_square(EM, RationalPoly::variable(kExtVars, EP));
    r.bind_square(EW, RationalPoly::variable(kExtVars, EQ));
    return r;
}

ExtensionRing ExtensionRing::roots_uv() {
    ExtensionRing r;
    r.bind_square(EM, RationalPoly::variable(kExtVars, EU));
    r.bind_square(EW, RationalPoly::variable(kExtVars, EV));
    return r;
}

}  // namespace pshf
