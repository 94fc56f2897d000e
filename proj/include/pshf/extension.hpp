#pragma once

#include <array>
#include <optional>
#include <string>

#include "pshf/poly.hpp"

namespace pshf {

// Abstract variables of the square-root extension ring. The intended
// bindings are u = d_M, v = d_N, p = d_{M,r}, q = d_{N,r}, and s, m, w
// adjoined roots whose squares are fixed by the ring's relation set.
enum ExtVar : int { EU = 0, EV = 1, EP = 2, EQ = 3, ES = 4, EM = 5, EW = 6 };
inline constexpr int kExtVars = 7;

// Relation set: for each variable optionally the polynomial its square
// reduces to. Relation right-hand sides must be free of bound variables,
// which makes the rewrite confluent (normal forms carry exponent <= 1 on
// every bound variable).
class ExtensionRing {
public:
    ExtensionRing() = default;

    ExtensionRing& bind_square(ExtVar var, RationalPoly square);

    bool bound(int var) const { return square_of_[var].has_value(); }

    RationalPoly reduce(const RationalPoly& p) const;

    // s^2 = p*q
    static ExtensionRing sqrt_pq();
    // m^2 = p, w^2 = q  (roots of d_{M,r}, d_{N,r}; m*w plays sqrt(pq))
    static ExtensionRing roots_pq();
    // m^2 = u, w^2 = v  (roots of d_M, d_N)
    static ExtensionRing roots_uv();

private:
    std::array<std::optional<RationalPoly>, kExtVars> square_of_;
};

// Element of the extension ring, kept reduced at all times.
class ExtensionPoly {
public:
    ExtensionPoly(const ExtensionRing& ring, RationalPoly value)
        : ring_(&ring), v_(ring.reduce(std::move(value))) {}

    static ExtensionPoly var(const ExtensionRing& ring, ExtVar x) {
        return {ring, RationalPoly::variable(kExtVars, x)};
    }
    static ExtensionPoly constant(const ExtensionRing& ring, const Rat& c) {
        return {ring, RationalPoly::constant(kExtVars, c)};
    }

    const RationalPoly& value() const { return v_; }
    bool is_zero() const { return v_.is_zero(); }

    friend ExtensionPoly operator+(const ExtensionPoly& a, const ExtensionPoly& b) {
        a.check(b);
        return {*a.ring_, a.v_ + b.v_};
    }
    friend ExtensionPoly operator-(const ExtensionPoly& a, const ExtensionPoly& b) {
        a.check(b);
        return {*a.ring_, a.v_ - b.v_};
    }
    friend ExtensionPoly operator*(const ExtensionPoly& a, const ExtensionPoly& b) {
        a.check(b);
        return {*a.ring_, a.v_ * b.v_};
    }
    ExtensionPoly scaled(const Rat& c) const { return {*ring_, v_.scaled(c)}; }
    ExtensionPoly pow(int e) const { return {*ring_, v_.pow(e)}; }
    friend bool operator==(const ExtensionPoly& a, const ExtensionPoly& b) {
        return a.v_ == b.v_;
    }
    std::string str() const { return v_.str(); }

private:
    void check(const ExtensionPoly& o) const {
        if (ring_ != o.ring_) throw MathError("extension ring mismatch");
    }
    const ExtensionRing* ring_;
    RationalPoly v_;
};

}  // namespace pshf
