#include <doctest.h>

#include "pshf/extension.hpp"

using namespace pshf;

namespace {
RationalPoly ev(ExtVar x) { return RationalPoly::variable(kExtVars, x); }
}  // namespace

TEST_CASE("reduction is confluent: s^2 s^2 -> p^2 q^2") {
    auto ring = ExtensionRing::sqrt_pq();
    auto s4 = ExtensionPoly(ring, ev(ES).pow(4));
    CHECK(s4.value() == (ev(EP) * ev(EQ)).pow(2));
    // odd powers keep one s
    auto s3 = ExtensionPoly(ring, ev(ES).pow(3));
    CHECK(s3.value() == ev(EP) * ev(EQ) * ev(ES));
}

TEST_CASE("products reduce on the fly") {
    auto ring = ExtensionRing::sqrt_pq();
    auto s = ExtensionPoly::var(ring, ES);
    auto p = ExtensionPoly::var(ring, EP);
    auto q = ExtensionPoly::var(ring, EQ);
    CHECK(s * s == p * q);
    CHECK((s * s * s) == p * q * s);
}

TEST_CASE("roots of u and v: m^2 = u, w^2 = v, (mw)^2 = uv") {
    auto ring = ExtensionRing::roots_uv();
    auto m = ExtensionPoly::var(ring, EM);
    auto w = ExtensionPoly::var(ring, EW);
    auto u = ExtensionPoly::var(ring, EU);
    auto v = ExtensionPoly::var(ring, EV);
    CHECK(m * m == u);
    CHECK(w * w == v);
    CHECK((m * w) * (m * w) == u * v);
    // (2m - w)^2 = 4u - 4mw + v
    auto sq = (m.scaled(2) - w) * (m.scaled(2) - w);
    CHECK(sq == u.scaled(4) - (m * w).scaled(4) + v);
}

TEST_CASE("roots of p and q") {
    auto ring = ExtensionRing::roots_pq();
    auto m = ExtensionPoly::var(ring, EM);
    auto w = ExtensionPoly::var(ring, EW);
    CHECK(m * m == ExtensionPoly::var(ring, EP));
    CHECK(w * w == ExtensionPoly::var(ring, EQ));
}

TEST_CASE("binding rejects relation cycles") {
    ExtensionRing r;
    r.bind_square(ES, ev(EP) * ev(EQ));
    CHECK_THROWS_AS(r.bind_square(EM, ev(ES)), MathError);   // RHS uses a bound variable
    CHECK_THROWS_AS(r.bind_square(EP, ev(EU)), MathError);   // EP appears in an existing RHS
}

TEST_CASE("ring mismatch raises") {
    auto r1 = ExtensionRing::sqrt_pq();
    auto r2 = ExtensionRing::roots_uv();
    auto a = ExtensionPoly::var(r1, EU);
    auto b = ExtensionPoly::var(r2, EU);
    CHECK_THROWS_AS(a + b, MathError);
}
