#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pshf {

// Thrown on malformed specs / CLI input; the CLI maps it to exit code 2.
struct SpecError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when an internal mathematical consistency check fails.
struct MathError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p/q", "p", or "-p/q" (base 10).
inline Rat parse_rat(const std::string& s) {
    if (s.empty()) throw SpecError("empty rational literal");
    Rat r;
    if (r.set_str(s, 10) != 0) throw SpecError("bad rational literal: '" + s + "'");
    if (r.get_den() == 0) throw SpecError("zero denominator: '" + s + "'");
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

// Exact conversion; every finite double is a dyadic rational.
inline Rat rat_from_double(double x) { return Rat(x); }

inline double rat_to_double(const Rat& r) { return r.get_d(); }

// Gaussian rational a + b*i.
struct GaussQ {
    Rat re, im;

    GaussQ() = default;
    GaussQ(Rat r) : re(std::move(r)) {}
    GaussQ(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    GaussQ conj() const { return {re, -im}; }

    GaussQ operator-() const { return {-re, -im}; }
    GaussQ& operator+=(const GaussQ& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussQ& operator-=(const GaussQ& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    friend GaussQ operator+(GaussQ a, const GaussQ& b) { return a += b; }
    friend GaussQ operator-(GaussQ a, const GaussQ& b) { return a -= b; }
    friend GaussQ operator*(const GaussQ& a, const GaussQ& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussQ operator/(const GaussQ& a, const GaussQ& b) {
        Rat n = b.re * b.re + b.im * b.im;
        if (n == 0) throw MathError("division by zero Gaussian rational");
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    friend bool operator==(const GaussQ& a, const GaussQ& b) { return a.re == b.re && a.im == b.im; }
};

inline std::string gq_str(const GaussQ& z) {
    if (z.im == 0) return z.re.get_str();
    return z.re.get_str() + (z.im > 0 ? "+" : "") + z.im.get_str() + "i";
}

namespace coeff {
inline bool is_zero(const Rat& c) { return c == 0; }
inline bool is_zero(const GaussQ& c) { return c.is_zero(); }
inline std::string str(const Rat& c) { return rat_str(c); }
inline std::string str(const GaussQ& c) { return gq_str(c); }
}  // namespace coeff

}  // namespace pshf
