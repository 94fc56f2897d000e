#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "pshf/rational.hpp"

namespace pshf {

// Exponent vector packed one byte per variable, variable 0 in the most
// significant byte of `hi`. Supports up to 16 variables with individual
// exponents below 128, which covers every object in this project (total
// degrees stay <= 24 for the symbolic determinants).
struct Monomial {
    static constexpr int kMaxVars = 16;
    static constexpr std::uint64_t kHighBits = 0x8080808080808080ULL;

    std::uint64_t hi = 0, lo = 0;

    static Monomial one() { return {}; }

    static Monomial var(int i, int e = 1) {
        Monomial m;
        m.set_exp(i, e);
        return m;
    }

    int exp(int i) const {
        const std::uint64_t w = i < 8 ? hi : lo;
        return static_cast<int>((w >> (8 * (7 - (i & 7)))) & 0xff);
    }

    void set_exp(int i, int e) {
        if (i < 0 || i >= kMaxVars || e < 0 || e > 127)
            throw MathError("monomial exponent out of range");
        std::uint64_t& w = i < 8 ? hi : lo;
        const int sh = 8 * (7 - (i & 7));
        w = (w & ~(0xffULL << sh)) | (static_cast<std::uint64_t>(e) << sh);
    }

    // Byte-sum; exponents < 128 keep the SWAR multiply carry-free.
    int degree() const {
        constexpr std::uint64_t ones = 0x0101010101010101ULL;
        return static_cast<int>(((hi * ones) >> 56) + ((lo * ones) >> 56));
    }

    bool is_one() const { return hi == 0 && lo == 0; }

    bool divides(const Monomial& m) const {
        return (((m.hi - hi) | (m.lo - lo)) & kHighBits) == 0;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        return {a.hi + b.hi, a.lo + b.lo};
    }
    friend Monomial operator/(const Monomial& a, const Monomial& b) {
        return {a.hi - b.hi, a.lo - b.lo};
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    // Graded lexicographic, variable 0 most significant.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        if (int c = a.degree() - b.degree(); c != 0)
            return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        if (a.hi != b.hi) return a.hi < b.hi ? std::strong_ordering::less : std::strong_ordering::greater;
        if (a.lo != b.lo) return a.lo < b.lo ? std::strong_ordering::less : std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    std::vector<int> exps(int nvars) const {
        std::vector<int> e(nvars);
        for (int i = 0; i < nvars; ++i) e[i] = exp(i);
        return e;
    }

    std::string str(int nvars) const {
        std::string s;
        for (int i = 0; i < nvars; ++i) {
            if (int e = exp(i); e > 0) {
                if (!s.empty()) s += "*";
                s += "x" + std::to_string(i);
                if (e > 1) s += "^" + std::to_string(e);
            }
        }
        return s.empty() ? "1" : s;
    }
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const {
        std::uint64_t x = m.hi * 0x9e3779b97f4a7c15ULL ^ (m.lo + 0xbf58476d1ce4e5b9ULL);
        x ^= x >> 31;
        x *= 0x94d049bb133111ebULL;
        x ^= x >> 29;
        return static_cast<std::size_t>(x);
    }
};

}  // namespace pshf
