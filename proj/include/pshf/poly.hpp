#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pshf/monomial.hpp"
#include "pshf/rational.hpp"

namespace pshf {

// Sparse multivariate polynomial with exact coefficients (Rat or GaussQ).
// Terms are kept in graded-lex descending order with no zero coefficients,
// so equality is plain term-list equality.
template <class C>
class Poly {
public:
    using Term = std::pair<Monomial, C>;

    Poly() = default;
    explicit Poly(int nvars) : nvars_(check_nvars(nvars)) {}

    static Poly zero(int nvars) { return Poly(nvars); }

    static Poly constant(int nvars, C c) {
        Poly p(nvars);
        if (!coeff::is_zero(c)) p.t_.emplace_back(Monomial::one(), std::move(c));
        return p;
    }

    static Poly one(int nvars) { return constant(nvars, C(1)); }

    static Poly variable(int nvars, int i, int e = 1) {
        if (i < 0 || i >= nvars) throw MathError("variable index out of range");
        Poly p(nvars);
        if (e == 0) return one(nvars);
        p.t_.emplace_back(Monomial::var(i, e), C(1));
        return p;
    }

    static Poly monomial(int nvars, Monomial m, C c) {
        Poly p(nvars);
        if (!coeff::is_zero(c)) p.t_.emplace_back(m, std::move(c));
        return p;
    }

    // Takes arbitrary (monomial, coefficient) pairs; collects duplicates.
    static Poly from_terms(int nvars, std::vector<Term> terms) {
        Poly p(nvars);
        p.t_ = std::move(terms);
        p.normalize();
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t term_count() const { return t_.size(); }
    const std::vector<Term>& terms() const { return t_; }

    int degree() const { return t_.empty() ? -1 : t_.front().first.degree(); }

    bool is_homogeneous() const {
        if (t_.empty()) return true;
        const int d = t_.front().first.degree();
        for (const auto& [m, c] : t_)
            if (m.degree() != d) return false;
        return true;
    }

    const Term& leading_term() const {
        if (t_.empty()) throw MathError("leading term of zero polynomial");
        return t_.front();
    }

    C coeff_of(const Monomial& m) const {
        auto it = std::lower_bound(t_.begin(), t_.end(), m,
                                   [](const Term& t, const Monomial& k) { return t.first > k; });
        if (it != t_.end() && it->first == m) return it->second;
        return C{};
    }

    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.front().first.is_one()); }

    Poly operator-() const {
        Poly r = *this;
        for (auto& [m, c] : r.t_) c = -c;
        return r;
    }

    Poly& operator+=(const Poly& o) { return *this = merged(o, false); }
    Poly& operator-=(const Poly& o) { return *this = merged(o, true); }
    friend Poly operator+(const Poly& a, const Poly& b) { return a.merged(b, false); }
    friend Poly operator-(const Poly& a, const Poly& b) { return a.merged(b, true); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check_same(b);
        Poly r(a.nvars_);
        if (a.t_.empty() || b.t_.empty()) return r;
        if (a.t_.size() == 1) return b.scaled_by_term(a.t_.front());
        if (b.t_.size() == 1) return a.scaled_by_term(b.t_.front());
        if constexpr (std::is_same_v<C, Rat>) {
            return mul_int_scaled(a, b);
        } else if constexpr (std::is_same_v<C, GaussQ>) {
            return mul_int_scaled_gauss(a, b);
        } else {
            std::unordered_map<Monomial, C, MonomialHash> acc;
            acc.reserve(a.t_.size() * 2 + b.t_.size());
            for (const auto& [ma, ca] : a.t_)
                for (const auto& [mb, cb] : b.t_) acc[ma * mb] += ca * cb;
            r.t_.reserve(acc.size());
            for (auto& [m, c] : acc)
                if (!coeff::is_zero(c)) r.t_.emplace_back(m, std::move(c));
            std::sort(r.t_.begin(), r.t_.end(),
                      [](const Term& x, const Term& y) { return x.first > y.first; });
            return r;
        }
    }

    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(const C& c) const {
        if (coeff::is_zero(c)) return Poly(nvars_);
        Poly r = *this;
        for (auto& [m, a] : r.t_) a = a * c;
        return r;
    }

    Poly pow(int e) const {
        if (e < 0) throw MathError("negative polynomial power");
        Poly r = one(nvars_);
        Poly base = *this;
        while (e > 0) {
            if (e & 1) r = r * base;
            base = e > 1 ? base * base : base;
            e >>= 1;
        }
        return r;
    }

    Poly derivative(int var) const {
        Poly r(nvars_);
        r.t_.reserve(t_.size());
        for (const auto& [m, c] : t_) {
            const int e = m.exp(var);
            if (e == 0) continue;
            Monomial d = m;
            d.set_exp(var, e - 1);
            r.t_.emplace_back(d, c * C(e));
        }
        r.normalize();
        return r;
    }

    // Replaces every variable by its image; all images share one ambient ring.
    Poly substitute(const std::vector<Poly>& images) const {
        if (static_cast<int>(images.size()) != nvars_)
            throw MathError("substitute: image count mismatch");
        const int out_vars = images.empty() ? nvars_ : images[0].nvars();
        for (const auto& im : images) im.check_nvars_eq(out_vars);
        // Cache powers per variable up to the max exponent used.
        std::vector<std::vector<Poly>> pw(nvars_);
        for (int v = 0; v < nvars_; ++v) {
            int mx = 0;
            for (const auto& [m, c] : t_) mx = std::max(mx, m.exp(v));
            pw[v].push_back(one(out_vars));
            for (int e = 1; e <= mx; ++e) pw[v].push_back(pw[v].back() * images[v]);
        }
        Poly r(out_vars);
        for (const auto& [m, c] : t_) {
            Poly term = constant(out_vars, c);
            for (int v = 0; v < nvars_; ++v)
                if (int e = m.exp(v); e > 0) term = term * pw[v][e];
            r += term;
        }
        return r;
    }

    template <class V>
    V eval(std::span<const V> x) const {
        if (static_cast<int>(x.size()) != nvars_) throw MathError("eval: point length mismatch");
        V acc{};
        for (const auto& [m, c] : t_) {
            V t = coeff_cast<V>(c);
            for (int v = 0; v < nvars_; ++v)
                for (int e = m.exp(v); e > 0; --e) t = t * x[v];
            acc = acc + t;
        }
        return acc;
    }

    C eval_exact(const std::vector<C>& x) const { return eval<C>(std::span<const C>(x)); }

    double eval_double(std::span<const double> x) const { return eval<double>(x); }

    // Single-divisor division: *this = q*g + r where no term of r is
    // divisible by the leading term of g.
    std::pair<Poly, Poly> divmod(const Poly& g) const {
        check_same(g);
        if (g.is_zero()) throw MathError("division by zero polynomial");
        const auto& [gm, gc] = g.leading_term();
        Poly q(nvars_), rem(nvars_), f = *this;
        while (!f.is_zero()) {
            const auto& [fm, fc] = f.leading_term();
            if (gm.divides(fm)) {
                Term t{fm / gm, fc / gc};
                q.t_.push_back(t);
                f -= g.scaled_by_term(t);
            } else {
                rem.t_.push_back(f.t_.front());
                f.t_.erase(f.t_.begin());
            }
        }
        q.normalize();
        rem.normalize();
        return {std::move(q), std::move(rem)};
    }

    Poly divide_exact(const Poly& g) const {
        auto [q, r] = divmod(g);
        if (!r.is_zero()) throw MathError("inexact polynomial division");
        return q;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.nvars_ == b.nvars_ && a.t_ == b.t_;
    }

    std::string str() const {
        if (t_.empty()) return "0";
        std::string s;
        for (const auto& [m, c] : t_) {
            if (!s.empty()) s += " + ";
            s += "(" + coeff::str(c) + ")";
            if (!m.is_one()) s += "*" + m.str(nvars_);
        }
        return s;
    }

private:
    static int check_nvars(int n) {
        if (n < 0 || n > Monomial::kMaxVars) throw MathError("unsupported variable count");
        return n;
    }
    void check_same(const Poly& o) const {
        if (nvars_ != o.nvars_) throw MathError("variable count mismatch");
    }
    void check_nvars_eq(int n) const {
        if (nvars_ != n) throw MathError("variable count mismatch");
    }

    template <class V>
    static V coeff_cast(const C& c) {
        if constexpr (std::is_same_v<V, C>)
            return c;
        else
            return V(rat_to_double(c));  // only Rat -> double is used
    }

    Poly scaled_by_term(const Term& t) const {
        Poly r(nvars_);
        if (coeff::is_zero(t.second)) return r;
        r.t_.reserve(t_.size());
        for (const auto& [m, c] : t_) {
            C v = c * t.second;
            if (!coeff::is_zero(v)) r.t_.emplace_back(m * t.first, std::move(v));
        }
        return r;
    }

    // Multiplication over an integer-scaled image: write a = A / da with A an
    // integer-coefficient polynomial, likewise b, accumulate A*B with plain
    // mpz addmul (no per-term gcd), and canonicalize once per result term.
    static Poly mul_int_scaled(const Poly& a, const Poly& b) {
        mpz_class da = 1, db = 1;
        for (const auto& [m, c] : a.t_) mpz_lcm(da.get_mpz_t(), da.get_mpz_t(), c.get_den().get_mpz_t());
        for (const auto& [m, c] : b.t_) mpz_lcm(db.get_mpz_t(), db.get_mpz_t(), c.get_den().get_mpz_t());
        std::vector<mpz_class> za, zb;
        za.reserve(a.t_.size());
        zb.reserve(b.t_.size());
        for (const auto& [m, c] : a.t_) za.push_back(c.get_num() * (da / c.get_den()));
        for (const auto& [m, c] : b.t_) zb.push_back(c.get_num() * (db / c.get_den()));
        std::unordered_map<Monomial, mpz_class, MonomialHash> acc;
        acc.reserve(a.t_.size() * 2 + b.t_.size());
        for (std::size_t i = 0; i < a.t_.size(); ++i) {
            const Monomial& ma = a.t_[i].first;
            for (std::size_t j = 0; j < b.t_.size(); ++j) {
                mpz_class& slot = acc[ma * b.t_[j].first];
                mpz_addmul(slot.get_mpz_t(), za[i].get_mpz_t(), zb[j].get_mpz_t());
            }
        }
        const mpz_class den = da * db;
        Poly r(a.nvars_);
        r.t_.reserve(acc.size());
        for (auto& [m, z] : acc) {
            if (z == 0) continue;
            Rat c(std::move(z), den);
            c.canonicalize();
            r.t_.emplace_back(m, std::move(c));
        }
        std::sort(r.t_.begin(), r.t_.end(), [](const Term& x, const Term& y) { return x.first > y.first; });
        return r;
    }

    static Poly mul_int_scaled_gauss(const Poly& a, const Poly& b) {
        mpz_class da = 1, db = 1;
        auto lcm_in = [](mpz_class& acc, const GaussQ& c) {
            mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), c.re.get_den().get_mpz_t());
            mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), c.im.get_den().get_mpz_t());
        };
        for (const auto& [m, c] : a.t_) lcm_in(da, c);
        for (const auto& [m, c] : b.t_) lcm_in(db, c);
        struct Z2 {
            mpz_class re, im;
        };
        auto scale = [](const GaussQ& c, const mpz_class& d) {
            return Z2{c.re.get_num() * (d / c.re.get_den()), c.im.get_num() * (d / c.im.get_den())};
        };
        std::vector<Z2> za, zb;
        za.reserve(a.t_.size());
        zb.reserve(b.t_.size());
        for (const auto& [m, c] : a.t_) za.push_back(scale(c, da));
        for (const auto& [m, c] : b.t_) zb.push_back(scale(c, db));
        std::unordered_map<Monomial, Z2, MonomialHash> acc;
        acc.reserve(a.t_.size() * 2 + b.t_.size());
        for (std::size_t i = 0; i < a.t_.size(); ++i) {
            const Monomial& ma = a.t_[i].first;
            for (std::size_t j = 0; j < b.t_.size(); ++j) {
                Z2& slot = acc[ma * b.t_[j].first];
                // (ar + i ai)(br + i bi)
                mpz_addmul(slot.re.get_mpz_t(), za[i].re.get_mpz_t(), zb[j].re.get_mpz_t());
                mpz_submul(slot.re.get_mpz_t(), za[i].im.get_mpz_t(), zb[j].im.get_mpz_t());
                mpz_addmul(slot.im.get_mpz_t(), za[i].re.get_mpz_t(), zb[j].im.get_mpz_t());
                mpz_addmul(slot.im.get_mpz_t(), za[i].im.get_mpz_t(), zb[j].re.get_mpz_t());
            }
        }
        const mpz_class den = da * db;
        Poly r(a.nvars_);
        r.t_.reserve(acc.size());
        for (auto& [m, z] : acc) {
            if (z.re == 0 && z.im == 0) continue;
            Rat cre(std::move(z.re), den), cim(std::move(z.im), den);
            cre.canonicalize();
            cim.canonicalize();
            r.t_.emplace_back(m, GaussQ(std::move(cre), std::move(cim)));
        }
        std::sort(r.t_.begin(), r.t_.end(), [](const Term& x, const Term& y) { return x.first > y.first; });
        return r;
    }

    // Merge-add of two sorted term lists.
    Poly merged(const Poly& o, bool subtract) const {
        check_same(o);
        Poly r(nvars_);
        r.t_.reserve(t_.size() + o.t_.size());
        auto a = t_.begin(), b = o.t_.begin();
        while (a != t_.end() || b != o.t_.end()) {
            if (b == o.t_.end() || (a != t_.end() && a->first > b->first)) {
                r.t_.push_back(*a++);
            } else if (a == t_.end() || b->first > a->first) {
                r.t_.emplace_back(b->first, subtract ? -b->second : b->second);
                ++b;
            } else {
                C c = subtract ? C(a->second - b->second) : C(a->second + b->second);
                if (!coeff::is_zero(c)) r.t_.emplace_back(a->first, std::move(c));
                ++a, ++b;
            }
        }
        return r;
    }

    void normalize() {
        std::sort(t_.begin(), t_.end(), [](const Term& x, const Term& y) { return x.first > y.first; });
        std::vector<Term> out;
        out.reserve(t_.size());
        for (auto& t : t_) {
            if (!out.empty() && out.back().first == t.first)
                out.back().second += t.second;
            else
                out.push_back(std::move(t));
        }
        std::erase_if(out, [](const Term& t) { return coeff::is_zero(t.second); });
        t_ = std::move(out);
    }

    int nvars_ = 0;
    std::vector<Term> t_;
};

using RationalPoly = Poly<Rat>;

// Flattened double-precision evaluator for hot sampling loops.
struct CompiledPoly {
    struct Term {
        double c;
        std::uint8_t e[Monomial::kMaxVars];
    };
    int nvars = 0;
    std::vector<Term> terms;

    static CompiledPoly from(const RationalPoly& p) {
        CompiledPoly cp;
        cp.nvars = p.nvars();
        cp.terms.reserve(p.term_count());
        for (const auto& [m, c] : p.terms()) {
            Term t{};
            t.c = rat_to_double(c);
            for (int v = 0; v < cp.nvars; ++v) t.e[v] = static_cast<std::uint8_t>(m.exp(v));
            cp.terms.push_back(t);
        }
        return cp;
    }

    double eval(const double* x) const {
        double acc = 0.0;
        for (const auto& t : terms) {
            double v = t.c;
            for (int i = 0; i < nvars; ++i) {
                double b = x[i];
                for (int e = t.e[i]; e > 0; --e) v *= b;
            }
            acc += v;
        }
        return acc;
    }

    double max_abs_coeff() const {
        double m = 0.0;
        for (const auto& t : terms) m = std::max(m, std::abs(t.c));
        return m;
    }
};

}  // namespace pshf
