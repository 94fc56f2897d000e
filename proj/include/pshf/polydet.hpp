#pragma once

#include <vector>

#include "pshf/poly.hpp"

namespace pshf {

// Division-free determinant by cofactor expansion with memoization over
// column subsets. Exact over any coefficient ring.
template <class C>
Poly<C> subset_expansion_det(const std::vector<Poly<C>>& m, int r) {
    if (r == 0) return Poly<C>::one(m.empty() ? 0 : m[0].nvars());
    const int nv = m[0].nvars();
    auto at = [&](int i, int j) -> const Poly<C>& { return m[static_cast<std::size_t>(i) * r + j]; };
    // minor_of[mask] = det of rows 0..popcount(mask)-1, columns in mask.
    std::vector<Poly<C>> memo(static_cast<std::size_t>(1) << r, Poly<C>::zero(nv));
    memo[0] = Poly<C>::one(nv);
    for (int mask = 1; mask < (1 << r); ++mask) {
        const int k = __builtin_popcount(static_cast<unsigned>(mask)) - 1;  // row index
        Poly<C> acc(nv);
        int sign = (k % 2 == 0) ? 1 : -1;  // (-1)^{k+t} expanding along row k
        for (int j = 0; j < r; ++j) {
            if (!(mask & (1 << j))) continue;
            const Poly<C>& e = at(k, j);
            if (!e.is_zero()) {
                Poly<C> t = e * memo[mask ^ (1 << j)];
                acc = sign > 0 ? acc + t : acc - t;
            }
            sign = -sign;
        }
        memo[mask] = std::move(acc);
    }
    return memo[(1 << r) - 1];
}

// Fraction-free (Bareiss) elimination; every division is exact in the ring.
// Falls back to the expansion above if a pivot vanishes identically.
template <class C>
Poly<C> bareiss_det(const std::vector<Poly<C>>& orig, int r) {
    if (r == 0) return Poly<C>::one(orig.empty() ? 0 : orig[0].nvars());
    const int nv = orig[0].nvars();
    std::vector<Poly<C>> m = orig;
    auto at = [&](int i, int j) -> Poly<C>& { return m[static_cast<std::size_t>(i) * r + j]; };
    Poly<C> prev = Poly<C>::one(nv);
    for (int k = 0; k + 1 < r; ++k) {
        if (at(k, k).is_zero()) return subset_expansion_det(orig, r);
        for (int i = k + 1; i < r; ++i)
            for (int j = k + 1; j < r; ++j) {
                Poly<C> num = at(k, k) * at(i, j) - at(i, k) * at(k, j);
                at(i, j) = num.divide_exact(prev);
            }
        prev = at(k, k);
    }
    return at(r - 1, r - 1);
}

}  // namespace pshf
