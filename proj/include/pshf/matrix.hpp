#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "pshf/rational.hpp"

namespace pshf {

using RatVec = std::vector<Rat>;

inline Rat dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw MathError("dot: length mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Dense exact rational matrix.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    static RatMatrix identity(int n) {
        RatMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }

    Rat& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
    const Rat& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * c_ + j]; }

    RatMatrix transposed() const {
        RatMatrix t(c_, r_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
        if (a.c_ != b.r_) throw MathError("matrix product shape mismatch");
        RatMatrix m(a.r_, b.c_);
        for (int i = 0; i < a.r_; ++i)
            for (int k = 0; k < a.c_; ++k) {
                const Rat& aik = a(i, k);
                if (aik == 0) continue;
                for (int j = 0; j < b.c_; ++j) {
                    if (b(k, j) == 0) continue;
                    m(i, j) += aik * b(k, j);
                }
            }
        return m;
    }

    friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
        if (a.r_ != b.r_ || a.c_ != b.c_) throw MathError("matrix sum shape mismatch");
        RatMatrix m = a;
        for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] += b.a_[i];
        return m;
    }

    friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
        if (a.r_ != b.r_ || a.c_ != b.c_) throw MathError("matrix diff shape mismatch");
        RatMatrix m = a;
        for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] -= b.a_[i];
        return m;
    }

    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }

    RatMatrix scaled(const Rat& s) const {
        RatMatrix m = *this;
        for (auto& x : m.a_) x *= s;
        return m;
    }

    Rat trace() const {
        Rat t = 0;
        for (int i = 0; i < std::min(r_, c_); ++i) t += (*this)(i, i);
        return t;
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (x != 0) return false;
        return true;
    }

    Rat max_abs_entry() const {
        Rat m = 0;
        for (const auto& x : a_)
            if (abs(x) > m) m = abs(x);
        return m;
    }

    RatVec row(int i) const {
        RatVec v(c_);
        for (int j = 0; j < c_; ++j) v[j] = (*this)(i, j);
        return v;
    }

    RatVec apply(const RatVec& x) const {
        if (static_cast<int>(x.size()) != c_) throw MathError("apply: length mismatch");
        RatVec y(r_);
        for (int i = 0; i < r_; ++i) {
            Rat s = 0;
            for (int j = 0; j < c_; ++j) s += (*this)(i, j) * x[j];
            y[i] = s;
        }
        return y;
    }

    int rank() const {
        RatMatrix m = *this;
        return m.rref();
    }

    // Kernel basis from the reduced row echelon form, one vector per free
    // column, in ascending free-column order.
    std::vector<RatVec> nullspace() const {
        RatMatrix m = *this;
        m.rref();
        std::vector<int> pivot_col;
        {
            int row = 0;
            for (int j = 0; j < c_ && row < r_; ++j)
                if (m(row, j) == 1) {
                    bool is_pivot = true;
                    for (int jj = 0; jj < j; ++jj)
                        if (m(row, jj) != 0) is_pivot = false;
                    if (is_pivot) {
                        pivot_col.push_back(j);
                        ++row;
                    }
                }
        }
        std::vector<bool> is_piv(c_, false);
        for (int j : pivot_col) is_piv[j] = true;
        std::vector<RatVec> basis;
        for (int j = 0; j < c_; ++j) {
            if (is_piv[j]) continue;
            RatVec v(c_);
            v[j] = 1;
            for (std::size_t pi = 0; pi < pivot_col.size(); ++pi) v[pivot_col[pi]] = -m(static_cast<int>(pi), j);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    // Solves A x = b for square invertible A.
    RatVec solve(const RatVec& b) const {
        if (r_ != c_ || static_cast<int>(b.size()) != r_) throw MathError("solve: shape mismatch");
        RatMatrix m(r_, c_ + 1);
        for (int i = 0; i < r_; ++i) {
            for (int j = 0; j < c_; ++j) m(i, j) = (*this)(i, j);
            m(i, c_) = b[i];
        }
        if (m.rref() != r_) throw MathError("solve: singular matrix");
        RatVec x(r_);
        for (int i = 0; i < r_; ++i) x[i] = m(i, c_);
        return x;
    }

    Rat det() const {
        if (r_ != c_) throw MathError("det: not square");
        RatMatrix m = *this;
        Rat d = 1;
        for (int col = 0; col < c_; ++col) {
            int piv = -1;
            for (int i = col; i < r_; ++i)
                if (m(i, col) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return 0;
            if (piv != col) {
                for (int j = 0; j < c_; ++j) std::swap(m(piv, j), m(col, j));
                d = -d;
            }
            d *= m(col, col);
            const Rat inv = 1 / m(col, col);
            for (int i = col + 1; i < r_; ++i) {
                if (m(i, col) == 0) continue;
                const Rat f = m(i, col) * inv;
                for (int j = col; j < c_; ++j) m(i, j) -= f * m(col, j);
            }
        }
        return d;
    }

    RatMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
        RatMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols.size(); ++j) m(static_cast<int>(i), static_cast<int>(j)) = (*this)(rows[i], cols[j]);
        return m;
    }

    Rat principal_minor(const std::vector<int>& idx) const { return submatrix(idx, idx).det(); }

private:
    // In-place reduced row echelon form; returns rank.
    int rref() {
        int row = 0;
        for (int col = 0; col < c_ && row < r_; ++col) {
            int piv = -1;
            for (int i = row; i < r_; ++i)
                if ((*this)(i, col) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) continue;
            if (piv != row)
                for (int j = 0; j < c_; ++j) std::swap((*this)(piv, j), (*this)(row, j));
            const Rat inv = 1 / (*this)(row, col);
            for (int j = col; j < c_; ++j) (*this)(row, j) *= inv;
            for (int i = 0; i < r_; ++i) {
                if (i == row || (*this)(i, col) == 0) continue;
                const Rat f = (*this)(i, col);
                for (int j = col; j < c_; ++j) (*this)(i, j) -= f * (*this)(row, j);
            }
            ++row;
        }
        return row;
    }

    int r_ = 0, c_ = 0;
    std::vector<Rat> a_;
};

// Cyclic Jacobi eigenvalues of a real symmetric matrix (row-major, n x n).
inline std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n) {
    auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += at(i, j) * at(i, j);
        if (off < 1e-28) break;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                if (std::abs(at(p, q)) < 1e-300) continue;
                const double theta = (at(q, q) - at(p, p)) / (2.0 * at(p, q));
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
    }
    std::vector<double> ev(n);
    for (int i = 0; i < n; ++i) ev[i] = at(i, i);
    std::sort(ev.begin(), ev.end());
    return ev;
}

// Eigenvalues of a Hermitian matrix via the real symmetric embedding
// [[Re, -Im], [Im, Re]]; each eigenvalue of H appears twice.
inline std::vector<double> hermitian_eigenvalues(const std::vector<double>& re,
                                                 const std::vector<double>& im, int n) {
    const int m = 2 * n;
    std::vector<double> a(static_cast<std::size_t>(m) * m, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double r = re[static_cast<std::size_t>(i) * n + j];
            const double s = im[static_cast<std::size_t>(i) * n + j];
            a[static_cast<std::size_t>(i) * m + j] = r;
            a[static_cast<std::size_t>(i + n) * m + (j + n)] = r;
            a[static_cast<std::size_t>(i) * m + (j + n)] = -s;
            a[static_cast<std::size_t>(i + n) * m + j] = s;
        }
    auto ev = symmetric_eigenvalues(std::move(a), m);
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = ev[static_cast<std::size_t>(2 * i)];
    return out;
}

}  // namespace pshf
