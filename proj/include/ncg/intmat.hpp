#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ncg {

/// Dense integer matrix with arbitrary-precision entries.
class IntMat {
public:
    IntMat() = default;
    IntMat(int rows, int cols) : r_(rows), c_(cols), e_(static_cast<std::size_t>(rows) * cols) {}

    static IntMat identity(int n) {
        IntMat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }
    mpz_class& operator()(int i, int j) { return e_[static_cast<std::size_t>(i) * c_ + j]; }
    const mpz_class& operator()(int i, int j) const {
        return e_[static_cast<std::size_t>(i) * c_ + j];
    }

    friend IntMat operator*(const IntMat& a, const IntMat& b) {
        if (a.c_ != b.r_) throw std::invalid_argument("IntMat: dimension mismatch");
        IntMat r(a.r_, b.c_);
        for (int i = 0; i < a.r_; ++i)
            for (int k = 0; k < a.c_; ++k) {
                if (a(i, k) == 0) continue;
                for (int j = 0; j < b.c_; ++j) r(i, j) += a(i, k) * b(k, j);
            }
        return r;
    }
    friend bool operator==(const IntMat& a, const IntMat& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.e_ == b.e_;
    }

    IntMat transposed() const {
        IntMat t(c_, r_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    void swap_rows(int a, int b) {
        for (int j = 0; j < c_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(int a, int b) {
        for (int i = 0; i < r_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }
    void scale_row(int i, const mpz_class& s) {
        for (int j = 0; j < c_; ++j) (*this)(i, j) *= s;
    }
    void scale_col(int j, const mpz_class& s) {
        for (int i = 0; i < r_; ++i) (*this)(i, j) *= s;
    }
    void add_row(int dst, int src, const mpz_class& s) {
        for (int j = 0; j < c_; ++j) (*this)(dst, j) += s * (*this)(src, j);
    }
    void add_col(int dst, int src, const mpz_class& s) {
        for (int i = 0; i < r_; ++i) (*this)(i, dst) += s * (*this)(i, src);
    }

    std::string str() const {
        std::string s = "[";
        for (int i = 0; i < r_; ++i) {
            s += "[";
            for (int j = 0; j < c_; ++j) {
                s += (*this)(i, j).get_str();
                if (j + 1 < c_) s += ", ";
            }
            s += "]";
            if (i + 1 < r_) s += ", ";
        }
        return s + "]";
    }

private:
    int r_{0}, c_{0};
    std::vector<mpz_class> e_;
};

/// Fraction-free determinant (Bareiss).
inline mpz_class det(IntMat m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: not square");
    int n = m.rows();
    if (n == 0) return 1;
    mpz_class sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (m(i, k) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return 0;
            m.swap_rows(k, piv);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

/// Smith normal form: unimodular U, V with U*M*V = D, D diagonal with the
/// divisibility chain d_1 | d_2 | ...
struct SmithForm {
    IntMat u, d, v;
};

inline SmithForm smith_normal_form(const IntMat& m0) {
    SmithForm s{IntMat::identity(m0.rows()), m0, IntMat::identity(m0.cols())};
    IntMat& a = s.d;
    const int rows = a.rows(), cols = a.cols();
    const int steps = std::min(rows, cols);

    for (int t = 0; t < steps; ++t) {
        // locate a nonzero pivot of minimal absolute value in the trailing block
        int pi = -1, pj = -1;
        mpz_class best;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j) {
                if (a(i, j) == 0) continue;
                mpz_class v = abs(a(i, j));
                if (pi < 0 || v < best) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;  // trailing block is zero

        a.swap_rows(t, pi);
        s.u.swap_rows(t, pi);
        a.swap_cols(t, pj);
        s.v.swap_cols(t, pj);

        // clear row and column t; restart whenever a remainder shrinks the pivot
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (int i = t + 1; i < rows; ++i) {
                if (a(i, t) == 0) continue;
                mpz_class q = a(i, t) / a(t, t);  // truncated division
                a.add_row(i, t, -q);
                s.u.add_row(i, t, -q);
                if (a(i, t) != 0) {  // remainder smaller than pivot: promote it
                    a.swap_rows(t, i);
                    s.u.swap_rows(t, i);
                    dirty = true;
                }
            }
            for (int j = t + 1; j < cols; ++j) {
                if (a(t, j) == 0) continue;
                mpz_class q = a(t, j) / a(t, t);
                a.add_col(j, t, -q);
                s.v.add_col(j, t, -q);
                if (a(t, j) != 0) {
                    a.swap_cols(t, j);
                    s.v.swap_cols(t, j);
                    dirty = true;
                }
            }
        }

        // pivot must divide the trailing block for the chain to come out right
        bool retry = false;
        for (int i = t + 1; i < rows && !retry; ++i)
            for (int j = t + 1; j < cols && !retry; ++j)
                if (a(i, j) % a(t, t) != 0) {
                    a.add_row(t, i, 1);
                    s.u.add_row(t, i, 1);
                    retry = true;
                }
        if (retry) {
            --t;
            continue;
        }

        if (a(t, t) < 0) {
            a.scale_row(t, -1);
            s.u.scale_row(t, -1);
        }
    }
    return s;
}

/// Columns generate ker(M) over the integers.
inline IntMat kernel_basis(const IntMat& m) {
    SmithForm s = smith_normal_form(m);
    int rank = 0;
    int steps = std::min(m.rows(), m.cols());
    for (int i = 0; i < steps; ++i)
        if (s.d(i, i) != 0) ++rank;
    IntMat basis(m.cols(), m.cols() - rank);
    for (int j = rank; j < m.cols(); ++j)
        for (int i = 0; i < m.cols(); ++i) basis(i, j - rank) = s.v(i, j);
    return basis;
}

/// Column Hermite normal form (lower staircase), canonical for the lattice
/// generated by the columns: pivot positive, entries right of a pivot zero,
/// entries left of it reduced mod the pivot.
inline IntMat hermite_columns(const IntMat& m0) {
    IntMat a = m0;
    const int rows = a.rows(), cols = a.cols();
    int col = 0;
    for (int row = 0; row < rows && col < cols; ++row) {
        // gcd-reduce columns col..end on this row
        for (;;) {
            int piv = -1;
            mpz_class best;
            for (int j = col; j < cols; ++j) {
                if (a(row, j) == 0) continue;
                mpz_class v = abs(a(row, j));
                if (piv < 0 || v < best) {
                    best = v;
                    piv = j;
                }
            }
            if (piv < 0) break;
            a.swap_cols(col, piv);
            bool any = false;
            for (int j = col + 1; j < cols; ++j) {
                if (a(row, j) == 0) continue;
                mpz_class q = a(row, j) / a(row, col);
                a.add_col(j, col, -q);
                if (a(row, j) != 0) any = true;
            }
            if (!any) break;
        }
        if (a(row, col) == 0) continue;  // no pivot in this row
        if (a(row, col) < 0) a.scale_col(col, -1);
        for (int j = 0; j < col; ++j) {
            mpz_class q = a(row, j) / a(row, col);
            if (a(row, j) - q * a(row, col) < 0) q -= 1;  // floor reduction
            a.add_col(j, col, -q);
        }
        ++col;
    }
    // drop zero columns
    int nz = 0;
    for (int j = 0; j < cols; ++j) {
        bool z = true;
        for (int i = 0; i < rows; ++i)
            if (a(i, j) != 0) z = false;
        if (!z) ++nz;
    }
    IntMat out(rows, nz);
    int o = 0;
    for (int j = 0; j < cols; ++j) {
        bool z = true;
        for (int i = 0; i < rows; ++i)
            if (a(i, j) != 0) z = false;
        if (z) continue;
        for (int i = 0; i < rows; ++i) out(i, o) = a(i, j);
        ++o;
    }
    return out;
}

/// Canonical generators of the column lattice of M.
inline IntMat image_lattice(const IntMat& m) { return hermite_columns(m); }

inline bool lattice_equal(const IntMat& a, const IntMat& b) {
    if (a.rows() != b.rows()) return false;
    return hermite_columns(a) == hermite_columns(b);
}

}  // namespace ncg
