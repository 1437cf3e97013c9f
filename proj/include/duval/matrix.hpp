#ifndef DUVAL_MATRIX_HPP
#define DUVAL_MATRIX_HPP

/*
 * Dense integer matrices and exact linear algebra.
 *
 * Solving and determinants use fraction-free Bareiss elimination: all
 * intermediate divisions are exact, so no rounding can occur and coefficient
 * growth stays polynomial.  Solutions are returned as exact rationals and
 * verified by substitution before being handed back.
 */

#include <utility>
#include <vector>

#include "duval/errors.hpp"
#include "duval/rational.hpp"

namespace duval {

class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {
        check(rows >= 0 && cols >= 0, "matrix dimensions must be nonnegative");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    BigInt& at(int i, int j) {
        range_check(i, j);
        return a_[static_cast<std::size_t>(i) * cols_ + j];
    }
    const BigInt& at(int i, int j) const {
        range_check(i, j);
        return a_[static_cast<std::size_t>(i) * cols_ + j];
    }

    bool is_square() const { return rows_ == cols_; }

    bool is_symmetric() const {
        if (!is_square()) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = i + 1; j < cols_; ++j)
                if (at(i, j) != at(j, i)) return false;
        return true;
    }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

private:
    void range_check(int i, int j) const {
        check(i >= 0 && i < rows_ && j >= 0 && j < cols_, "matrix index out of range");
    }
    int rows_, cols_;
    std::vector<BigInt> a_;
};

/* det of the leading top-left n x n block (Bareiss, with row pivoting). */
inline BigInt leading_minor_determinant(const IntMatrix& m, int n) {
    check(m.is_square() && n >= 0 && n <= m.rows(), "bad minor size");
    if (n == 0) return BigInt(1);
    IntMatrix w(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) w.at(i, j) = m.at(i, j);
    BigInt prev(1);
    int sign = 1;
    for (int r = 0; r < n - 1; ++r) {
        if (w.at(r, r) == 0) {
            int p = -1;
            for (int i = r + 1; i < n; ++i)
                if (w.at(i, r) != 0) { p = i; break; }
            if (p < 0) return BigInt(0);
            for (int j = 0; j < n; ++j) std::swap(w.at(r, j), w.at(p, j));
            sign = -sign;
        }
        for (int i = r + 1; i < n; ++i) {
            for (int j = r + 1; j < n; ++j) {
                BigInt v = w.at(r, r) * w.at(i, j) - w.at(i, r) * w.at(r, j);
                BigInt q = v / prev;
                check(q * prev == v, "Bareiss division not exact");
                w.at(i, j) = q;
            }
            w.at(i, r) = 0;
        }
        prev = w.at(r, r);
    }
    return sign > 0 ? w.at(n - 1, n - 1) : -w.at(n - 1, n - 1);
}

inline BigInt determinant(const IntMatrix& m) {
    check(m.is_square(), "determinant of non-square matrix");
    return leading_minor_determinant(m, m.rows());
}

/* Symmetric negative definiteness via alternating leading principal minors:
 * (-1)^k det_k > 0 for k = 1..n. */
inline bool is_negative_definite(const IntMatrix& m) {
    if (!m.is_symmetric()) return false;
    for (int k = 1; k <= m.rows(); ++k) {
        BigInt d = leading_minor_determinant(m, k);
        if (k % 2 == 1 ? d >= 0 : d <= 0) return false;
    }
    return true;
}

/*
 * Solve A x = b exactly for square nonsingular A.  Fraction-free forward
 * elimination on the augmented matrix, rational back substitution, and an
 * always-on verification by substitution.
 */
inline std::vector<BigRational> solve_linear_exact(const IntMatrix& a,
                                                   const std::vector<BigInt>& b) {
    if (!a.is_square())
        throw dimension_mismatch("solve_linear_exact: matrix must be square");
    int n = a.rows();
    if (static_cast<int>(b.size()) != n)
        throw dimension_mismatch("solve_linear_exact: rhs length mismatch");
    if (n == 0) return {};

    IntMatrix w(n, n + 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) w.at(i, j) = a.at(i, j);
        w.at(i, n) = b[i];
    }
    BigInt prev(1);
    for (int r = 0; r < n; ++r) {
        if (w.at(r, r) == 0) {
            int p = -1;
            for (int i = r + 1; i < n; ++i)
                if (w.at(i, r) != 0) { p = i; break; }
            if (p < 0) throw singular_matrix("solve_linear_exact: singular matrix");
            for (int j = 0; j <= n; ++j) std::swap(w.at(r, j), w.at(p, j));
        }
        for (int i = r + 1; i < n; ++i) {
            for (int j = r + 1; j <= n; ++j) {
                BigInt v = w.at(r, r) * w.at(i, j) - w.at(i, r) * w.at(r, j);
                BigInt q = v / prev;
                check(q * prev == v, "Bareiss division not exact");
                w.at(i, j) = q;
            }
            w.at(i, r) = 0;
        }
        prev = w.at(r, r);
    }
    if (w.at(n - 1, n - 1) == 0)
        throw singular_matrix("solve_linear_exact: singular matrix");

    std::vector<BigRational> x(n);
    for (int i = n - 1; i >= 0; --i) {
        BigRational s(w.at(i, n));
        for (int j = i + 1; j < n; ++j) s -= BigRational(w.at(i, j)) * x[j];
        x[i] = s / BigRational(w.at(i, i));
    }
    for (int i = 0; i < n; ++i) {
        BigRational s(0);
        for (int j = 0; j < n; ++j) s += BigRational(a.at(i, j)) * x[j];
        check(s == BigRational(b[i]), "linear solve verification failed");
    }
    return x;
}

} // namespace duval

#endif
