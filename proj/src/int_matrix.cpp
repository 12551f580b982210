#include "qtorus/int_matrix.hpp"

#include <cstdlib>
#include <numeric>

#include <gmpxx.h>

#include "qtorus/error.hpp"

namespace qtorus {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "integer addition overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "integer multiplication overflow");
    return r;
}

std::int64_t dot(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "dot product of vectors of different length");
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
    return s;
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    a_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
        a_.insert(a_.end(), r.begin(), r.end());
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw Error(ErrorKind::DimensionMismatch, "row has wrong length");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntVec IntMatrix::row(std::size_t i) const {
    return IntVec(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVec IntMatrix::col(std::size_t j) const {
    IntVec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool IntMatrix::is_zero() const {
    for (auto x : a_)
        if (x != 0) return false;
    return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            std::int64_t x = a(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = checked_add(c(i, j), checked_mul(x, b(k, j)));
        }
    return c;
}

IntVec operator*(const IntMatrix& a, const IntVec& v) {
    if (a.cols_ != v.size()) throw Error(ErrorKind::DimensionMismatch, "matrix-vector shape mismatch");
    IntVec r(a.rows_, 0);
    for (std::size_t i = 0; i < a.rows_; ++i) r[i] = dot(a.row(i), v);
    return r;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
        os << ']';
    }
    return os << ']';
}

namespace {

void add_row_multiple(IntMatrix& m, std::size_t dst, std::size_t src, std::int64_t k) {
    if (k == 0) return;
    for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) = checked_add(m(dst, j), checked_mul(k, m(src, j)));
}

void add_col_multiple(IntMatrix& m, std::size_t dst, std::size_t src, std::int64_t k) {
    if (k == 0) return;
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) = checked_add(m(i, dst), checked_mul(k, m(i, src)));
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

void negate_row(IntMatrix& m, std::size_t i) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
    const std::size_t R = m.rows(), C = m.cols();
    SmithForm s{IntMatrix::identity(R), m, IntMatrix::identity(C)};
    IntMatrix& D = s.D;
    for (std::size_t t = 0; t < std::min(R, C); ++t) {
        // Smallest nonzero entry of the trailing block becomes the pivot.
        std::size_t pi = R, pj = C;
        for (std::size_t i = t; i < R; ++i)
            for (std::size_t j = t; j < C; ++j)
                if (D(i, j) != 0 && (pi == R || std::llabs(D(i, j)) < std::llabs(D(pi, pj)))) pi = i, pj = j;
        if (pi == R) break;
        swap_rows(D, t, pi);
        swap_rows(s.U, t, pi);
        swap_cols(D, t, pj);
        swap_cols(s.V, t, pj);

        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < R; ++i) {
                std::int64_t q = D(i, t) / D(t, t);
                add_row_multiple(D, i, t, -q);
                add_row_multiple(s.U, i, t, -q);
                if (D(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < C; ++j) {
                std::int64_t q = D(t, j) / D(t, t);
                add_col_multiple(D, j, t, -q);
                add_col_multiple(s.V, j, t, -q);
                if (D(t, j) != 0) clean = false;
            }
            if (!clean) {
                // A nonzero remainder is smaller than the pivot; promote it.
                std::size_t bi = t, bj = t;
                for (std::size_t i = t + 1; i < R; ++i)
                    if (D(i, t) != 0 && std::llabs(D(i, t)) < std::llabs(D(bi, bj))) bi = i, bj = t;
                for (std::size_t j = t + 1; j < C; ++j)
                    if (D(t, j) != 0 && std::llabs(D(t, j)) < std::llabs(D(bi, bj))) bi = t, bj = j;
                swap_rows(D, t, bi);
                swap_rows(s.U, t, bi);
                swap_cols(D, t, bj);
                swap_cols(s.V, t, bj);
                continue;
            }
            // Divisibility condition on the trailing block.
            std::size_t bad = R;
            for (std::size_t i = t + 1; i < R && bad == R; ++i)
                for (std::size_t j = t + 1; j < C; ++j)
                    if (D(i, j) % D(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad == R) break;
            add_row_multiple(D, t, bad, 1);
            add_row_multiple(s.U, t, bad, 1);
        }
        if (D(t, t) < 0) {
            negate_row(D, t);
            negate_row(s.U, t);
        }
    }
    return s;
}

std::size_t SmithForm::rank() const {
    std::size_t r = 0;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
        if (D(i, i) != 0) ++r;
    return r;
}

IntVec SmithForm::invariant_factors() const {
    IntVec f;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) f.push_back(D(i, i));
    return f;
}

std::size_t rank(const IntMatrix& m) {
    std::vector<std::vector<mpq_class>> a(m.rows(), std::vector<mpq_class>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = static_cast<long>(m(i, j));
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && a[p][c] == 0) ++p;
        if (p == m.rows()) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (a[i][c] == 0) continue;
            mpq_class k = a[i][c] / a[r][c];
            for (std::size_t j = c; j < m.cols(); ++j) a[i][j] -= k * a[r][j];
        }
        ++r;
    }
    return r;
}

std::int64_t determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    // Bareiss fraction-free elimination.
    std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(m(i, j));
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    mpz_class d = a[n - 1][n - 1] * sign;
    if (!d.fits_slong_p()) throw Error(ErrorKind::Overflow, "determinant exceeds 64 bits");
    return d.get_si();
}

std::vector<IntVec> hermite_basis(const std::vector<IntVec>& input, std::size_t n) {
    std::vector<IntVec> rows;
    for (const auto& r : input) {
        if (r.size() != n) throw Error(ErrorKind::DimensionMismatch, "lattice generator has wrong length");
        rows.push_back(r);
    }
    std::size_t top = 0;
    for (std::size_t c = 0; c < n && top < rows.size(); ++c) {
        // Euclid on column c among rows top..end.
        for (;;) {
            std::size_t piv = rows.size();
            for (std::size_t i = top; i < rows.size(); ++i)
                if (rows[i][c] != 0 && (piv == rows.size() || std::llabs(rows[i][c]) < std::llabs(rows[piv][c])))
                    piv = i;
            if (piv == rows.size()) break;
            std::swap(rows[top], rows[piv]);
            bool done = true;
            for (std::size_t i = top + 1; i < rows.size(); ++i) {
                if (rows[i][c] == 0) continue;
                std::int64_t q = rows[i][c] / rows[top][c];
                for (std::size_t j = 0; j < n; ++j) rows[i][j] = checked_add(rows[i][j], checked_mul(-q, rows[top][j]));
                if (rows[i][c] != 0) done = false;
            }
            if (done) break;
        }
        if (rows[top][c] == 0) continue;
        if (rows[top][c] < 0)
            for (auto& x : rows[top]) x = -x;
        const std::int64_t p = rows[top][c];
        for (std::size_t i = 0; i < top; ++i) {
            std::int64_t q = rows[i][c] / p;
            if (rows[i][c] - q * p < 0) --q;
            if (q != 0)
                for (std::size_t j = 0; j < n; ++j) rows[i][j] = checked_add(rows[i][j], checked_mul(-q, rows[top][j]));
        }
        ++top;
    }
    rows.resize(top);
    return rows;
}

bool in_integer_span(const std::vector<IntVec>& basis, const IntVec& v) {
    const std::size_t n = v.size();
    auto h = hermite_basis(basis, n);
    IntVec w = v;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (r < h.size() && h[r][c] != 0) {
            if (w[c] % h[r][c] != 0) return false;
            std::int64_t q = w[c] / h[r][c];
            for (std::size_t j = 0; j < n; ++j) w[j] = checked_add(w[j], checked_mul(-q, h[r][j]));
            ++r;
        } else if (w[c] != 0) {
            return false;
        }
    }
    return true;
}

}  // namespace qtorus
