#pragma once

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <vector>

namespace qtorus {

using IntVec = std::vector<std::int64_t>;

/// Dense row-major integer matrix with overflow-checked arithmetic.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}
    IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);
    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<IntVec>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::int64_t& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    std::int64_t operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    IntVec row(std::size_t i) const;
    IntVec col(std::size_t j) const;
    IntMatrix transpose() const;
    bool is_zero() const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntVec operator*(const IntMatrix& a, const IntVec& v);
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<std::int64_t> a_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t dot(const IntVec& a, const IntVec& b);

/// U * M * V == D with U, V unimodular and D diagonal, d_1 | d_2 | ...,
/// all diagonal entries nonnegative.
struct SmithForm {
    IntMatrix U, D, V;
    std::size_t rank() const;
    IntVec invariant_factors() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Rank over Q.
std::size_t rank(const IntMatrix& m);

/// Exact determinant of a square matrix.
std::int64_t determinant(const IntMatrix& m);

/// Row Hermite normal form of the lattice spanned by the given rows; zero
/// rows are dropped. Pivots are positive and entries above each pivot are
/// reduced into [0, pivot).
std::vector<IntVec> hermite_basis(const std::vector<IntVec>& rows, std::size_t n);

/// True when v is an integer combination of the given vectors.
bool in_integer_span(const std::vector<IntVec>& basis, const IntVec& v);

}  // namespace qtorus
