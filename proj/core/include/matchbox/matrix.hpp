#pragma once

#include <matchbox/integers.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace matchbox {

// Dense matrix with exact integer entries, row-major.  Everything in this
// header stays in exact arithmetic; there is no floating point anywhere in
// the elimination paths.
class IntMatrix {
public:
    IntMatrix(std::size_t rows, std::size_t cols);  // zero-filled

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntMatrix transposed() const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    // row a += c * row b; col a += c * col b
    void add_row(std::size_t a, std::size_t b, const Int& c);
    void add_col(std::size_t a, std::size_t b, const Int& c);
    void negate_row(std::size_t a);

    std::string to_string() const;  // row-major nested list, e.g. [[1,0],[0,1]]

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Int> data_;
};

// Bareiss fraction-free elimination; square input.
Int determinant(const IntMatrix& a);

// u * a * v = d with u, v unimodular and d diagonal, d_1 | d_2 | ...,
// entries nonnegative, zeros trailing.
struct SmithForm {
    IntMatrix u;
    IntMatrix d;
    IntMatrix v;
};

SmithForm smith_normal_form(const IntMatrix& a);

// the diagonal of the Smith form, length min(rows, cols)
std::vector<Int> smith_diagonal(const IntMatrix& a);

// Hermite basis of the sublattice of Z^rows spanned by the columns: one
// column per basis vector, staircase with positive pivots, entries to the
// left of each pivot reduced into [0, pivot), zero columns dropped.
IntMatrix hermite_column_basis(const IntMatrix& a);

}  // namespace matchbox
