#pragma once

#include <optional>
#include <vector>

#include "opext/field.hpp"

namespace opext {

// Dense matrix over a fixed field, entries kept in canonical form.
// Instances at desk scale are tiny; no attempt at sparsity.
class Matrix {
public:
    Matrix() : field_(Field::rationals()) {}
    Matrix(Field f, std::size_t rows, std::size_t cols)
        : field_(f), rows_(rows), cols_(cols), e_(rows * cols, mpq_class(0)) {}

    static Matrix identity(Field f, std::size_t n);
    static Matrix zero(Field f, std::size_t rows, std::size_t cols) { return Matrix(f, rows, cols); }

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const mpq_class& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, const mpq_class& v);

    bool is_zero() const;
    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }

    Matrix transpose() const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const mpq_class& c) const;

    Matrix hstack(const Matrix& o) const;  // [this | o]
    Matrix vstack(const Matrix& o) const;  // [this ; o]
    Matrix columns(const std::vector<std::size_t>& idx) const;
    Matrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

    Matrix pow(std::size_t n) const;  // square matrices only

    std::string str() const;

private:
    Field field_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<mpq_class> e_;
};

std::size_t rank(const Matrix& m);

// Columns form a basis of the right kernel {x : m x = 0}.
Matrix kernel_basis(const Matrix& m);

// One solution x of m x = b (columnwise), or nullopt if inconsistent.
std::optional<Matrix> solve_right(const Matrix& m, const Matrix& b);

// True iff every column of v lies in the column span of span.
bool subspace_contains(const Matrix& span, const Matrix& v);

// A maximal set of linearly independent columns of m, as a matrix.
Matrix column_space_basis(const Matrix& m);

// Standard basis columns extending the (independent) columns of b to a
// basis of the full space.
Matrix complete_to_basis(const Matrix& b);

std::optional<Matrix> inverse(const Matrix& m);

}  // namespace opext
