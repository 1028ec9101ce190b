#pragma once

#include <vector>

#include "ndga/rational.hpp"

namespace ndga {

class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols)) {}
    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int r, int c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
    const Rational& at(int r, int c) const { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
    bool is_zero() const;
    std::vector<Rational> column(int c) const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
std::vector<Rational> operator*(const Matrix& a, const std::vector<Rational>& v);

struct RowEchelon {
    Matrix reduced;            // reduced row echelon form
    std::vector<int> pivots;   // pivot column of each nonzero row
};

RowEchelon rref(Matrix m);
int rank(const Matrix& m);
// Basis of the right null space, one vector per free column, in column order.
std::vector<std::vector<Rational>> kernel_basis(const Matrix& m);
// Matrix whose columns are the given vectors (each of length rows).
Matrix from_columns(const std::vector<std::vector<Rational>>& cols, int rows);
Matrix inverse(const Matrix& m);

}  // namespace ndga
