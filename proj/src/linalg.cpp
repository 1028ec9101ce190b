#include "ndga/linalg.hpp"

#include "ndga/errors.hpp"

namespace ndga {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (x != 0) return false;
    return true;
}

std::vector<Rational> Matrix::column(int c) const {
    std::vector<Rational> v(static_cast<std::size_t>(rows_));
    for (int r = 0; r < rows_; ++r) v[static_cast<std::size_t>(r)] = at(r, c);
    return v;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw InvalidArgument("matrix dimension mismatch in product");
    Matrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const Rational& x = a.at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < b.cols(); ++j)
                if (b.at(k, j) != 0) out.at(i, j) += x * b.at(k, j);
        }
    return out;
}

std::vector<Rational> operator*(const Matrix& a, const std::vector<Rational>& v) {
    if (static_cast<int>(v.size()) != a.cols()) throw InvalidArgument("matrix-vector dimension mismatch");
    std::vector<Rational> out(static_cast<std::size_t>(a.rows()));
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k)
            if (a.at(i, k) != 0) out[static_cast<std::size_t>(i)] += a.at(i, k) * v[static_cast<std::size_t>(k)];
    return out;
}

RowEchelon rref(Matrix m) {
    RowEchelon out;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int piv = -1;
        for (int r = row; r < m.rows(); ++r)
            if (m.at(r, col) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != row)
            for (int c = 0; c < m.cols(); ++c) std::swap(m.at(piv, c), m.at(row, c));
        Rational inv = 1 / m.at(row, col);
        for (int c = col; c < m.cols(); ++c) m.at(row, c) *= inv;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row || m.at(r, col) == 0) continue;
            Rational f = m.at(r, col);
            for (int c = col; c < m.cols(); ++c)
                if (m.at(row, c) != 0) m.at(r, c) -= f * m.at(row, c);
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.reduced = std::move(m);
    return out;
}

int rank(const Matrix& m) { return static_cast<int>(rref(m).pivots.size()); }

std::vector<std::vector<Rational>> kernel_basis(const Matrix& m) {
    RowEchelon e = rref(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (int p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<std::vector<Rational>> out;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        std::vector<Rational> v(static_cast<std::size_t>(m.cols()));
        v[static_cast<std::size_t>(free)] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            v[static_cast<std::size_t>(e.pivots[r])] = -e.reduced.at(static_cast<int>(r), free);
        out.push_back(std::move(v));
    }
    return out;
}

Matrix from_columns(const std::vector<std::vector<Rational>>& cols, int rows) {
    Matrix m(rows, static_cast<int>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (static_cast<int>(cols[c].size()) != rows) throw InvalidArgument("column length mismatch");
        for (int r = 0; r < rows; ++r) m.at(r, static_cast<int>(c)) = cols[c][static_cast<std::size_t>(r)];
    }
    return m;
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw InvalidArgument("inverse of a non-square matrix");
    int n = m.rows();
    Matrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    RowEchelon e = rref(aug);
    if (static_cast<int>(e.pivots.size()) < n || e.pivots[static_cast<std::size_t>(n - 1)] != n - 1)
        throw InvalidArgument("matrix is singular");
    Matrix out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.at(i, j) = e.reduced.at(i, n + j);
    return out;
}

}  // namespace ndga
