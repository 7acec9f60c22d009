#include "opext/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace opext {

Matrix Matrix::identity(Field f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

void Matrix::set(std::size_t r, std::size_t c, const mpq_class& v) {
    e_[r * cols_ + c] = FieldOps(field_).canon(v);
}

bool Matrix::is_zero() const {
    for (const auto& x : e_)
        if (x != 0) return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.e_[c * rows_ + r] = e_[r * cols_ + c];
    return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    FieldOps ops(field_);
    Matrix p(field_, rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const mpq_class& a = e_[r * cols_ + k];
            if (a == 0) continue;
            for (std::size_t c = 0; c < o.cols_; ++c)
                p.e_[r * o.cols_ + c] += a * o.e_[k * o.cols_ + c];
        }
    for (auto& x : p.e_) x = ops.canon(x);
    return p;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
    FieldOps ops(field_);
    Matrix s(field_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) s.e_[i] = ops.canon(e_[i] + o.e_[i]);
    return s;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + o.scaled(-1); }

Matrix Matrix::scaled(const mpq_class& c) const {
    FieldOps ops(field_);
    Matrix s(field_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) s.e_[i] = ops.canon(e_[i] * c);
    return s;
}

Matrix Matrix::hstack(const Matrix& o) const {
    if (rows_ != o.rows_) throw std::invalid_argument("hstack row mismatch");
    Matrix h(field_, rows_, cols_ + o.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) h.e_[r * h.cols_ + c] = e_[r * cols_ + c];
        for (std::size_t c = 0; c < o.cols_; ++c) h.e_[r * h.cols_ + cols_ + c] = o.e_[r * o.cols_ + c];
    }
    return h;
}

Matrix Matrix::vstack(const Matrix& o) const {
    if (cols_ != o.cols_) throw std::invalid_argument("vstack col mismatch");
    Matrix v(field_, rows_ + o.rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) v.e_[i] = e_[i];
    for (std::size_t i = 0; i < o.e_.size(); ++i) v.e_[rows_ * cols_ + i] = o.e_[i];
    return v;
}

Matrix Matrix::columns(const std::vector<std::size_t>& idx) const {
    Matrix m(field_, rows_, idx.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t j = 0; j < idx.size(); ++j) m.e_[r * idx.size() + j] = e_[r * cols_ + idx[j]];
    return m;
}

Matrix Matrix::submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix m(field_, nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c) m.e_[r * nc + c] = e_[(r0 + r) * cols_ + c0 + c];
    return m;
}

Matrix Matrix::pow(std::size_t n) const {
    if (rows_ != cols_) throw std::invalid_argument("pow needs a square matrix");
    Matrix acc = Matrix::identity(field_, rows_);
    Matrix base = *this;
    while (n) {
        if (n & 1) acc = acc * base;
        base = n > 1 ? base * base : base;
        n >>= 1;
    }
    return acc;
}

std::string Matrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        os << "[";
        for (std::size_t c = 0; c < cols_; ++c) os << at(r, c) << (c + 1 < cols_ ? "," : "");
        os << "]" << (r + 1 < rows_ ? "," : "");
    }
    os << "]";
    return os.str();
}

namespace {

// Row echelon form by exact Gaussian elimination. Returns pivot columns;
// m is reduced in place (as a dense row-major buffer).
struct Echelon {
    std::vector<mpq_class> a;
    std::size_t rows, cols;
    std::vector<std::size_t> pivots;
};

Echelon echelon(const Matrix& m, bool reduced) {
    FieldOps ops(m.field());
    Echelon e;
    e.rows = m.rows();
    e.cols = m.cols();
    e.a.resize(e.rows * e.cols);
    for (std::size_t r = 0; r < e.rows; ++r)
        for (std::size_t c = 0; c < e.cols; ++c) e.a[r * e.cols + c] = m.at(r, c);

    auto at = [&](std::size_t r, std::size_t c) -> mpq_class& { return e.a[r * e.cols + c]; };
    std::size_t row = 0;
    for (std::size_t col = 0; col < e.cols && row < e.rows; ++col) {
        std::size_t piv = row;
        while (piv < e.rows && at(piv, col) == 0) ++piv;
        if (piv == e.rows) continue;
        for (std::size_t c = 0; c < e.cols; ++c) std::swap(at(row, c), at(piv, c));
        mpq_class inv = ops.inv(at(row, col));
        for (std::size_t c = col; c < e.cols; ++c) at(row, c) = ops.mul(at(row, c), inv);
        std::size_t start = reduced ? 0 : row + 1;
        for (std::size_t r = start; r < e.rows; ++r) {
            if (r == row || at(r, col) == 0) continue;
            mpq_class f = at(r, col);
            for (std::size_t c = col; c < e.cols; ++c) at(r, c) = ops.sub(at(r, c), ops.mul(f, at(row, c)));
        }
        e.pivots.push_back(col);
        ++row;
    }
    return e;
}

}  // namespace

std::size_t rank(const Matrix& m) { return echelon(m, false).pivots.size(); }

Matrix kernel_basis(const Matrix& m) {
    FieldOps ops(m.field());
    Echelon e = echelon(m, true);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;

    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    Matrix k(m.field(), m.cols(), free_cols.size());
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
        std::size_t fc = free_cols[j];
        k.set(fc, j, 1);
        for (std::size_t i = 0; i < e.pivots.size(); ++i) {
            const mpq_class& v = e.a[i * m.cols() + fc];
            if (v != 0) k.set(e.pivots[i], j, ops.neg(v));
        }
    }
    return k;
}

std::optional<Matrix> solve_right(const Matrix& m, const Matrix& b) {
    if (m.rows() != b.rows()) throw std::invalid_argument("solve_right row mismatch");
    Echelon e = echelon(m.hstack(b), true);
    // Inconsistent iff a pivot falls in the b-block.
    for (auto p : e.pivots)
        if (p >= m.cols()) return std::nullopt;
    Matrix x(m.field(), m.cols(), b.cols());
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            x.set(e.pivots[i], j, e.a[i * (m.cols() + b.cols()) + m.cols() + j]);
    return x;
}

bool subspace_contains(const Matrix& span, const Matrix& v) {
    if (span.rows() != v.rows()) throw std::invalid_argument("subspace_contains row mismatch");
    if (v.cols() == 0) return true;
    return rank(span) == rank(span.hstack(v));
}

Matrix column_space_basis(const Matrix& m) {
    Echelon e = echelon(m, false);
    return m.columns(e.pivots);
}

Matrix complete_to_basis(const Matrix& b) {
    Matrix cur = b;
    std::vector<std::size_t> extra;
    std::size_t r = rank(cur);
    for (std::size_t i = 0; i < b.rows() && r < b.rows(); ++i) {
        Matrix unit(b.field(), b.rows(), 1);
        unit.set(i, 0, 1);
        Matrix cand = cur.hstack(unit);
        if (rank(cand) > r) {
            cur = cand;
            extra.push_back(i);
            ++r;
        }
    }
    Matrix out(b.field(), b.rows(), extra.size());
    for (std::size_t j = 0; j < extra.size(); ++j) out.set(extra[j], j, 1);
    return out;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    if (rank(m) != m.rows()) return std::nullopt;
    return solve_right(m, Matrix::identity(m.field(), m.rows()));
}

}  // namespace opext
