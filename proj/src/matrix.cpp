#include "prelb/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace prelb {

Vec vec_zero(std::size_t n) { return Vec(n); }

bool vec_is_zero(const Vec& x) {
    for (const auto& v : x)
        if (!v.is_zero())
            return false;
    return true;
}

void vec_add(Vec& x, const Vec& y) {
    for (std::size_t i = 0; i < x.size(); ++i)
        x[i] += y[i];
}

void vec_sub(Vec& x, const Vec& y) {
    for (std::size_t i = 0; i < x.size(); ++i)
        x[i] -= y[i];
}

void vec_add_scaled(Vec& x, const Rational& c, const Vec& y) {
    if (c.is_zero())
        return;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!y[i].is_zero())
            x[i] += c * y[i];
}

Vec vec_scaled(const Vec& x, const Rational& c) {
    Vec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero())
            r[i] = c * x[i];
    return r;
}

RatMatrix::RatMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("negative matrix dimension");
}

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m(i, i) = Rational(1);
    return m;
}

bool RatMatrix::is_zero() const {
    for (const auto& v : a_)
        if (!v.is_zero())
            return false;
    return true;
}

Vec RatMatrix::apply(const Vec& x) const {
    if (static_cast<int>(x.size()) != cols_)
        throw std::invalid_argument("matrix-vector dimension mismatch");
    Vec y(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            const Rational& a = (*this)(i, j);
            if (!a.is_zero() && !x[j].is_zero())
                y[i] += a * x[j];
        }
    return y;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_)
        throw std::invalid_argument("matrix product dimension mismatch");
    RatMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (a.is_zero())
                continue;
            for (int j = 0; j < o.cols_; ++j)
                if (!o(k, j).is_zero())
                    r(i, j) += a * o(k, j);
        }
    return r;
}

namespace {

struct Rref {
    RatMatrix m;
    std::vector<int> pivot_cols;
};

// Gauss-Jordan with the first nonzero entry of each column as pivot.
Rref reduce(RatMatrix m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int p = -1;
        for (int i = row; i < m.rows(); ++i)
            if (!m(i, col).is_zero()) {
                p = i;
                break;
            }
        if (p < 0)
            continue;
        if (p != row)
            for (int j = 0; j < m.cols(); ++j)
                std::swap(m(p, j), m(row, j));
        Rational inv = Rational(1) / m(row, col);
        for (int j = col; j < m.cols(); ++j)
            if (!m(row, j).is_zero())
                m(row, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero())
                continue;
            Rational f = m(i, col);
            for (int j = col; j < m.cols(); ++j)
                if (!m(row, j).is_zero())
                    m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

}  // namespace

int RatMatrix::rank() const { return static_cast<int>(reduce(*this).pivot_cols.size()); }

std::vector<Vec> RatMatrix::kernel_basis() const {
    Rref r = reduce(*this);
    std::vector<bool> is_pivot(cols_, false);
    for (int c : r.pivot_cols)
        is_pivot[c] = true;
    std::vector<Vec> basis;
    for (int free = 0; free < cols_; ++free) {
        if (is_pivot[free])
            continue;
        Vec v(cols_);
        v[free] = Rational(1);
        for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
            v[r.pivot_cols[i]] = -r.m(static_cast<int>(i), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> RatMatrix::solve(const Vec& b) const {
    if (static_cast<int>(b.size()) != rows_)
        throw std::invalid_argument("solve: right-hand side length mismatch");
    RatMatrix aug(rows_, cols_ + 1);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j)
            aug(i, j) = (*this)(i, j);
        aug(i, cols_) = b[i];
    }
    Rref r = reduce(std::move(aug));
    Vec x(cols_);
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) {
        if (r.pivot_cols[i] == cols_)
            return std::nullopt;  // pivot in the augmented column: inconsistent
        x[r.pivot_cols[i]] = r.m(static_cast<int>(i), cols_);
    }
    return x;
}

}  // namespace prelb
