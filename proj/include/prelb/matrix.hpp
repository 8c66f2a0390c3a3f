#pragma once

#include "prelb/rational.hpp"

#include <optional>
#include <vector>

namespace prelb {

using Vec = std::vector<Rational>;

Vec vec_zero(std::size_t n);
bool vec_is_zero(const Vec& x);
void vec_add(Vec& x, const Vec& y);
void vec_sub(Vec& x, const Vec& y);
void vec_add_scaled(Vec& x, const Rational& c, const Vec& y);
Vec vec_scaled(const Vec& x, const Rational& c);

/// Dense rational matrix, row-major. All computations are exact; elimination
/// always takes the first nonzero pivot in a column so ranks, kernel bases and
/// solutions are deterministic.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols);
    static RatMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rational& operator()(int i, int j) const {
        return a_[static_cast<std::size_t>(i) * cols_ + j];
    }

    bool is_zero() const;
    Vec apply(const Vec& x) const;
    RatMatrix operator*(const RatMatrix& o) const;
    friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

    int rank() const;

    /// Basis of { x : A x = 0 } read off the reduced row echelon form, one
    /// vector per free column in ascending column order (free slot set to 1).
    std::vector<Vec> kernel_basis() const;

    /// Some exact solution of A x = b (free variables zero), or nullopt when
    /// the system is inconsistent. Throws on dimension mismatch.
    std::optional<Vec> solve(const Vec& b) const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

}  // namespace prelb
