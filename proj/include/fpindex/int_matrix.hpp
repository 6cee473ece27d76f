// Dense matrices and polynomials over arbitrary-precision integers:
// multiplication, binary-exponentiation powers, traces, characteristic
// polynomials, exact determinants, and cyclotomic polynomials.
#pragma once

#include <cstddef>
#include <vector>

#include "fpindex/exact.hpp"

namespace fpindex {

class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

    static IntMatrix identity(size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Int& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const Int& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const IntMatrix& other) const = default;

    IntMatrix operator*(const IntMatrix& other) const;
    IntMatrix operator+(const IntMatrix& other) const;
    IntMatrix operator-(const IntMatrix& other) const;

    Int trace() const;
    bool is_zero() const;
    bool is_identity() const;

  private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<Int> data_;
};

// A^n by binary exponentiation, exact. n >= 0; A^0 = I.
IntMatrix matrix_power(const IntMatrix& a, long long n);

// Integer polynomial with ascending coefficients; coeffs.back() != 0 unless
// the polynomial is the zero polynomial (empty vector).
using IntPoly = std::vector<Int>;

IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
// Exact division; returns nullopt when b does not divide a over the integers.
std::optional<IntPoly> poly_divide_exact(const IntPoly& a, const IntPoly& b);

// det(X I - A) via Faddeev-LeVerrier; every intermediate division is exact.
IntPoly characteristic_polynomial(const IntMatrix& a);

// Writes p = X^s * q with q(0) != 0; returns {s, q}. Zero polynomial -> {0, {}}.
std::pair<size_t, IntPoly> strip_power_of_x(const IntPoly& p);

// The d-th cyclotomic polynomial, computed by exact division of X^d - 1.
IntPoly cyclotomic(long long d);

// Exact determinant (fraction-free Bareiss elimination).
Int determinant(const IntMatrix& a);

}  // namespace fpindex
