#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace mtae {

// Dense row-major matrix of doubles. Kept deliberately small: the training
// loops index raw rows, everything else goes through (r, c).
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, double fill = 0.0)
        : rows(r), cols(c), data(r * c, fill) {}

    double& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

    double* row(std::size_t r) { return data.data() + r * cols; }
    const double* row(std::size_t r) const { return data.data() + r * cols; }

    bool empty() const { return rows == 0 || cols == 0; }
};

struct Vector {
    std::vector<double> data;

    Vector() = default;
    explicit Vector(std::size_t n, double fill = 0.0) : data(n, fill) {}
    Vector(std::initializer_list<double> init) : data(init) {}

    std::size_t size() const { return data.size(); }
    double& operator[](std::size_t i) { return data[i]; }
    double operator[](std::size_t i) const { return data[i]; }
};

bool all_finite(const Matrix& m);
bool all_finite(const Vector& v);

// Throws std::invalid_argument mentioning `what` if any entry is not finite.
void require_finite(const Matrix& m, const std::string& what);
void require_finite(const Vector& v, const std::string& what);

Matrix transpose(const Matrix& m);

// out = m^T v  (m: n x k, v: n) -> k
Vector matvec_transposed(const Matrix& m, const Vector& v);

double frobenius_norm_squared(const Matrix& m);

// Vertical concatenation; all blocks must share a column count.
Matrix vstack(const std::vector<const Matrix*>& blocks);

}  // namespace mtae
