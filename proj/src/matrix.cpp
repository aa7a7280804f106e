#include "mtae/matrix.hpp"

#include <cmath>

namespace mtae {

bool all_finite(const Matrix& m) {
    for (double v : m.data)
        if (!std::isfinite(v)) return false;
    return true;
}

bool all_finite(const Vector& v) {
    for (double x : v.data)
        if (!std::isfinite(x)) return false;
    return true;
}

void require_finite(const Matrix& m, const std::string& what) {
    if (!all_finite(m)) throw std::invalid_argument("non-finite values in " + what);
}

void require_finite(const Vector& v, const std::string& what) {
    if (!all_finite(v)) throw std::invalid_argument("non-finite values in " + what);
}

Matrix transpose(const Matrix& m) {
    Matrix t(m.cols, m.rows);
    for (std::size_t r = 0; r < m.rows; ++r)
        for (std::size_t c = 0; c < m.cols; ++c) t(c, r) = m(r, c);
    return t;
}

Vector matvec_transposed(const Matrix& m, const Vector& v) {
    if (v.size() != m.rows) throw std::invalid_argument("matvec_transposed: dimension mismatch");
    Vector out(m.cols, 0.0);
    for (std::size_t r = 0; r < m.rows; ++r) {
        const double x = v[r];
        if (x == 0.0) continue;
        const double* row = m.row(r);
        for (std::size_t c = 0; c < m.cols; ++c) out[c] += x * row[c];
    }
    return out;
}

double frobenius_norm_squared(const Matrix& m) {
    double s = 0.0;
    for (double v : m.data) s += v * v;
    return s;
}

Matrix vstack(const std::vector<const Matrix*>& blocks) {
    if (blocks.empty()) throw std::invalid_argument("vstack: no blocks");
    const std::size_t cols = blocks.front()->cols;
    std::size_t rows = 0;
    for (const Matrix* b : blocks) {
        if (b->cols != cols) throw std::invalid_argument("vstack: column mismatch");
        rows += b->rows;
    }
    Matrix out(rows, cols);
    std::size_t at = 0;
    for (const Matrix* b : blocks) {
        std::copy(b->data.begin(), b->data.end(), out.data.begin() + at * cols);
        at += b->rows;
    }
    return out;
}

}  // namespace mtae
