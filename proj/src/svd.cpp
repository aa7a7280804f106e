#include "mtae/svd.hpp"

#include <algorithm>
#include <cmath>

namespace mtae {

namespace {

double offdiag_norm(const Matrix& a) {
    double s = 0.0;
    for (std::size_t p = 0; p < a.rows; ++p)
        for (std::size_t q = p + 1; q < a.cols; ++q) s += 2.0 * a(p, q) * a(p, q);
    return std::sqrt(s);
}

}  // namespace

Vector symmetric_eigenvalues(Matrix a) {
    if (a.rows != a.cols) throw std::invalid_argument("symmetric_eigenvalues: square matrix required");
    const std::size_t n = a.rows;
    double trace = 0.0;
    for (std::size_t i = 0; i < n; ++i) trace += std::fabs(a(i, i));
    const double tol = 1e-12 * trace;

    const int max_sweeps = 64;
    for (int sweep = 0; sweep < max_sweeps && offdiag_norm(a) > tol; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double app = a(p, p), aqq = a(q, q);
                // Rotation angle annihilating a(p,q), stable form.
                const double theta = (aqq - app) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                double* rp = a.row(p);
                double* rq = a.row(q);
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = rp[k], akq = rq[k];
                    rp[k] = c * akp - s * akq;
                    rq[k] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(k, p), aqk = a(k, q);
                    a(k, p) = c * apk - s * aqk;
                    a(k, q) = s * apk + c * aqk;
                }
            }
        }
    }

    Vector eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i);
    std::sort(eig.data.begin(), eig.data.end(), std::greater<double>());
    return eig;
}

Vector singular_values(const Matrix& m) {
    if (m.empty()) throw std::invalid_argument("singular_values: empty matrix");
    require_finite(m, "singular_values input");

    const bool tall = m.rows >= m.cols;
    const std::size_t n = tall ? m.cols : m.rows;

    // Smaller Gram matrix: m^T m when tall, m m^T otherwise.
    Matrix gram(n, n);
    if (tall) {
        for (std::size_t r = 0; r < m.rows; ++r) {
            const double* row = m.row(r);
            for (std::size_t i = 0; i < n; ++i) {
                const double mi = row[i];
                if (mi == 0.0) continue;
                for (std::size_t j = i; j < n; ++j) gram(i, j) += mi * row[j];
            }
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < i; ++j) gram(i, j) = gram(j, i);
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            const double* ri = m.row(i);
            for (std::size_t j = i; j < n; ++j) {
                const double* rj = m.row(j);
                double dot = 0.0;
                for (std::size_t k = 0; k < m.cols; ++k) dot += ri[k] * rj[k];
                gram(i, j) = dot;
                gram(j, i) = dot;
            }
        }
    }

    Vector eig = symmetric_eigenvalues(std::move(gram));
    Vector sv(n);
    for (std::size_t i = 0; i < n; ++i) sv[i] = std::sqrt(std::max(eig[i], 0.0));
    return sv;
}

}  // namespace mtae
