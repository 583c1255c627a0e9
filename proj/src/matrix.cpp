#include "fastattrib/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "fastattrib/errors.hpp"

namespace fastattrib {

bool Matrix::all_finite() const {
    for (double x : data_)
        if (!std::isfinite(x)) return false;
    return true;
}

Matrix Matrix::identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

VecD matvec(const Matrix& m, const VecD& x) {
    if (x.size() != m.cols()) throw PreconditionError("matvec: dimension mismatch");
    VecD y(m.rows(), 0.0);
    for (size_t i = 0; i < m.rows(); ++i) {
        const double* r = m.row(i);
        double acc = 0.0;
        for (size_t j = 0; j < m.cols(); ++j) acc += r[j] * x[j];
        y[i] = acc;
    }
    return y;
}

VecD matvec_t(const Matrix& m, const VecD& x) {
    if (x.size() != m.rows()) throw PreconditionError("matvec_t: dimension mismatch");
    VecD y(m.cols(), 0.0);
    for (size_t i = 0; i < m.rows(); ++i) {
        const double* r = m.row(i);
        const double xi = x[i];
        for (size_t j = 0; j < m.cols(); ++j) y[j] += xi * r[j];
    }
    return y;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw PreconditionError("matmul: dimension mismatch");
    Matrix c(a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); ++i) {
        const double* ar = a.row(i);
        double* cr = c.row(i);
        for (size_t k = 0; k < a.cols(); ++k) {
            const double aik = ar[k];
            const double* br = b.row(k);
            for (size_t j = 0; j < b.cols(); ++j) cr[j] += aik * br[j];
        }
    }
    return c;
}

Matrix matmul_bt(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw PreconditionError("matmul_bt: dimension mismatch");
    Matrix c(a.rows(), b.rows());
    for (size_t i = 0; i < a.rows(); ++i) {
        const double* ar = a.row(i);
        double* cr = c.row(i);
        for (size_t j = 0; j < b.rows(); ++j) {
            const double* br = b.row(j);
            double acc = 0.0;
            for (size_t k = 0; k < a.cols(); ++k) acc += ar[k] * br[k];
            cr[j] = acc;
        }
    }
    return c;
}

Matrix matmul_at(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw PreconditionError("matmul_at: dimension mismatch");
    Matrix c(a.cols(), b.cols());
    for (size_t k = 0; k < a.rows(); ++k) {
        const double* ar = a.row(k);
        const double* br = b.row(k);
        for (size_t i = 0; i < a.cols(); ++i) {
            const double aki = ar[i];
            double* cr = c.row(i);
            for (size_t j = 0; j < b.cols(); ++j) cr[j] += aki * br[j];
        }
    }
    return c;
}

Matrix transpose(const Matrix& m) {
    Matrix t(m.cols(), m.rows());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
    return t;
}

double dot(const VecD& a, const VecD& b) {
    double acc = 0.0;
    for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

double norm2(const VecD& a) { return std::sqrt(dot(a, a)); }

void axpy(double alpha, const VecD& x, VecD& y) {
    for (size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

namespace {

double off_diag_sq(const Matrix& m) {
    double s = 0.0;
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            if (i != j) s += m(i, j) * m(i, j);
    return s;
}

}  // namespace

std::pair<Matrix, VecD> sym_eigh(const Matrix& input) {
    const size_t n = input.rows();
    if (n != input.cols()) throw PreconditionError("sym_eigh: matrix not square");

    double scale = 0.0;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) scale = std::max(scale, std::abs(input(i, j)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (std::abs(input(i, j) - input(j, i)) > 1e-9 * std::max(1.0, scale))
                throw PreconditionError("sym_eigh: matrix not symmetric");

    Matrix a = input;
    // Symmetrize exactly so rotations keep a symmetric.
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            double v = 0.5 * (a(i, j) + a(j, i));
            a(i, j) = v;
            a(j, i) = v;
        }
    Matrix u = Matrix::identity(n);

    const double frob_sq = [&] {
        double s = 0.0;
        for (double x : a.data()) s += x * x;
        return s;
    }();
    const double tol_sq = frob_sq * 1e-28 + 1e-300;

    const int max_sweeps = 64;
    int sweep = 0;
    for (; sweep < max_sweeps; ++sweep) {
        if (off_diag_sq(a) <= tol_sq) break;
        for (size_t p = 0; p + 1 < n; ++p) {
            for (size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double app = a(p, p), aqq = a(q, q);
                const double theta = (aqq - app) / (2.0 * apq);
                const double t = (theta >= 0.0)
                                     ? 1.0 / (theta + std::sqrt(1.0 + theta * theta))
                                     : 1.0 / (theta - std::sqrt(1.0 + theta * theta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (size_t k = 0; k < n; ++k) {
                    const double ukp = u(k, p), ukq = u(k, q);
                    u(k, p) = c * ukp - s * ukq;
                    u(k, q) = s * ukp + c * ukq;
                }
            }
        }
    }
    if (off_diag_sq(a) > frob_sq * 1e-20 + 1e-280)
        throw NumericError("sym_eigh: no convergence after " + std::to_string(sweep) + " sweeps");

    VecD eigvals(n);
    for (size_t i = 0; i < n; ++i) eigvals[i] = a(i, i);

    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t i, size_t j) { return eigvals[i] > eigvals[j]; });

    Matrix vecs(n, n);
    VecD vals(n);
    for (size_t j = 0; j < n; ++j) {
        const size_t src = order[j];
        vals[j] = eigvals[src];
        // Deterministic sign: the entry of largest magnitude is positive.
        size_t imax = 0;
        double vmax = 0.0;
        for (size_t i = 0; i < n; ++i) {
            double av = std::abs(u(i, src));
            if (av > vmax) {
                vmax = av;
                imax = i;
            }
        }
        const double sign = (u(imax, src) < 0.0) ? -1.0 : 1.0;
        for (size_t i = 0; i < n; ++i) vecs(i, j) = sign * u(i, src);
    }
    return {std::move(vecs), std::move(vals)};
}

}  // namespace fastattrib
