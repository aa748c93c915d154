// SPDX-License-Identifier: Apache-2.0
#include "entpair/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "entpair/errors.hpp"

namespace entpair {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows())
        throw ContractViolation("mat_mul: inner dimensions disagree (" +
                                std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + ")");
    ComplexMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
    ComplexMatrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = std::conj(a(i, j));
    return t;
}

ComplexMatrix transpose(const ComplexMatrix& a) {
    ComplexMatrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

ComplexMatrix conjugate(const ComplexMatrix& a) {
    ComplexMatrix t(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t(i, j) = std::conj(a(i, j));
    return t;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ContractViolation("matrix add: shape mismatch");
    ComplexMatrix c = a;
    for (std::size_t i = 0; i < c.entries().size(); ++i) c.entries()[i] += b.entries()[i];
    return c;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ContractViolation("matrix subtract: shape mismatch");
    ComplexMatrix c = a;
    for (std::size_t i = 0; i < c.entries().size(); ++i) c.entries()[i] -= b.entries()[i];
    return c;
}

ComplexMatrix operator*(Complex scale, const ComplexMatrix& a) {
    ComplexMatrix c = a;
    for (auto& e : c.entries()) e *= scale;
    return c;
}

Complex trace(const ComplexMatrix& a) {
    Complex t = 0.0;
    const std::size_t n = std::min(a.rows(), a.cols());
    for (std::size_t i = 0; i < n; ++i) t += a(i, i);
    return t;
}

double frobenius_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (const auto& e : a.entries()) s += std::norm(e);
    return std::sqrt(s);
}

bool is_finite(const ComplexMatrix& a) {
    for (const auto& e : a.entries())
        if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) return false;
    return true;
}

Complex inner(const ComplexVector& x, const ComplexVector& y) {
    if (x.size() != y.size()) throw ContractViolation("inner: length mismatch");
    Complex s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
    return s;
}

double vector_norm(const ComplexVector& x) {
    double s = 0.0;
    for (const auto& e : x) s += std::norm(e);
    return std::sqrt(s);
}

ComplexMatrix outer(const ComplexVector& x, const ComplexVector& y) {
    ComplexMatrix m(x.size(), y.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) m(i, j) = x[i] * y[j];
    return m;
}

ComplexVector mat_vec(const ComplexMatrix& a, const ComplexVector& x) {
    if (a.cols() != x.size()) throw ContractViolation("mat_vec: length mismatch");
    ComplexVector y(a.rows(), Complex(0.0, 0.0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
    return y;
}

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

}  // namespace

HermitianEig hermitian_eig(const ComplexMatrix& h, double eig_tol) {
    if (h.rows() != h.cols()) throw ContractViolation("hermitian_eig: matrix must be square");
    if (!is_finite(h)) throw ValidationError("hermitian_eig: matrix has non-finite entries");
    const std::size_t n = h.rows();
    const double hnorm = frobenius_norm(h);

    double defect = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) defect += std::norm(h(i, j) - std::conj(h(j, i)));
    defect = std::sqrt(defect);
    if (defect > eig_tol * std::max(hnorm, 1e-300))
        throw ValidationError("hermitian_eig: input is not Hermitian within tolerance");

    // Work on the exactly-Hermitian part.
    ComplexMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = Complex(h(i, i).real(), 0.0);
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex m = 0.5 * (h(i, j) + std::conj(h(j, i)));
            a(i, j) = m;
            a(j, i) = std::conj(m);
        }
    }

    ComplexMatrix v = ComplexMatrix::identity(n);
    const double threshold = 1e-13 * hnorm;
    const int max_sweeps = 100;

    bool converged = off_diagonal_norm(a) <= threshold;
    for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double abs_apq = std::abs(apq);
                if (abs_apq == 0.0) continue;

                // Peel the pivot phase off so the 2x2 problem is real, then
                // apply the standard symmetric Schur rotation.
                const Complex omega = apq / abs_apq;
                const Complex cw = std::conj(omega);
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2.0 * abs_apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                for (std::size_t r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const Complex arp = a(r, p);
                    const Complex arq = a(r, q);
                    a(r, p) = c * arp - cw * s * arq;
                    a(r, q) = s * arp + cw * c * arq;
                    a(p, r) = std::conj(a(r, p));
                    a(q, r) = std::conj(a(r, q));
                }
                const double delta = t * abs_apq;
                a(p, p) = Complex(app - delta, 0.0);
                a(q, q) = Complex(aqq + delta, 0.0);
                a(p, q) = 0.0;
                a(q, p) = 0.0;

                for (std::size_t r = 0; r < n; ++r) {
                    const Complex vrp = v(r, p);
                    const Complex vrq = v(r, q);
                    v(r, p) = c * vrp - cw * s * vrq;
                    v(r, q) = s * vrp + cw * c * vrq;
                }
            }
        }
        converged = off_diagonal_norm(a) <= threshold;
    }
    if (!converged)
        throw ConvergenceError("hermitian_eig: Jacobi sweeps exhausted without convergence");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return a(i, i).real() > a(j, j).real();
    });

    HermitianEig out;
    out.eigenvalues.resize(n);
    out.eigenvectors = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = a(order[k], order[k]).real();
        for (std::size_t r = 0; r < n; ++r) out.eigenvectors(r, k) = v(r, order[k]);
    }
    return out;
}

}  // namespace entpair
