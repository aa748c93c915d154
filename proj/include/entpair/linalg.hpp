// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace entpair {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Dense row-major complex matrix. The only matrix carrier in the library;
/// dimensions stay small (single-particle spaces of a few dozen states), so
/// everything is plain contiguous storage with value semantics.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Complex(0.0, 0.0)) {}

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    const std::vector<Complex>& entries() const { return entries_; }
    std::vector<Complex>& entries() { return entries_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;
};

ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& a);
ComplexMatrix transpose(const ComplexMatrix& a);
ComplexMatrix conjugate(const ComplexMatrix& a);

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scale, const ComplexMatrix& a);

Complex trace(const ComplexMatrix& a);
double frobenius_norm(const ComplexMatrix& a);
bool is_finite(const ComplexMatrix& a);

/// x† y
Complex inner(const ComplexVector& x, const ComplexVector& y);
double vector_norm(const ComplexVector& x);
/// x yᵀ (no conjugation; the coefficient-matrix building block)
ComplexMatrix outer(const ComplexVector& x, const ComplexVector& y);
ComplexVector mat_vec(const ComplexMatrix& a, const ComplexVector& x);

/// Eigendecomposition of a Hermitian matrix: H = V diag(λ) V†.
/// Eigenvalues are real and sorted descending; ties keep the solver's
/// original column order. Columns of `eigenvectors` are orthonormal.
struct HermitianEig {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;
};

/// Cyclic complex Jacobi rotations, deterministic row-major sweep order over
/// the upper triangle. Converges when the off-diagonal Frobenius norm drops
/// below 1e-13·‖H‖_F; throws ConvergenceError after 100 sweeps.
/// `eig_tol` bounds the accepted Hermiticity defect ‖H − H†‖_F / ‖H‖_F.
HermitianEig hermitian_eig(const ComplexMatrix& h, double eig_tol = 1e-12);

}  // namespace entpair
