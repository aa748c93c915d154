// SPDX-License-Identifier: Apache-2.0
#include "entpair/states.hpp"

#include <cmath>
#include <string>

#include "entpair/errors.hpp"

namespace entpair {

namespace {

ComplexMatrix symmetry_projection(const ComplexMatrix& c, Statistics statistics) {
    const ComplexMatrix t = transpose(c);
    return statistics == Statistics::Fermion ? Complex(0.5) * (c - t) : Complex(0.5) * (c + t);
}

void renormalize(ComplexMatrix& c) {
    const double norm = frobenius_norm(c);
    for (auto& e : c.entries()) e /= norm;
}

const char* statistics_name(Statistics s) {
    return s == Statistics::Fermion ? "fermion" : "boson";
}

}  // namespace

TwoParticleState TwoParticleState::from_coefficients(ComplexMatrix coeffs, Statistics statistics,
                                                     double symmetry_tol) {
    if (coeffs.rows() != coeffs.cols() || coeffs.rows() == 0)
        throw ValidationError("state: coefficient matrix must be square and nonempty");
    if (!is_finite(coeffs))
        throw ValidationError("state: coefficient matrix has non-finite entries");

    const double norm = frobenius_norm(coeffs);
    if (std::abs(norm - 1.0) > kNormWindow)
        throw ValidationError("state: norm " + std::to_string(norm) +
                              " deviates from 1 beyond the renormalization window");

    const ComplexMatrix projected = symmetry_projection(coeffs, statistics);
    const double defect = frobenius_norm(coeffs - projected);
    if (defect > symmetry_tol)
        throw ValidationError(std::string("state: matrix is not ") +
                              (statistics == Statistics::Fermion ? "antisymmetric" : "symmetric") +
                              " within tolerance (defect " + std::to_string(defect) +
                              ") for " + statistics_name(statistics) + " statistics");

    ComplexMatrix c = projected;
    renormalize(c);
    return TwoParticleState(std::move(c), statistics);
}

namespace {

TwoParticleState exchange_product(const ComplexVector& phi, const ComplexVector& chi,
                                  Statistics statistics) {
    if (phi.size() != chi.size() || phi.empty())
        throw ValidationError("product state: vectors must share a nonzero dimension");
    for (const ComplexVector* v : {&phi, &chi}) {
        for (const auto& e : *v)
            if (!std::isfinite(e.real()) || !std::isfinite(e.imag()))
                throw ValidationError("product state: non-finite vector entry");
        if (std::abs(vector_norm(*v) - 1.0) > 1e-9)
            throw ValidationError("product state: input vectors must be normalized");
    }

    const ComplexMatrix cross = outer(phi, chi);
    const ComplexMatrix swapped = outer(chi, phi);
    ComplexMatrix c = statistics == Statistics::Fermion ? cross - swapped : cross + swapped;
    const double norm = frobenius_norm(c);
    if (statistics == Statistics::Fermion && norm <= 1e-12)
        throw DegenerateInputError(
            "antisymmetrize_product: vectors are parallel (Pauli exclusion)");
    for (auto& e : c.entries()) e /= norm;
    return TwoParticleState::from_coefficients(std::move(c), statistics);
}

}  // namespace

TwoParticleState antisymmetrize_product(const ComplexVector& phi, const ComplexVector& chi) {
    return exchange_product(phi, chi, Statistics::Fermion);
}

TwoParticleState symmetrize_product(const ComplexVector& phi, const ComplexVector& chi) {
    return exchange_product(phi, chi, Statistics::Boson);
}

DensityOperator DensityOperator::from_matrix(ComplexMatrix matrix) {
    if (matrix.rows() != matrix.cols() || matrix.rows() == 0)
        throw ValidationError("density operator: matrix must be square and nonempty");
    if (!is_finite(matrix))
        throw ValidationError("density operator: non-finite entries");
    if (frobenius_norm(matrix - adjoint(matrix)) > 1e-10)
        throw ValidationError("density operator: matrix is not Hermitian within tolerance");
    const Complex tr = trace(matrix);
    if (std::abs(tr - Complex(1.0)) > 1e-10)
        throw ValidationError("density operator: trace deviates from 1");
    return DensityOperator(std::move(matrix));
}

DensityOperator reduced_density(const TwoParticleState& state) {
    // ρ = C C†; tr ρ = ‖C‖_F² = 1 by state normalization.
    const ComplexMatrix& c = state.coeffs();
    ComplexMatrix rho = mat_mul(c, adjoint(c));
    // Make Hermiticity exact against rounding in the product.
    for (std::size_t i = 0; i < rho.rows(); ++i) {
        rho(i, i) = Complex(rho(i, i).real(), 0.0);
        for (std::size_t j = i + 1; j < rho.cols(); ++j) {
            const Complex m = 0.5 * (rho(i, j) + std::conj(rho(j, i)));
            rho(i, j) = m;
            rho(j, i) = std::conj(m);
        }
    }
    return DensityOperator::from_matrix(std::move(rho));
}

double von_neumann_entropy(const DensityOperator& rho) {
    const HermitianEig eig = hermitian_eig(rho.matrix());
    double s = 0.0;
    for (double lambda : eig.eigenvalues) {
        if (lambda < -1e-10)
            throw ValidationError("entropy: density operator has eigenvalue " +
                                  std::to_string(lambda) + " below -1e-10");
        if (lambda <= 0.0) continue;
        s -= lambda * std::log2(lambda);
    }
    return s;
}

SchmidtData schmidt_data(const TwoParticleState& state, double fact_tol, double rank_tol) {
    SchmidtData data;
    data.statistics = state.statistics();
    if (state.statistics() == Statistics::Fermion) {
        YoulaResult y = youla(state.coeffs(), fact_tol);
        data.coefficients.reserve(y.z.size());
        for (double z : y.z) data.coefficients.push_back(std::sqrt(2.0) * z);
        data.basis = std::move(y.u);
        data.residual = y.residual;
        data.unitarity_defect = y.unitarity_defect;
    } else {
        TakagiResult t = takagi(state.coeffs(), fact_tol);
        data.coefficients = std::move(t.sigma);
        data.basis = std::move(t.u);
        data.residual = t.residual;
        data.unitarity_defect = t.unitarity_defect;
    }
    data.count = canonical_rank(data.coefficients, rank_tol);
    return data;
}

ComplexMatrix rebuild_from_schmidt(const SchmidtData& data) {
    const std::size_t n = data.basis.rows();
    ComplexMatrix middle(n, n);
    if (data.statistics == Statistics::Fermion) {
        std::vector<double> z;
        z.reserve(data.coefficients.size());
        for (double a : data.coefficients) z.push_back(a / std::sqrt(2.0));
        middle = youla_block_matrix(z, n);
    } else {
        for (std::size_t i = 0; i < data.coefficients.size(); ++i)
            middle(i, i) = data.coefficients[i];
    }
    return mat_mul(mat_mul(data.basis, middle), transpose(data.basis));
}

std::pair<double, double> predicted_schmidt_coefficients(double overlap_modulus) {
    if (!(overlap_modulus >= 0.0 && overlap_modulus < 1.0))
        throw ValidationError("predicted_schmidt_coefficients: overlap modulus must lie in [0, 1)");
    const double s2 = overlap_modulus * overlap_modulus;
    const double b_sq = (1.0 - s2) / (1.0 + s2);  // |b|² of the ⊥-split form
    const double root = std::sqrt(1.0 - b_sq * b_sq);
    return {std::sqrt(0.5 * (1.0 + root)), std::sqrt(0.5 * (1.0 - root))};
}

double state_overlap_modulus(const TwoParticleState& a, const TwoParticleState& b) {
    if (a.dim() != b.dim())
        throw ValidationError("state overlap: dimensions differ");
    Complex s = 0.0;
    for (std::size_t i = 0; i < a.coeffs().entries().size(); ++i)
        s += std::conj(a.coeffs().entries()[i]) * b.coeffs().entries()[i];
    return std::abs(s);
}

}  // namespace entpair
