// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "entpair/decompositions.hpp"
#include "entpair/linalg.hpp"

namespace entpair {

enum class Statistics { Fermion, Boson };

inline constexpr double kSymmetryTol = 1e-10;
inline constexpr double kNormWindow = 1e-6;

/// Pure state of two identical particles over a dim-dimensional
/// single-particle space: |ψ⟩ = Σᵢⱼ c_ij |i⟩₁⊗|j⟩₂ with the coefficient
/// matrix antisymmetric (fermions) or symmetric (bosons) and unit
/// Frobenius norm. Construction validates; instances are immutable.
class TwoParticleState {
public:
    static TwoParticleState from_coefficients(ComplexMatrix coeffs, Statistics statistics,
                                              double symmetry_tol = kSymmetryTol);

    std::size_t dim() const { return coeffs_.rows(); }
    Statistics statistics() const { return statistics_; }
    const ComplexMatrix& coeffs() const { return coeffs_; }

private:
    TwoParticleState(ComplexMatrix coeffs, Statistics statistics)
        : coeffs_(std::move(coeffs)), statistics_(statistics) {}

    ComplexMatrix coeffs_;
    Statistics statistics_;
};

/// (φχᵀ − χφᵀ)/‖·‖: the fermionic state obtained by antisymmetrizing φ⊗χ.
/// Parallel inputs are Pauli-forbidden and raise DegenerateInputError.
TwoParticleState antisymmetrize_product(const ComplexVector& phi, const ComplexVector& chi);

/// (φχᵀ + χφᵀ)/‖·‖: the bosonic state obtained by symmetrizing φ⊗χ.
/// For φ = χ this is the product state φ⊗φ.
TwoParticleState symmetrize_product(const ComplexVector& phi, const ComplexVector& chi);

/// Single-particle reduced density operator (both marginals coincide for
/// exchange-(anti)symmetric states).
class DensityOperator {
public:
    static DensityOperator from_matrix(ComplexMatrix matrix);

    std::size_t dim() const { return matrix_.rows(); }
    const ComplexMatrix& matrix() const { return matrix_; }

private:
    explicit DensityOperator(ComplexMatrix matrix) : matrix_(std::move(matrix)) {}

    ComplexMatrix matrix_;
};

DensityOperator reduced_density(const TwoParticleState& state);

/// −Σ λᵢ log₂ λᵢ with 0·log 0 = 0; eigenvalues in [−1e−10, 0] are clamped,
/// anything more negative is rejected.
double von_neumann_entropy(const DensityOperator& rho);

/// Canonical decomposition data: Slater coefficients aᵢ = √2·zᵢ with the
/// Youla basis for fermions, Schmidt coefficients bᵢ with the Takagi basis
/// for bosons. `count` is the Slater/Schmidt number.
struct SchmidtData {
    Statistics statistics;
    std::vector<double> coefficients;
    ComplexMatrix basis;
    std::size_t count = 0;
    double residual = 0.0;
    double unitarity_defect = 0.0;
};

SchmidtData schmidt_data(const TwoParticleState& state, double fact_tol = kDefaultFactTol,
                         double rank_tol = kRankTol);

/// Coefficient matrix rebuilt from SchmidtData (the decomposition read back
/// as a state).
ComplexMatrix rebuild_from_schmidt(const SchmidtData& data);

/// Closed-form Schmidt pair of a symmetrized non-orthogonal product with
/// overlap modulus s = |⟨χ|φ⟩| ∈ [0, 1), descending.
std::pair<double, double> predicted_schmidt_coefficients(double overlap_modulus);

/// |⟨ψ₁|ψ₂⟩|: equality up to global phase means this is 1.
double state_overlap_modulus(const TwoParticleState& a, const TwoParticleState& b);

}  // namespace entpair
