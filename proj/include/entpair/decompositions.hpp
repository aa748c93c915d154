// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "entpair/linalg.hpp"

namespace entpair {

/// Certification tolerance for reconstruction residuals and unitarity defects.
inline constexpr double kDefaultFactTol = 1e-10;
/// Eigenvalues of MM† within this relative distance are handled as one
/// degenerate cluster (phase construction is unstable across near-crossings).
inline constexpr double kDegeneracyTol = 1e-8;
/// A canonical value at or below kRankTol times the largest one counts as zero
/// for rank decisions (Slater/Schmidt numbers).
inline constexpr double kRankTol = 1e-9;
/// Eigenvalues of MM† below this relative floor are snapped to exact zero:
/// forming MM† already perturbs true zeros by ~machine-epsilon·λmax, so
/// square roots of smaller eigenvalues carry no information.
inline constexpr double kEigenvalueFloor = 1e-12;

/// Takagi factorization of a complex symmetric matrix: B = U diag(σ) Uᵀ with
/// U unitary and σ nonnegative, descending. `residual` = ‖B − U diag(σ) Uᵀ‖_F
/// and `unitarity_defect` = ‖U†U − I‖_F are certified ≤ fact_tol.
struct TakagiResult {
    ComplexMatrix u;
    std::vector<double> sigma;
    double residual = 0.0;
    double unitarity_defect = 0.0;
};

/// Youla canonical form of a complex antisymmetric matrix: A = U Z Uᵀ with
/// Z a direct sum of 2×2 blocks [[0, zᵢ], [−zᵢ, 0]] followed by a null block.
struct YoulaResult {
    ComplexMatrix u;
    std::vector<double> z;
    std::size_t null_dim = 0;
    double residual = 0.0;
    double unitarity_defect = 0.0;
};

TakagiResult takagi(const ComplexMatrix& b, double fact_tol = kDefaultFactTol);
YoulaResult youla(const ComplexMatrix& a, double fact_tol = kDefaultFactTol);

/// The block matrix Z of a Youla form, for reconstruction and reporting.
ComplexMatrix youla_block_matrix(const std::vector<double>& z, std::size_t n);

/// Number of canonical values above the zero threshold kRankTol·(largest).
std::size_t canonical_rank(const std::vector<double>& values, double rank_tol = kRankTol);

}  // namespace entpair
