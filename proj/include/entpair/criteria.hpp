// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <utility>

#include "entpair/states.hpp"

namespace entpair {

inline constexpr double kDefaultClassifyTol = 1e-8;

enum class Verdict { NonEntangled, Entangled };

enum class Subcase {
    FermionSlaterOne,
    FermionSlaterMany,
    BosonProduct,
    BosonOrthogonalPair,
    BosonNonOrthogonalPair,
    BosonRankThreePlus,
};

/// Witness pair (φ, χ): re-(anti)symmetrizing it reproduces the state.
using WitnessPair = std::pair<ComplexVector, ComplexVector>;

struct Classification {
    Verdict verdict;
    Subcase subcase;
    std::size_t slater_or_schmidt_number = 0;
    double entropy = 0.0;
    std::optional<WitnessPair> witness;  // present exactly when NonEntangled
};

/// Expectation of the property-attribution operator
/// E_P = P⊗(I−P) + (I−P)⊗P + P⊗P for the one-dimensional projector onto p,
/// together with ⟨P⊗P⟩. e_p_value = 1 certifies that at least one particle
/// carries the complete property set defined by p.
struct PropertyReport {
    ComplexVector projector_state;
    double e_p_value = 0.0;
    double pp_value = 0.0;
};

PropertyReport expectation_E_P(const TwoParticleState& state, const ComplexVector& p);

/// Entanglement decision. Fermions: non-entangled iff the Slater number is 1.
/// Bosons: non-entangled iff the Schmidt number is 1, or it is 2 with equal
/// coefficients (the orthogonal-pair symmetrization); the coefficient gap is
/// compared against `tol`, which is better conditioned than the equivalent
/// entropy-equals-one test. The reported entropy is always populated.
Classification classify(const TwoParticleState& state, double tol = kDefaultClassifyTol,
                        double fact_tol = kDefaultFactTol, double rank_tol = kRankTol);

/// Witness pair for non-entangled states (absent for entangled ones); each
/// returned vector is verified to achieve e_p_value = 1 within tol.
std::optional<WitnessPair> attribute_properties(const TwoParticleState& state,
                                                double tol = kDefaultClassifyTol,
                                                double fact_tol = kDefaultFactTol,
                                                double rank_tol = kRankTol);

}  // namespace entpair
