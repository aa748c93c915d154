// SPDX-License-Identifier: Apache-2.0
// Rank-only classification oracle: decides entanglement from the spectrum of
// CC† alone, never touching the Takagi/Youla code paths. Kept test-only so
// the production classifier can be checked against an independent route.
#pragma once

#include <cmath>
#include <vector>

#include "entpair/criteria.hpp"
#include "entpair/decompositions.hpp"
#include "entpair/errors.hpp"
#include "entpair/linalg.hpp"
#include "entpair/states.hpp"

namespace entpair::testing {

struct RankOnlyResult {
    std::size_t count = 0;                // Slater or Schmidt number
    std::vector<double> singular_values;  // descending, noise snapped to zero
    Verdict verdict = Verdict::Entangled;
};

inline std::vector<double> singular_values_via_eig(const ComplexMatrix& c) {
    const ComplexMatrix gram = mat_mul(c, adjoint(c));
    HermitianEig eig = hermitian_eig(gram);
    const double lmax = eig.eigenvalues.empty() ? 0.0 : std::max(eig.eigenvalues.front(), 0.0);
    std::vector<double> sv(eig.eigenvalues.size());
    for (std::size_t i = 0; i < sv.size(); ++i) {
        double l = std::max(eig.eigenvalues[i], 0.0);
        if (l <= kEigenvalueFloor * lmax) l = 0.0;
        sv[i] = std::sqrt(l);
    }
    return sv;
}

inline RankOnlyResult rank_only_classify(const TwoParticleState& state,
                                         double tol = kDefaultClassifyTol) {
    RankOnlyResult result;
    result.singular_values = singular_values_via_eig(state.coeffs());
    const std::size_t nonzero = canonical_rank(result.singular_values);

    if (state.statistics() == Statistics::Fermion) {
        if (nonzero % 2 != 0)
            throw InternalConsistencyError("oracle: odd rank for an antisymmetric matrix");
        result.count = nonzero / 2;
        result.verdict = result.count == 1 ? Verdict::NonEntangled : Verdict::Entangled;
        return result;
    }

    result.count = nonzero;
    if (nonzero == 1) {
        result.verdict = Verdict::NonEntangled;
    } else if (nonzero == 2 &&
               std::abs(result.singular_values[0] - result.singular_values[1]) <= tol) {
        result.verdict = Verdict::NonEntangled;
    } else {
        result.verdict = Verdict::Entangled;
    }
    return result;
}

}  // namespace entpair::testing
