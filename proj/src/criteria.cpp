// SPDX-License-Identifier: Apache-2.0
#include "entpair/criteria.hpp"

#include <cmath>

#include "entpair/errors.hpp"

namespace entpair {

PropertyReport expectation_E_P(const TwoParticleState& state, const ComplexVector& p) {
    if (p.size() != state.dim())
        throw ValidationError("expectation_E_P: projector dimension does not match the state");
    for (const auto& e : p)
        if (!std::isfinite(e.real()) || !std::isfinite(e.imag()))
            throw ValidationError("expectation_E_P: non-finite projector entry");
    if (std::abs(vector_norm(p) - 1.0) > 1e-9)
        throw ValidationError("expectation_E_P: projector state must be normalized");

    const ComplexMatrix& c = state.coeffs();
    const DensityOperator rho = reduced_density(state);

    // ⟨P⊗I⟩ = ⟨I⊗P⟩ = p†ρp, and ⟨P⊗P⟩ = |p† C p̄|².
    const ComplexVector rho_p = mat_vec(rho.matrix(), p);
    const double p_rho_p = inner(p, rho_p).real();

    Complex w = 0.0;
    for (std::size_t i = 0; i < state.dim(); ++i)
        for (std::size_t j = 0; j < state.dim(); ++j)
            w += std::conj(p[i]) * c(i, j) * std::conj(p[j]);

    PropertyReport report;
    report.projector_state = p;
    report.pp_value = std::norm(w);
    report.e_p_value = 2.0 * p_rho_p - report.pp_value;
    return report;
}

namespace {

ComplexVector basis_column(const ComplexMatrix& basis, std::size_t c) {
    ComplexVector v(basis.rows());
    for (std::size_t r = 0; r < basis.rows(); ++r) v[r] = basis(r, c);
    return v;
}

}  // namespace

Classification classify(const TwoParticleState& state, double tol, double fact_tol,
                        double rank_tol) {
    const SchmidtData data = schmidt_data(state, fact_tol, rank_tol);

    Classification result;
    result.slater_or_schmidt_number = data.count;
    result.entropy = von_neumann_entropy(reduced_density(state));

    if (state.statistics() == Statistics::Fermion) {
        if (data.count == 1) {
            result.verdict = Verdict::NonEntangled;
            result.subcase = Subcase::FermionSlaterOne;
            result.witness = WitnessPair{basis_column(data.basis, 0), basis_column(data.basis, 1)};
        } else {
            result.verdict = Verdict::Entangled;
            result.subcase = Subcase::FermionSlaterMany;
        }
        return result;
    }

    if (data.count == 1) {
        result.verdict = Verdict::NonEntangled;
        result.subcase = Subcase::BosonProduct;
        const ComplexVector phi = basis_column(data.basis, 0);
        result.witness = WitnessPair{phi, phi};
    } else if (data.count == 2 &&
               std::abs(data.coefficients[0] - data.coefficients[1]) <= tol) {
        // Equal coefficients: the state symmetrizes an orthogonal pair,
        // φ = (|1⟩ − i|2⟩)/√2 and χ = (|1⟩ + i|2⟩)/√2 in the Takagi basis.
        result.verdict = Verdict::NonEntangled;
        result.subcase = Subcase::BosonOrthogonalPair;
        const ComplexVector u0 = basis_column(data.basis, 0);
        const ComplexVector u1 = basis_column(data.basis, 1);
        const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
        ComplexVector phi(state.dim()), chi(state.dim());
        for (std::size_t r = 0; r < state.dim(); ++r) {
            phi[r] = inv_sqrt2 * (u0[r] - Complex(0.0, 1.0) * u1[r]);
            chi[r] = inv_sqrt2 * (u0[r] + Complex(0.0, 1.0) * u1[r]);
        }
        result.witness = WitnessPair{std::move(phi), std::move(chi)};
    } else if (data.count == 2) {
        result.verdict = Verdict::Entangled;
        result.subcase = Subcase::BosonNonOrthogonalPair;
    } else {
        result.verdict = Verdict::Entangled;
        result.subcase = Subcase::BosonRankThreePlus;
    }
    return result;
}

std::optional<WitnessPair> attribute_properties(const TwoParticleState& state, double tol,
                                                double fact_tol, double rank_tol) {
    Classification c = classify(state, tol, fact_tol, rank_tol);
    if (!c.witness) return std::nullopt;

    for (const ComplexVector* v : {&c.witness->first, &c.witness->second}) {
        const PropertyReport report = expectation_E_P(state, *v);
        if (std::abs(report.e_p_value - 1.0) > tol)
            throw CertificationError(
                "attribute_properties: witness fails the E_P = 1 contract (value " +
                std::to_string(report.e_p_value) + ")");
    }
    return std::move(c.witness);
}

}  // namespace entpair
