// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include <json.hpp>

#include "entpair/criteria.hpp"
#include "entpair/states.hpp"

namespace entpair {

/// The tolerance bundle used by the analysis commands. One knob (the
/// classification tolerance) scales the whole bundle proportionally so the
/// three levels keep their relative spacing.
struct Tolerances {
    double factorization = kDefaultFactTol;
    double rank = kRankTol;
    double classification = kDefaultClassifyTol;

    static Tolerances scaled_from_classification(double classify_tol);
};

// Complex payloads are arrays of [re, im] pairs; matrices are row-major
// arrays of such rows.
nlohmann::json vector_to_json(const ComplexVector& v);
ComplexVector vector_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

/// State file: {"dimension": d, "statistics": "fermion"|"boson", and exactly
/// one of "coefficients" (d×d matrix) or "product": {"phi", "chi", "mode"}}.
TwoParticleState state_from_json(const nlohmann::json& j, double symmetry_tol = kSymmetryTol);
TwoParticleState load_state_file(const std::string& path, double symmetry_tol = kSymmetryTol);

nlohmann::json product_state_file(const std::string& mode, const ComplexVector& phi,
                                  const ComplexVector& chi);

std::string verdict_name(Verdict v);
std::string subcase_name(Subcase s);
std::string statistics_label(Statistics s);

nlohmann::json classification_report(const Classification& c, const SchmidtData& data,
                                     const Tolerances& tol);
nlohmann::json schmidt_report(const SchmidtData& data);
nlohmann::json property_report_json(const PropertyReport& report);

}  // namespace entpair
