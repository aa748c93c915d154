// SPDX-License-Identifier: Apache-2.0
#include "entpair/io.hpp"

#include <fstream>

#include "entpair/errors.hpp"

namespace entpair {

using nlohmann::json;

Tolerances Tolerances::scaled_from_classification(double classify_tol) {
    if (!(classify_tol > 0.0) || !std::isfinite(classify_tol))
        throw ValidationError("tolerance must be a positive finite number");
    const double scale = classify_tol / kDefaultClassifyTol;
    Tolerances t;
    t.factorization *= scale;
    t.rank *= scale;
    t.classification = classify_tol;
    return t;
}

json vector_to_json(const ComplexVector& v) {
    json out = json::array();
    for (const auto& e : v) out.push_back({e.real(), e.imag()});
    return out;
}

namespace {

Complex complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ValidationError("expected a complex entry as a [re, im] pair");
    return Complex(j[0].get<double>(), j[1].get<double>());
}

}  // namespace

ComplexVector vector_from_json(const json& j) {
    if (!j.is_array() || j.empty())
        throw ValidationError("expected a nonempty array of [re, im] pairs");
    ComplexVector v;
    v.reserve(j.size());
    for (const auto& e : j) v.push_back(complex_from_json(e));
    return v;
}

json matrix_to_json(const ComplexMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back({m(i, j).real(), m(i, j).imag()});
        rows.push_back(std::move(row));
    }
    return rows;
}

ComplexMatrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw ValidationError("expected a matrix as an array of rows");
    const std::size_t rows = j.size();
    const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
    if (cols == 0) throw ValidationError("matrix rows must be nonempty arrays");
    ComplexMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw ValidationError("matrix rows have inconsistent lengths");
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = complex_from_json(j[i][c]);
    }
    return m;
}

namespace {

Statistics statistics_from_string(const std::string& s) {
    if (s == "fermion") return Statistics::Fermion;
    if (s == "boson") return Statistics::Boson;
    throw ValidationError("statistics must be \"fermion\" or \"boson\", got \"" + s + "\"");
}

}  // namespace

TwoParticleState state_from_json(const json& j, double symmetry_tol) {
    if (!j.is_object()) throw ValidationError("state file: top level must be a JSON object");
    if (!j.contains("dimension") || !j["dimension"].is_number_unsigned())
        throw ValidationError("state file: missing positive integer \"dimension\"");
    if (!j.contains("statistics") || !j["statistics"].is_string())
        throw ValidationError("state file: missing string \"statistics\"");
    const std::size_t dim = j["dimension"].get<std::size_t>();
    if (dim == 0) throw ValidationError("state file: dimension must be positive");
    const Statistics stats = statistics_from_string(j["statistics"].get<std::string>());

    const bool has_coeffs = j.contains("coefficients");
    const bool has_product = j.contains("product");
    if (has_coeffs == has_product)
        throw ValidationError(
            "state file: provide exactly one of \"coefficients\" or \"product\"");

    if (has_coeffs) {
        ComplexMatrix m = matrix_from_json(j["coefficients"]);
        if (m.rows() != dim || m.cols() != dim)
            throw ValidationError("state file: coefficients must be dimension × dimension");
        return TwoParticleState::from_coefficients(std::move(m), stats, symmetry_tol);
    }

    const json& p = j["product"];
    if (!p.is_object() || !p.contains("phi") || !p.contains("chi") || !p.contains("mode") ||
        !p["mode"].is_string())
        throw ValidationError("state file: \"product\" needs \"phi\", \"chi\" and \"mode\"");
    const std::string mode = p["mode"].get<std::string>();
    const ComplexVector phi = vector_from_json(p["phi"]);
    const ComplexVector chi = vector_from_json(p["chi"]);
    if (phi.size() != dim || chi.size() != dim)
        throw ValidationError("state file: product vectors must have length \"dimension\"");
    if (mode == "antisymmetrize") {
        if (stats != Statistics::Fermion)
            throw ValidationError("state file: antisymmetrize requires fermion statistics");
        return antisymmetrize_product(phi, chi);
    }
    if (mode == "symmetrize") {
        if (stats != Statistics::Boson)
            throw ValidationError("state file: symmetrize requires boson statistics");
        return symmetrize_product(phi, chi);
    }
    throw ValidationError("state file: mode must be \"symmetrize\" or \"antisymmetrize\"");
}

TwoParticleState load_state_file(const std::string& path, double symmetry_tol) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open state file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ValidationError("cannot parse " + path + ": " + e.what());
    }
    return state_from_json(j, symmetry_tol);
}

json product_state_file(const std::string& mode, const ComplexVector& phi,
                        const ComplexVector& chi) {
    if (mode != "symmetrize" && mode != "antisymmetrize")
        throw ValidationError("mode must be \"symmetrize\" or \"antisymmetrize\"");
    if (phi.size() != chi.size()) throw ValidationError("phi and chi must have equal length");
    json out;
    out["dimension"] = phi.size();
    out["statistics"] = mode == "antisymmetrize" ? "fermion" : "boson";
    out["product"] = {{"phi", vector_to_json(phi)},
                      {"chi", vector_to_json(chi)},
                      {"mode", mode}};
    return out;
}

std::string verdict_name(Verdict v) {
    return v == Verdict::NonEntangled ? "non-entangled" : "entangled";
}

std::string subcase_name(Subcase s) {
    switch (s) {
        case Subcase::FermionSlaterOne: return "fermion-slater-one";
        case Subcase::FermionSlaterMany: return "fermion-slater-many";
        case Subcase::BosonProduct: return "boson-product";
        case Subcase::BosonOrthogonalPair: return "boson-orthogonal-pair";
        case Subcase::BosonNonOrthogonalPair: return "boson-non-orthogonal-pair";
        case Subcase::BosonRankThreePlus: return "boson-rank-three-plus";
    }
    return "unknown";
}

std::string statistics_label(Statistics s) {
    return s == Statistics::Fermion ? "fermion" : "boson";
}

json classification_report(const Classification& c, const SchmidtData& data,
                           const Tolerances& tol) {
    json report;
    report["verdict"] = verdict_name(c.verdict);
    report["subcase"] = subcase_name(c.subcase);
    report["slater_or_schmidt_number"] = c.slater_or_schmidt_number;
    report["coefficients"] = data.coefficients;
    report["entropy"] = c.entropy;
    if (c.witness) {
        report["witness"] = {{"phi", vector_to_json(c.witness->first)},
                             {"chi", vector_to_json(c.witness->second)}};
    } else {
        report["witness"] = nullptr;
    }
    report["tolerances"] = {{"factorization", tol.factorization},
                            {"rank", tol.rank},
                            {"classification", tol.classification}};
    report["residuals"] = {{"reconstruction", data.residual},
                           {"unitarity", data.unitarity_defect}};
    return report;
}

json schmidt_report(const SchmidtData& data) {
    json report;
    report["statistics"] = statistics_label(data.statistics);
    report["coefficients"] = data.coefficients;
    report["count"] = data.count;
    report["basis"] = matrix_to_json(data.basis);
    report["residual"] = data.residual;
    report["unitarity_defect"] = data.unitarity_defect;
    return report;
}

json property_report_json(const PropertyReport& report) {
    json out;
    out["projector_state"] = vector_to_json(report.projector_state);
    out["e_p_value"] = report.e_p_value;
    out["pp_value"] = report.pp_value;
    return out;
}

}  // namespace entpair
