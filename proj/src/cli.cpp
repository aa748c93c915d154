// SPDX-License-Identifier: Apache-2.0
#include "entpair/cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "entpair/bell.hpp"
#include "entpair/criteria.hpp"
#include "entpair/errors.hpp"
#include "entpair/io.hpp"

namespace entpair {

namespace {

using nlohmann::json;

// A vector argument is either inline JSON ("[[1,0],[0,0]]") or a file path.
ComplexVector vector_argument(const std::string& arg) {
    std::string text = arg;
    if (!arg.empty() && arg.front() != '[') {
        std::ifstream in(arg);
        if (!in) throw ValidationError("cannot open vector file: " + arg);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ValidationError("cannot parse vector argument: " + std::string(e.what()));
    }
    return vector_from_json(j);
}

BellSetting setting_from_angles(const std::string& spec) {
    std::vector<double> angles;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            angles.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw ValidationError("bad angle \"" + item + "\" in --setting");
        }
    }
    if (angles.size() != 4)
        throw ValidationError("--setting needs four comma-separated angles in degrees");
    return BellSetting{direction_from_xz_angle(angles[0]), direction_from_xz_angle(angles[1]),
                       direction_from_xz_angle(angles[2]), direction_from_xz_angle(angles[3])};
}

json direction_json(const Direction& d) { return json::array({d.x, d.y, d.z}); }

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

void print_classification_text(std::ostream& out, const json& report) {
    out << std::setprecision(17);
    out << "verdict: " << report["verdict"].get<std::string>() << "\n";
    out << "subcase: " << report["subcase"].get<std::string>() << "\n";
    out << "slater_or_schmidt_number: " << report["slater_or_schmidt_number"].get<std::size_t>()
        << "\n";
    out << "coefficients:";
    for (const auto& c : report["coefficients"]) out << " " << c.get<double>();
    out << "\n";
    out << "entropy: " << report["entropy"].get<double>() << "\n";
    if (report["witness"].is_null()) {
        out << "witness: none (entangled)\n";
    } else {
        for (const char* part : {"phi", "chi"}) {
            out << "witness " << part << ":";
            for (const auto& e : report["witness"][part])
                out << " (" << e[0].get<double>() << "," << e[1].get<double>() << ")";
            out << "\n";
        }
    }
    out << "residual: " << report["residuals"]["reconstruction"].get<double>() << "\n";
}

struct CommonOptions {
    std::string state_path;
    double classify_tol = kDefaultClassifyTol;
};

int run_classify(const CommonOptions& opt, const std::string& format, std::ostream& out) {
    const Tolerances tol = Tolerances::scaled_from_classification(opt.classify_tol);
    const TwoParticleState state = load_state_file(opt.state_path, tol.factorization);
    const Classification c = classify(state, tol.classification, tol.factorization, tol.rank);
    const SchmidtData data = schmidt_data(state, tol.factorization, tol.rank);
    const json report = classification_report(c, data, tol);
    if (format == "text")
        print_classification_text(out, report);
    else
        print_json(out, report);
    return 0;
}

int run_decompose(const CommonOptions& opt, std::ostream& out) {
    const Tolerances tol = Tolerances::scaled_from_classification(opt.classify_tol);
    const TwoParticleState state = load_state_file(opt.state_path, tol.factorization);
    const SchmidtData data = schmidt_data(state, tol.factorization, tol.rank);
    print_json(out, schmidt_report(data));
    return 0;
}

int run_properties(const CommonOptions& opt, const std::string& projector, bool exclusive,
                   std::ostream& out) {
    const Tolerances tol = Tolerances::scaled_from_classification(opt.classify_tol);
    const TwoParticleState state = load_state_file(opt.state_path, tol.factorization);
    if (!projector.empty()) {
        const PropertyReport report = expectation_E_P(state, vector_argument(projector));
        json j = property_report_json(report);
        if (exclusive) j["exclusive_e_p"] = report.e_p_value - report.pp_value;
        print_json(out, j);
        return 0;
    }
    const auto witness =
        attribute_properties(state, tol.classification, tol.factorization, tol.rank);
    json j;
    if (witness) {
        j["witness"] = {{"phi", vector_to_json(witness->first)},
                        {"chi", vector_to_json(witness->second)}};
    } else {
        j["witness"] = nullptr;
    }
    print_json(out, j);
    return 0;
}

int run_bell(const std::string& kind, bool have_scan, std::size_t scan_steps, bool sphere,
             const std::string& setting_spec, std::ostream& out) {
    ExampleKind ek;
    if (kind == "product-like")
        ek = ExampleKind::ProductLike;
    else if (kind == "epr-bohm")
        ek = ExampleKind::EprBohm;
    else
        throw ValidationError("bell: state kind must be product-like or epr-bohm");
    const TwoParticleState state = build_example_state(ek);

    json j;
    j["state"] = kind;
    if (!setting_spec.empty()) {
        const BellSetting s = setting_from_angles(setting_spec);
        j["setting"] = {{"a", direction_json(s.a)},
                        {"b", direction_json(s.b)},
                        {"c", direction_json(s.c)},
                        {"d", direction_json(s.d)}};
        j["correlations"] = {{"ab", correlation(state, s.a, s.b)},
                             {"ac", correlation(state, s.a, s.c)},
                             {"bd", correlation(state, s.b, s.d)},
                             {"cd", correlation(state, s.c, s.d)}};
        j["chsh"] = chsh(state, s);
    } else {
        const std::size_t steps = have_scan ? scan_steps : 24;
        const ChshScanResult result =
            sphere ? chsh_scan_sphere(state, steps) : chsh_scan(state, steps);
        j["scan"] = {{"grid_steps", steps},
                     {"mode", sphere ? "sphere" : "xz-plane"},
                     {"max_chsh", result.max_value},
                     {"argmax",
                      {{"a", direction_json(result.argmax.a)},
                       {"b", direction_json(result.argmax.b)},
                       {"c", direction_json(result.argmax.c)},
                       {"d", direction_json(result.argmax.d)}}}};
    }
    print_json(out, j);
    return 0;
}

int run_make_state(const std::string& mode, const std::string& phi_arg,
                   const std::string& chi_arg, const std::string& out_path) {
    const ComplexVector phi = vector_argument(phi_arg);
    const ComplexVector chi = vector_argument(chi_arg);
    const json file = product_state_file(mode, phi, chi);
    // Validate before writing so a bad pair never produces a file.
    (void)state_from_json(file);
    std::ofstream os(out_path);
    if (!os) throw ValidationError("cannot write state file: " + out_path);
    os << file.dump(2) << "\n";
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"entanglement analysis for pure states of two identical particles"};
    app.require_subcommand(1);

    CommonOptions opt;
    std::string format = "json";
    auto* classify_cmd = app.add_subcommand("classify", "classify a state file");
    classify_cmd->add_option("state", opt.state_path, "state JSON file")->required();
    classify_cmd->add_option("--tol", opt.classify_tol,
                             "classification tolerance; scales the whole bundle");
    classify_cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}));

    auto* decompose_cmd = app.add_subcommand("decompose", "Slater/Schmidt decomposition");
    decompose_cmd->add_option("state", opt.state_path, "state JSON file")->required();
    decompose_cmd->add_option("--tol", opt.classify_tol, "tolerance bundle knob");

    std::string projector;
    bool exclusive = false;
    auto* properties_cmd =
        app.add_subcommand("properties", "property attribution / E_P expectation");
    properties_cmd->add_option("state", opt.state_path, "state JSON file")->required();
    properties_cmd->add_option("--projector", projector,
                               "projector state, inline JSON or a file path");
    properties_cmd->add_flag("--exclusive", exclusive,
                             "also report the exactly-one-particle variant (drops the P⊗P term)");
    properties_cmd->add_option("--tol", opt.classify_tol, "tolerance bundle knob");

    std::string bell_kind;
    std::size_t scan_steps = 24;
    bool sphere = false;
    std::string setting_spec;
    auto* bell_cmd = app.add_subcommand("bell", "correlation and CHSH analysis of the example states");
    bell_cmd->add_option("kind", bell_kind, "product-like or epr-bohm")
        ->required()
        ->check(CLI::IsMember({"product-like", "epr-bohm"}));
    auto* scan_opt = bell_cmd->add_option("--scan", scan_steps, "grid steps per direction (>= 4)");
    bell_cmd->add_flag("--sphere", sphere,
                       "scan the full 2-sphere instead of the x-z plane "
                       "(cost grows as grid_steps^8; keep it small)");
    auto* setting_opt = bell_cmd->add_option(
        "--setting", setting_spec, "four comma-separated x-z plane angles in degrees, e.g. 0,45,135,90");
    scan_opt->excludes(setting_opt);
    setting_opt->excludes(scan_opt);

    std::string mode, phi_arg, chi_arg, out_path;
    auto* make_cmd = app.add_subcommand("make-state", "write a product-form state file");
    make_cmd->add_option("--mode", mode, "symmetrize or antisymmetrize")
        ->required()
        ->check(CLI::IsMember({"symmetrize", "antisymmetrize"}));
    make_cmd->add_option("--phi", phi_arg, "first vector, inline JSON or file path")->required();
    make_cmd->add_option("--chi", chi_arg, "second vector, inline JSON or file path")->required();
    make_cmd->add_option("-o,--output", out_path, "output state file")->required();

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("entpair");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        if (classify_cmd->parsed()) return run_classify(opt, format, out);
        if (decompose_cmd->parsed()) return run_decompose(opt, out);
        if (properties_cmd->parsed()) return run_properties(opt, projector, exclusive, out);
        if (bell_cmd->parsed())
            return run_bell(bell_kind, scan_opt->count() > 0, scan_steps, sphere, setting_spec,
                            out);
        if (make_cmd->parsed()) return run_make_state(mode, phi_arg, chi_arg, out_path);
        err << "error: no subcommand given\n";
        return 2;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const CertificationError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const ConvergenceError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const InternalConsistencyError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace entpair
