// Command-line front end: validate structure-constant files, compute operator
// spaces, run the property checks, and verify the built-in catalog against its
// reference dimensions.
//
// Exit codes: 0 success; 1 mathematical failure (identity defects, property
// failure, reference mismatch); 2 input error (unreadable/ill-formed file,
// bad arguments, precondition violations).

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tleib/tleib.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitInputError = 2;

tleib::TernaryAlgebra load_algebra(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw tleib::Error("cannot open '" + path + "'");
    std::string name = path;
    if (auto slash = name.find_last_of('/'); slash != std::string::npos)
        name = name.substr(slash + 1);
    return tleib::parse_algebra(in, name);
}

void print_matrix(std::ostream& os, const tleib::LinearMap& m) {
    for (int r = 1; r <= m.dim(); ++r) {
        os << "  [";
        for (int c = 1; c <= m.dim(); ++c)
            os << (c > 1 ? " " : "") << tleib::to_string(m.entry(r, c));
        os << "]\n";
    }
}

int run_check(const std::string& path) {
    const auto algebra = load_algebra(path);
    const auto defects = tleib::leibniz_defects(algebra);
    if (defects.empty()) {
        std::cout << "ok: '" << algebra.name << "' is a ternary Leibniz algebra (dim "
                  << algebra.dim() << ")\n";
        return kExitOk;
    }
    std::cout << "FAIL: " << defects.size() << " violated identity instance(s)\n";
    for (const auto& d : defects)
        std::cout << "  defect (i,j,k,p,q,s)=(" << d.i << "," << d.j << "," << d.k << ","
                  << d.p << "," << d.q << "," << d.s
                  << ") residual=" << tleib::to_string(d.residual) << "\n";
    return kExitMathFailure;
}

int run_space(const std::string& kind, const std::string& path, bool json) {
    const auto algebra = load_algebra(path);
    if (!tleib::is_leibniz(algebra))
        std::cerr << "warning: '" << algebra.name
                  << "' violates the ternary Leibniz identity; the linear systems are "
                     "still well-defined, computing anyway\n";

    tleib::MatrixSubspace space = [&] {
        if (kind == "centroid") return tleib::centroid(algebra);
        if (kind == "qcentroid") return tleib::quasi_centroid(algebra);
        if (kind == "der") return tleib::derivations(algebra);
        return tleib::central_derivations(algebra);
    }();

    if (json) {
        nlohmann::json j;
        j["kind"] = kind;
        j["algebra"] = algebra.name;
        j["dim"] = space.dimension();
        j["basis"] = nlohmann::json::array();
        for (const auto& m : space.basis()) {
            nlohmann::json rows = nlohmann::json::array();
            for (int r = 1; r <= m.dim(); ++r) {
                nlohmann::json row = nlohmann::json::array();
                for (int c = 1; c <= m.dim(); ++c)
                    row.push_back(tleib::to_string(m.entry(r, c)));
                rows.push_back(std::move(row));
            }
            j["basis"].push_back(std::move(rows));
        }
        j["pattern"] = tleib::symbolic_pattern(space);
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }

    std::cout << kind << " of '" << algebra.name << "':\n";
    for (std::size_t t = 0; t < space.basis().size(); ++t) {
        std::cout << "basis[" << t << "]:\n";
        print_matrix(std::cout, space.basis()[t]);
    }
    for (const auto& line : tleib::symbolic_pattern(space)) std::cout << "  " << line << "\n";
    std::cout << "dim = " << space.dimension() << "\n";
    return kExitOk;
}

int run_props(const std::string& path) {
    const auto algebra = load_algebra(path);
    tleib::ClosureReport rep;
    try {
        rep = tleib::closure_report(algebra);
    } catch (const tleib::NotLeibniz& e) {
        std::cerr << "NotLeibniz: " << e.what() << "\n";
        return kExitInputError;
    }
    auto line = [](const char* label, bool ok) {
        std::cout << (ok ? "pass" : "FAIL") << "  " << label << "\n";
    };
    line("centroid compositions stay in the centroid", rep.composition_closed);
    line("centroid lies inside the quasi-centroid", rep.centroid_in_qcentroid);
    line("centroid o derivation is a derivation", rep.comp_maps_to_der);
    line("[centroid, derivation] lies in the centroid", rep.commutator_in_centroid);
    line("dim Cent <= dim QCent", rep.cent_dim_le_qcent_dim);
    std::cout << "dims: cent=" << rep.dim_cent << " qcent=" << rep.dim_qcent
              << " der=" << rep.dim_der << "\n";
    for (const auto& w : rep.failures) std::cout << "  witness: " << w << "\n";
    return rep.all() ? kExitOk : kExitMathFailure;
}

int run_catalog_list() {
    for (const auto& e : tleib::catalog_entries()) {
        std::cout << e.key;
        for (const auto& p : e.requires_params) std::cout << " <" << p << ">";
        std::cout << "  (reference dims: cent " << e.expected_cent_dim << ", qcent "
                  << e.expected_qcent_dim << ")\n";
    }
    return kExitOk;
}

int run_catalog_dump(const std::string& key, const std::optional<std::string>& alpha) {
    std::map<std::string, tleib::Rational> params;
    if (alpha) {
        auto value = tleib::try_parse_rational(*alpha);
        if (!value) throw tleib::Error("bad --alpha value '" + *alpha + "'");
        params["alpha"] = *value;
    }
    std::cout << tleib::serialize_algebra(tleib::builtin(key, params));
    return kExitOk;
}

std::vector<tleib::Rational> parse_alpha_list(const std::string& csv) {
    std::vector<tleib::Rational> out;
    std::istringstream is(csv);
    std::string item;
    while (std::getline(is, item, ',')) {
        auto value = tleib::try_parse_rational(item);
        if (!value) throw tleib::Error("bad --alpha entry '" + item + "'");
        out.push_back(*value);
    }
    if (out.empty()) throw tleib::Error("--alpha list is empty");
    return out;
}

int run_verify_catalog(const std::optional<std::string>& alpha_csv, bool json) {
    const auto samples =
        alpha_csv ? parse_alpha_list(*alpha_csv) : tleib::default_alpha_samples();
    const auto report = tleib::verify_catalog(samples);
    if (json)
        std::cout << tleib::report_to_json(report).dump(2) << "\n";
    else
        std::cout << tleib::render_report(report);
    return report.ok() ? kExitOk : kExitMathFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic workbench for ternary Leibniz algebras"};
    app.require_subcommand(1);

    std::string path;
    bool json = false;

    auto* check = app.add_subcommand("check", "validate the ternary Leibniz identity");
    check->add_option("file", path)->required();

    const std::vector<std::string> kinds = {"centroid", "qcentroid", "der", "cder"};
    std::map<std::string, CLI::App*> space_cmds;
    for (const auto& kind : kinds) {
        auto* cmd = app.add_subcommand(
            kind, "compute the " + kind + " of an algebra file");
        cmd->add_option("file", path)->required();
        cmd->add_flag("--json", json, "machine-readable output");
        space_cmds[kind] = cmd;
    }

    auto* props = app.add_subcommand("props", "run the closure property checks");
    props->add_option("file", path)->required();

    auto* catalog = app.add_subcommand("catalog", "built-in classification catalog");
    catalog->require_subcommand(1);
    auto* list = catalog->add_subcommand("list", "list catalog keys");
    std::string key;
    std::string alpha_value;
    auto* dump = catalog->add_subcommand("dump", "print a catalog algebra file");
    dump->add_option("key", key)->required();
    auto* alpha_opt = dump->add_option("--alpha", alpha_value, "parameter binding");

    auto* verify = app.add_subcommand(
        "verify-catalog", "recompute all catalog operator spaces and compare "
                          "against the reference dimensions");
    std::string alpha_csv;
    auto* alpha_list_opt =
        verify->add_option("--alpha", alpha_csv, "comma-separated parameter samples");
    verify->add_flag("--json", json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (check->parsed()) return run_check(path);
        for (const auto& kind : kinds)
            if (space_cmds[kind]->parsed()) return run_space(kind, path, json);
        if (props->parsed()) return run_props(path);
        if (list->parsed()) return run_catalog_list();
        if (dump->parsed())
            return run_catalog_dump(key, *alpha_opt ? std::optional(alpha_value)
                                                    : std::nullopt);
        if (verify->parsed())
            return run_verify_catalog(
                *alpha_list_opt ? std::optional(alpha_csv) : std::nullopt, json);
    } catch (const tleib::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const tleib::InternalInconsistency& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return kExitMathFailure;
    } catch (const tleib::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
