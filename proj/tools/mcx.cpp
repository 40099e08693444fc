// mcx: command-line front end for the multicentric algebra library.
// Reads a single JSON problem file, dispatches to the library, writes a
// JSON result to stdout or --output.  Exit codes: 0 success, 2 validation
// error, 3 numerical failure.

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "multicentric/algebra2d.hpp"
#include "multicentric/function_space.hpp"
#include "multicentric/gelfand.hpp"
#include "multicentric/matrix_calculus.hpp"
#include "multicentric/verify.hpp"

using nlohmann::json;
using namespace multicentric;

namespace {

std::string iso_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&t));
    return buf;
}

Complex parse_complex(const json& node, const std::string& path) {
    if (!node.is_array() || node.size() != 2 || !node[0].is_number() || !node[1].is_number())
        throw ParseError(path + ": expected a complex number as [re, im]");
    return Complex(node[0].get<double>(), node[1].get<double>());
}

json dump_complex(Complex z) { return json::array({z.real(), z.imag()}); }

std::vector<Complex> parse_complex_list(const json& node, const std::string& path) {
    if (!node.is_array()) throw ParseError(path + ": expected an array");
    std::vector<Complex> out;
    for (std::size_t i = 0; i < node.size(); ++i)
        out.push_back(parse_complex(node[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

Matrix parse_matrix(const json& node, const std::string& path) {
    if (!node.is_array() || node.empty()) throw ParseError(path + ": expected a nested array");
    const Index rows = static_cast<Index>(node.size());
    const Index cols = static_cast<Index>(node[0].size());
    Matrix m(rows, cols);
    for (Index i = 0; i < rows; ++i) {
        const json& row = node[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Index>(row.size()) != cols)
            throw ParseError(path + ": ragged matrix rows");
        for (Index j = 0; j < cols; ++j)
            m(i, j) = parse_complex(row[static_cast<std::size_t>(j)],
                                    path + "[" + std::to_string(i) + "][" + std::to_string(j) + "]");
    }
    return m;
}

json dump_matrix(const Matrix& m) {
    json rows = json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Index j = 0; j < m.cols(); ++j) row.push_back(dump_complex(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

struct ProblemSpec {
    json doc;
    std::optional<MonicPolynomial> p1, p2;
    std::optional<DomainSpec> domain;
    std::map<std::string, double> tolerances;

    double tol(const std::string& name, double fallback) const {
        const auto it = tolerances.find(name);
        return it == tolerances.end() ? fallback : it->second;
    }
};

ProblemSpec load_problem(const std::string& input_path,
                         const std::vector<std::string>& tol_overrides) {
    std::ifstream in(input_path);
    if (!in) throw ConfigError("cannot open input file: " + input_path);
    ProblemSpec spec;
    try {
        in >> spec.doc;
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    const auto load_poly = [&](const char* key) -> std::optional<MonicPolynomial> {
        if (!spec.doc.contains(key)) return std::nullopt;
        const auto roots = parse_complex_list(spec.doc[key], key);
        const double tol = spec.tol("root_separation", -1.0);
        return MonicPolynomial(tol >= 0.0 ? make_root_set(roots, tol) : make_root_set(roots));
    };
    if (spec.doc.contains("tolerances")) {
        for (const auto& [k, v] : spec.doc["tolerances"].items()) {
            if (!v.is_number()) throw ParseError("tolerances." + k + ": expected a number");
            spec.tolerances[k] = v.get<double>();
        }
    }
    for (const std::string& ov : tol_overrides) {
        const auto eq = ov.find('=');
        if (eq == std::string::npos) throw ParseError("--tolerance expects name=value");
        spec.tolerances[ov.substr(0, eq)] = std::stod(ov.substr(eq + 1));
    }
    spec.p1 = load_poly("roots1");
    spec.p2 = load_poly("roots2");
    if (spec.doc.contains("domain")) {
        const auto parse_factor = [&](const json& node, const std::string& path) {
            if (!node.contains("discs")) throw ParseError(path + ": missing discs");
            std::vector<Disc> discs;
            for (const auto& d : node["discs"])
                discs.push_back(Disc{parse_complex(d.at("center"), path + ".center"),
                                     d.at("radius").get<double>()});
            const int resolution = node.value("resolution", 4);
            return make_factor_domain(std::move(discs), resolution);
        };
        DomainSpec dom;
        dom.factor1 = parse_factor(spec.doc["domain"].at("factor1"), "domain.factor1");
        dom.factor2 = parse_factor(spec.doc["domain"].at("factor2"), "domain.factor2");
        spec.domain = dom;
    }
    return spec;
}

const MonicPolynomial& require_p1(const ProblemSpec& spec) {
    if (!spec.p1) throw ConfigError("roots1 is required for this command");
    return *spec.p1;
}
const MonicPolynomial& require_p2(const ProblemSpec& spec) {
    if (!spec.p2) throw ConfigError("roots2 is required for this command");
    return *spec.p2;
}
const DomainSpec& require_domain(const ProblemSpec& spec) {
    if (!spec.domain) throw ConfigError("domain is required for this command");
    return *spec.domain;
}

/// Coefficient tensors arrive as sparse term lists; component indices and
/// powers follow the 1-based convention of the file format.
PolyCoeffFunction parse_element(const json& node, Index d1, Index d2,
                                const std::string& path) {
    if (!node.is_array()) throw ParseError(path + ": expected an array of terms");
    Index n1 = 0, n2 = 0;
    for (const auto& term : node) {
        const auto& powers = term.at("powers");
        if (powers.size() != 4) throw ParseError(path + ": powers must be [a1,b1,a2,b2]");
        n1 = std::max<Index>(n1, std::max(powers[0].get<Index>(), powers[1].get<Index>()));
        n2 = std::max<Index>(n2, std::max(powers[2].get<Index>(), powers[3].get<Index>()));
    }
    PolyCoeffFunction f(d1, d2, n1, n2);
    for (std::size_t i = 0; i < node.size(); ++i) {
        const auto& term = node[i];
        const std::string tpath = path + "[" + std::to_string(i) + "]";
        const auto& comp = term.at("component");
        if (comp.size() != 2) throw ParseError(tpath + ".component: expected [j,k]");
        const Index j = comp[0].get<Index>() - 1;
        const Index k = comp[1].get<Index>() - 1;
        if (j < 0 || j >= d1 || k < 0 || k >= d2)
            throw ParseError(tpath + ".component: index out of range");
        const auto& powers = term.at("powers");
        f.at(j, k, powers[0].get<Index>(), powers[1].get<Index>(), powers[2].get<Index>(),
             powers[3].get<Index>()) += parse_complex(term.at("value"), tpath + ".value");
    }
    return f;
}

PolyCoeffFunction named_element(const ProblemSpec& spec, const std::string& name) {
    if (!spec.doc.contains("elements") || !spec.doc["elements"].contains(name))
        throw ConfigError("element '" + name + "' is not defined");
    return parse_element(spec.doc["elements"][name], require_p1(spec).degree(),
                         require_p2(spec).degree(), "elements." + name);
}

Matrix named_matrix(const ProblemSpec& spec, const std::string& name) {
    if (!spec.doc.contains("matrices") || !spec.doc["matrices"].contains(name))
        throw ConfigError("matrix '" + name + "' is not defined");
    return parse_matrix(spec.doc["matrices"][name], "matrices." + name);
}

// ---- commands -----------------------------------------------------------

json cmd_delta(const ProblemSpec& spec) {
    const json& params = spec.doc.value("delta", json::object());
    if (!params.contains("points")) throw ConfigError("delta.points is required");
    const int factor = params.value("factor", 1);
    const MonicPolynomial& p = factor == 2 ? require_p2(spec) : require_p1(spec);
    json rows = json::array();
    for (Complex z : parse_complex_list(params["points"], "delta.points")) {
        const Vector delta = delta_basis(p, z);
        json entry;
        entry["z"] = dump_complex(z);
        json values = json::array();
        for (Index j = 0; j < delta.size(); ++j) values.push_back(dump_complex(delta(j)));
        entry["delta"] = values;
        rows.push_back(entry);
    }
    return json{{"deltas", rows}};
}

json cmd_polyprod(const ProblemSpec& spec, bool cross_check) {
    const json& params = spec.doc.value("polyprod", json::object());
    const MonicPolynomial& p1 = require_p1(spec);
    const MonicPolynomial& p2 = require_p2(spec);
    const PolyCoeffFunction f = named_element(spec, params.at("f").get<std::string>());
    const PolyCoeffFunction g = named_element(spec, params.at("g").get<std::string>());
    const Complex w1 = parse_complex(params.at("w1"), "polyprod.w1");
    const Complex w2 = parse_complex(params.at("w2"), "polyprod.w2");
    const Matrix fv = f.eval(w1, w2);
    const Matrix gv = g.eval(w1, w2);
    const Matrix product = polyprod2_scalar(p1, p2, w1, w2, fv, gv);
    json out{{"product", dump_matrix(product)}};
    if (cross_check) {
        const Matrix boxed = polyprod2_boxed(p1, p2, w1, w2, fv, gv);
        out["cross_check_deviation"] = (product - boxed).cwiseAbs().maxCoeff();
    }
    return out;
}

json cmd_norm(const ProblemSpec& spec) {
    const json& params = spec.doc.value("norm", json::object());
    const MonicPolynomial& p1 = require_p1(spec);
    const MonicPolynomial& p2 = require_p2(spec);
    const DomainSpec& domain = require_domain(spec);
    const Element f = named_element(spec, params.at("element").get<std::string>());
    const double sup = sup_norm(f, domain);
    const double op = op_norm(p1, p2, f, domain);
    const double bound = equivalence_bound(p1, p2, domain);
    const bool pass = sup <= op * (1.0 + 1e-9) && op <= bound * sup * (1.0 + 1e-9);
    return json{{"sup_norm", sup},
                {"op_norm", op},
                {"equivalence_bound", bound},
                {"inequalities_pass", pass}};
}

json cmd_spectrum(const ProblemSpec& spec) {
    const json& params = spec.doc.value("spectrum", json::object());
    const MonicPolynomial& p1 = require_p1(spec);
    const MonicPolynomial& p2 = require_p2(spec);
    const DomainSpec& domain = require_domain(spec);
    const Element f = named_element(spec, params.at("element").get<std::string>());
    const PreimageGrid grid = make_preimage_grid(p1, p2, domain);
    const SpectrumSet sigma = spectrum(f, p1, p2, domain, grid);
    json points = json::array();
    for (const SpectrumPoint& pt : sigma.points)
        points.push_back(json{{"z1", dump_complex(pt.z1)},
                              {"z2", dump_complex(pt.z2)},
                              {"value", dump_complex(pt.value)}});
    return json{{"spectrum", points}};
}

json cmd_calc(const ProblemSpec& spec, bool suggest_p) {
    const json& params = spec.doc.value("calc", json::object());
    const Matrix a = named_matrix(spec, params.at("A").get<std::string>());

    if (suggest_p) {
        const Complex c = params.contains("c") ? parse_complex(params["c"], "calc.c")
                                               : Complex(1.0, 0.0);
        const MonicPolynomial p = suggest_polynomial(a, c);
        json roots = json::array();
        for (Complex r : p.root_set().roots()) roots.push_back(dump_complex(r));
        const Matrix pa = poly_eval_matrix(p.coefficients(), a);
        return json{{"suggested_roots", roots},
                    {"p_of_A", dump_matrix(pa)},
                    {"p_of_A_diagonalizable", verify_diagonalizable(pa)}};
    }

    const double commute_tol = spec.tol("commute_tol", 1e-10);
    json diagnostics;
    Matrix result;
    if (params.contains("B")) {
        const MonicPolynomial& p1 = require_p1(spec);
        const MonicPolynomial& p2 = require_p2(spec);
        const Matrix b = named_matrix(spec, params.at("B").get<std::string>());
        PolyCoeffFunction f = [&] {
            if (params.contains("element"))
                return named_element(spec, params["element"].get<std::string>());
            if (!params.contains("phi"))
                throw ConfigError("calc needs either 'phi' or 'element'");
            // bivariate polynomial phi, terms {powers:[a1,a2], value}
            Index n1 = 0, n2 = 0;
            for (const auto& term : params["phi"]) {
                n1 = std::max<Index>(n1, term.at("powers")[0].get<Index>());
                n2 = std::max<Index>(n2, term.at("powers")[1].get<Index>());
            }
            Matrix phi = Matrix::Zero(n1 + 1, n2 + 1);
            for (const auto& term : params["phi"])
                phi(term.at("powers")[0].get<Index>(), term.at("powers")[1].get<Index>()) +=
                    parse_complex(term.at("value"), "calc.phi.value");
            return decompose_poly_2d(phi, p1, p2);
        }();
        const CommuteCheck cc = check_commute(a, b, commute_tol);
        if (!cc.commute)
            throw NotCommuting("calc: commutator residual " + std::to_string(cc.residual));
        const bool diagonalizable = verify_diagonalizable(a) && verify_diagonalizable(b);
        result = diagonalizable ? calc_pair_eig(f, p1, p2, a, b, commute_tol)
                                : calc_pair_matrix(f, p1, p2, a, b, commute_tol);
        diagnostics["path"] = diagonalizable ? "eigenvalue" : "matrix";
        diagnostics["commute_residual"] = cc.residual;
    } else {
        const MonicPolynomial& p1 = require_p1(spec);
        VectorFunction1D f = [&]() -> VectorFunction1D {
            if (!params.contains("phi")) throw ConfigError("calc needs 'phi'");
            Index n = 0;
            for (const auto& term : params["phi"])
                n = std::max<Index>(n, term.at("powers")[0].get<Index>());
            Vector phi = Vector::Zero(n + 1);
            for (const auto& term : params["phi"])
                phi(term.at("powers")[0].get<Index>()) +=
                    parse_complex(term.at("value"), "calc.phi.value");
            return decompose_poly_1d(phi, p1);
        }();
        const bool diagonalizable = verify_diagonalizable(a);
        result = diagonalizable ? calc_single_eig(f, p1, a) : calc_single_matrix(f, p1, a);
        diagnostics["path"] = diagonalizable ? "eigenvalue" : "matrix";
    }
    return json{{"result", dump_matrix(result)}, {"diagnostics", diagnostics}};
}

json cmd_verify(const ProblemSpec& spec, std::uint64_t seed, bool inject_failure,
                bool& all_pass) {
    const MonicPolynomial& p1 = require_p1(spec);
    const MonicPolynomial& p2 = require_p2(spec);
    const DomainSpec& domain = require_domain(spec);
    SuiteConfig config;
    config.inject_failure = inject_failure;
    const auto results = run_property_suite(p1, p2, domain, seed, config);
    json report = json::array();
    all_pass = true;
    for (const PropertyResult& r : results) {
        report.push_back(json{{"property", r.name},
                              {"pass", r.pass},
                              {"worst_error", r.worst_error},
                              {"trials", r.trials}});
        all_pass = all_pass && r.pass;
    }
    return json{{"report", report}, {"all_pass", all_pass}, {"seed", seed}};
}

void emit(const json& payload, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << payload.dump(2) << "\n";
    } else {
        std::ofstream out(output_path);
        if (!out) throw ConfigError("cannot open output file: " + output_path);
        out << payload.dump(2) << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"multicentric tensor-product algebra toolkit"};
    app.require_subcommand(1);

    std::string input_path, output_path;
    std::uint64_t seed = 0;
    bool cross_check = false, suggest_p = false, inject_failure = false;
    std::vector<std::string> tol_overrides;
    app.add_option("--input", input_path, "JSON problem file")->required();
    app.add_option("--output", output_path, "write JSON result here instead of stdout");
    app.add_option("--seed", seed, "RNG seed for randomized checks");
    app.add_option("--tolerance", tol_overrides, "override a named tolerance, name=value");
    app.add_flag("--cross-check", cross_check, "also run the boxing-form polyproduct");
    app.add_flag("--suggest-p", suggest_p, "construct a Jordan-removing polynomial");
    app.add_flag("--inject-failure", inject_failure,
                 "deliberately fail one verify property (reporting smoke test)");

    auto* delta = app.add_subcommand("delta", "delta basis values at requested points");
    auto* polyprod = app.add_subcommand("polyprod", "two-variable polyproduct at a point");
    auto* norm = app.add_subcommand("norm", "sup norm, operator norm, equivalence bound");
    auto* spectrum_cmd = app.add_subcommand("spectrum", "Gelfand values over the preimage grid");
    auto* calc = app.add_subcommand("calc", "functional calculus phi(A) / phi(A,B)");
    auto* verify = app.add_subcommand("verify", "run the property suite");
    // global flags may appear after the subcommand name
    for (CLI::App* sub : {delta, polyprod, norm, spectrum_cmd, calc, verify})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        json payload{{"error", "ParseError"}, {"message", e.what()}};
        std::cout << payload.dump(2) << "\n";
        return 2;
    }

    json payload;
    int exit_code = 0;
    try {
        const ProblemSpec spec = load_problem(input_path, tol_overrides);
        if (delta->parsed()) {
            payload = cmd_delta(spec);
            payload["command"] = "delta";
        } else if (polyprod->parsed()) {
            payload = cmd_polyprod(spec, cross_check);
            payload["command"] = "polyprod";
        } else if (norm->parsed()) {
            payload = cmd_norm(spec);
            payload["command"] = "norm";
        } else if (spectrum_cmd->parsed()) {
            payload = cmd_spectrum(spec);
            payload["command"] = "spectrum";
        } else if (calc->parsed()) {
            payload = cmd_calc(spec, suggest_p);
            payload["command"] = "calc";
        } else if (verify->parsed()) {
            bool all_pass = false;
            payload = cmd_verify(spec, seed, inject_failure, all_pass);
            payload["command"] = "verify";
            if (!all_pass) {
                payload["error"] = "PropertyFailure";
                exit_code = 3;
            }
        }
    } catch (const ValidationError& e) {
        payload = json{{"error", e.name}, {"message", e.what()}};
        exit_code = 2;
    } catch (const NumericalError& e) {
        payload = json{{"error", e.name}, {"message", e.what()}};
        exit_code = 3;
    } catch (const json::exception& e) {
        payload = json{{"error", "ParseError"}, {"message", e.what()}};
        exit_code = 2;
    }
    payload["timestamp"] = iso_timestamp();
    try {
        emit(payload, output_path);
    } catch (const ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
