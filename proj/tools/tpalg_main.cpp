#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tpalg/algebra_io.hpp"
#include "tpalg/catalog.hpp"
#include "tpalg/derivations.hpp"
#include "tpalg/lie_algebra.hpp"
#include "tpalg/product_io.hpp"
#include "tpalg/transposed_poisson.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace tpalg;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInputError = 2;
constexpr int kExitUnresolved = 3;

struct AlgebraOptions {
    std::string name;
    std::optional<unsigned> n;
    std::string file;
};

struct CommonOptions {
    std::string format = "text";
    bool verbose = false;
};

struct Loaded {
    LieAlgebra algebra;
    std::optional<Grading> grading;  // only for file algebras that declare one
    bool from_catalog = false;
};

struct Outcome {
    json result;
    std::vector<std::string> text;
    bool violation = false;
    bool unresolved = false;
};

Loaded load_algebra(const AlgebraOptions& opt) {
    const bool have_name = !opt.name.empty();
    const bool have_file = !opt.file.empty();
    if (have_name == have_file)
        throw std::invalid_argument("give a catalog algebra name or --file, but not both");
    if (have_file) {
        if (opt.n) throw std::invalid_argument("--n cannot be combined with --file");
        AlgebraFile f = read_algebra_file(opt.file);
        return {std::move(f.algebra), std::move(f.grading), false};
    }
    return {build_catalog(opt.name, opt.n), std::nullopt, true};
}

std::string term_string(const Vector& v, const std::vector<std::string>& labels) {
    std::string out;
    for (std::size_t k = 0; k < v.dim(); ++k) {
        if (v[k].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += v[k].str() + "*" + labels[k];
    }
    return out.empty() ? "0" : out;
}

json vector_pairs(const Vector& v, const std::vector<std::string>& labels) {
    json out = json::array();
    for (std::size_t k = 0; k < v.dim(); ++k)
        if (!v[k].is_zero()) out.push_back(json::array({labels[k], v[k].str()}));
    return out;
}

json map_json(const LinearMap& phi, const std::vector<std::string>& labels) {
    json out = json::array();
    for (std::size_t i = 0; i < phi.dim(); ++i) {
        const Vector image = phi.column(i);
        if (image.is_zero()) continue;
        json entry;
        entry["from"] = labels[i];
        entry["image"] = vector_pairs(image, labels);
        out.push_back(std::move(entry));
    }
    return out;
}

void map_text(std::vector<std::string>& lines, const LinearMap& phi,
              const std::vector<std::string>& labels, const std::string& indent) {
    bool any = false;
    for (std::size_t i = 0; i < phi.dim(); ++i) {
        const Vector image = phi.column(i);
        if (image.is_zero()) continue;
        lines.push_back(indent + "phi(" + labels[i] + ") = " + term_string(image, labels));
        any = true;
    }
    if (!any) lines.push_back(indent + "zero map");
}

json product_json(const Product& p, const std::vector<std::string>& labels) {
    json out = json::array();
    for (const auto& [key, value] : p.tensor()) {
        json entry;
        entry["left"] = labels[key.first];
        entry["right"] = labels[key.second];
        entry["value"] = vector_pairs(value, labels);
        out.push_back(std::move(entry));
    }
    return out;
}

void product_text(std::vector<std::string>& lines, const Product& p,
                  const std::vector<std::string>& labels, const std::string& indent) {
    if (p.is_zero()) {
        lines.push_back(indent + "zero product");
        return;
    }
    for (const auto& [key, value] : p.tensor())
        lines.push_back(indent + labels[key.first] + "*" + labels[key.second] + " = " +
                        term_string(value, labels));
}

json triple_json(const TripleViolation& v, const std::vector<std::string>& labels) {
    json out;
    out["triple"] = json::array({labels[v.a], labels[v.b], labels[v.c]});
    out["residual"] = vector_pairs(v.residual, labels);
    return out;
}

std::string triple_text(const TripleViolation& v, const std::vector<std::string>& labels) {
    return "(" + labels[v.a] + "," + labels[v.b] + "," + labels[v.c] +
           "): residual = " + term_string(v.residual, labels);
}

/// Matches a 1/2-derivation of schrodinger_2 against the closed form
/// theta*id + beta*(s12 -> z) and names the two pure directions.
std::optional<std::string> direction_label(const LieAlgebra& alg, const LinearMap& phi) {
    if (alg != build_schrodinger(2)) return std::nullopt;
    const Rational theta = phi.at(0, 0);
    const Rational beta = phi.at(3, 8);
    LinearMap candidate = LinearMap::identity(9);
    candidate *= theta;
    candidate.at(3, 8) += beta;
    if (candidate != phi) return std::nullopt;
    if (theta.is_zero() && beta.is_one()) return "R-direction";
    if (theta.is_one() && beta.is_zero()) return "id-direction";
    return "theta=" + theta.str() + " beta=" + beta.str();
}

Outcome run_algebra(const Loaded& loaded, bool show, bool jacobi, bool grading_check) {
    const LieAlgebra& alg = loaded.algebra;
    const auto& labels = alg.labels();
    Outcome out;

    out.result["name"] = alg.name();
    out.result["dim"] = alg.dim();
    out.result["labels"] = labels;
    out.result["nonzero_brackets"] = alg.table().size();
    {
        std::string joined;
        for (const auto& l : labels) joined += (joined.empty() ? "" : " ") + l;
        out.text.push_back("dim: " + std::to_string(alg.dim()));
        out.text.push_back("labels: " + joined);
        out.text.push_back("nonzero brackets: " + std::to_string(alg.table().size()));
    }

    if (show) {
        json brackets = json::array();
        for (const auto& [key, value] : alg.table()) {
            json entry;
            entry["left"] = labels[key.first];
            entry["right"] = labels[key.second];
            entry["value"] = vector_pairs(value, labels);
            brackets.push_back(std::move(entry));
            out.text.push_back("[" + labels[key.first] + "," + labels[key.second] +
                               "] = " + term_string(value, labels));
        }
        out.result["brackets"] = std::move(brackets);
    }

    if (jacobi) {
        const JacobiReport report = check_jacobi(alg);
        out.text.push_back(std::string("jacobi: ") + (report.ok ? "ok" : "violated"));
        json violations = json::array();
        for (const auto& v : report.violations) {
            json entry;
            entry["triple"] = json::array({labels[v.i], labels[v.j], labels[v.k]});
            entry["residual"] = vector_pairs(v.residual, labels);
            violations.push_back(std::move(entry));
            out.text.push_back("  (" + labels[v.i] + "," + labels[v.j] + "," + labels[v.k] +
                               "): residual = " + term_string(v.residual, labels));
        }
        out.result["jacobi"] = json{{"ok", report.ok}, {"violations", std::move(violations)}};
        if (!report.ok) out.violation = true;
    }

    if (grading_check) {
        const Grading g = loaded.grading ? *loaded.grading : standard_grading(alg);
        const GradingReport report = check_grading(alg, g);
        json violations = json::array();
        std::vector<std::string> lines;
        for (const auto& v : report.violations) {
            json entry;
            entry["pair"] = json::array({labels[v.i], labels[v.j]});
            entry["coordinate"] = labels[v.k];
            violations.push_back(std::move(entry));
            lines.push_back("  [" + labels[v.i] + "," + labels[v.j] + "] hits " + labels[v.k] +
                            " outside its degree");
        }
        out.result["grading"] = json{{"group", g.group().str()},
                                     {"ok", report.ok},
                                     {"violations", std::move(violations)}};
        out.text.push_back(std::string("grading ") + g.group().str() + ": " +
                           (report.ok ? "ok" : "violated"));
        out.text.insert(out.text.end(), lines.begin(), lines.end());
        if (!report.ok) out.violation = true;
    }

    return out;
}

Outcome run_derivations(const Loaded& loaded, const std::string& delta_text,
                        const std::string& emit, const std::string& grading_mode, bool verbose) {
    const LieAlgebra& alg = loaded.algebra;
    const auto& labels = alg.labels();
    const Rational delta = Rational::parse(delta_text);
    const DerivationSpace ds = derivation_space(alg, delta);
    if (verbose) {
        const std::size_t d = alg.dim();
        std::cerr << "constraint system: " << (d * (d - 1) / 2) * d << " rows, " << d * d
                  << " columns, rank " << ds.constraint_rank << "\n";
    }

    Outcome out;
    out.result["delta"] = delta.str();
    out.result["dimension"] = ds.basis.size();
    out.result["constraint_rank"] = ds.constraint_rank;
    out.text.push_back("delta: " + delta.str());
    out.text.push_back("dimension: " + std::to_string(ds.basis.size()));
    out.text.push_back("constraint rank: " + std::to_string(ds.constraint_rank));

    if (emit == "basis") {
        json basis = json::array();
        for (std::size_t i = 0; i < ds.basis.size(); ++i) {
            json entry;
            entry["index"] = i + 1;  // matches --from-derivation numbering
            const auto label = direction_label(alg, ds.basis[i]);
            if (label) entry["direction"] = *label;
            entry["map"] = map_json(ds.basis[i], labels);
            basis.push_back(std::move(entry));
            out.text.push_back("basis " + std::to_string(i + 1) +
                               (label ? " (" + *label + "):" : ":"));
            map_text(out.text, ds.basis[i], labels, "  ");
        }
        out.result["basis"] = std::move(basis);
    }

    if (grading_mode == "standard") {
        const Grading g = standard_grading(alg);
        const auto decomposition = decompose_derivation_space(ds, g);
        json parts = json::array();
        for (const auto& [degree, maps] : decomposition) {
            json entry;
            entry["degree"] = Grading::degree_str(degree);
            entry["dimension"] = maps.size();
            if (emit == "basis") {
                json part_basis = json::array();
                for (const auto& phi : maps) part_basis.push_back(map_json(phi, labels));
                entry["basis"] = std::move(part_basis);
            }
            parts.push_back(std::move(entry));
            out.text.push_back("degree " + Grading::degree_str(degree) +
                               ": dimension " + std::to_string(maps.size()));
            if (emit == "basis")
                for (const auto& phi : maps) map_text(out.text, phi, labels, "  ");
        }
        out.result["decomposition"] = std::move(parts);
    }

    return out;
}

Outcome run_tp(const Loaded& loaded, const std::string& check_file, bool search, bool normalize,
               bool verbose) {
    const LieAlgebra& alg = loaded.algebra;
    const auto& labels = alg.labels();
    if (search == !check_file.empty())
        throw std::invalid_argument("choose exactly one of --check FILE or --search");
    if (normalize && !search)
        throw std::invalid_argument("--normalize only applies to --search");

    Outcome out;
    if (!check_file.empty()) {
        const Product p = parse_product(read_text_file(check_file), alg.dim());
        const TransposedPoissonReport report = check_transposed_poisson(alg, p);

        out.result["product"] = product_json(p, labels);
        out.result["commutative"] = json{{"ok", true}};
        json associative = json::array();
        for (const auto& v : report.associative) associative.push_back(triple_json(v, labels));
        json compatible = json::array();
        for (const auto& v : report.compatible) compatible.push_back(triple_json(v, labels));
        out.result["associative"] =
            json{{"ok", report.associative_ok()}, {"violations", std::move(associative)}};
        out.result["compatible"] =
            json{{"ok", report.compatible_ok()}, {"violations", std::move(compatible)}};

        out.text.push_back("product:");
        product_text(out.text, p, labels, "  ");
        out.text.push_back("commutative: ok");
        out.text.push_back(std::string("associative: ") +
                           (report.associative_ok() ? "ok" : "violated"));
        for (const auto& v : report.associative) out.text.push_back("  " + triple_text(v, labels));
        out.text.push_back(std::string("compatible: ") +
                           (report.compatible_ok() ? "ok" : "violated"));
        for (const auto& v : report.compatible) out.text.push_back("  " + triple_text(v, labels));

        out.violation = !report.ok();
        return out;
    }

    const DerivationSpace ds = derivation_space(alg, Rational(1, 2));
    const SearchResult res = search_structures(alg, ds);
    if (verbose)
        std::cerr << "derivation space dimension: " << ds.basis.size()
                  << ", commutative parameters: " << res.parameter_names.size()
                  << ", residual constraints: " << res.residual_constraints.size() << "\n";

    out.result["delta"] = "1/2";
    out.result["parameters"] = res.parameter_names;
    json family = json::array();
    for (std::size_t t = 0; t < res.directions.size(); ++t) {
        json entry;
        entry["parameter"] = res.parameter_names[t];
        entry["entries"] = product_json(res.directions[t], labels);
        family.push_back(std::move(entry));
    }
    out.result["family"] = std::move(family);
    json residuals = json::array();
    for (const auto& q : res.residual_constraints) residuals.push_back(q.str(res.parameter_names));
    out.result["residual_constraints"] = std::move(residuals);
    const bool complete = res.status == SearchResult::Status::complete;
    out.result["status"] = complete ? "complete" : "unresolved";

    out.text.push_back("delta: 1/2");
    out.text.push_back("parameters: " + std::to_string(res.parameter_names.size()));
    if (res.directions.empty()) {
        out.text.push_back("family: zero product only");
    } else {
        out.text.push_back("family:");
        // union of the direction supports, coefficients as polynomials in the parameters
        std::map<Product::Key, std::map<std::size_t, Polynomial>> combined;
        for (std::size_t t = 0; t < res.directions.size(); ++t)
            for (const auto& [key, value] : res.directions[t].tensor())
                for (std::size_t k = 0; k < value.dim(); ++k)
                    if (!value[k].is_zero()) combined[key][k].add_term({t}, value[k]);
        for (const auto& [key, coords] : combined) {
            std::string rhs;
            for (const auto& [k, poly] : coords) {
                if (!rhs.empty()) rhs += " + ";
                rhs += "(" + poly.str(res.parameter_names) + ")*" + labels[k];
            }
            out.text.push_back("  " + labels[key.first] + "*" + labels[key.second] + " = " + rhs);
        }
    }
    if (!res.residual_constraints.empty()) {
        out.text.push_back("residual constraints:");
        for (const auto& q : res.residual_constraints)
            out.text.push_back("  " + q.str(res.parameter_names) + " = 0");
    }
    out.text.push_back(std::string("status: ") + (complete ? "complete" : "unresolved"));

    if (complete) {
        json classified = json::array();
        for (const auto& family_entry : res.classified) {
            json entry;
            entry["description"] = family_entry.description;
            entry["dimension"] = family_entry.parameter_basis.size();
            entry["nontrivial"] = family_entry.nontrivial;
            entry["representative"] = product_json(family_entry.representative, labels);
            classified.push_back(std::move(entry));
            out.text.push_back("classified: " + family_entry.description + " (dimension " +
                               std::to_string(family_entry.parameter_basis.size()) + ", " +
                               (family_entry.nontrivial ? "nontrivial" : "trivial") + ")");
            product_text(out.text, family_entry.representative, labels, "  ");
        }
        out.result["classified"] = std::move(classified);
        if (normalize) {
            out.result["normalization"] =
                json{{"applied", true},
                     {"annotation", "representatives shown with every free parameter rescaled "
                                    "to 1; scaling automorphisms identify nonzero parameter "
                                    "values, so each family is unique up to isomorphism"}};
            out.text.push_back(
                "normalization: free parameters rescaled to 1 (unique up to isomorphism)");
        }
    } else {
        out.unresolved = true;
    }
    return out;
}

Outcome run_homlie(const Loaded& loaded, const std::string& map_file, unsigned from_derivation) {
    const LieAlgebra& alg = loaded.algebra;
    const auto& labels = alg.labels();
    if ((from_derivation > 0) == !map_file.empty())
        throw std::invalid_argument("choose exactly one of --map FILE or --from-derivation N");

    Outcome out;
    LinearMap phi(alg.dim());
    if (!map_file.empty()) {
        phi = parse_map(read_text_file(map_file), alg.dim());
    } else {
        const DerivationSpace ds = derivation_space(alg, Rational(1, 2));
        if (from_derivation > ds.basis.size())
            throw std::invalid_argument(
                "--from-derivation " + std::to_string(from_derivation) +
                " out of range; the 1/2-derivation space has dimension " +
                std::to_string(ds.basis.size()));
        phi = ds.basis[from_derivation - 1];
        const auto label = direction_label(alg, phi);
        if (label) {
            out.result["direction"] = *label;
            out.text.push_back("direction: " + *label);
        }
    }

    const HomLieReport report = check_hom_lie(alg, phi);
    out.result["map"] = map_json(phi, labels);
    out.result["ok"] = report.ok;
    json violations = json::array();
    for (const auto& v : report.violations) violations.push_back(triple_json(v, labels));
    out.result["violations"] = std::move(violations);

    out.text.push_back("map:");
    map_text(out.text, phi, labels, "  ");
    out.text.push_back(std::string("hom-lie: ") + (report.ok ? "ok" : "violated"));
    for (const auto& v : report.violations) out.text.push_back("  " + triple_text(v, labels));

    out.violation = !report.ok;
    return out;
}

json algebra_inputs(const AlgebraOptions& opt, const Loaded& loaded) {
    json in;
    in["algebra"] = loaded.algebra.name();
    in["source"] = loaded.from_catalog ? "catalog" : "file";
    if (!opt.file.empty()) in["file"] = opt.file;
    if (opt.n) in["n"] = *opt.n;
    return in;
}

template <typename Body>
int execute(const std::string& command, const AlgebraOptions& aopt, const CommonOptions& common,
            json extra_inputs, Body body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    json inputs;
    try {
        const Loaded loaded = load_algebra(aopt);
        inputs = algebra_inputs(aopt, loaded);
        for (auto& [key, value] : extra_inputs.items()) inputs[key] = value;
        out = body(loaded);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();

    if (common.format == "json") {
        json report;
        report["command"] = command;
        report["inputs"] = std::move(inputs);
        report["result"] = std::move(out.result);
        report["timing_ms"] = ms;
        report["version"] = TPALG_VERSION;
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << "command: " << command << "\n";
        std::cout << "algebra: " << inputs["algebra"].get<std::string>() << " ("
                  << inputs["source"].get<std::string>() << ")\n";
        for (const auto& line : out.text) std::cout << line << "\n";
        std::ostringstream ms_text;
        ms_text << ms;
        std::cout << "timing_ms: " << ms_text.str() << "\n";
        std::cout << "version: " << TPALG_VERSION << "\n";
    }
    if (out.violation) return kExitViolation;
    if (out.unresolved) return kExitUnresolved;
    return kExitOk;
}

void add_algebra_options(CLI::App* cmd, AlgebraOptions& aopt, CommonOptions& common) {
    cmd->add_option("name", aopt.name, "catalog algebra (sl2, heisenberg, so, schrodinger; "
                                       "an _<n> suffix or --n picks the family member)");
    cmd->add_option("--n", aopt.n, "family parameter for catalog algebras");
    cmd->add_option("--file", aopt.file, "read the algebra from a structure-constant file");
    cmd->add_option("--format", common.format, "output format (default text)")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_flag("--verbose", common.verbose, "log linear-system sizes to stderr");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact structure-constant computations: delta-derivation spaces, transposed "
                 "Poisson products, Hom-Lie checks"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("tpalg ") + TPALG_VERSION);

    AlgebraOptions alg_opt;
    CommonOptions alg_common;
    bool show = false, check_jacobi_flag = false, check_grading_flag = false;
    CLI::App* cmd_algebra = app.add_subcommand("algebra", "inspect an algebra and its axioms");
    add_algebra_options(cmd_algebra, alg_opt, alg_common);
    cmd_algebra->add_flag("--show", show, "print the full bracket table");
    cmd_algebra->add_flag("--check-jacobi", check_jacobi_flag, "verify the Jacobi identity");
    cmd_algebra->add_flag("--check-grading", check_grading_flag,
                          "verify the declared or standard grading");

    AlgebraOptions der_opt;
    CommonOptions der_common;
    std::string delta = "1/2";
    std::string emit = "basis";
    std::string grading_mode = "none";
    CLI::App* cmd_derivations =
        app.add_subcommand("derivations", "compute a delta-derivation space");
    add_algebra_options(cmd_derivations, der_opt, der_common);
    cmd_derivations->add_option("--delta", delta, "derivation parameter as p or p/q (default 1/2)");
    cmd_derivations->add_option("--emit", emit, "basis (default) or dimension")
        ->check(CLI::IsMember({"basis", "dimension"}));
    cmd_derivations
        ->add_option("--grading", grading_mode, "decompose under the standard grading")
        ->check(CLI::IsMember({"standard", "none"}));

    AlgebraOptions tp_opt;
    CommonOptions tp_common;
    std::string check_file;
    bool search = false, normalize = false;
    CLI::App* cmd_tp =
        app.add_subcommand("tp", "check or search transposed Poisson structures");
    add_algebra_options(cmd_tp, tp_opt, tp_common);
    cmd_tp->add_option("--check", check_file, "verify the product in this file");
    cmd_tp->add_flag("--search", search, "classify all structures over the 1/2-derivations");
    cmd_tp->add_flag("--normalize", normalize,
                     "annotate search output with the up-to-isomorphism scaling");

    AlgebraOptions hom_opt;
    CommonOptions hom_common;
    std::string map_file;
    unsigned from_derivation = 0;
    CLI::App* cmd_homlie = app.add_subcommand("homlie", "check the Hom-Lie cyclic identity");
    add_algebra_options(cmd_homlie, hom_opt, hom_common);
    cmd_homlie->add_option("--map", map_file, "check the linear map in this file");
    cmd_homlie->add_option("--from-derivation", from_derivation,
                           "check the n-th basis element of the 1/2-derivation space (1-based)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
        app.exit(e);
        return kExitInputError;
    }

    if (cmd_algebra->parsed())
        return execute("algebra", alg_opt, alg_common,
                       json{{"show", show},
                            {"check_jacobi", check_jacobi_flag},
                            {"check_grading", check_grading_flag}},
                       [&](const Loaded& loaded) {
                           return run_algebra(loaded, show, check_jacobi_flag, check_grading_flag);
                       });
    if (cmd_derivations->parsed())
        return execute("derivations", der_opt, der_common,
                       json{{"delta", delta}, {"emit", emit}, {"grading", grading_mode}},
                       [&](const Loaded& loaded) {
                           return run_derivations(loaded, delta, emit, grading_mode,
                                                  der_common.verbose);
                       });
    if (cmd_tp->parsed()) {
        json extra;
        extra["mode"] = search ? "search" : "check";
        if (!check_file.empty()) extra["product_file"] = check_file;
        if (normalize) extra["normalize"] = true;
        return execute("tp", tp_opt, tp_common, std::move(extra), [&](const Loaded& loaded) {
            return run_tp(loaded, check_file, search, normalize, tp_common.verbose);
        });
    }
    if (cmd_homlie->parsed()) {
        json extra;
        if (!map_file.empty()) extra["map_file"] = map_file;
        if (from_derivation > 0) extra["from_derivation"] = from_derivation;
        return execute("homlie", hom_opt, hom_common, std::move(extra),
                       [&](const Loaded& loaded) {
                           return run_homlie(loaded, map_file, from_derivation);
                       });
    }
    return kExitInputError;
}
