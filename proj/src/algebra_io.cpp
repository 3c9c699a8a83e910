#include "tpalg/algebra_io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "io_util.hpp"

namespace tpalg {

using io::fail;
using io::parse_index;
using io::tokenize;

AlgebraFile parse_algebra(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;

    bool have_header = false;
    std::string name;
    std::size_t dim = 0;
    std::optional<GradingGroup> group;
    std::vector<std::string> labels;
    std::vector<bool> label_set;
    std::vector<Degree> degrees;
    bool any_basis = false;
    LieAlgebra::Table table;
    std::set<LieAlgebra::Key> declared;

    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        const std::vector<std::string> tokens = tokenize(line);
        if (tokens.empty()) continue;
        const std::string& keyword = tokens[0];

        if (keyword == "algebra") {
            if (have_header) fail(lineno, "duplicate algebra header");
            if (tokens.size() != 4 || tokens[2] != "dim")
                fail(lineno, "expected 'algebra <name> dim <d>'");
            name = tokens[1];
            for (char c : tokens[3])
                if (c < '0' || c > '9') fail(lineno, "dim '" + tokens[3] + "' is not a number");
            dim = std::stoul(tokens[3]);
            labels.assign(dim, "");
            label_set.assign(dim, false);
            degrees.assign(dim, Degree{});
            have_header = true;
            continue;
        }
        if (!have_header) fail(lineno, "missing 'algebra' header before '" + keyword + "'");

        if (keyword == "grading") {
            if (tokens.size() != 2) fail(lineno, "expected 'grading <group>'");
            if (group) fail(lineno, "duplicate grading line");
            if (any_basis) fail(lineno, "grading must come before basis lines");
            try {
                group = GradingGroup::parse(tokens[1]);
            } catch (const std::invalid_argument& e) {
                fail(lineno, e.what());
            }
        } else if (keyword == "basis") {
            if (tokens.size() != 3 && tokens.size() != 5)
                fail(lineno, "expected 'basis <index> <label> [degree <g>]'");
            any_basis = true;
            const std::size_t idx = parse_index(tokens[1], dim, lineno, "basis index");
            if (label_set[idx]) fail(lineno, "basis index " + tokens[1] + " declared twice");
            labels[idx] = tokens[2];
            label_set[idx] = true;
            if (tokens.size() == 5) {
                if (tokens[3] != "degree") fail(lineno, "expected 'degree', got '" + tokens[3] + "'");
                if (!group) fail(lineno, "degree given without a grading line");
                try {
                    degrees[idx] = Grading::parse_degree(tokens[4], *group);
                } catch (const std::invalid_argument& e) {
                    fail(lineno, e.what());
                }
            } else if (group) {
                fail(lineno, "grading declared but basis line has no degree");
            }
        } else if (keyword == "bracket") {
            if (tokens.size() < 5 || tokens[3] != "=")
                fail(lineno, "expected 'bracket <i> <j> = <coeff>*<k> ...'");
            std::size_t i = parse_index(tokens[1], dim, lineno, "bracket index");
            std::size_t j = parse_index(tokens[2], dim, lineno, "bracket index");
            Vector expansion = io::parse_terms(tokens, 4, dim, lineno);
            if (i == j) {
                if (!expansion.is_zero()) fail(lineno, "[e_i,e_i] must be zero");
                continue;
            }
            if (i > j) {
                std::swap(i, j);
                expansion = -expansion;
            }
            if (!declared.insert({i, j}).second)
                fail(lineno, "bracket (" + std::to_string(i) + "," + std::to_string(j) +
                                 ") declared twice (possibly as the swapped pair)");
            if (!expansion.is_zero()) table.emplace(LieAlgebra::Key{i, j}, std::move(expansion));
        } else {
            fail(lineno, "unknown directive '" + keyword + "'");
        }
    }

    if (!have_header) throw std::invalid_argument("line 1: missing 'algebra' header");
    for (std::size_t i = 0; i < dim; ++i)
        if (!label_set[i])
            throw std::invalid_argument("basis index " + std::to_string(i) + " never declared");

    AlgebraFile out{LieAlgebra(name, std::move(labels), std::move(table)), std::nullopt};
    if (group) out.grading = Grading(*group, std::move(degrees));
    return out;
}

std::string serialize_algebra(const LieAlgebra& alg, const std::optional<Grading>& grading) {
    if (grading && grading->dim() != alg.dim())
        throw std::invalid_argument("serialize_algebra: grading dimension mismatch");
    std::ostringstream os;
    os << "algebra " << alg.name() << " dim " << alg.dim() << "\n";
    if (grading) os << "grading " << grading->group().str() << "\n";
    for (std::size_t i = 0; i < alg.dim(); ++i) {
        os << "basis " << i << " " << alg.label(i);
        if (grading) os << " degree " << Grading::degree_str(grading->degree(i));
        os << "\n";
    }
    for (const auto& [key, expansion] : alg.table()) {
        os << "bracket " << key.first << " " << key.second << " =";
        bool first = true;
        for (std::size_t k = 0; k < alg.dim(); ++k) {
            if (expansion[k].is_zero()) continue;
            os << (first ? " " : " + ") << expansion[k].str() << "*" << k;
            first = false;
        }
        os << "\n";
    }
    return os.str();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

AlgebraFile read_algebra_file(const std::string& path) {
    return parse_algebra(read_text_file(path));
}

}  // namespace tpalg
