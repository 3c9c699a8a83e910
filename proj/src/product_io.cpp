#include "tpalg/product_io.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

#include "io_util.hpp"

namespace tpalg {

using io::fail;
using io::parse_index;
using io::tokenize;

Product parse_product(const std::string& text, std::size_t dim) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    Product out(dim);
    std::set<Product::Key> declared;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        const std::vector<std::string> tokens = tokenize(line);
        if (tokens.empty()) continue;
        if (tokens[0] != "product") fail(lineno, "unknown directive '" + tokens[0] + "'");
        if (tokens.size() < 5 || tokens[3] != "=")
            fail(lineno, "expected 'product <i> <j> = <coeff>*<k> ...'");
        const std::size_t i = parse_index(tokens[1], dim, lineno, "product index");
        const std::size_t j = parse_index(tokens[2], dim, lineno, "product index");
        if (i > j)
            fail(lineno, "product pairs must satisfy i <= j; got (" + tokens[1] + "," + tokens[2] +
                             ")");
        if (!declared.insert({i, j}).second)
            fail(lineno,
                 "product (" + std::to_string(i) + "," + std::to_string(j) + ") declared twice");
        out.set(i, j, io::parse_terms(tokens, 4, dim, lineno));
    }
    return out;
}

std::string serialize_product(const Product& p) {
    std::ostringstream os;
    for (const auto& [key, expansion] : p.tensor()) {
        os << "product " << key.first << " " << key.second << " =";
        bool first = true;
        for (std::size_t k = 0; k < p.dim(); ++k) {
            if (expansion[k].is_zero()) continue;
            os << (first ? " " : " + ") << expansion[k].str() << "*" << k;
            first = false;
        }
        os << "\n";
    }
    return os.str();
}

LinearMap parse_map(const std::string& text, std::size_t dim) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    LinearMap out(dim);
    std::set<std::size_t> declared;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        const std::vector<std::string> tokens = tokenize(line);
        if (tokens.empty()) continue;
        if (tokens[0] != "map") fail(lineno, "unknown directive '" + tokens[0] + "'");
        if (tokens.size() < 4 || tokens[2] != "=")
            fail(lineno, "expected 'map <i> = <coeff>*<k> ...'");
        const std::size_t i = parse_index(tokens[1], dim, lineno, "map index");
        if (!declared.insert(i).second)
            fail(lineno, "map " + std::to_string(i) + " declared twice");
        const Vector image = io::parse_terms(tokens, 3, dim, lineno);
        for (std::size_t k = 0; k < dim; ++k) out.at(k, i) = image[k];
    }
    return out;
}

std::string serialize_map(const LinearMap& phi) {
    std::ostringstream os;
    for (std::size_t i = 0; i < phi.dim(); ++i) {
        const Vector image = phi.column(i);
        if (image.is_zero()) continue;
        os << "map " << i << " =";
        bool first = true;
        for (std::size_t k = 0; k < phi.dim(); ++k) {
            if (image[k].is_zero()) continue;
            os << (first ? " " : " + ") << image[k].str() << "*" << k;
            first = false;
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace tpalg
