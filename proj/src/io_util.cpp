#include "io_util.hpp"

#include <sstream>
#include <stdexcept>

#include "tpalg/rational.hpp"

namespace tpalg::io {

void fail(std::size_t lineno, const std::string& msg) {
    throw std::invalid_argument("line " + std::to_string(lineno) + ": " + msg);
}

std::size_t parse_index(const std::string& token, std::size_t bound, std::size_t lineno,
                        const std::string& what) {
    if (token.empty()) fail(lineno, what + " is empty");
    for (char c : token)
        if (c < '0' || c > '9') fail(lineno, what + " '" + token + "' is not a number");
    const unsigned long value = std::stoul(token);
    if (value >= bound)
        fail(lineno, what + " " + token + " out of range (dim " + std::to_string(bound) + ")");
    return static_cast<std::size_t>(value);
}

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream is(line);
    std::string t;
    while (is >> t) tokens.push_back(t);
    return tokens;
}

Vector parse_terms(const std::vector<std::string>& tokens, std::size_t from, std::size_t dim,
                   std::size_t lineno) {
    Vector expansion(dim);
    for (std::size_t t = from; t < tokens.size(); ++t) {
        if ((t - from) % 2 == 1) {
            if (tokens[t] != "+") fail(lineno, "expected '+' between terms");
            continue;
        }
        const auto star = tokens[t].find('*');
        if (star == std::string::npos || tokens[t].find('*', star + 1) != std::string::npos)
            fail(lineno, "expected '<coeff>*<k>', got '" + tokens[t] + "'");
        Rational coeff;
        try {
            coeff = Rational::parse(tokens[t].substr(0, star));
        } catch (const std::invalid_argument& e) {
            fail(lineno, e.what());
        }
        const std::size_t k = parse_index(tokens[t].substr(star + 1), dim, lineno, "target index");
        expansion[k] += coeff;
    }
    if ((tokens.size() - from) % 2 == 0) fail(lineno, "trailing '+' without a term");
    return expansion;
}

}  // namespace tpalg::io
