#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tpalg/vector.hpp"

namespace tpalg::io {

[[noreturn]] void fail(std::size_t lineno, const std::string& msg);

/// Digits-only index below bound; fail()s with context otherwise.
std::size_t parse_index(const std::string& token, std::size_t bound, std::size_t lineno,
                        const std::string& what);

std::vector<std::string> tokenize(const std::string& line);

/// Parses "<coeff>*<k> (+ <coeff>*<k>)*" starting at tokens[from], summing
/// duplicate targets into a dim-length vector.
Vector parse_terms(const std::vector<std::string>& tokens, std::size_t from, std::size_t dim,
                   std::size_t lineno);

}  // namespace tpalg::io
