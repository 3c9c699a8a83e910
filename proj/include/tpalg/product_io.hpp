#pragma once

#include <cstddef>
#include <string>

#include "tpalg/linear_map.hpp"
#include "tpalg/product.hpp"

namespace tpalg {

/// Product file: one "product <i> <j> = <coeff>*<k> + ..." line per stored
/// pair, '#' comments allowed. Only i <= j is accepted so symmetry is
/// enforced at parse time; duplicate pairs are errors, zero expansions are
/// dropped. Throws std::invalid_argument with a line number on bad input.
Product parse_product(const std::string& text, std::size_t dim);
std::string serialize_product(const Product& p);

/// Map file: one "map <i> = <coeff>*<k> + ..." line per basis image;
/// unlisted indices map to zero, duplicates are errors.
LinearMap parse_map(const std::string& text, std::size_t dim);
std::string serialize_map(const LinearMap& phi);

}  // namespace tpalg
