#pragma once

#include <optional>
#include <string>

#include "tpalg/lie_algebra.hpp"

namespace tpalg {

struct AlgebraFile {
    LieAlgebra algebra;
    std::optional<Grading> grading;
};

/// Parses the algebra text format:
///
///   algebra <name> dim <d>
///   grading <group>                      (optional, before any basis line)
///   basis <index> <label> [degree <g>]   (degree required iff grading given)
///   bracket <i> <j> = <coeff>*<k> (+ <coeff>*<k>)*
///
/// '#' starts a comment; indices are 0-based. Bracket lines with j < i are
/// normalized by antisymmetry; declaring the same unordered pair twice is an
/// error, as is a nonzero [e_i,e_i]. All errors are std::invalid_argument
/// tagged with the offending line number.
AlgebraFile parse_algebra(const std::string& text);

/// Canonical text form; parse_algebra(serialize_algebra(a, g)) reproduces the
/// algebra and grading bit-exactly.
std::string serialize_algebra(const LieAlgebra& alg,
                              const std::optional<Grading>& grading = std::nullopt);

/// Whole-file read; throws std::runtime_error when the file cannot be opened.
std::string read_text_file(const std::string& path);

AlgebraFile read_algebra_file(const std::string& path);

}  // namespace tpalg
