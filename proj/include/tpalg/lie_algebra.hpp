#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tpalg/rational.hpp"
#include "tpalg/vector.hpp"

namespace tpalg {

/// Finite-dimensional Lie algebra given by exact structure constants.
///
/// Only pairs i < j are stored; [e_j, e_i] follows by antisymmetry and
/// [e_i, e_i] = 0 implicitly. Zero expansions are never stored. The Jacobi
/// identity is not assumed by the representation; check_jacobi verifies it.
class LieAlgebra {
public:
    using Key = std::pair<std::size_t, std::size_t>;
    using Table = std::map<Key, Vector>;

    /// Validates: labels unique and nonempty, keys i < j < dim, expansions of
    /// length dim. Zero expansions are dropped. Throws std::invalid_argument.
    LieAlgebra(std::string name, std::vector<std::string> basis_labels, Table brackets);

    const std::string& name() const { return name_; }
    std::size_t dim() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    std::optional<std::size_t> index_of(const std::string& label) const;

    /// Canonical stored table: i < j only, no zero expansions.
    const Table& table() const { return table_; }

    /// Stored expansion of [e_i, e_j] for i < j; nullptr when zero.
    const Vector* stored_entry(std::size_t i, std::size_t j) const;

    /// [e_i, e_j] for any index pair, antisymmetry applied.
    Vector bracket_basis(std::size_t i, std::size_t j) const;

    /// Bilinear bracket of arbitrary coordinate vectors.
    /// Throws std::invalid_argument on dimension mismatch.
    Vector bracket(const Vector& x, const Vector& y) const;

    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
        return a.name_ == b.name_ && a.labels_ == b.labels_ && a.table_ == b.table_;
    }
    friend bool operator!=(const LieAlgebra& a, const LieAlgebra& b) { return !(a == b); }

private:
    std::string name_;
    std::vector<std::string> labels_;
    Table table_;
};

/// [v, e_k], touching only the stored expansions' support.
Vector bracket_with_basis(const LieAlgebra& alg, const Vector& v, std::size_t k);

struct JacobiViolation {
    std::size_t i, j, k;
    Vector residual;  // [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]
};

struct JacobiReport {
    bool ok = true;
    std::vector<JacobiViolation> violations;  // ordered by (i, j, k)
};

JacobiReport check_jacobi(const LieAlgebra& alg);

struct AntisymmetryViolation {
    std::size_t i, j;
    Vector residual;  // [e_i,e_j] + [e_j,e_i]
};

struct AntisymmetryReport {
    bool ok = true;
    std::vector<AntisymmetryViolation> violations;  // ordered by (i, j), i <= j
};

/// Scans all basis pairs for [e_i,e_j] + [e_j,e_i] = 0 and [e_i,e_i] = 0.
/// The stored table makes this hold by construction; the scan exercises the
/// orientation logic that derives [e_j,e_i] from the stored i < j entries.
AntisymmetryReport check_antisymmetry(const LieAlgebra& alg);

/// Finitely generated abelian grading group: Z2, Z^k, or Z2^k.
struct GradingGroup {
    enum class Kind { Z2, ZK, Z2K };
    Kind kind = Kind::Z2;
    std::size_t rank = 1;

    /// "Z2", "Z^k", "Z2^k"
    std::string str() const;
    static GradingGroup parse(const std::string& token);

    friend bool operator==(const GradingGroup& a, const GradingGroup& b) {
        return a.kind == b.kind && a.rank == b.rank;
    }
    friend bool operator!=(const GradingGroup& a, const GradingGroup& b) { return !(a == b); }
};

/// Group element, one component per generator; stored normalized
/// (components reduced mod 2 for the Z2 kinds).
using Degree = std::vector<long>;

class Grading {
public:
    /// One degree per basis index; degrees are normalized on construction.
    /// Throws std::invalid_argument when a degree has the wrong rank.
    Grading(GradingGroup group, std::vector<Degree> degrees);

    const GradingGroup& group() const { return group_; }
    std::size_t dim() const { return degrees_.size(); }
    const Degree& degree(std::size_t i) const { return degrees_.at(i); }

    Degree zero() const { return Degree(group_.rank, 0); }
    Degree add(const Degree& a, const Degree& b) const;
    Degree sub(const Degree& a, const Degree& b) const;
    Degree normalize(Degree d) const;

    /// "1" for rank 1, "1,0" for higher rank; parse is the inverse.
    static std::string degree_str(const Degree& d);
    static Degree parse_degree(const std::string& token, const GradingGroup& group);

    friend bool operator==(const Grading& a, const Grading& b) {
        return a.group_ == b.group_ && a.degrees_ == b.degrees_;
    }
    friend bool operator!=(const Grading& a, const Grading& b) { return !(a == b); }

private:
    GradingGroup group_;
    std::vector<Degree> degrees_;
};

struct GradingViolation {
    std::size_t i, j;  // bracket pair, i < j
    std::size_t k;     // coordinate of [e_i,e_j] outside degree deg(i)+deg(j)
};

struct GradingReport {
    bool ok = true;
    std::vector<GradingViolation> violations;
};

/// ok iff every [e_i,e_j] is supported only on coordinates of degree
/// deg(i)+deg(j). Throws std::invalid_argument when dims disagree.
GradingReport check_grading(const LieAlgebra& alg, const Grading& g);

}  // namespace tpalg
