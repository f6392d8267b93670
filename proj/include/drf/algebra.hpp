#pragma once

#include "drf/matrix.hpp"
#include "drf/quiver.hpp"

#include <map>
#include <memory>
#include <utility>
#include <vector>

namespace drf {

// A residue class of a path in the quotient algebra, kept as the underlying
// path. source == target vertex paths of length 0 are the idempotents e_v.
struct BasisPath {
    int source = 0;
    int target = 0;
    std::vector<int> arrows; // arrow indices, left-to-right

    int length() const { return static_cast<int>(arrows.size()); }
    bool operator==(const BasisPath&) const = default;
};

// Sparse element of the algebra in the path-residue basis.
using AlgElement = std::vector<std::pair<int, Rat>>;

// The finite-dimensional algebra kQ/I presented by a quiver and admissible
// relations, realized concretely: a path-residue basis per vertex pair and a
// full table of structure constants.
//
// Construction works in the quotient kQ/R^{L+1} (R the arrow ideal, L the
// user-supplied nilpotency bound): the two-sided ideal generated by the
// relations is spanned there by the truncations of p*r*q over all path pairs
// (p, q), and one Gauss-Jordan pass yields both the surviving path basis and
// normal forms. The build then checks that every path of length exactly L
// already lies in the ideal; this certifies rad^L = 0, so paths of length
// >= L vanish in kQ/I and the truncation is exact, not an approximation.
// If the check fails, L was not a nilpotency bound and build() throws.
class BoundQuiverAlgebra {
public:
    // Throws std::invalid_argument on: L < 2, relation terms shorter than 2,
    // non-parallel relation terms, unknown arrow names, non-composable paths,
    // zero coefficients, or an L that is not a nilpotency bound of kQ/I.
    static std::shared_ptr<const BoundQuiverAlgebra>
    build(Quiver quiver, std::vector<Relation> relations, int nilpotency_bound);

    const Quiver& quiver() const { return quiver_; }
    const std::vector<Relation>& relations() const { return relations_; }
    int nilpotency_bound() const { return nilpotency_bound_; }
    int vertex_count() const { return quiver_.vertex_count; }
    int arrow_count() const { return static_cast<int>(quiver_.arrows.size()); }

    int dimension() const { return static_cast<int>(basis_.size()); }
    const BasisPath& basis_element(int i) const { return basis_[i]; }

    // Basis indices of paths u -> v, in ascending (length, lex) order.
    const std::vector<int>& basis_between(int u, int v) const;
    // Basis indices of paths with the given source, grouped per target.
    std::vector<std::vector<int>> fibers_from(int source) const;

    int idempotent_index(int v) const { return idempotent_index_[v]; }
    int arrow_index_in_basis(int arrow) const { return arrow_basis_index_[arrow]; }

    // Structure constants: product of basis residues i * j (left-to-right).
    const AlgElement& mult(int i, int j) const;

    // Same quiver, same surviving basis paths; used to guard cross-algebra
    // operations when two handles were built independently.
    bool same_presentation(const BoundQuiverAlgebra& other) const;

private:
    BoundQuiverAlgebra() = default;

    Quiver quiver_;
    std::vector<Relation> relations_;
    int nilpotency_bound_ = 0;

    std::vector<BasisPath> basis_;
    std::vector<std::vector<int>> basis_between_; // (u * V + v) -> indices
    std::vector<int> idempotent_index_;
    std::vector<int> arrow_basis_index_;
    std::vector<AlgElement> mult_table_; // (i * dim + j)
};

using AlgebraPtr = std::shared_ptr<const BoundQuiverAlgebra>;

} // namespace drf
