#pragma once

#include "drf/algebra.hpp"
#include "drf/matrix.hpp"

#include <span>
#include <vector>

namespace drf {

// A finite-dimensional right module, given by one rational matrix per arrow.
// The matrix of an arrow maps the source fiber to the target fiber, so the
// matrix of a path a1 a2 ... ak (left-to-right) is M(ak) * ... * M(a1).
struct Representation {
    AlgebraPtr algebra;
    std::vector<int> dims;
    std::vector<Mat> arrow_maps; // aligned with algebra->quiver().arrows

    int total_dim() const;
    bool is_zero() const { return total_dim() == 0; }
};

// Validates fiber dimensions and matrix shapes; throws std::invalid_argument.
Representation make_representation(AlgebraPtr algebra, std::vector<int> dims,
                                   std::vector<Mat> arrow_maps);

Representation zero_representation(AlgebraPtr algebra);
Representation simple(AlgebraPtr algebra, int vertex);

// The indecomposable projective P_v = e_v A: fibers are the basis paths
// leaving v, arrows act by right concatenation.
Representation projective(AlgebraPtr algebra, int vertex);

Representation direct_sum(const Representation& x, const Representation& y);

Mat path_matrix(const Representation& x, std::span<const int> arrows);

// Every relation of the algebra must evaluate to the zero matrix.
bool satisfies_relations(const Representation& x);

// A module homomorphism as one matrix per vertex.
struct Intertwiner {
    std::vector<Mat> comps;
};

Intertwiner zero_intertwiner(const Representation& from, const Representation& to);
Intertwiner compose(const Intertwiner& second, const Intertwiner& first);
bool is_intertwiner(const Representation& x, const Representation& y, const Intertwiner& f);

// Basis of Hom(X, Y), the solution space of the intertwiner equations
// f_{t(a)} X_a = Y_a f_{s(a)} stacked into one kernel computation.
class HomBasis {
public:
    HomBasis(const Representation& x, const Representation& y);

    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<Intertwiner>& basis() const { return basis_; }

    // Coordinates of an intertwiner already known to lie in the span;
    // read off the distinguished free coordinates of the kernel basis.
    std::vector<Rat> coords(const Intertwiner& f) const;

private:
    std::vector<int> fiber_offsets_;
    std::vector<int> x_dims_;
    std::vector<int> free_cols_;
    std::vector<Intertwiner> basis_;
};

inline std::vector<Intertwiner> hom(const Representation& x, const Representation& y)
{
    return HomBasis(x, y).basis();
}

inline int hom_dim(const Representation& x, const Representation& y)
{
    return HomBasis(x, y).dim();
}

} // namespace drf
