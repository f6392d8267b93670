#pragma once

#include "drf/representation.hpp"

#include <utility>
#include <vector>

namespace drf {

// Dimension vector of top(X) = X / X.rad (fibers modulo incoming arrow images).
std::vector<int> top_dims(const Representation& x);
// Dimension vector of soc(X) = { m : m.rad = 0 }.
std::vector<int> socle_dims(const Representation& x);

struct ProjCover {
    Representation cover_module;           // P = direct sum of P_v^{m_v}
    Intertwiner cover_map;                 // surjection P -> X
    std::vector<int> summand_vertices;     // one vertex per P_v summand, in order
};

// Minimal projective cover. The lift of top(X) is chosen deterministically by
// extending the radical with standard basis vectors in ascending index order.
ProjCover proj_cover(const Representation& x);

struct SyzygyResult {
    Representation module;    // ker(cover) as an abstract representation
    Intertwiner inclusion;    // embedding into the cover module
    ProjCover cover;
};

SyzygyResult syzygy_with_inclusion(const Representation& x);
Representation syzygy(const Representation& x);

// Minimal projective resolution ... -> P_1 -> P_0 -> X -> 0, extended lazily
// and memoized per stage.
class MinimalResolution {
public:
    explicit MinimalResolution(Representation x);

    // P_i; stages beyond the first vanishing syzygy are zero modules.
    const Representation& projective_at(int i);
    // d_i : P_i -> P_{i-1}, for i >= 1.
    const Intertwiner& differential(int i);

    // dim Ext^i(X, Y) as H^i of Hom(P_*, Y); i >= 1.
    int ext_dim(const Representation& y, int i);

private:
    void ensure(int stage);

    Representation x_;
    std::vector<Representation> projectives_;
    std::vector<Intertwiner> differentials_; // differentials_[i] = d_{i+1}
    Representation tail_syzygy_;
    Intertwiner tail_inclusion_;
};

int ext_dim(const Representation& x, const Representation& y, int i);

// dim of Hom(X,Y) modulo maps factoring through a projective; any such map
// factors through the projective cover of Y, so one rank computation decides.
int stable_hom_dim(const Representation& x, const Representation& y);

// End(X) modulo its radical (computed by the characteristic-0 trace form)
// must be one-dimensional. Exact for the split algebras this toolkit builds.
// Throws std::invalid_argument when X = 0.
bool is_indecomposable(const Representation& x);

} // namespace drf
