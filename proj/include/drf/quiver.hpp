#pragma once

#include "drf/rational.hpp"

#include <string>
#include <vector>

namespace drf {

struct Arrow {
    std::string name;
    int source = 0;
    int target = 0;

    bool operator==(const Arrow&) const = default;
};

struct Quiver {
    int vertex_count = 0;
    std::vector<Arrow> arrows;

    bool operator==(const Quiver&) const = default;
};

// One summand of a relation: coef * (arrow-name path), paths composing left
// to right ("ab" on 1 -> 2 -> 3 means a then b).
struct RelationTerm {
    Rat coef;
    std::vector<std::string> path;

    bool operator==(const RelationTerm&) const = default;
};

// All terms must be parallel paths of length >= 2 (admissibility).
using Relation = std::vector<RelationTerm>;

} // namespace drf
