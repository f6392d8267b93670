#include "drf/algebra.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace drf {

namespace {

// Incremental reduced row span over a fixed column ordering; used for the
// ideal elimination. Rows are kept fully reduced against each other.
class RowSpan {
public:
    explicit RowSpan(int cols) : cols_(cols) {}

    void reduce(ColVec& v) const
    {
        for (const auto& [p, row] : rows_) {
            if (v[p] == 0)
                continue;
            Rat f = v[p];
            for (int j = p; j < cols_; ++j)
                if (row[j] != 0)
                    v[j] -= f * row[j];
        }
    }

    bool insert(ColVec v)
    {
        reduce(v);
        int pivot = -1;
        for (int j = 0; j < cols_; ++j)
            if (v[j] != 0) {
                pivot = j;
                break;
            }
        if (pivot < 0)
            return false;
        Rat inv = Rat(1) / v[pivot];
        for (int j = pivot; j < cols_; ++j)
            if (v[j] != 0)
                v[j] *= inv;
        for (auto& [p, row] : rows_) {
            if (row[pivot] == 0)
                continue;
            Rat f = row[pivot];
            for (int j = pivot; j < cols_; ++j)
                if (v[j] != 0)
                    row[j] -= f * v[j];
        }
        rows_.emplace(pivot, std::move(v));
        return true;
    }

    bool has_pivot(int col) const { return rows_.count(col) > 0; }

private:
    int cols_;
    std::map<int, ColVec> rows_;
};

struct PathKey {
    int source;
    std::vector<int> arrows;
    bool operator<(const PathKey& o) const
    {
        if (source != o.source)
            return source < o.source;
        return arrows < o.arrows;
    }
};

} // namespace

std::shared_ptr<const BoundQuiverAlgebra>
BoundQuiverAlgebra::build(Quiver quiver, std::vector<Relation> relations, int nilpotency_bound)
{
    const int V = quiver.vertex_count;
    const int L = nilpotency_bound;
    if (V < 1)
        throw std::invalid_argument("quiver needs at least one vertex");
    if (L < 2)
        throw std::invalid_argument("nilpotency bound must be at least 2");

    std::map<std::string, int> arrow_by_name;
    for (int a = 0; a < static_cast<int>(quiver.arrows.size()); ++a) {
        const Arrow& arr = quiver.arrows[a];
        if (arr.source < 0 || arr.source >= V || arr.target < 0 || arr.target >= V)
            throw std::invalid_argument("arrow endpoint out of range: " + arr.name);
        if (!arrow_by_name.emplace(arr.name, a).second)
            throw std::invalid_argument("duplicate arrow name: " + arr.name);
    }

    // Resolve relation paths to arrow indices and check admissibility.
    struct ResolvedTerm {
        Rat coef;
        std::vector<int> arrows;
    };
    struct ResolvedRelation {
        int source = 0;
        int target = 0;
        int min_len = 0;
        std::vector<ResolvedTerm> terms;
    };
    std::vector<ResolvedRelation> resolved;
    for (const Relation& rel : relations) {
        if (rel.empty())
            throw std::invalid_argument("empty relation");
        ResolvedRelation rr;
        bool first = true;
        for (const RelationTerm& term : rel) {
            if (term.coef == 0)
                throw std::invalid_argument("zero coefficient in relation");
            if (term.path.size() < 2)
                throw std::invalid_argument("relation term shorter than 2 arrows");
            ResolvedTerm rt;
            rt.coef = term.coef;
            int at = -1;
            for (const std::string& name : term.path) {
                auto it = arrow_by_name.find(name);
                if (it == arrow_by_name.end())
                    throw std::invalid_argument("unknown arrow in relation: " + name);
                const Arrow& arr = quiver.arrows[it->second];
                if (at >= 0 && arr.source != at)
                    throw std::invalid_argument("non-composable path in relation");
                at = arr.target;
                rt.arrows.push_back(it->second);
            }
            int src = quiver.arrows[rt.arrows.front()].source;
            int tgt = quiver.arrows[rt.arrows.back()].target;
            if (first) {
                rr.source = src;
                rr.target = tgt;
                rr.min_len = static_cast<int>(rt.arrows.size());
                first = false;
            } else {
                if (src != rr.source || tgt != rr.target)
                    throw std::invalid_argument("relation terms are not parallel");
                rr.min_len = std::min(rr.min_len, static_cast<int>(rt.arrows.size()));
            }
            rr.terms.push_back(std::move(rt));
        }
        resolved.push_back(std::move(rr));
    }

    // All paths of length <= L, generated by length. Within one length the
    // order is lexicographic in (source, arrow indices).
    std::vector<BasisPath> paths;
    std::map<PathKey, int> path_index;
    for (int v = 0; v < V; ++v) {
        path_index[PathKey{v, {}}] = static_cast<int>(paths.size());
        paths.push_back(BasisPath{v, v, {}});
    }
    int stratum_begin = 0; // start of the previous length stratum
    for (int len = 1; len <= L; ++len) {
        int stratum_end = static_cast<int>(paths.size());
        for (int i = stratum_begin; i < stratum_end; ++i) {
            for (int a = 0; a < static_cast<int>(quiver.arrows.size()); ++a) {
                if (quiver.arrows[a].source != paths[i].target)
                    continue;
                BasisPath ext = paths[i];
                ext.arrows.push_back(a);
                ext.target = quiver.arrows[a].target;
                path_index[PathKey{ext.source, ext.arrows}] = static_cast<int>(paths.size());
                paths.push_back(std::move(ext));
            }
        }
        stratum_begin = stratum_end;
    }
    const int P = static_cast<int>(paths.size());

    // Eliminate with longer paths first, so that normal forms of surviving
    // paths only involve paths of the same or shorter length.
    std::vector<int> cols_in_order(P);
    for (int i = 0; i < P; ++i)
        cols_in_order[i] = i;
    std::stable_sort(cols_in_order.begin(), cols_in_order.end(), [&](int a, int b) {
        return paths[a].length() > paths[b].length();
    });
    std::vector<int> col_of_path(P);
    for (int c = 0; c < P; ++c)
        col_of_path[cols_in_order[c]] = c;

    RowSpan span(P);
    for (const ResolvedRelation& rr : resolved) {
        for (int pi = 0; pi < P; ++pi) {
            if (paths[pi].target != rr.source)
                continue;
            for (int qi = 0; qi < P; ++qi) {
                if (paths[qi].source != rr.target)
                    continue;
                int outer = paths[pi].length() + paths[qi].length();
                if (outer + rr.min_len > L)
                    continue;
                ColVec v(P);
                bool nonzero = false;
                for (const ResolvedTerm& term : rr.terms) {
                    if (outer + static_cast<int>(term.arrows.size()) > L)
                        continue;
                    std::vector<int> whole = paths[pi].arrows;
                    whole.insert(whole.end(), term.arrows.begin(), term.arrows.end());
                    whole.insert(whole.end(), paths[qi].arrows.begin(), paths[qi].arrows.end());
                    int idx = path_index.at(PathKey{paths[pi].source, whole});
                    v[col_of_path[idx]] += term.coef;
                    nonzero = true;
                }
                if (nonzero)
                    span.insert(std::move(v));
            }
        }
    }

    // rad^L = 0 certificate: every path of length exactly L must already lie
    // in the ideal.
    for (int i = 0; i < P; ++i) {
        if (paths[i].length() != L)
            continue;
        if (!span.has_pivot(col_of_path[i]))
            throw std::invalid_argument(
                "nilpotency bound " + std::to_string(L) + " is not satisfied: rad^L != 0");
    }

    auto alg = std::shared_ptr<BoundQuiverAlgebra>(new BoundQuiverAlgebra());
    alg->quiver_ = std::move(quiver);
    alg->relations_ = std::move(relations);
    alg->nilpotency_bound_ = L;

    std::vector<int> basis_of_path(P, -1);
    for (int i = 0; i < P; ++i) {
        if (paths[i].length() >= L || span.has_pivot(col_of_path[i]))
            continue;
        basis_of_path[i] = static_cast<int>(alg->basis_.size());
        alg->basis_.push_back(paths[i]);
    }
    const int dim = static_cast<int>(alg->basis_.size());

    alg->basis_between_.assign(static_cast<std::size_t>(V) * V, {});
    for (int b = 0; b < dim; ++b)
        alg->basis_between_[static_cast<std::size_t>(alg->basis_[b].source) * V
                            + alg->basis_[b].target]
            .push_back(b);

    alg->idempotent_index_.assign(V, -1);
    for (int v = 0; v < V; ++v)
        alg->idempotent_index_[v] = basis_of_path[path_index.at(PathKey{v, {}})];
    alg->arrow_basis_index_.assign(alg->quiver_.arrows.size(), -1);
    for (int a = 0; a < static_cast<int>(alg->quiver_.arrows.size()); ++a) {
        const Arrow& arr = alg->quiver_.arrows[a];
        alg->arrow_basis_index_[a] = basis_of_path[path_index.at(PathKey{arr.source, {a}})];
    }

    auto normal_form = [&](int pidx) -> AlgElement {
        ColVec v(P);
        v[col_of_path[pidx]] = 1;
        span.reduce(v);
        AlgElement out;
        for (int c = 0; c < P; ++c) {
            if (v[c] == 0)
                continue;
            int b = basis_of_path[cols_in_order[c]];
            if (b >= 0)
                out.emplace_back(b, v[c]);
        }
        std::sort(out.begin(), out.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        return out;
    };

    alg->mult_table_.assign(static_cast<std::size_t>(dim) * dim, {});
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            const BasisPath& pi = alg->basis_[i];
            const BasisPath& pj = alg->basis_[j];
            if (pi.target != pj.source)
                continue;
            if (pi.length() + pj.length() >= L)
                continue; // lies in rad^L = 0
            std::vector<int> whole = pi.arrows;
            whole.insert(whole.end(), pj.arrows.begin(), pj.arrows.end());
            int idx = path_index.at(PathKey{pi.source, whole});
            alg->mult_table_[static_cast<std::size_t>(i) * dim + j] = normal_form(idx);
        }
    }

    return alg;
}

const std::vector<int>& BoundQuiverAlgebra::basis_between(int u, int v) const
{
    return basis_between_[static_cast<std::size_t>(u) * vertex_count() + v];
}

std::vector<std::vector<int>> BoundQuiverAlgebra::fibers_from(int source) const
{
    std::vector<std::vector<int>> fibers(vertex_count());
    for (int v = 0; v < vertex_count(); ++v)
        fibers[v] = basis_between(source, v);
    return fibers;
}

const AlgElement& BoundQuiverAlgebra::mult(int i, int j) const
{
    return mult_table_[static_cast<std::size_t>(i) * dimension() + j];
}

bool BoundQuiverAlgebra::same_presentation(const BoundQuiverAlgebra& other) const
{
    return quiver_ == other.quiver_ && basis_ == other.basis_;
}

} // namespace drf
