#include "drf/representation.hpp"

#include <numeric>
#include <stdexcept>

namespace drf {

namespace {

void check_same_algebra(const Representation& x, const Representation& y)
{
    if (x.algebra == y.algebra)
        return;
    if (x.algebra && y.algebra && x.algebra->same_presentation(*y.algebra))
        return;
    throw std::invalid_argument("representations live over different algebras");
}

} // namespace

int Representation::total_dim() const
{
    return std::accumulate(dims.begin(), dims.end(), 0);
}

Representation make_representation(AlgebraPtr algebra, std::vector<int> dims,
                                   std::vector<Mat> arrow_maps)
{
    if (!algebra)
        throw std::invalid_argument("null algebra");
    const Quiver& q = algebra->quiver();
    if (static_cast<int>(dims.size()) != q.vertex_count)
        throw std::invalid_argument("dimension vector has wrong length");
    for (int d : dims)
        if (d < 0)
            throw std::invalid_argument("negative fiber dimension");
    if (arrow_maps.size() != q.arrows.size())
        throw std::invalid_argument("arrow map count mismatch");
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        const Arrow& arr = q.arrows[a];
        if (arrow_maps[a].rows() != dims[arr.target] || arrow_maps[a].cols() != dims[arr.source])
            throw std::invalid_argument("arrow map shape mismatch for " + arr.name);
    }
    return Representation{std::move(algebra), std::move(dims), std::move(arrow_maps)};
}

Representation zero_representation(AlgebraPtr algebra)
{
    std::vector<int> dims(algebra->vertex_count(), 0);
    std::vector<Mat> maps;
    for (const Arrow& a : algebra->quiver().arrows)
        maps.emplace_back(dims[a.target], dims[a.source]);
    return Representation{std::move(algebra), std::move(dims), std::move(maps)};
}

Representation simple(AlgebraPtr algebra, int vertex)
{
    if (vertex < 0 || vertex >= algebra->vertex_count())
        throw std::invalid_argument("vertex out of range");
    std::vector<int> dims(algebra->vertex_count(), 0);
    dims[vertex] = 1;
    std::vector<Mat> maps;
    for (const Arrow& a : algebra->quiver().arrows)
        maps.emplace_back(dims[a.target], dims[a.source]);
    return Representation{std::move(algebra), std::move(dims), std::move(maps)};
}

Representation projective(AlgebraPtr algebra, int vertex)
{
    if (vertex < 0 || vertex >= algebra->vertex_count())
        throw std::invalid_argument("vertex out of range");
    const auto fibers = algebra->fibers_from(vertex);
    const int V = algebra->vertex_count();

    std::vector<int> dims(V);
    // position of a basis element within its fiber
    std::vector<int> pos(algebra->dimension(), -1);
    for (int w = 0; w < V; ++w) {
        dims[w] = static_cast<int>(fibers[w].size());
        for (int k = 0; k < dims[w]; ++k)
            pos[fibers[w][k]] = k;
    }

    std::vector<Mat> maps;
    for (int a = 0; a < algebra->arrow_count(); ++a) {
        const Arrow& arr = algebra->quiver().arrows[a];
        Mat m(dims[arr.target], dims[arr.source]);
        int arrow_basis = algebra->arrow_index_in_basis(a);
        for (int col = 0; col < dims[arr.source]; ++col) {
            int b = fibers[arr.source][col];
            for (const auto& [k, coef] : algebra->mult(b, arrow_basis))
                m.at(pos[k], col) += coef;
        }
        maps.push_back(std::move(m));
    }
    return Representation{std::move(algebra), std::move(dims), std::move(maps)};
}

Representation direct_sum(const Representation& x, const Representation& y)
{
    check_same_algebra(x, y);
    const int V = x.algebra->vertex_count();
    std::vector<int> dims(V);
    for (int v = 0; v < V; ++v)
        dims[v] = x.dims[v] + y.dims[v];
    std::vector<Mat> maps;
    for (int a = 0; a < x.algebra->arrow_count(); ++a) {
        const Arrow& arr = x.algebra->quiver().arrows[a];
        Mat m(dims[arr.target], dims[arr.source]);
        const Mat& mx = x.arrow_maps[a];
        const Mat& my = y.arrow_maps[a];
        for (int i = 0; i < mx.rows(); ++i)
            for (int j = 0; j < mx.cols(); ++j)
                m.at(i, j) = mx.at(i, j);
        for (int i = 0; i < my.rows(); ++i)
            for (int j = 0; j < my.cols(); ++j)
                m.at(mx.rows() + i, mx.cols() + j) = my.at(i, j);
        maps.push_back(std::move(m));
    }
    return Representation{x.algebra, std::move(dims), std::move(maps)};
}

Mat path_matrix(const Representation& x, std::span<const int> arrows)
{
    if (arrows.empty())
        throw std::invalid_argument("path_matrix needs a nonempty path");
    Mat m = x.arrow_maps[arrows[0]];
    for (std::size_t i = 1; i < arrows.size(); ++i)
        m = x.arrow_maps[arrows[i]] * m;
    return m;
}

bool satisfies_relations(const Representation& x)
{
    for (const Relation& rel : x.algebra->relations()) {
        Mat acc;
        bool first = true;
        for (const RelationTerm& term : rel) {
            std::vector<int> arrows;
            for (const std::string& name : term.path) {
                int idx = -1;
                for (int a = 0; a < x.algebra->arrow_count(); ++a)
                    if (x.algebra->quiver().arrows[a].name == name) {
                        idx = a;
                        break;
                    }
                arrows.push_back(idx);
            }
            Mat t = term.coef * path_matrix(x, arrows);
            acc = first ? t : acc + t;
            first = false;
        }
        if (!acc.is_zero())
            return false;
    }
    return true;
}

Intertwiner zero_intertwiner(const Representation& from, const Representation& to)
{
    Intertwiner f;
    for (int v = 0; v < from.algebra->vertex_count(); ++v)
        f.comps.emplace_back(to.dims[v], from.dims[v]);
    return f;
}

Intertwiner compose(const Intertwiner& second, const Intertwiner& first)
{
    Intertwiner f;
    for (std::size_t v = 0; v < first.comps.size(); ++v)
        f.comps.push_back(second.comps[v] * first.comps[v]);
    return f;
}

bool is_intertwiner(const Representation& x, const Representation& y, const Intertwiner& f)
{
    for (int a = 0; a < x.algebra->arrow_count(); ++a) {
        const Arrow& arr = x.algebra->quiver().arrows[a];
        if (!(f.comps[arr.target] * x.arrow_maps[a] == y.arrow_maps[a] * f.comps[arr.source]))
            return false;
    }
    return true;
}

HomBasis::HomBasis(const Representation& x, const Representation& y)
{
    check_same_algebra(x, y);
    const int V = x.algebra->vertex_count();
    x_dims_ = x.dims;

    fiber_offsets_.assign(V + 1, 0);
    for (int v = 0; v < V; ++v)
        fiber_offsets_[v + 1] = fiber_offsets_[v] + y.dims[v] * x.dims[v];
    const int unknowns = fiber_offsets_[V];

    int eq_count = 0;
    for (int a = 0; a < x.algebra->arrow_count(); ++a) {
        const Arrow& arr = x.algebra->quiver().arrows[a];
        eq_count += y.dims[arr.target] * x.dims[arr.source];
    }

    // unknown (v, i, j) = entry f_v[i][j], laid out row-major per vertex
    auto unknown = [&](int v, int i, int j) { return fiber_offsets_[v] + i * x_dims_[v] + j; };

    Mat system(eq_count, unknowns);
    int row = 0;
    for (int a = 0; a < x.algebra->arrow_count(); ++a) {
        const Arrow& arr = x.algebra->quiver().arrows[a];
        const Mat& xa = x.arrow_maps[a];
        const Mat& ya = y.arrow_maps[a];
        for (int i = 0; i < y.dims[arr.target]; ++i) {
            for (int j = 0; j < x.dims[arr.source]; ++j) {
                for (int k = 0; k < x.dims[arr.target]; ++k)
                    if (xa.at(k, j) != 0)
                        system.at(row, unknown(arr.target, i, k)) += xa.at(k, j);
                for (int k = 0; k < y.dims[arr.source]; ++k)
                    if (ya.at(i, k) != 0)
                        system.at(row, unknown(arr.source, k, j)) -= ya.at(i, k);
                ++row;
            }
        }
    }

    KernelResult ker = rank_kernel(system);
    free_cols_ = ker.free_cols;
    for (const ColVec& vec : ker.kernel) {
        Intertwiner f;
        for (int v = 0; v < V; ++v) {
            Mat m(y.dims[v], x.dims[v]);
            for (int i = 0; i < y.dims[v]; ++i)
                for (int j = 0; j < x.dims[v]; ++j)
                    m.at(i, j) = vec[unknown(v, i, j)];
            f.comps.push_back(std::move(m));
        }
        basis_.push_back(std::move(f));
    }
}

std::vector<Rat> HomBasis::coords(const Intertwiner& f) const
{
    std::vector<Rat> flat;
    for (const Mat& m : f.comps)
        flat.insert(flat.end(), m.entries().begin(), m.entries().end());
    std::vector<Rat> out;
    out.reserve(free_cols_.size());
    for (int c : free_cols_)
        out.push_back(flat[c]);
    return out;
}

} // namespace drf
