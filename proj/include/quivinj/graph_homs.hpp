#ifndef QUIVINJ_GRAPH_HOMS_HPP
#define QUIVINJ_GRAPH_HOMS_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "quivinj/matrix.hpp"
#include "quivinj/oracle.hpp"
#include "quivinj/tree_modules.hpp"

namespace quivinj {

class NotRooted : public QuiverError {
public:
    using QuiverError::QuiverError;
};

/// A Hom-basis element between tree modules: a predecessor-closed factor
/// subtree of the source, a successor-closed image subtree of the target, and
/// the winding-compatible isomorphism between them.
struct GraphMap {
    std::vector<int> factor;  // source-tree vertices, sorted ascending
    std::vector<int> image;   // image[k] = sigma(factor[k])
    int anchor = 0;           // sigma(root of the source tree)

    friend bool operator==(const GraphMap&, const GraphMap&) = default;
};

struct HomBasis {
    std::vector<GraphMap> maps;
    size_t dimension() const { return maps.size(); }
};

namespace detail {

// Attempt the unique graph map anchored at y-vertex `anchor`; succeeds iff
// every winding word out of `anchor` also occurs out of x's root.
inline std::optional<GraphMap> anchored_match(const TreeModuleData& x, const TreeModuleData& y,
                                              int anchor) {
    if (y.winding[size_t(anchor)] != x.root_vertex()) return std::nullopt;
    GraphMap g;
    g.anchor = anchor;
    std::vector<std::pair<int, int>> work{{0, anchor}};  // (x vertex, y vertex)
    while (!work.empty()) {
        auto [u, w] = work.back();
        work.pop_back();
        g.factor.push_back(u);
        g.image.push_back(w);
        std::map<std::string, int> x_children, y_children;
        for (int c : x.children[size_t(u)]) x_children[x.in_arrow[size_t(c)]] = c;
        for (int c : y.children[size_t(w)]) y_children[y.in_arrow[size_t(c)]] = c;
        // image successor-closure: every y-child must be matched by an x-child
        for (const auto& [name, yc] : y_children) {
            auto it = x_children.find(name);
            if (it == x_children.end()) return std::nullopt;
            work.push_back({it->second, yc});
        }
        // unmatched x-children simply fall outside the factor subtree
    }
    // sort by x-vertex index, keeping sigma aligned
    std::vector<size_t> order(g.factor.size());
    for (size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return g.factor[a] < g.factor[b]; });
    GraphMap sorted;
    sorted.anchor = anchor;
    for (size_t k : order) {
        sorted.factor.push_back(g.factor[k]);
        sorted.image.push_back(g.image[k]);
    }
    return sorted;
}

}  // namespace detail

/// Basis of Hom(X, Y) by anchored matching: one graph map per target vertex
/// whose outgoing winding words embed into the source root's.
inline HomBasis enumerate_graph_maps(const TreeModuleData& x, const TreeModuleData& y) {
    if (x.size() == 0 || x.parent[0] != -1)
        throw NotRooted("graph-map enumeration requires a rooted source tree");
    HomBasis basis;
    for (int v = 0; v < int(y.size()); ++v)
        if (auto g = detail::anchored_match(x, y, v)) basis.maps.push_back(std::move(*g));
    return basis;
}

inline size_t hom_dim(const TreeModuleData& x, const TreeModuleData& y) {
    return enumerate_graph_maps(x, y).dimension();
}

/// The linear map of push-downs induced by a graph map: basis vector at v
/// goes to the basis vector at sigma(v) when v lies in the factor, else to 0.
inline std::map<VertexId, Matrix> graph_map_as_matrices(const TreeModuleData& x,
                                                        const TreeModuleData& y,
                                                        const GraphMap& g) {
    MatrixRepresentation px = push_down(x);
    MatrixRepresentation py = push_down(y);
    std::map<int, size_t> pos_x = push_down_positions(x);
    std::map<int, size_t> pos_y = push_down_positions(y);
    std::map<VertexId, Matrix> f;
    for (VertexId v : x.presentation.quiver.vertices) f[v] = Matrix(py.dim(v), px.dim(v));
    for (size_t k = 0; k < g.factor.size(); ++k) {
        int u = g.factor[k], w = g.image[k];
        f[x.winding[size_t(u)]](pos_y[w], pos_x[u]) = 1;
    }
    return f;
}

/// A basis element of Hom(soc Lambda, Lambda): send the socle coordinate at
/// one leaf of T_i to the leaf coordinate of T_j with the same winding value.
struct SocleHomElement {
    VertexId i = 0;
    int leaf_x = 0;  // leaf of T_i
    VertexId j = 0;
    int leaf_y = 0;  // leaf of T_j, F_i(leaf_x) == F_j(leaf_y)

    friend bool operator==(const SocleHomElement&, const SocleHomElement&) = default;
};

inline std::vector<SocleHomElement> socle_hom_basis(
    const MonomialPresentation& p, const std::map<VertexId, TreeModuleData>& trees) {
    std::vector<SocleHomElement> basis;
    for (VertexId i : p.quiver.vertices)
        for (int x : trees.at(i).leaves())
            for (VertexId j : p.quiver.vertices)
                for (int y : trees.at(j).leaves())
                    if (trees.at(i).winding[size_t(x)] == trees.at(j).winding[size_t(y)])
                        basis.push_back({i, x, j, y});
    return basis;
}

inline std::vector<SocleHomElement> socle_hom_basis(const MonomialPresentation& p) {
    std::map<VertexId, TreeModuleData> trees;
    for (VertexId i : p.quiver.vertices) trees[i] = build_projective_tree(p, i);
    return socle_hom_basis(p, trees);
}

/// Restriction of End(Lambda) to Hom(soc Lambda, Lambda), in the graph-map and
/// leaf-pair bases.
struct RestrictionMatrix {
    std::vector<SocleHomElement> row_basis;
    size_t columns = 0;  // total graph maps P(i) -> P(j), all (i, j) in canonical order
    Matrix entries;      // row_basis.size() x columns
};

inline RestrictionMatrix restriction_matrix(const MonomialPresentation& p) {
    std::map<VertexId, TreeModuleData> trees;
    std::map<VertexId, std::map<int, size_t>> positions;
    for (VertexId i : p.quiver.vertices) {
        trees[i] = build_projective_tree(p, i);
        positions[i] = push_down_positions(trees[i]);
    }
    std::vector<SocleHomElement> rows = socle_hom_basis(p, trees);

    // Ambient coordinates: for each (i, leaf x of T_i), a value vector in
    // Lambda = direct sum of the P(j), tree-vertex coordinates.
    std::map<VertexId, size_t> lambda_offset;
    size_t lambda_dim = 0;
    for (VertexId j : p.quiver.vertices) {
        lambda_offset[j] = lambda_dim;
        lambda_dim += trees[j].size();
    }
    std::vector<std::pair<VertexId, int>> socle_coords;  // (i, leaf x)
    std::map<std::pair<VertexId, int>, size_t> socle_index;
    for (VertexId i : p.quiver.vertices)
        for (int x : trees[i].leaves()) {
            socle_index[{i, x}] = socle_coords.size();
            socle_coords.push_back({i, x});
        }

    const size_t ambient = socle_coords.size() * lambda_dim;
    auto flat = [&](size_t socle_slot, VertexId j, int tree_vertex) {
        return socle_slot * lambda_dim + lambda_offset[j] + size_t(tree_vertex);
    };

    // Each basis vector occupies a single distinct ambient coordinate, so
    // solving for coefficients reduces to reading the composite vector at
    // those coordinates; any support elsewhere means the restriction left
    // the span.
    std::map<size_t, size_t> row_of_coord;
    for (size_t r = 0; r < rows.size(); ++r) {
        const SocleHomElement& e = rows[r];
        row_of_coord[flat(socle_index[{e.i, e.leaf_x}], e.j, e.leaf_y)] = r;
    }

    // columns: all graph maps P(i) -> P(j), (i, j) lexicographic, enumeration order
    std::vector<std::vector<size_t>> column_support;  // ambient coordinates with value 1
    for (VertexId i : p.quiver.vertices)
        for (VertexId j : p.quiver.vertices) {
            HomBasis maps = enumerate_graph_maps(trees[i], trees[j]);
            for (const GraphMap& g : maps.maps) {
                std::vector<size_t> support;
                // g composed with the socle inclusion: only the soc P(i) block moves
                for (int x : trees[i].leaves()) {
                    auto it = std::find(g.factor.begin(), g.factor.end(), x);
                    if (it == g.factor.end()) continue;
                    int image = g.image[size_t(it - g.factor.begin())];
                    support.push_back(flat(socle_index[{i, x}], j, image));
                }
                column_support.push_back(std::move(support));
            }
        }

    RestrictionMatrix rm;
    rm.row_basis = rows;
    rm.columns = column_support.size();
    rm.entries = Matrix(rows.size(), column_support.size());
    for (size_t c = 0; c < column_support.size(); ++c)
        for (size_t coord : column_support[c]) {
            auto it = row_of_coord.find(coord);
            if (it == row_of_coord.end())
                throw QuiverError("restriction of a graph map fell outside the "
                                  "socle-hom basis span");
            rm.entries(it->second, c) = 1;
        }
    return rm;
}

/// Condition (3): every map soc Lambda -> Lambda extends to an endomorphism,
/// i.e. the restriction matrix has full row rank.
inline bool is_socle_injective(const MonomialPresentation& p) {
    RestrictionMatrix rm = restriction_matrix(p);
    if (rm.row_basis.size() > rm.columns) return false;  // rank can't reach the row count
    return rank(rm.entries) == rm.row_basis.size();
}

}  // namespace quivinj

#endif
