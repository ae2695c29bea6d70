#ifndef QUIVINJ_TREE_MODULES_HPP
#define QUIVINJ_TREE_MODULES_HPP

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "quivinj/quiver.hpp"
#include "quivinj/representation.hpp"

namespace quivinj {

/// A rooted tree with a winding into the quiver of a monomial presentation.
/// Vertex 0 is the root; every other vertex has a parent and an incoming
/// tree arrow whose winding is `in_arrow[v]`.
struct TreeModuleData {
    MonomialPresentation presentation;
    std::vector<int> parent;              // parent[0] == -1
    std::vector<std::string> in_arrow;    // winding of the arrow parent[v] -> v; in_arrow[0] unused
    std::vector<VertexId> winding;        // F(v) in Q_0
    std::vector<std::vector<int>> children;  // sorted by in-arrow name

    size_t size() const { return winding.size(); }
    VertexId root_vertex() const { return winding.at(0); }

    bool is_leaf(int v) const { return children[size_t(v)].empty(); }

    std::vector<int> leaves() const {
        std::vector<int> ls;
        for (int v = 0; v < int(size()); ++v)
            if (is_leaf(v)) ls.push_back(v);
        return ls;
    }

    /// Winding word along the root-to-v path, first arrow first.
    std::vector<std::string> root_word(int v) const {
        std::vector<std::string> w;
        for (int u = v; u != 0; u = parent[size_t(u)]) w.push_back(in_arrow[size_t(u)]);
        std::reverse(w.begin(), w.end());
        return w;
    }

    void rebuild_children() {
        children.assign(size(), {});
        for (int v = 1; v < int(size()); ++v) children[size_t(parent[size_t(v)])].push_back(v);
        for (auto& cs : children)
            std::sort(cs.begin(), cs.end(),
                      [this](int a, int b) { return in_arrow[size_t(a)] < in_arrow[size_t(b)]; });
    }
};

/// Checks the three winding invariants: quiver-morphism compatibility, local
/// injectivity on arrows, and relation-freeness of every tree-path image.
inline bool validate_winding(const TreeModuleData& t) {
    const Quiver& q = t.presentation.quiver;
    for (int v = 1; v < int(t.size()); ++v) {
        const Arrow* a = q.find_arrow(t.in_arrow[size_t(v)]);
        if (!a) return false;
        if (a->source != t.winding[size_t(t.parent[size_t(v)])]) return false;
        if (a->target != t.winding[size_t(v)]) return false;
    }
    if (!q.has_vertex(t.root_vertex())) return false;
    // local injectivity: arrows sharing a source; tree arrows never share a target
    for (const auto& cs : t.children) {
        std::set<std::string> names;
        for (int c : cs)
            if (!names.insert(t.in_arrow[size_t(c)]).second) return false;
    }
    // every directed tree path is a subword of a root-to-leaf path, and
    // relation-freeness is factor-closed, so leaves suffice
    for (int v : t.leaves())
        if (!word_relation_free(t.presentation, t.root_word(v))) return false;
    return true;
}

/// The tree (T_i, F_i) realizing P(i): grow children along every quiver arrow
/// that keeps the root word relation-free, in canonical arrow order.
inline TreeModuleData build_projective_tree(const MonomialPresentation& p, VertexId i) {
    if (!p.quiver.has_vertex(i))
        throw QuiverError("no vertex " + std::to_string(i) + " in the quiver");
    if (!is_finite_dimensional(p))
        throw InfiniteDimensional("cannot build the projective tree: "
                                  "the presentation is infinite-dimensional");
    TreeModuleData t;
    t.presentation = p;
    t.parent = {-1};
    t.in_arrow = {""};
    t.winding = {i};
    std::vector<std::vector<std::string>> words = {{}};
    for (size_t v = 0; v < t.winding.size(); ++v) {
        for (const Arrow* a : p.quiver.out_arrows(t.winding[v])) {
            std::vector<std::string> w = words[v];
            w.push_back(a->name);
            if (!word_relation_free(p, w)) continue;
            t.parent.push_back(int(v));
            t.in_arrow.push_back(a->name);
            t.winding.push_back(a->target);
            words.push_back(std::move(w));
        }
    }
    t.rebuild_children();
    return t;
}

/// S(i) as the one-vertex tree module.
inline TreeModuleData build_simple_tree(const MonomialPresentation& p, VertexId i) {
    if (!p.quiver.has_vertex(i))
        throw QuiverError("no vertex " + std::to_string(i) + " in the quiver");
    TreeModuleData t;
    t.presentation = p;
    t.parent = {-1};
    t.in_arrow = {""};
    t.winding = {i};
    t.children = {{}};
    return t;
}

/// Multiset of simple socle summands, by vertex index.
struct SocleSummary {
    std::map<VertexId, int> multiplicities;

    int total() const {
        int t = 0;
        for (const auto& [v, m] : multiplicities) t += m;
        return t;
    }

    friend bool operator==(const SocleSummary&, const SocleSummary&) = default;
};

/// soc P(i) read off the leaves of T_i.
inline SocleSummary socle_of_projective(const MonomialPresentation& p, VertexId i) {
    TreeModuleData t = build_projective_tree(p, i);
    SocleSummary s;
    for (int v : t.leaves()) ++s.multiplicities[t.winding[size_t(v)]];
    return s;
}

/// Push-down of the all-ones tree representation: the vertex-j space has one
/// basis element per tree vertex over j (in tree-vertex order), and a tree
/// arrow v -> w over alpha contributes a unit entry at (w, v).
inline MatrixRepresentation push_down(const TreeModuleData& t) {
    MatrixRepresentation rep;
    rep.quiver = t.presentation.quiver;
    std::map<VertexId, std::vector<int>> fibres;
    for (VertexId v : rep.quiver.vertices) fibres[v] = {};
    for (int v = 0; v < int(t.size()); ++v) fibres[t.winding[size_t(v)]].push_back(v);
    std::map<int, size_t> position;
    for (const auto& [qv, vs] : fibres) {
        rep.dims[qv] = vs.size();
        for (size_t k = 0; k < vs.size(); ++k) position[vs[k]] = k;
    }
    for (const Arrow& a : rep.quiver.arrows)
        rep.arrow_maps[a.name] = Matrix(rep.dims[a.target], rep.dims[a.source]);
    for (int v = 1; v < int(t.size()); ++v) {
        Matrix& m = rep.arrow_maps[t.in_arrow[size_t(v)]];
        m(position[v], position[t.parent[size_t(v)]]) = 1;
    }
    return rep;
}

/// Positions of tree vertices inside the push-down fibres, matching push_down's ordering.
inline std::map<int, size_t> push_down_positions(const TreeModuleData& t) {
    std::map<VertexId, size_t> counters;
    std::map<int, size_t> position;
    for (int v = 0; v < int(t.size()); ++v) position[v] = counters[t.winding[size_t(v)]]++;
    return position;
}

/// All winding words read along directed tree paths starting at v (including the
/// empty word).
inline std::set<std::vector<std::string>> label_path_set(const TreeModuleData& t, int v) {
    std::set<std::vector<std::string>> out;
    struct Frame {
        int vertex;
        std::vector<std::string> word;
    };
    std::vector<Frame> stack{{v, {}}};
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        out.insert(f.word);
        for (int c : t.children[size_t(f.vertex)]) {
            std::vector<std::string> w = f.word;
            w.push_back(t.in_arrow[size_t(c)]);
            stack.push_back({c, std::move(w)});
        }
    }
    return out;
}

/// True iff the tree is a single directed chain.
inline bool is_uniserial(const TreeModuleData& t) {
    for (const auto& cs : t.children)
        if (cs.size() > 1) return false;
    return true;
}

/// DOT export of a winding-labeled rooted tree; nodes read `(v, F(v))`,
/// edges `(name, F(name))`.
inline std::string export_tree_dot(const TreeModuleData& t, const std::string& name = "tree") {
    std::ostringstream out;
    out << "digraph " << name << " {\n";
    for (int v = 0; v < int(t.size()); ++v) {
        std::string label = v == 0 ? "*_" + std::to_string(t.root_vertex()) : "v" + std::to_string(v);
        out << "  n" << v << " [label=\"(" << label << ", " << t.winding[size_t(v)] << ")\"];\n";
    }
    for (int v = 0; v < int(t.size()); ++v)
        for (int c : t.children[size_t(v)])
            out << "  n" << v << " -> n" << c << " [label=\"(t" << c << ", "
                << t.in_arrow[size_t(c)] << ")\"];\n";
    out << "}\n";
    return out.str();
}

}  // namespace quivinj

#endif
