#ifndef QUIVINJ_QUIVER_HPP
#define QUIVINJ_QUIVER_HPP

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace quivinj {

using VertexId = int;

struct Arrow {
    std::string name;
    VertexId source = 0;
    VertexId target = 0;

    friend bool operator==(const Arrow&, const Arrow&) = default;
};

class QuiverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ChainMismatch : public QuiverError {
public:
    using QuiverError::QuiverError;
};

class ZeroLengthCandidate : public QuiverError {
public:
    using QuiverError::QuiverError;
};

class InfiniteDimensional : public QuiverError {
public:
    using QuiverError::QuiverError;
};

/// A finite quiver: nonempty vertex set, named arrows with endpoints in it.
/// Arrows keep their declaration order; that order is part of the canonical
/// text form of a presentation.
struct Quiver {
    std::vector<VertexId> vertices;  // sorted, unique
    std::vector<Arrow> arrows;       // declaration order

    Quiver() = default;
    Quiver(std::vector<VertexId> vs, std::vector<Arrow> as)
        : vertices(std::move(vs)), arrows(std::move(as)) {
        std::sort(vertices.begin(), vertices.end());
        vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    }

    bool has_vertex(VertexId v) const {
        return std::binary_search(vertices.begin(), vertices.end(), v);
    }

    const Arrow* find_arrow(const std::string& name) const {
        for (const Arrow& a : arrows)
            if (a.name == name) return &a;
        return nullptr;
    }

    const Arrow& arrow(const std::string& name) const {
        const Arrow* a = find_arrow(name);
        if (!a) throw QuiverError("unknown arrow: " + name);
        return *a;
    }

    /// Arrows with the given source, sorted by name.
    std::vector<const Arrow*> out_arrows(VertexId v) const {
        std::vector<const Arrow*> out;
        for (const Arrow& a : arrows)
            if (a.source == v) out.push_back(&a);
        std::sort(out.begin(), out.end(),
                  [](const Arrow* a, const Arrow* b) { return a->name < b->name; });
        return out;
    }

    int out_degree(VertexId v) const {
        int d = 0;
        for (const Arrow& a : arrows) d += (a.source == v);
        return d;
    }

    int in_degree(VertexId v) const {
        int d = 0;
        for (const Arrow& a : arrows) d += (a.target == v);
        return d;
    }

    friend bool operator==(const Quiver&, const Quiver&) = default;
};

/// A path in a quiver: a source vertex and a composable arrow sequence.
/// arrows[0] is applied first; the paper's composition a_n...a_1 stores a_1 first.
struct Path {
    VertexId source = 0;
    std::vector<std::string> arrows;

    Path() = default;
    Path(VertexId src, std::vector<std::string> names)
        : source(src), arrows(std::move(names)) {}

    static Path stationary(VertexId v) { return Path(v, {}); }

    size_t length() const { return arrows.size(); }

    VertexId target(const Quiver& q) const {
        VertexId v = source;
        for (const auto& name : arrows) v = q.arrow(name).target;
        return v;
    }

    /// Chain condition against a quiver: consecutive arrows compose and
    /// the first arrow starts at `source`.
    bool is_valid(const Quiver& q) const {
        VertexId v = source;
        for (const auto& name : arrows) {
            const Arrow* a = q.find_arrow(name);
            if (!a || a->source != v) return false;
            v = a->target;
        }
        return q.has_vertex(source);
    }

    friend bool operator==(const Path&, const Path&) = default;
};

/// Canonical path ordering: (source, length, lexicographic arrow names).
struct PathLess {
    bool operator()(const Path& a, const Path& b) const {
        if (a.source != b.source) return a.source < b.source;
        if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
        return a.arrows < b.arrows;
    }
};

inline Path concatenate(const Quiver& q, const Path& first, const Path& second) {
    if (first.target(q) != second.source)
        throw ChainMismatch("cannot concatenate: target of first path is vertex " +
                            std::to_string(first.target(q)) + ", source of second is " +
                            std::to_string(second.source));
    Path r = first;
    r.arrows.insert(r.arrows.end(), second.arrows.begin(), second.arrows.end());
    return r;
}

/// Contiguous-factor test on arrow-name sequences.
inline bool is_factor(const Path& candidate, const Path& host) {
    if (candidate.length() == 0)
        throw ZeroLengthCandidate("factor candidates must have positive length");
    if (candidate.length() > host.length()) return false;
    const auto& c = candidate.arrows;
    const auto& h = host.arrows;
    for (size_t off = 0; off + c.size() <= h.size(); ++off)
        if (std::equal(c.begin(), c.end(), h.begin() + off)) return true;
    return false;
}

/// Quiver plus a set of monomial relations; presents Lambda = KQ / <rho>.
struct MonomialPresentation {
    std::string name = "q";
    Quiver quiver;
    std::vector<Path> relations;  // canonical order, unique

    MonomialPresentation() = default;
    MonomialPresentation(std::string nm, Quiver q, std::vector<Path> rels)
        : name(std::move(nm)), quiver(std::move(q)), relations(std::move(rels)) {
        std::sort(relations.begin(), relations.end(), PathLess{});
        relations.erase(std::unique(relations.begin(), relations.end()), relations.end());
    }

    bool structurally_equal(const MonomialPresentation& o) const {
        return quiver == o.quiver && relations == o.relations;
    }
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool valid() const { return violations.empty(); }
};

inline ValidationReport validate_presentation(const MonomialPresentation& p) {
    ValidationReport rep;
    if (p.quiver.vertices.empty()) rep.violations.push_back("empty vertex set");
    for (VertexId v : p.quiver.vertices)
        if (v <= 0) rep.violations.push_back("vertex " + std::to_string(v) + " is not positive");
    std::set<std::string> names;
    for (const Arrow& a : p.quiver.arrows) {
        if (!names.insert(a.name).second)
            rep.violations.push_back("duplicate arrow name: " + a.name);
        if (!p.quiver.has_vertex(a.source) || !p.quiver.has_vertex(a.target))
            rep.violations.push_back("arrow " + a.name + " has a dangling endpoint");
    }
    for (const Path& r : p.relations) {
        if (!r.is_valid(p.quiver)) {
            rep.violations.push_back("relation violates the chain condition");
            continue;
        }
        if (r.length() < 2)
            rep.violations.push_back("relation of length " + std::to_string(r.length()) +
                                     " (admissibility needs length >= 2)");
    }
    for (size_t i = 0; i < p.relations.size(); ++i)
        for (size_t j = 0; j < p.relations.size(); ++j) {
            if (i == j) continue;
            const Path& a = p.relations[i];
            const Path& b = p.relations[j];
            if (a.length() >= 1 && a.length() < b.length() && a.is_valid(p.quiver) &&
                b.is_valid(p.quiver) && is_factor(a, b))
                rep.violations.push_back("comparable relation pair: one relation is a factor of another");
        }
    return rep;
}

inline bool is_connected(const Quiver& q) {
    if (q.vertices.empty()) return false;
    std::set<VertexId> seen;
    std::vector<VertexId> stack{q.vertices.front()};
    seen.insert(q.vertices.front());
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (const Arrow& a : q.arrows) {
            if (a.source == v && !seen.count(a.target)) {
                seen.insert(a.target);
                stack.push_back(a.target);
            }
            if (a.target == v && !seen.count(a.source)) {
                seen.insert(a.source);
                stack.push_back(a.source);
            }
        }
    }
    return seen.size() == q.vertices.size();
}

/// True iff no relation occurs as a contiguous factor of the word.
inline bool word_relation_free(const MonomialPresentation& p, const std::vector<std::string>& word) {
    for (const Path& r : p.relations) {
        if (r.arrows.size() > word.size()) continue;
        for (size_t off = 0; off + r.arrows.size() <= word.size(); ++off)
            if (std::equal(r.arrows.begin(), r.arrows.end(), word.begin() + off)) return false;
    }
    return true;
}

/// Per-endpoint-pair sets of relation-free paths; the path basis of Lambda.
struct AlgebraBasis {
    std::map<std::pair<VertexId, VertexId>, std::vector<Path>> blocks;
    std::vector<Path> all;  // canonical order
    size_t total_dimension = 0;
};

/// True iff the algebra is finite dimensional, i.e. the live part of the
/// forbidden-factor automaton is acyclic.  A state is (vertex, last L-1
/// arrows walked) with L the longest relation; stepping onto a completed
/// relation kills the walk.  Arrow ids are packed 6 bits each into a word,
/// which caps supported relation lengths at 11 -- far beyond desk scale.
inline bool is_finite_dimensional(const MonomialPresentation& p) {
    std::map<std::string, uint64_t> arrow_id;
    std::vector<std::vector<std::pair<uint64_t, VertexId>>> out_by_vertex;  // (id, target)
    std::map<VertexId, size_t> vindex;
    for (size_t k = 0; k < p.quiver.vertices.size(); ++k) vindex[p.quiver.vertices[k]] = k;
    out_by_vertex.resize(p.quiver.vertices.size());
    for (const Arrow& a : p.quiver.arrows) {
        uint64_t id = arrow_id.size() + 1;  // 0 is reserved for "empty slot"
        arrow_id[a.name] = id;
        out_by_vertex[vindex.at(a.source)].push_back({id, a.target});
    }
    if (arrow_id.size() > 62) throw QuiverError("too many arrows for the packed automaton");

    size_t max_len = 2;
    for (const Path& r : p.relations) max_len = std::max(max_len, r.arrows.size());
    if (max_len > 11) throw QuiverError("relation too long for the packed automaton");
    const size_t window = max_len - 1;

    auto pack = [](const std::vector<uint64_t>& w) {
        uint64_t v = 0;
        for (uint64_t id : w) v = (v << 6) | id;
        return v;
    };
    std::set<std::pair<size_t, uint64_t>> forbidden;  // (length, packed word)
    for (const Path& r : p.relations) {
        std::vector<uint64_t> w;
        for (const std::string& a : r.arrows) w.push_back(arrow_id.at(a));
        forbidden.insert({w.size(), pack(w)});
    }

    // steps to (new suffix, alive); suffix is the last `window` arrow ids
    auto step = [&](const std::vector<uint64_t>& suffix, uint64_t id,
                    std::vector<uint64_t>& next) -> bool {
        std::vector<uint64_t> w = suffix;
        w.push_back(id);
        for (size_t len = 2; len <= w.size(); ++len) {
            std::vector<uint64_t> tail(w.end() - long(len), w.end());
            if (forbidden.count({len, pack(tail)})) return false;
        }
        next.assign(w.size() > window ? w.end() - long(window) : w.begin(), w.end());
        return true;
    };

    // DFS with cycle detection over (vertex, suffix) states
    std::map<std::pair<size_t, uint64_t>, int> color;  // 1 on stack, 2 done
    struct Frame {
        size_t v;
        std::vector<uint64_t> suffix;
        size_t next_arrow = 0;
    };
    for (size_t start = 0; start < out_by_vertex.size(); ++start) {
        auto start_key = std::make_pair(start, uint64_t(0));
        if (color.count(start_key)) continue;
        std::vector<Frame> stack{{start, {}, 0}};
        color[start_key] = 1;
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& outs = out_by_vertex[f.v];
            if (f.next_arrow >= outs.size()) {
                color[{f.v, pack(f.suffix)}] = 2;
                stack.pop_back();
                continue;
            }
            auto [id, target] = outs[f.next_arrow++];
            std::vector<uint64_t> next;
            if (!step(f.suffix, id, next)) continue;  // dead
            auto key = std::make_pair(vindex.at(target), pack(next));
            auto it = color.find(key);
            if (it == color.end()) {
                color[key] = 1;
                stack.push_back({key.first, std::move(next), 0});
            } else if (it->second == 1) {
                return false;  // live cycle
            }
        }
    }
    return true;
}

/// All relation-free paths, grouped by endpoints.
/// Throws InfiniteDimensional when the relation ideal is not admissible.
inline AlgebraBasis path_basis(const MonomialPresentation& p) {
    if (!is_finite_dimensional(p))
        throw InfiniteDimensional("presentation is infinite-dimensional: "
                                  "relation-free paths admit a cycle");
    AlgebraBasis basis;
    for (VertexId start : p.quiver.vertices) {
        // DFS enumeration of relation-free paths from `start`
        struct Frame {
            Path path;
            VertexId end;
        };
        std::vector<Frame> stack{{Path::stationary(start), start}};
        while (!stack.empty()) {
            Frame f = stack.back();
            stack.pop_back();
            basis.blocks[{start, f.end}].push_back(f.path);
            auto outs = p.quiver.out_arrows(f.end);
            for (auto it = outs.rbegin(); it != outs.rend(); ++it) {
                std::vector<std::string> w = f.path.arrows;
                w.push_back((*it)->name);
                if (word_relation_free(p, w))
                    stack.push_back({Path(start, w), (*it)->target});
            }
        }
    }
    for (auto& [key, paths] : basis.blocks) {
        std::sort(paths.begin(), paths.end(), PathLess{});
        for (const Path& q : paths) basis.all.push_back(q);
        basis.total_dimension += paths.size();
    }
    std::sort(basis.all.begin(), basis.all.end(), PathLess{});
    return basis;
}

}  // namespace quivinj

#endif
