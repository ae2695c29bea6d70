#ifndef QUIVINJ_ORACLE_HPP
#define QUIVINJ_ORACLE_HPP

#include <algorithm>
#include <cassert>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quivinj/quiver.hpp"
#include "quivinj/representation.hpp"

namespace quivinj {

/// P(i) built directly from the path basis: vertex-j space spanned by the
/// relation-free paths i -> j, arrows acting by left multiplication.
inline MatrixRepresentation representation_of_projective(const MonomialPresentation& p,
                                                         VertexId i) {
    AlgebraBasis basis = path_basis(p);
    MatrixRepresentation rep;
    rep.quiver = p.quiver;

    std::map<VertexId, std::vector<Path>> fibre;
    for (VertexId j : p.quiver.vertices) fibre[j] = {};
    for (const auto& [key, paths] : basis.blocks)
        if (key.first == i)
            for (const Path& q : paths) fibre[key.second].push_back(q);

    auto index_of = [](const std::vector<Path>& paths, const Path& q) -> std::optional<size_t> {
        for (size_t k = 0; k < paths.size(); ++k)
            if (paths[k] == q) return k;
        return std::nullopt;
    };

    for (const auto& [j, paths] : fibre) rep.dims[j] = paths.size();
    for (const Arrow& a : p.quiver.arrows) {
        Matrix m(rep.dims[a.target], rep.dims[a.source]);
        const auto& dom = fibre[a.source];
        const auto& cod = fibre[a.target];
        for (size_t c = 0; c < dom.size(); ++c) {
            std::vector<std::string> w = dom[c].arrows;
            w.push_back(a.name);
            if (!word_relation_free(p, w)) continue;  // gamma p falls into the ideal
            auto r = index_of(cod, Path(i, w));
            assert(r && "left multiple of a basis path must be a basis path");
            m(*r, c) = 1;
        }
        rep.arrow_maps[a.name] = std::move(m);
    }
    return rep;
}

/// I(j) as the dual of the right projective e_j Lambda: vertex-k space spanned
/// by duals of relation-free paths k -> j; an arrow alpha: k -> k' sends p*
/// to q* exactly when p = q after alpha.
inline MatrixRepresentation representation_of_injective(const MonomialPresentation& p,
                                                        VertexId j) {
    AlgebraBasis basis = path_basis(p);
    MatrixRepresentation rep;
    rep.quiver = p.quiver;

    std::map<VertexId, std::vector<Path>> fibre;  // paths k -> j, indexed by k
    for (VertexId k : p.quiver.vertices) fibre[k] = {};
    for (const auto& [key, paths] : basis.blocks)
        if (key.second == j)
            for (const Path& q : paths) fibre[key.first].push_back(q);

    for (const auto& [k, paths] : fibre) rep.dims[k] = paths.size();
    for (const Arrow& a : p.quiver.arrows) {
        Matrix m(rep.dims[a.target], rep.dims[a.source]);
        const auto& dom = fibre[a.source];  // paths source(a) -> j
        const auto& cod = fibre[a.target];  // paths target(a) -> j
        for (size_t c = 0; c < dom.size(); ++c) {
            const Path& path = dom[c];
            if (path.arrows.empty() || path.arrows.front() != a.name) continue;
            Path q(a.target, {path.arrows.begin() + 1, path.arrows.end()});
            for (size_t r = 0; r < cod.size(); ++r)
                if (cod[r] == q) m(r, c) = 1;
        }
        rep.arrow_maps[a.name] = std::move(m);
    }
    return rep;
}

/// Basis of the intertwiner space Hom(x, y): per-vertex matrix families f with
/// f_k M_a = N_a f_j for every arrow a: j -> k.
struct HomSpace {
    std::vector<std::map<VertexId, Matrix>> basis;
    size_t dimension() const { return basis.size(); }
};

inline HomSpace hom_space(const MatrixRepresentation& x, const MatrixRepresentation& y) {
    const Quiver& q = x.quiver;
    // unknowns: entries of f_j (dim_y(j) x dim_x(j)), laid out vertex by vertex
    std::map<VertexId, size_t> offset;
    size_t nunknowns = 0;
    for (VertexId v : q.vertices) {
        offset[v] = nunknowns;
        nunknowns += y.dim(v) * x.dim(v);
    }
    size_t nequations = 0;
    for (const Arrow& a : q.arrows) nequations += y.dim(a.target) * x.dim(a.source);

    Matrix system(nequations, nunknowns);
    size_t eq = 0;
    for (const Arrow& a : q.arrows) {
        const Matrix& mx = x.map_of(a.name);  // dim_x(t) x dim_x(s)
        const Matrix& my = y.map_of(a.name);  // dim_y(t) x dim_y(s)
        size_t ds = x.dim(a.source), dt_y = y.dim(a.target);
        for (size_t r = 0; r < dt_y; ++r)
            for (size_t c = 0; c < ds; ++c) {
                // (f_t M_a - N_a f_s)(r, c) = 0
                for (size_t k = 0; k < x.dim(a.target); ++k)
                    if (mx(k, c) != 0)
                        system(eq, offset[a.target] + r * x.dim(a.target) + k) += mx(k, c);
                for (size_t k = 0; k < y.dim(a.source); ++k)
                    if (my(r, k) != 0)
                        system(eq, offset[a.source] + k * x.dim(a.source) + c) -= my(r, k);
                ++eq;
            }
    }

    HomSpace hs;
    for (const auto& vec : nullspace(system)) {
        std::map<VertexId, Matrix> f;
        for (VertexId v : q.vertices) {
            Matrix m(y.dim(v), x.dim(v));
            for (size_t r = 0; r < y.dim(v); ++r)
                for (size_t c = 0; c < x.dim(v); ++c)
                    m(r, c) = vec[offset[v] + r * x.dim(v) + c];
            f[v] = std::move(m);
        }
        hs.basis.push_back(std::move(f));
    }
    return hs;
}

/// Socle dimensions per vertex: at j, the joint kernel of all arrow actions
/// with source j.
inline std::map<VertexId, size_t> socle(const MatrixRepresentation& x) {
    std::map<VertexId, size_t> dims;
    for (VertexId j : x.quiver.vertices) {
        std::vector<const Matrix*> outs;
        for (const Arrow& a : x.quiver.arrows)
            if (a.source == j) outs.push_back(&x.map_of(a.name));
        size_t total_rows = 0;
        for (const Matrix* m : outs) total_rows += m->rows();
        Matrix stacked(total_rows, x.dim(j));
        size_t at = 0;
        for (const Matrix* m : outs) {
            for (size_t r = 0; r < m->rows(); ++r)
                for (size_t c = 0; c < m->cols(); ++c) stacked(at + r, c) = (*m)(r, c);
            at += m->rows();
        }
        dims[j] = x.dim(j) - rank(stacked);
    }
    return dims;
}

namespace detail {

/// Per-vertex dimensions of rad^1, rad^2, ... until the series hits zero.
/// Isomorphic representations share this table, so it is a cheap separator.
inline std::vector<std::map<VertexId, size_t>> radical_series_dims(
    const MatrixRepresentation& x) {
    std::map<VertexId, std::vector<std::vector<Scalar>>> span;
    for (VertexId v : x.quiver.vertices) {
        std::vector<std::vector<Scalar>> cols;
        for (size_t c = 0; c < x.dim(v); ++c) {
            std::vector<Scalar> e(x.dim(v));
            e[c] = 1;
            cols.push_back(std::move(e));
        }
        span[v] = std::move(cols);
    }
    auto layer_dims = [&](const std::map<VertexId, std::vector<std::vector<Scalar>>>& s) {
        std::map<VertexId, size_t> dims;
        size_t total = 0;
        for (const auto& [v, cols] : s) {
            size_t r = 0;
            if (!cols.empty()) {
                Matrix m(cols.front().size(), cols.size());
                for (size_t c = 0; c < cols.size(); ++c)
                    for (size_t k = 0; k < cols[c].size(); ++k) m(k, c) = cols[c][k];
                r = rank(m);
            }
            dims[v] = r;
            total += r;
        }
        dims[-1] = total;  // sentinel slot holding the layer total
        return dims;
    };

    std::vector<std::map<VertexId, size_t>> out;
    size_t guard = x.total_dim() + 1;
    while (guard-- > 0) {
        std::map<VertexId, std::vector<std::vector<Scalar>>> next;
        for (VertexId v : x.quiver.vertices) next[v] = {};
        for (const Arrow& a : x.quiver.arrows) {
            const Matrix& m = x.map_of(a.name);
            for (const auto& col : span[a.source]) {
                std::vector<Scalar> img(m.rows());
                for (size_t r = 0; r < m.rows(); ++r)
                    for (size_t c = 0; c < m.cols(); ++c)
                        if (m(r, c) != 0) img[r] += m(r, c) * col[c];
                next[a.target].push_back(std::move(img));
            }
        }
        auto dims = layer_dims(next);
        size_t total = dims.at(-1);
        out.push_back(std::move(dims));
        if (total == 0) break;
        span = std::move(next);
    }
    return out;
}

}  // namespace detail

/// Exact isomorphism test.  Fast necessary invariants (dimension vector,
/// socle dimensions, radical series dimensions, Hom-space dimensions) rule
/// out most non-isomorphic pairs; otherwise the product of vertex
/// determinants of a combination sum c_k f_k is a polynomial with degree
/// <= D in each variable (D = total dimension), so it vanishes identically
/// iff it vanishes on {0..D}^d.
inline bool is_isomorphic(const MatrixRepresentation& x, const MatrixRepresentation& y) {
    for (VertexId v : x.quiver.vertices)
        if (x.dim(v) != y.dim(v)) return false;
    size_t total = x.total_dim();
    if (total == 0) return true;

    if (socle(x) != socle(y)) return false;
    if (detail::radical_series_dims(x) != detail::radical_series_dims(y)) return false;

    HomSpace hs = hom_space(x, y);
    size_t d = hs.dimension();
    if (d == 0) return false;

    // an isomorphism X -> Y identifies Hom(X,Y) with End(X) and End(Y)
    if (hom_space(x, x).dimension() != d || hom_space(y, y).dimension() != d) return false;

    auto invertible_everywhere = [&](const std::vector<long>& coeffs) {
        for (VertexId v : x.quiver.vertices) {
            if (x.dim(v) == 0) continue;
            Matrix m(y.dim(v), x.dim(v));
            for (size_t k = 0; k < d; ++k) {
                if (coeffs[k] == 0) continue;
                const Matrix& fk = hs.basis[k].at(v);
                m = m + Scalar(coeffs[k]) * fk;
            }
            if (!is_invertible(m)) return false;
        }
        return true;
    };

    // single basis elements first: isomorphisms often sit in the basis itself
    for (size_t k = 0; k < d; ++k) {
        std::vector<long> unit(d, 0);
        unit[k] = 1;
        if (invertible_everywhere(unit)) return true;
    }

    // grid {0..D}^d, enumerated in odometer order
    std::vector<long> coeffs(d, 0);
    const long limit = long(total);
    for (;;) {
        if (invertible_everywhere(coeffs)) return true;
        size_t pos = 0;
        while (pos < d && coeffs[pos] == limit) coeffs[pos++] = 0;
        if (pos == d) return false;
        ++coeffs[pos];
    }
}

/// Condition (1): the regular module is injective iff the projectives match
/// the injectives under some bijection of Q_0.
inline bool self_injective_oracle(const MonomialPresentation& p,
                                  std::map<VertexId, VertexId>* matching = nullptr) {
    std::vector<VertexId> vs = p.quiver.vertices;
    std::map<VertexId, MatrixRepresentation> projs, injs;
    for (VertexId v : vs) {
        projs[v] = representation_of_projective(p, v);
        injs[v] = representation_of_injective(p, v);
    }
    // greedy matching is enough: isomorphism classes partition both sides,
    // and P(i) ~ I(j) pairs off whole classes; still, search all assignments
    // for tiny Q_0 to stay exact
    std::vector<VertexId> perm = vs;
    std::sort(perm.begin(), perm.end());
    std::map<std::pair<VertexId, VertexId>, bool> iso_cache;
    auto iso = [&](VertexId i, VertexId j) {
        auto key = std::make_pair(i, j);
        auto it = iso_cache.find(key);
        if (it != iso_cache.end()) return it->second;
        bool r = is_isomorphic(projs[i], injs[j]);
        iso_cache.emplace(key, r);
        return r;
    };
    do {
        bool ok = true;
        for (size_t k = 0; k < vs.size() && ok; ++k) ok = iso(vs[k], perm[k]);
        if (ok) {
            if (matching)
                for (size_t k = 0; k < vs.size(); ++k) (*matching)[vs[k]] = perm[k];
            return true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// rad^k as iterated arrow images; uniserial iff every radical layer has total
/// dimension <= 1.
inline bool radical_series_uniserial(const MatrixRepresentation& x) {
    // spanning columns per vertex for the current rad^k
    std::map<VertexId, std::vector<std::vector<Scalar>>> span;
    for (VertexId v : x.quiver.vertices) {
        std::vector<std::vector<Scalar>> cols;
        for (size_t c = 0; c < x.dim(v); ++c) {
            std::vector<Scalar> e(x.dim(v));
            e[c] = 1;
            cols.push_back(std::move(e));
        }
        span[v] = std::move(cols);
    }
    auto span_dim = [&](const std::map<VertexId, std::vector<std::vector<Scalar>>>& s) {
        size_t total = 0;
        for (const auto& [v, cols] : s) {
            if (cols.empty()) continue;
            Matrix m(cols.front().size(), cols.size());
            for (size_t c = 0; c < cols.size(); ++c)
                for (size_t r = 0; r < cols[c].size(); ++r) m(r, c) = cols[c][r];
            total += rank(m);
        }
        return total;
    };

    size_t prev = span_dim(span);
    while (prev > 0) {
        std::map<VertexId, std::vector<std::vector<Scalar>>> next;
        for (VertexId v : x.quiver.vertices) next[v] = {};
        for (const Arrow& a : x.quiver.arrows) {
            const Matrix& m = x.map_of(a.name);
            for (const auto& col : span[a.source]) {
                std::vector<Scalar> img(m.rows());
                for (size_t r = 0; r < m.rows(); ++r)
                    for (size_t c = 0; c < m.cols(); ++c)
                        if (m(r, c) != 0) img[r] += m(r, c) * col[c];
                next[a.target].push_back(std::move(img));
            }
        }
        size_t cur = span_dim(next);
        if (cur == prev) return false;  // radical action not nilpotent here
        if (prev - cur > 1) return false;
        span = std::move(next);
        prev = cur;
    }
    return true;
}

}  // namespace quivinj

#endif
