#ifndef QUIVINJ_REPRESENTATION_HPP
#define QUIVINJ_REPRESENTATION_HPP

#include <map>
#include <numeric>
#include <string>

#include "quivinj/matrix.hpp"
#include "quivinj/quiver.hpp"

namespace quivinj {

/// A K-representation of the bound quiver: a dimension per vertex and, for
/// each arrow a: j -> k, a dim(k) x dim(j) matrix.
struct MatrixRepresentation {
    Quiver quiver;
    std::map<VertexId, size_t> dims;
    std::map<std::string, Matrix> arrow_maps;  // keyed by arrow name

    size_t dim(VertexId v) const {
        auto it = dims.find(v);
        return it == dims.end() ? 0 : it->second;
    }

    size_t total_dim() const {
        size_t t = 0;
        for (const auto& [v, d] : dims) t += d;
        return t;
    }

    const Matrix& map_of(const std::string& arrow) const { return arrow_maps.at(arrow); }

    /// Product of the arrow matrices along a path (later arrows multiply on the left).
    Matrix path_action(const Path& p) const {
        Matrix m = Matrix::identity(dim(p.source));
        for (const std::string& name : p.arrows) m = map_of(name) * m;
        return m;
    }

    /// The bound-representation invariant: every relation acts by zero.
    bool annihilates_relations(const MonomialPresentation& pres) const {
        for (const Path& r : pres.relations)
            if (!path_action(r).is_zero()) return false;
        return true;
    }
};

}  // namespace quivinj

#endif
