#ifndef QUIVINJ_TEST_FIXTURES_HPP
#define QUIVINJ_TEST_FIXTURES_HPP

#include <string>

#include "quivinj/quiver.hpp"

namespace fixtures {

using namespace quivinj;

// Figure-style two-vertex-layer quiver: 1 =alpha,beta=> 2 =gamma,delta=> 3,
// with the single relation delta after beta.
inline MonomialPresentation fig1() {
    Quiver q({1, 2, 3}, {{"alpha", 1, 2}, {"beta", 1, 2}, {"gamma", 2, 3}, {"delta", 2, 3}});
    return MonomialPresentation("fig1", q, {Path(1, {"beta", "delta"})});
}

// Cyclic quiver C_2 with both length-2 relations: <rho> = R^2.
inline MonomialPresentation nak2() {
    Quiver q({1, 2}, {{"a1", 1, 2}, {"a2", 2, 1}});
    return MonomialPresentation("nak2", q,
                                {Path(1, {"a1", "a2"}), Path(2, {"a2", "a1"})});
}

inline MonomialPresentation a2() {
    Quiver q({1, 2}, {{"alpha", 1, 2}});
    return MonomialPresentation("a2", q, {});
}

inline MonomialPresentation point() {
    Quiver q({1}, {});
    return MonomialPresentation("point", q, {});
}

inline MonomialPresentation loop2() {
    Quiver q({1}, {{"x", 1, 1}});
    return MonomialPresentation("loop2", q, {Path(1, {"x", "x"})});
}

inline MonomialPresentation kx() {
    Quiver q({1}, {{"x", 1, 1}});
    return MonomialPresentation("kx", q, {});
}

}  // namespace fixtures

#endif
