#ifndef QUIVINJ_QUIVINJ_HPP
#define QUIVINJ_QUIVINJ_HPP

#include "quivinj/quiver.hpp"
#include "quivinj/presentation.hpp"
#include "quivinj/matrix.hpp"
#include "quivinj/representation.hpp"
#include "quivinj/tree_modules.hpp"
#include "quivinj/oracle.hpp"
#include "quivinj/graph_homs.hpp"
#include "quivinj/classify.hpp"
#include "quivinj/enumerate.hpp"

#endif
