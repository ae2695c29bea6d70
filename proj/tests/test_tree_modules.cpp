#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "quivinj/tree_modules.hpp"

using namespace quivinj;

TEST_CASE("projective tree of fig1 at vertex 1 reproduces the figure") {
    auto p = fixtures::fig1();
    TreeModuleData t = build_projective_tree(p, 1);

    REQUIRE(t.size() == 6);
    CHECK(t.root_vertex() == 1);

    // two depth-1 vertices over 2, reached by alpha and beta
    auto depth1 = t.children[0];
    REQUIRE(depth1.size() == 2);
    CHECK(t.in_arrow[size_t(depth1[0])] == "alpha");
    CHECK(t.in_arrow[size_t(depth1[1])] == "beta");
    CHECK(t.winding[size_t(depth1[0])] == 2);
    CHECK(t.winding[size_t(depth1[1])] == 2);

    // alpha-child grows gamma and delta, beta-child only gamma (delta*beta in I)
    int ac = depth1[0], bc = depth1[1];
    REQUIRE(t.children[size_t(ac)].size() == 2);
    CHECK(t.in_arrow[size_t(t.children[size_t(ac)][0])] == "delta");
    CHECK(t.in_arrow[size_t(t.children[size_t(ac)][1])] == "gamma");
    REQUIRE(t.children[size_t(bc)].size() == 1);
    CHECK(t.in_arrow[size_t(t.children[size_t(bc)][0])] == "gamma");

    // three leaves, all over 3
    auto leaves = t.leaves();
    REQUIRE(leaves.size() == 3);
    for (int v : leaves) CHECK(t.winding[size_t(v)] == 3);

    CHECK(validate_winding(t));
}

TEST_CASE("projective trees of the small fixtures") {
    SUBCASE("nak2 is a length-1 chain") {
        TreeModuleData t = build_projective_tree(fixtures::nak2(), 1);
        REQUIRE(t.size() == 2);
        CHECK(t.winding == std::vector<VertexId>{1, 2});
        CHECK(is_uniserial(t));
    }
    SUBCASE("point is a single vertex") {
        TreeModuleData t = build_projective_tree(fixtures::point(), 1);
        CHECK(t.size() == 1);
        CHECK(is_uniserial(t));
    }
    SUBCASE("infinite-dimensional input propagates") {
        CHECK_THROWS_AS(build_projective_tree(fixtures::kx(), 1), InfiniteDimensional);
    }
}

TEST_CASE("simple trees") {
    for (auto [p, i] : {std::pair{fixtures::fig1(), 3}, {fixtures::point(), 1},
                        {fixtures::nak2(), 2}}) {
        TreeModuleData t = build_simple_tree(p, i);
        CHECK(t.size() == 1);
        CHECK(t.root_vertex() == i);
        CHECK(validate_winding(t));
    }
}

TEST_CASE("validate_winding rejects bad windings") {
    auto p = fixtures::fig1();
    SUBCASE("local injectivity violation: two alpha-children") {
        TreeModuleData t;
        t.presentation = p;
        t.parent = {-1, 0, 0};
        t.in_arrow = {"", "alpha", "alpha"};
        t.winding = {1, 2, 2};
        t.rebuild_children();
        CHECK_FALSE(validate_winding(t));
    }
    SUBCASE("path image inside the ideal") {
        TreeModuleData t;
        t.presentation = p;
        t.parent = {-1, 0, 1};
        t.in_arrow = {"", "beta", "delta"};  // delta*beta is the relation
        t.winding = {1, 2, 3};
        t.rebuild_children();
        CHECK_FALSE(validate_winding(t));
    }
    SUBCASE("endpoint mismatch") {
        TreeModuleData t;
        t.presentation = p;
        t.parent = {-1, 0};
        t.in_arrow = {"", "gamma"};  // gamma starts at 2, not 1
        t.winding = {1, 3};
        t.rebuild_children();
        CHECK_FALSE(validate_winding(t));
    }
}

TEST_CASE("socle_of_projective reads leaves") {
    SocleSummary s1 = socle_of_projective(fixtures::fig1(), 1);
    CHECK(s1.multiplicities == std::map<VertexId, int>{{3, 3}});
    SocleSummary s3 = socle_of_projective(fixtures::fig1(), 3);
    CHECK(s3.multiplicities == std::map<VertexId, int>{{3, 1}});
    SocleSummary n1 = socle_of_projective(fixtures::nak2(), 1);
    CHECK(n1.multiplicities == std::map<VertexId, int>{{2, 1}});
}

TEST_CASE("push_down produces the expected matrix shapes") {
    SUBCASE("fig1 tree") {
        TreeModuleData t = build_projective_tree(fixtures::fig1(), 1);
        MatrixRepresentation rep = push_down(t);
        CHECK(rep.dim(1) == 1);
        CHECK(rep.dim(2) == 2);
        CHECK(rep.dim(3) == 3);
        for (auto name : {"alpha", "beta"}) {
            const Matrix& m = rep.map_of(name);
            CHECK(m.rows() == 2);
            CHECK(m.cols() == 1);
            size_t ones = 0;
            for (size_t r = 0; r < m.rows(); ++r) ones += m(r, 0) == 1;
            CHECK(ones == 1);
        }
        for (auto name : {"gamma", "delta"}) {
            const Matrix& m = rep.map_of(name);
            CHECK(m.rows() == 3);
            CHECK(m.cols() == 2);
        }
        CHECK(rep.annihilates_relations(t.presentation));
    }
    SUBCASE("single-vertex tree") {
        MatrixRepresentation rep = push_down(build_simple_tree(fixtures::fig1(), 2));
        CHECK(rep.dim(1) == 0);
        CHECK(rep.dim(2) == 1);
        CHECK(rep.dim(3) == 0);
    }
    SUBCASE("nak2") {
        MatrixRepresentation rep = push_down(build_projective_tree(fixtures::nak2(), 1));
        CHECK(rep.dim(1) == 1);
        CHECK(rep.dim(2) == 1);
        CHECK(rep.map_of("a1")(0, 0) == 1);
        CHECK(rep.map_of("a2")(0, 0) == 0);
    }
}

TEST_CASE("label_path_set") {
    TreeModuleData t = build_projective_tree(fixtures::fig1(), 1);
    int alpha_child = t.children[0][0];
    auto labels = label_path_set(t, alpha_child);
    std::set<std::vector<std::string>> expected{{}, {"gamma"}, {"delta"}};
    CHECK(labels == expected);

    auto at_leaf = label_path_set(t, t.leaves().front());
    CHECK(at_leaf == std::set<std::vector<std::string>>{{}});

    auto at_root = label_path_set(t, 0);
    std::set<std::vector<std::string>> root_expected{
        {}, {"alpha"}, {"beta"}, {"alpha", "gamma"}, {"alpha", "delta"}, {"beta", "gamma"}};
    CHECK(at_root == root_expected);
}

TEST_CASE("is_uniserial detects chains") {
    CHECK(is_uniserial(build_projective_tree(fixtures::nak2(), 1)));
    CHECK_FALSE(is_uniserial(build_projective_tree(fixtures::fig1(), 1)));
    CHECK(is_uniserial(build_simple_tree(fixtures::fig1(), 1)));
}

TEST_CASE("tree invariants over the fixture corpus") {
    for (const auto& p : {fixtures::fig1(), fixtures::nak2(), fixtures::a2(),
                          fixtures::point(), fixtures::loop2()}) {
        AlgebraBasis basis = path_basis(p);
        for (VertexId i : p.quiver.vertices) {
            TreeModuleData t = build_projective_tree(p, i);
            CHECK(validate_winding(t));
            // vertex count = dim P(i), and per-vertex counts match basis blocks
            size_t dim_pi = 0;
            for (VertexId j : p.quiver.vertices) {
                size_t block = 0;
                auto it = basis.blocks.find({i, j});
                if (it != basis.blocks.end()) block = it->second.size();
                size_t fibre = 0;
                for (VertexId w : t.winding) fibre += w == j;
                CHECK(block == fibre);
                dim_pi += block;
            }
            CHECK(t.size() == dim_pi);
            // distinct maximal paths from a common vertex have distinct windings:
            // the number of maximal winding words below v equals its leaf count
            for (int v = 0; v < int(t.size()); ++v) {
                auto labels = label_path_set(t, v);
                size_t maximal = 0;
                for (const auto& w : labels) {
                    bool extendable = false;
                    for (const auto& other : labels)
                        if (other.size() == w.size() + 1 &&
                            std::equal(w.begin(), w.end(), other.begin()))
                            extendable = true;
                    maximal += !extendable;
                }
                size_t leaves_below = 0;
                for (int leaf : t.leaves()) {
                    int u = leaf;
                    while (u != -1 && u != v) u = t.parent[size_t(u)];
                    leaves_below += u == v;
                }
                CHECK(maximal == leaves_below);
            }
            // every root-to-leaf image is a maximal relation-free path from i
            for (int leaf : t.leaves()) {
                auto word = t.root_word(leaf);
                CHECK(word_relation_free(p, word));
                VertexId end = t.winding[size_t(leaf)];
                for (const Arrow* a : p.quiver.out_arrows(end)) {
                    auto ext = word;
                    ext.push_back(a->name);
                    CHECK_FALSE(word_relation_free(p, ext));
                }
            }
        }
    }
}

TEST_CASE("tree DOT export") {
    TreeModuleData t = build_projective_tree(fixtures::fig1(), 1);
    std::string dot = export_tree_dot(t, "t1");
    CHECK(dot.find("(*_1, 1)") != std::string::npos);
    size_t edges = 0;
    for (size_t pos = 0; (pos = dot.find("->", pos)) != std::string::npos; ++pos) ++edges;
    CHECK(edges == 5);

    std::string single = export_tree_dot(build_simple_tree(fixtures::point(), 1));
    CHECK(single.find("->") == std::string::npos);
    CHECK(single.find("(*_1, 1)") != std::string::npos);
}
