#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "quivinj/enumerate.hpp"

using namespace quivinj;

TEST_CASE("enumerate_presentations at tiny bounds") {
    SUBCASE("one vertex, no arrows: only the point") {
        auto corpus = enumerate_presentations({1, 0, 2, 0});
        REQUIRE(corpus.size() == 1);
        CHECK(corpus[0].structurally_equal(
            MonomialPresentation("p", Quiver({1}, {}), {})));
    }
    SUBCASE("one vertex, one arrow: point and the loop with x^2") {
        auto corpus = enumerate_presentations({1, 1, 2, 1});
        REQUIRE(corpus.size() == 2);
        // the loop instance is loop2 up to arrow naming
        bool found_loop = false;
        for (const auto& p : corpus)
            if (p.quiver.arrows.size() == 1 && p.relations.size() == 1) {
                CHECK(p.relations[0].length() == 2);
                found_loop = true;
            }
        CHECK(found_loop);
    }
    SUBCASE("two vertices, one arrow includes A2 and excludes infinite loops") {
        auto corpus = enumerate_presentations({2, 1, 2, 1});
        bool found_a2 = false;
        for (const auto& p : corpus) {
            CHECK(is_finite_dimensional(p));
            CHECK(is_connected(p.quiver));
            CHECK(validate_presentation(p).valid());
            if (p.quiver.vertices.size() == 2 && p.quiver.arrows.size() == 1 &&
                p.relations.empty())
                found_a2 = true;
        }
        CHECK(found_a2);
    }
}

TEST_CASE("enumeration is duplicate-free under canonical relabeling") {
    auto corpus = enumerate_presentations({2, 2, 2, 2});
    std::set<std::string> seen;
    for (const auto& p : corpus) CHECK(seen.insert(render(p)).second);
    // C_2 with both length-2 relations (nak2's shape) is present exactly once
    size_t nak_shaped = 0;
    for (const auto& p : corpus) {
        if (p.quiver.vertices.size() != 2 || p.quiver.arrows.size() != 2) continue;
        if (p.quiver.out_degree(1) == 1 && p.quiver.out_degree(2) == 1 &&
            p.quiver.arrows[0].target != p.quiver.arrows[0].source &&
            p.quiver.arrows[1].source == p.quiver.arrows[0].target &&
            p.relations.size() == 2)
            ++nak_shaped;
    }
    CHECK(nak_shaped == 1);
}

TEST_CASE("hand count: all valid instances on two vertices with one arrow") {
    // quivers up to iso with <= 2 vertices, <= 1 arrow, connected:
    //   point; loop (needs x^2, or is infinite); A2 (1 -> 2)
    // with max 1 relation of length <= 2: point, loop+x^2, A2 => 3 instances
    auto corpus = enumerate_presentations({2, 1, 2, 1});
    CHECK(corpus.size() == 3);
}

TEST_CASE("verify_equivalences at tiny bounds") {
    VerificationReport rep = verify_equivalences({1, 1, 2, 1}, 1);
    CHECK(rep.instances_enumerated == 2);
    CHECK(rep.instances_valid == 2);
    CHECK(rep.agreements == 2);
    CHECK(rep.disagreements.empty());
    CHECK(rep.self_injective_instances.size() == 2);  // point and loop2
}

TEST_CASE("verify_equivalences finds nak2 at bounds (2,2,2,2)") {
    VerificationReport rep = verify_equivalences({2, 2, 2, 2}, 1);
    CHECK(rep.agreements == rep.instances_valid);
    CHECK(rep.disagreements.empty());
    bool nak2_found = false;
    for (const auto& inst : rep.self_injective_instances)
        if (inst.verdict.classification.outcome == ClassificationResult::Cyclic &&
            inst.verdict.classification.n == 2 && inst.verdict.classification.l == 2)
            nak2_found = true;
    CHECK(nak2_found);
}

TEST_CASE("reports are independent of the worker count") {
    VerificationReport a = verify_equivalences({2, 2, 2, 2}, 1);
    VerificationReport b = verify_equivalences({2, 2, 2, 2}, 4);
    CHECK(a.instances_enumerated == b.instances_enumerated);
    CHECK(a.agreements == b.agreements);
    REQUIRE(a.self_injective_instances.size() == b.self_injective_instances.size());
    for (size_t k = 0; k < a.self_injective_instances.size(); ++k)
        CHECK(a.self_injective_instances[k].presentation_text ==
              b.self_injective_instances[k].presentation_text);
}
