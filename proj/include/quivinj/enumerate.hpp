#ifndef QUIVINJ_ENUMERATE_HPP
#define QUIVINJ_ENUMERATE_HPP

#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "quivinj/classify.hpp"
#include "quivinj/presentation.hpp"
#include "quivinj/quiver.hpp"

namespace quivinj {

struct CorpusBounds {
    int max_vertices = 1;
    int max_arrows = 0;
    int max_relation_length = 2;
    int max_relations = 0;
};

namespace detail {

using PairList = std::vector<std::pair<int, int>>;  // sorted arrow endpoint multiset

inline std::vector<std::vector<int>> permutations_of(int n) {
    std::vector<int> ids(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) ids[size_t(i)] = i + 1;
    std::vector<std::vector<int>> out;
    do {
        out.push_back(ids);
    } while (std::next_permutation(ids.begin(), ids.end()));
    return out;
}

inline PairList relabel(const PairList& arrows, const std::vector<int>& perm) {
    PairList out;
    for (auto [s, t] : arrows) out.push_back({perm[size_t(s - 1)], perm[size_t(t - 1)]});
    std::sort(out.begin(), out.end());
    return out;
}

inline bool pairs_connected(int n, const PairList& arrows) {
    if (n == 1) return true;
    std::vector<int> comp(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) comp[size_t(i)] = i;
    std::function<int(int)> find = [&](int v) {
        return comp[size_t(v)] == v ? v : comp[size_t(v)] = find(comp[size_t(v)]);
    };
    for (auto [s, t] : arrows) comp[size_t(find(s - 1))] = find(t - 1);
    for (int i = 1; i < n; ++i)
        if (find(i) != find(0)) return false;
    return true;
}

// Quiver from a pair multiset; arrows named a1, a2, ... in sorted pair order.
inline Quiver quiver_from_pairs(int n, const PairList& arrows) {
    std::vector<VertexId> vs;
    for (int i = 1; i <= n; ++i) vs.push_back(i);
    std::vector<Arrow> as;
    for (size_t k = 0; k < arrows.size(); ++k)
        as.push_back({"a" + std::to_string(k + 1), arrows[k].first, arrows[k].second});
    return Quiver(vs, as);
}

// All valid paths of length 2..max_len, canonical order.
inline std::vector<Path> candidate_relations(const Quiver& q, int max_len) {
    std::vector<Path> out;
    struct Frame {
        Path p;
        VertexId end;
    };
    for (VertexId v : q.vertices) {
        std::vector<Frame> stack{{Path::stationary(v), v}};
        while (!stack.empty()) {
            Frame f = stack.back();
            stack.pop_back();
            if (f.p.length() >= 2) out.push_back(f.p);
            if (int(f.p.length()) >= max_len) continue;
            for (const Arrow* a : q.out_arrows(f.end)) {
                Path np = f.p;
                np.arrows.push_back(a->name);
                stack.push_back({np, a->target});
            }
        }
    }
    std::sort(out.begin(), out.end(), PathLess{});
    return out;
}

// name permutations induced by a vertex automorphism: within each parallel
// class the assignment is free, so enumerate all products of class bijections
inline void arrow_renamings(const Quiver& q, const std::vector<int>& vperm,
                            const std::function<void(const std::map<std::string, std::string>&)>& emit) {
    // group arrow indices by endpoint pair
    std::map<std::pair<int, int>, std::vector<size_t>> classes;
    for (size_t k = 0; k < q.arrows.size(); ++k)
        classes[{q.arrows[k].source, q.arrows[k].target}].push_back(k);
    // image class of arrow k under vperm
    std::vector<std::pair<int, int>> image_pair(q.arrows.size());
    for (size_t k = 0; k < q.arrows.size(); ++k)
        image_pair[k] = {vperm[size_t(q.arrows[k].source - 1)],
                         vperm[size_t(q.arrows[k].target - 1)]};
    // recursion over source classes, assigning bijections to image classes
    std::vector<std::pair<int, int>> class_keys;
    for (const auto& [key, idxs] : classes) class_keys.push_back(key);
    std::map<std::string, std::string> rename;
    std::function<void(size_t)> rec = [&](size_t ci) {
        if (ci == class_keys.size()) {
            emit(rename);
            return;
        }
        const auto& dom = classes[class_keys[ci]];
        auto img_key = image_pair[dom.front()];
        auto it = classes.find(img_key);
        if (it == classes.end() || it->second.size() != dom.size()) return;  // not an automorphism
        std::vector<size_t> img = it->second;
        std::sort(img.begin(), img.end());
        do {
            for (size_t k = 0; k < dom.size(); ++k)
                rename[q.arrows[dom[k]].name] = q.arrows[img[k]].name;
            rec(ci + 1);
        } while (std::next_permutation(img.begin(), img.end()));
    };
    rec(0);
}

// Canonical text of the relation set under all quiver automorphisms; the
// representative relation set is the one whose own text attains the minimum.
inline std::string canonical_relation_text(const Quiver& q, int n,
                                           const std::vector<Path>& relations,
                                           const std::vector<std::vector<int>>& perms,
                                           const PairList& pairs) {
    std::string best;
    bool have = false;
    for (const auto& vperm : perms) {
        if (relabel(pairs, vperm) != pairs) continue;  // not a quiver automorphism
        arrow_renamings(q, vperm, [&](const std::map<std::string, std::string>& rename) {
            std::vector<Path> mapped;
            for (const Path& r : relations) {
                std::vector<std::string> seq;
                for (const std::string& a : r.arrows) seq.push_back(rename.at(a));
                mapped.push_back(Path(q.arrow(seq.front()).source, seq));
            }
            std::sort(mapped.begin(), mapped.end(), PathLess{});
            std::string text;
            for (const Path& r : mapped) {
                text += std::to_string(r.source) + ":";
                for (const std::string& a : r.arrows) text += a + ".";
                text += ";";
            }
            if (!have || text < best) {
                best = text;
                have = true;
            }
        });
    }
    (void)n;
    return best;
}

inline std::string plain_relation_text(const std::vector<Path>& relations) {
    std::string text;
    for (const Path& r : relations) {
        text += std::to_string(r.source) + ":";
        for (const std::string& a : r.arrows) text += a + ".";
        text += ";";
    }
    return text;
}

}  // namespace detail

/// All connected, valid, finite-dimensional monomial presentations within the
/// bounds, one representative per isomorphism class, in deterministic order.
inline std::vector<MonomialPresentation> enumerate_presentations(const CorpusBounds& b) {
    std::vector<MonomialPresentation> out;
    size_t counter = 0;
    for (int n = 1; n <= b.max_vertices; ++n) {
        auto perms = detail::permutations_of(n);
        // all endpoint pairs, in order
        std::vector<std::pair<int, int>> pair_types;
        for (int s = 1; s <= n; ++s)
            for (int t = 1; t <= n; ++t) pair_types.push_back({s, t});
        // multisets of pairs of size 0..max_arrows (non-decreasing index sequences)
        std::vector<size_t> pick;
        std::function<void(size_t, int)> choose = [&](size_t from, int remaining) {
            // process the current multiset
            detail::PairList pairs;
            for (size_t idx : pick) pairs.push_back(pair_types[idx]);
            bool canonical_quiver = true;
            for (const auto& vp : perms)
                if (detail::relabel(pairs, vp) < pairs) {
                    canonical_quiver = false;
                    break;
                }
            if (canonical_quiver && detail::pairs_connected(n, pairs)) {
                Quiver q = detail::quiver_from_pairs(n, pairs);
                std::vector<Path> candidates = detail::candidate_relations(q, b.max_relation_length);
                // antichain subsets of size <= max_relations
                std::vector<Path> chosen;
                std::function<void(size_t)> pick_rel = [&](size_t start) {
                    // test the current antichain
                    MonomialPresentation pres("g" + std::to_string(counter), q, chosen);
                    if (is_finite_dimensional(pres)) {
                        std::string text = detail::plain_relation_text(pres.relations);
                        if (text == detail::canonical_relation_text(q, n, pres.relations, perms,
                                                                    pairs)) {
                            pres.name = "g" + std::to_string(out.size() + 1);
                            out.push_back(pres);
                        }
                    }
                    if (int(chosen.size()) >= b.max_relations) return;
                    for (size_t k = start; k < candidates.size(); ++k) {
                        bool antichain = true;
                        for (const Path& c : chosen) {
                            const Path& shorter =
                                c.length() <= candidates[k].length() ? c : candidates[k];
                            const Path& longer =
                                c.length() <= candidates[k].length() ? candidates[k] : c;
                            if (is_factor(shorter, longer)) {
                                antichain = false;
                                break;
                            }
                        }
                        if (!antichain) continue;
                        chosen.push_back(candidates[k]);
                        pick_rel(k + 1);
                        chosen.pop_back();
                    }
                };
                pick_rel(0);
                ++counter;
            }
            if (remaining == 0) return;
            for (size_t k = from; k < pair_types.size(); ++k) {
                pick.push_back(k);
                choose(k, remaining - 1);
                pick.pop_back();
            }
        };
        // choose() processes the empty multiset first, then extends
        choose(0, b.max_arrows);
    }
    return out;
}

struct InstanceResult {
    std::string presentation_text;
    bool valid = true;
    bool agreement = true;
    bool self_injective = false;
    Verdict verdict;  // evidence, present for both agreements and disagreements
    std::vector<std::string> cross_check_failures;
};

struct VerificationReport {
    size_t instances_enumerated = 0;
    size_t instances_valid = 0;
    size_t agreements = 0;
    std::vector<InstanceResult> disagreements;
    std::vector<InstanceResult> self_injective_instances;
    double elapsed_seconds = 0;
};

namespace detail {

inline InstanceResult verify_instance(const MonomialPresentation& p) {
    InstanceResult res;
    res.presentation_text = render(p);
    try {
        res.verdict = decide_self_injective(p, /*with_oracle=*/true);
        res.self_injective = res.verdict.final_verdict;
    } catch (const Disagreement& d) {
        res.agreement = false;
        res.verdict = d.verdict;
    }

    // cross-check invariants, all oracle-backed
    std::map<VertexId, TreeModuleData> trees;
    std::map<VertexId, MatrixRepresentation> projs;
    for (VertexId i : p.quiver.vertices) {
        trees[i] = build_projective_tree(p, i);
        projs[i] = representation_of_projective(p, i);
    }
    for (VertexId i : p.quiver.vertices) {
        // leaf socle vs oracle socle
        SocleSummary leafsoc;
        for (int v : trees[i].leaves()) ++leafsoc.multiplicities[trees[i].winding[size_t(v)]];
        auto oraclesoc = socle(projs[i]);
        for (VertexId j : p.quiver.vertices) {
            int leaf_mult = 0;
            auto it = leafsoc.multiplicities.find(j);
            if (it != leafsoc.multiplicities.end()) leaf_mult = it->second;
            if (size_t(leaf_mult) != oraclesoc[j])
                res.cross_check_failures.push_back(
                    "socle mismatch at P(" + std::to_string(i) + ") vertex " + std::to_string(j));
        }
        // graph-map counts vs oracle hom dimensions
        TreeModuleData simple = build_simple_tree(p, i);
        for (VertexId j : p.quiver.vertices) {
            size_t gp = hom_dim(trees[i], trees[j]);
            size_t op = hom_space(projs[i], projs[j]).dimension();
            if (gp != op)
                res.cross_check_failures.push_back("hom mismatch P(" + std::to_string(i) +
                                                   ") -> P(" + std::to_string(j) + ")");
            size_t gs = hom_dim(simple, trees[j]);
            size_t os = hom_space(push_down(simple), projs[j]).dimension();
            if (gs != os)
                res.cross_check_failures.push_back("hom mismatch S(" + std::to_string(i) +
                                                   ") -> P(" + std::to_string(j) + ")");
        }
    }
    // restriction matrix entries are 0/1
    RestrictionMatrix rm = restriction_matrix(p);
    for (size_t r = 0; r < rm.entries.rows(); ++r)
        for (size_t c = 0; c < rm.entries.cols(); ++c)
            if (rm.entries(r, c) != 0 && rm.entries(r, c) != 1)
                res.cross_check_failures.push_back("restriction matrix entry outside {0,1}");
    // the corollary: self-injective implies Nakayama
    if (res.agreement && res.self_injective && !is_nakayama_algebra(p))
        res.cross_check_failures.push_back("self-injective instance is not Nakayama");

    if (!res.cross_check_failures.empty()) res.agreement = false;
    return res;
}

}  // namespace detail

/// Runs the full condition-equivalence verification over the bounded corpus.
/// The report is independent of the worker count.
inline VerificationReport verify_equivalences(const CorpusBounds& b, int jobs = 1) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<MonomialPresentation> corpus = enumerate_presentations(b);
    std::vector<InstanceResult> results(corpus.size());

    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            size_t k = next.fetch_add(1);
            if (k >= corpus.size()) break;
            results[k] = detail::verify_instance(corpus[k]);
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    VerificationReport rep;
    rep.instances_enumerated = corpus.size();
    rep.instances_valid = corpus.size();
    for (const InstanceResult& r : results) {
        if (r.agreement)
            ++rep.agreements;
        else
            rep.disagreements.push_back(r);
        if (r.agreement && r.self_injective) rep.self_injective_instances.push_back(r);
    }
    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

}  // namespace quivinj

#endif
