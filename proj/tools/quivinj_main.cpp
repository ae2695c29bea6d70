// quivinj: decide self-injectivity of monomial bound quiver algebras.
//
// Exit codes: 0 success, 1 invalid input (including infinite-dimensional
// algebras), 2 the equivalent conditions disagree (a bug, never a verdict).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "quivinj/quivinj.hpp"

using nlohmann::json;
using namespace quivinj;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 1;
constexpr int kExitDisagreement = 2;

MonomialPresentation load_presentation(const std::string& file) {
    std::ifstream in(file);
    if (!in) throw QuiverError("cannot open file: " + file);
    std::ostringstream text;
    text << in.rdbuf();
    return parse(text.str());
}

json classification_json(const ClassificationResult& c) {
    json j;
    switch (c.outcome) {
        case ClassificationResult::IsK: j["outcome"] = "is_k"; break;
        case ClassificationResult::Cyclic: j["outcome"] = "cyclic"; break;
        case ClassificationResult::NotSelfInjectiveShape:
            j["outcome"] = "not_self_injective_shape";
            break;
    }
    if (c.outcome == ClassificationResult::Cyclic) {
        j["n"] = c.n;
        j["l"] = c.l;
    }
    if (!c.witness.empty()) j["witness"] = c.witness;
    return j;
}

json verdict_json(const MonomialPresentation& p, const Verdict& v) {
    json j;
    j["presentation"] = render(p);
    json c;
    c["c2"] = v.cond2;
    c["c3"] = v.cond3;
    c["c4"] = v.cond4;
    if (v.cond1_oracle)
        c["c1_oracle"] = *v.cond1_oracle;
    else
        c["c1_oracle"] = nullptr;
    j["conditions"] = c;
    j["final"] = v.final_verdict;
    if (v.nakayama.permutation) {
        json images = json::array();
        for (VertexId i : p.quiver.vertices) images.push_back(v.nakayama.permutation->at(i));
        j["nakayama_permutation"] = images;
    } else {
        j["nakayama_permutation"] = nullptr;
    }
    j["classification"] = classification_json(v.classification);
    j["notes"] = v.notes;
    return j;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

void print_verdict_text(const MonomialPresentation& p, const Verdict& v) {
    std::cout << render(p);
    std::cout << "condition 2 (Nakayama permutation): " << bool_text(v.cond2) << "\n";
    std::cout << "condition 3 (socle-injective, rank " << v.restriction_rank << " of "
              << v.socle_hom_dim << "): " << bool_text(v.cond3) << "\n";
    std::cout << "condition 4 (structural shape): " << bool_text(v.cond4) << "\n";
    if (v.cond1_oracle)
        std::cout << "condition 1 (linear-algebra oracle): " << bool_text(*v.cond1_oracle)
                  << "\n";
    std::cout << "self-injective: " << bool_text(v.final_verdict) << "\n";
    if (v.nakayama.permutation) {
        std::cout << "nakayama permutation:";
        for (VertexId i : p.quiver.vertices)
            std::cout << " " << i << "->" << v.nakayama.permutation->at(i);
        std::cout << "\n";
    }
    switch (v.classification.outcome) {
        case ClassificationResult::IsK:
            std::cout << "classification: the base field K\n";
            break;
        case ClassificationResult::Cyclic:
            std::cout << "classification: cyclic quiver C_" << v.classification.n
                      << " modulo all paths of length " << v.classification.l << "\n";
            break;
        case ClassificationResult::NotSelfInjectiveShape:
            std::cout << "classification: not of self-injective shape";
            if (!v.classification.witness.empty())
                std::cout << " (" << v.classification.witness << ")";
            std::cout << "\n";
            break;
    }
    for (const std::string& note : v.notes) std::cout << "note: " << note << "\n";
}

int run_check(const std::string& file, const std::string& condition, bool no_oracle,
              bool as_json) {
    MonomialPresentation p = load_presentation(file);

    if (condition != "all") {
        bool value = false;
        std::optional<bool> c1, c2, c3, c4;
        NakayamaReport nk;
        ClassificationResult cls = structural_classification(p);
        if (condition == "1") {
            value = self_injective_oracle(p);
            c1 = value;
        } else if (condition == "2") {
            nk = nakayama_permutation(p);
            value = nk.holds();
            c2 = value;
        } else if (condition == "3") {
            value = is_socle_injective(p);
            c3 = value;
        } else {
            value = cls.holds();
            c4 = value;
        }
        if (as_json) {
            json j;
            j["presentation"] = render(p);
            json c;
            c["c1_oracle"] = c1 ? json(*c1) : json(nullptr);
            c["c2"] = c2 ? json(*c2) : json(nullptr);
            c["c3"] = c3 ? json(*c3) : json(nullptr);
            c["c4"] = c4 ? json(*c4) : json(nullptr);
            j["conditions"] = c;
            j["final"] = value;
            j["nakayama_permutation"] = nullptr;
            if (nk.permutation) {
                json images = json::array();
                for (VertexId i : p.quiver.vertices) images.push_back(nk.permutation->at(i));
                j["nakayama_permutation"] = images;
            }
            j["classification"] = classification_json(cls);
            j["notes"] = json::array();
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "condition " << condition << ": " << bool_text(value) << "\n";
        }
        return kExitOk;
    }

    try {
        Verdict v = decide_self_injective(p, !no_oracle);
        if (as_json)
            std::cout << verdict_json(p, v).dump(2) << "\n";
        else
            print_verdict_text(p, v);
        return kExitOk;
    } catch (const Disagreement& d) {
        if (as_json)
            std::cout << verdict_json(p, d.verdict).dump(2) << "\n";
        else {
            std::cerr << d.what() << "\n";
            print_verdict_text(p, d.verdict);
        }
        return kExitDisagreement;
    }
}

int run_basis(const std::string& file, bool as_json) {
    MonomialPresentation p = load_presentation(file);
    AlgebraBasis basis = path_basis(p);
    if (as_json) {
        json j;
        j["total_dimension"] = basis.total_dimension;
        json blocks = json::array();
        for (const auto& [key, paths] : basis.blocks) {
            json b;
            b["from"] = key.first;
            b["to"] = key.second;
            json ps = json::array();
            for (const Path& q : paths) ps.push_back(render_path(q));
            b["paths"] = ps;
            blocks.push_back(b);
        }
        j["blocks"] = blocks;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "dimension: " << basis.total_dimension << "\n";
        for (const auto& [key, paths] : basis.blocks) {
            std::cout << key.first << " -> " << key.second << ":";
            for (const Path& q : paths) std::cout << " " << render_path(q);
            std::cout << "\n";
        }
    }
    return kExitOk;
}

void print_tree_text(const TreeModuleData& t, int v, int depth) {
    std::cout << std::string(size_t(depth) * 2, ' ') << v;
    if (v != 0) std::cout << " via " << t.in_arrow[size_t(v)];
    std::cout << " (winding " << t.winding[size_t(v)] << ")";
    if (t.is_leaf(v)) std::cout << " [leaf]";
    std::cout << "\n";
    for (int c : t.children[size_t(v)]) print_tree_text(t, c, depth + 1);
}

int run_tree(const std::string& file, VertexId vertex, bool dot) {
    MonomialPresentation p = load_presentation(file);
    TreeModuleData t = build_projective_tree(p, vertex);
    if (dot) {
        std::cout << export_tree_dot(t);
    } else {
        std::cout << "T_" << vertex << ": " << t.size() << " vertices, "
                  << t.leaves().size() << " leaves\n";
        print_tree_text(t, 0, 1);
    }
    return kExitOk;
}

int run_socle(const std::string& file, std::optional<VertexId> vertex, bool as_json) {
    MonomialPresentation p = load_presentation(file);
    std::vector<VertexId> targets;
    if (vertex)
        targets.push_back(*vertex);
    else
        targets = p.quiver.vertices;
    json all = json::array();
    for (VertexId i : targets) {
        SocleSummary s = socle_of_projective(p, i);
        if (as_json) {
            json j;
            j["projective"] = i;
            json mult = json::object();
            for (const auto& [v, m] : s.multiplicities) mult[std::to_string(v)] = m;
            j["multiplicities"] = mult;
            j["total"] = s.total();
            all.push_back(j);
        } else {
            std::cout << "soc P(" << i << "):";
            for (const auto& [v, m] : s.multiplicities) std::cout << " S(" << v << "):" << m;
            std::cout << " (total " << s.total() << ")\n";
        }
    }
    if (as_json) std::cout << all.dump(2) << "\n";
    return kExitOk;
}

int run_hom(const std::string& file, const std::vector<std::string>& from,
            const std::vector<std::string>& to, bool as_json) {
    MonomialPresentation p = load_presentation(file);
    auto parse_side = [](const std::vector<std::string>& side, bool allow_simple)
        -> std::pair<char, VertexId> {
        if (side.size() != 2 || (side[0] != "P" && side[0] != "S") ||
            (!allow_simple && side[0] == "S"))
            throw QuiverError(allow_simple ? "expected 'P I' or 'S I'" : "expected 'P J'");
        return {side[0][0], std::stoi(side[1])};
    };
    auto [from_kind, from_vertex] = parse_side(from, true);
    auto [to_kind, to_vertex] = parse_side(to, false);
    (void)to_kind;

    TreeModuleData x = from_kind == 'P' ? build_projective_tree(p, from_vertex)
                                        : build_simple_tree(p, from_vertex);
    TreeModuleData y = build_projective_tree(p, to_vertex);
    HomBasis maps = enumerate_graph_maps(x, y);
    if (as_json) {
        json j;
        j["from"] = std::string(1, from_kind) + "(" + std::to_string(from_vertex) + ")";
        j["to"] = "P(" + std::to_string(to_vertex) + ")";
        j["dimension"] = maps.maps.size();
        json ms = json::array();
        for (const GraphMap& g : maps.maps) {
            json m;
            m["anchor"] = g.anchor;
            m["factor"] = g.factor;
            m["image"] = g.image;
            ms.push_back(m);
        }
        j["maps"] = ms;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "dim Hom(" << from_kind << "(" << from_vertex << "), P(" << to_vertex
                  << ")) = " << maps.maps.size() << "\n";
        for (const GraphMap& g : maps.maps) {
            std::cout << "  anchor " << g.anchor << ", factor {";
            for (size_t k = 0; k < g.factor.size(); ++k)
                std::cout << (k ? " " : "") << g.factor[k] << "->" << g.image[k];
            std::cout << "}\n";
        }
    }
    return kExitOk;
}

int run_classify(const std::string& file, bool as_json) {
    MonomialPresentation p = load_presentation(file);
    ClassificationResult c = structural_classification(p);
    if (as_json) {
        std::cout << classification_json(c).dump(2) << "\n";
    } else {
        switch (c.outcome) {
            case ClassificationResult::IsK:
                std::cout << "the base field K\n";
                break;
            case ClassificationResult::Cyclic:
                std::cout << "cyclic quiver C_" << c.n << " modulo all paths of length "
                          << c.l << "\n";
                break;
            case ClassificationResult::NotSelfInjectiveShape:
                std::cout << "not of self-injective shape";
                if (!c.witness.empty()) std::cout << " (" << c.witness << ")";
                std::cout << "\n";
                break;
        }
    }
    return kExitOk;
}

int run_enumerate(const CorpusBounds& bounds, bool verify, unsigned jobs, bool as_json) {
    if (!verify) {
        auto corpus = enumerate_presentations(bounds);
        if (as_json) {
            json j;
            j["instances"] = corpus.size();
            json texts = json::array();
            for (const auto& p : corpus) texts.push_back(render(p));
            j["presentations"] = texts;
            std::cout << j.dump(2) << "\n";
        } else {
            for (const auto& p : corpus) std::cout << render(p);
            std::cout << "instances: " << corpus.size() << "\n";
        }
        return kExitOk;
    }

    VerificationReport rep = verify_equivalences(bounds, jobs);
    if (as_json) {
        json j;
        j["instances_enumerated"] = rep.instances_enumerated;
        j["instances_valid"] = rep.instances_valid;
        j["agreements"] = rep.agreements;
        json dis = json::array();
        for (const InstanceResult& r : rep.disagreements) {
            json d;
            d["presentation"] = r.presentation_text;
            d["cross_check_failures"] = r.cross_check_failures;
            dis.push_back(d);
        }
        j["disagreements"] = dis;
        json si = json::array();
        for (const InstanceResult& r : rep.self_injective_instances) {
            json s;
            s["presentation"] = r.presentation_text;
            s["classification"] = classification_json(r.verdict.classification);
            si.push_back(s);
        }
        j["self_injective_instances"] = si;
        j["elapsed_seconds"] = rep.elapsed_seconds;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "instances enumerated: " << rep.instances_enumerated << "\n";
        std::cout << "instances valid: " << rep.instances_valid << "\n";
        std::cout << "agreements: " << rep.agreements << "\n";
        std::cout << "disagreements: " << rep.disagreements.size() << "\n";
        for (const InstanceResult& r : rep.disagreements) {
            std::cout << "--- disagreement ---\n" << r.presentation_text;
            for (const std::string& f : r.cross_check_failures) std::cout << "  " << f << "\n";
        }
        std::cout << "self-injective instances: " << rep.self_injective_instances.size()
                  << "\n";
        for (const InstanceResult& r : rep.self_injective_instances)
            std::cout << "--- self-injective ---\n" << r.presentation_text;
        std::cout << "elapsed seconds: " << rep.elapsed_seconds << "\n";
    }
    return rep.disagreements.empty() ? kExitOk : kExitDisagreement;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"decide self-injectivity of monomial bound quiver algebras"};
    app.require_subcommand(1);

    std::string file;
    std::string condition = "all";
    bool no_oracle = false, as_json = false, dot = false, verify = false;
    VertexId vertex = 0;
    std::vector<std::string> from_spec, to_spec;
    CorpusBounds bounds;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());

    auto* check = app.add_subcommand("check", "evaluate the self-injectivity conditions");
    check->add_option("FILE", file)->required();
    check->add_option("--condition", condition)
        ->check(CLI::IsMember({"1", "2", "3", "4", "all"}));
    check->add_flag("--no-oracle", no_oracle);
    check->add_flag("--json", as_json);

    auto* basis = app.add_subcommand("basis", "path basis of the algebra");
    basis->add_option("FILE", file)->required();
    basis->add_flag("--json", as_json);

    auto* tree = app.add_subcommand("tree", "tree of the indecomposable projective");
    tree->add_option("FILE", file)->required();
    tree->add_option("--vertex", vertex)->required();
    tree->add_flag("--dot", dot);

    auto* socle_cmd = app.add_subcommand("socle", "socle of the indecomposable projectives");
    socle_cmd->add_option("FILE", file)->required();
    auto* socle_vertex = socle_cmd->add_option("--vertex", vertex);
    socle_cmd->add_flag("--json", as_json);

    auto* hom = app.add_subcommand("hom", "graph-map basis of a Hom space");
    hom->add_option("FILE", file)->required();
    hom->add_option("--from", from_spec, "P I or S I")->required()->expected(2);
    hom->add_option("--to", to_spec, "P J")->required()->expected(2);
    hom->add_flag("--json", as_json);

    auto* classify = app.add_subcommand("classify", "structural classification");
    classify->add_option("FILE", file)->required();
    classify->add_flag("--json", as_json);

    auto* enumerate = app.add_subcommand("enumerate", "enumerate and verify a corpus");
    enumerate->add_option("--max-vertices", bounds.max_vertices)->required();
    enumerate->add_option("--max-arrows", bounds.max_arrows)->required();
    enumerate->add_option("--max-rel-len", bounds.max_relation_length)->required();
    enumerate->add_option("--max-rels", bounds.max_relations)->required();
    enumerate->add_flag("--verify", verify);
    enumerate->add_option("--jobs", jobs);
    enumerate->add_flag("--json", as_json);

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return run_check(file, condition, no_oracle, as_json);
        if (basis->parsed()) return run_basis(file, as_json);
        if (tree->parsed()) return run_tree(file, vertex, dot);
        if (socle_cmd->parsed())
            return run_socle(file,
                             socle_vertex->count() ? std::optional<VertexId>(vertex)
                                                   : std::nullopt,
                             as_json);
        if (hom->parsed()) return run_hom(file, from_spec, to_spec, as_json);
        if (classify->parsed()) return run_classify(file, as_json);
        if (enumerate->parsed()) return run_enumerate(bounds, verify, jobs, as_json);
    } catch (const SyntaxError& e) {
        std::cerr << "syntax error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const SemanticError& e) {
        std::cerr << "semantic error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const InfiniteDimensional& e) {
        std::cerr << "infinite-dimensional: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const QuiverError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
    return kExitInvalidInput;
}
