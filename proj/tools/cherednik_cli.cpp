#include "cherednik/block.hpp"
#include "cherednik/characters.hpp"
#include "cherednik/decomposition.hpp"
#include "cherednik/graph.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

using nlohmann::json;
using namespace cherednik;

namespace {

struct CommonOpts {
    int r = 2;
    int n = 2;
    std::string c0 = "1/2";
    std::string d = "equal";
    std::string format = "json";
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--r", o.r, "cyclic group order r of G(r,1,n)")->required();
    cmd->add_option("--n", o.n, "rank n of G(r,1,n)")->required();
    cmd->add_option("--c0", o.c0, "reflection parameter c0 as p/q")->required();
    cmd->add_option("--d", o.d, "comma-separated d-vector, or 'equal'");
    cmd->add_option("--format", o.format, "json | tsv | dot");
}

Params params_of(const CommonOpts& o) {
    Rational c0 = Rational::parse(o.c0);
    if (o.d == "equal") return Params::equal(o.r, o.n, c0);
    std::vector<Rational> d;
    size_t pos = 0;
    while (pos <= o.d.size()) {
        size_t comma = o.d.find(',', pos);
        d.push_back(Rational::parse(o.d.substr(pos, comma == std::string::npos ? comma : comma - pos)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return Params::make(o.r, o.n, c0, std::move(d));
}

json params_json(const Params& p) {
    json dj = json::array();
    for (const auto& x : p.d) dj.push_back(x.str());
    return json{{"r", p.r}, {"n", p.n}, {"c0", p.c0.str()}, {"d", dj}};
}

json labeling_json(const Params& p) {
    BlockLabeling bl = build_labeling(p);
    json labels = json::array();
    for (int b = 0; b < bl.n; ++b)
        for (const Label& l : bl.per_box[static_cast<size_t>(b)])
            labels.push_back(json::array({b + 1, l.i, l.k}));
    return labels;
}

json graded_dim_json(const RPartition& lam, const GradedDimension& gd) {
    json j{{"lambda", lam.str()},
           {"numerator", gd.num},
           {"denominatorExponent", gd.denom_exponent},
           {"finiteDimensional", gd.finite}};
    if (gd.finite) j["total"] = gd.total;
    else j["total"] = nullptr;
    return j;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int run(int argc, char** argv) {
    CLI::App app{"principal-block combinatorics of rational Cherednik algebras of G(r,1,n)"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string lambda_text;
    int nmax = 6;
    long long degree_cap = -1;
    std::string subset;

    auto* block = app.add_subcommand("block", "labeling, tightness and membership of the principal block");
    block->require_subcommand(1);
    auto* block_enum = block->add_subcommand("enumerate", "list the block members");
    auto* block_label = block->add_subcommand("labeling", "labels of the one-row diagram");
    auto* block_tight = block->add_subcommand("tight", "tight-multiplicities criterion");
    for (auto* c : {block_enum, block_label, block_tight}) add_common(c, o);

    auto* graph = app.add_subcommand("graph", "block graph with primitive/composite classification");
    add_common(graph, o);

    auto* dec = app.add_subcommand("dec-matrix", "graded decomposition matrix and its inverse");
    add_common(dec, o);

    auto* resolution = app.add_subcommand("resolution", "BGG resolution of L(lambda)");
    add_common(resolution, o);
    resolution->add_option("--lambda", lambda_text, "center, canonical text form")->required();

    auto* gdim = app.add_subcommand("graded-dim", "graded dimension of L(lambda)");
    add_common(gdim, o);
    gdim->add_option("--lambda", lambda_text, "simple module, canonical text form")->required();

    auto* oy = app.add_subcommand("oy-verify", "generating-function verification of the type B/C/D dimensions");
    oy->add_option("--nmax", nmax, "check n = 1..nmax");

    auto* oracle = app.add_subcommand("oracle", "lowest-degree isotype search by eigenvalue matching");
    add_common(oracle, o);
    oracle->add_option("--lambda", lambda_text, "standard module, canonical text form")->required();
    oracle->add_option("--subset", subset, "comma-separated submodule indices (default: each separately)");
    oracle->add_option("--degree-cap", degree_cap, "search cap (default from the block)");

    CLI11_PARSE(app, argc, argv);

    if (block_label->parsed()) {
        Params p = params_of(o);
        emit(json{{"schemaVersion", 1},
                  {"params", params_json(p)},
                  {"ell", build_labeling(p).ell},
                  {"labels", labeling_json(p)}});
    } else if (block_tight->parsed()) {
        Params p = params_of(o);
        TightResult t = tight_check(p);
        emit(json{{"schemaVersion", 1},
                  {"params", params_json(p)},
                  {"labels", labeling_json(p)},
                  {"tight", t.tight},
                  {"witness", t.witness}});
    } else if (block_enum->parsed()) {
        Params p = params_of(o);
        json members = json::array();
        for (const auto& m : enumerate_block(p)) members.push_back(m.str());
        TightResult t = tight_check(p);
        emit(json{{"schemaVersion", 1},
                  {"params", params_json(p)},
                  {"labels", labeling_json(p)},
                  {"members", members},
                  {"tight", t.tight},
                  {"witness", t.witness}});
    } else if (graph->parsed()) {
        Params p = params_of(o);
        BlockGraph g = build_gamma(p);
        if (o.format == "dot") {
            std::cout << to_dot(g);
        } else {
            json arrows = json::array();
            for (const Arrow& a : g.arrows)
                arrows.push_back(json{{"source", g.vertices[static_cast<size_t>(a.source)].str()},
                                      {"target", g.vertices[static_cast<size_t>(a.target)].str()},
                                      {"via", a.via.str()},
                                      {"degree", a.degree},
                                      {"composite", a.composite}});
            json vertices = json::array();
            for (const auto& v : g.vertices) vertices.push_back(v.str());
            emit(json{{"schemaVersion", 1},
                      {"params", params_json(p)},
                      {"vertices", vertices},
                      {"arrows", arrows},
                      {"tight", g.tight}});
        }
    } else if (dec->parsed()) {
        Params p = params_of(o);
        BlockGraph g = build_gamma(p);
        GradedMatrix m = graded_dec_matrix(g);
        GradedMatrix inv = inverse_dec_matrix(g);
        if (o.format == "tsv") {
            std::cout << m.tsv();
        } else {
            auto matrix_json = [&](const GradedMatrix& mm) {
                json rows = json::array();
                for (size_t i = 0; i < mm.order.size(); ++i) {
                    json row = json::array();
                    for (size_t j = 0; j < mm.order.size(); ++j) row.push_back(mm.e[i][j].str());
                    rows.push_back(row);
                }
                return rows;
            };
            json order = json::array();
            for (const auto& v : m.order) order.push_back(v.str());
            emit(json{{"schemaVersion", 1},
                      {"params", params_json(p)},
                      {"order", order},
                      {"matrix", matrix_json(m)},
                      {"inverse", matrix_json(inv)},
                      {"verified", m.verified}});
        }
    } else if (resolution->parsed()) {
        Params p = params_of(o);
        BlockGraph g = build_gamma(p);
        int lam = g.index_of(RPartition::parse(lambda_text, p.r));
        Resolution res = bgg_resolution(g, lam);
        if (o.format == "dot") {
            // pruned graph layered by homological degree
            std::cout << "digraph resolution {\n  rankdir=BT;\n  node [shape=box];\n";
            for (size_t d = 0; d < res.terms.size(); ++d) {
                std::cout << "  { rank=same;";
                for (int v : res.terms[d]) std::cout << " n" << v << ";";
                std::cout << " }\n";
                for (int v : res.terms[d])
                    std::cout << "  n" << v << " [label=\"" << g.vertices[static_cast<size_t>(v)].str()
                              << "\" degree=" << d << "];\n";
            }
            for (const auto& [u, v] : res.graph_arrows)
                std::cout << "  n" << u << " -> n" << v << ";\n";
            std::cout << "}\n";
        } else {
            json terms = json::array();
            for (size_t d = 0; d < res.terms.size(); ++d) {
                json members = json::array();
                for (int v : res.terms[d]) members.push_back(g.vertices[static_cast<size_t>(v)].str());
                terms.push_back(json::array({d, members}));
            }
            emit(json{{"schemaVersion", 1},
                      {"params", params_json(p)},
                      {"center", g.vertices[static_cast<size_t>(lam)].str()},
                      {"terms", terms},
                      {"tight", g.tight}});
        }
    } else if (gdim->parsed()) {
        Params p = params_of(o);
        BlockGraph g = build_gamma(p);
        int lam = g.index_of(RPartition::parse(lambda_text, p.r));
        GradedDimension gd = graded_dimension(g, bgg_resolution(g, lam));
        json j = graded_dim_json(g.vertices[static_cast<size_t>(lam)], gd);
        j["schemaVersion"] = 1;
        j["params"] = params_json(p);
        j["verified"] = g.tight;
        emit(j);
    } else if (oy->parsed()) {
        OYReport rep = oblomkov_yun_check(nmax);
        json rows = json::array();
        for (const OYRow& r : rep.rows)
            rows.push_back(json{{"n", r.n},
                                {"dimD", r.dim_d_formula},
                                {"seriesD", r.dim_d_series},
                                {"dimC", r.dim_c_formula},
                                {"seriesC", r.dim_c_series},
                                {"matchD", r.match_d},
                                {"matchC", r.match_c}});
        emit(json{{"schemaVersion", 1}, {"allMatch", rep.all_match}, {"rows", rows}});
    } else if (oracle->parsed()) {
        Params p = params_of(o);
        BlockGraph g = build_gamma(p);
        RPartition lam = RPartition::parse(lambda_text, p.r);
        g.index_of(lam); // membership check
        auto submods = fundamental_submodules(lam, p);
        long long cap = degree_cap >= 0 ? degree_cap : default_degree_cap(g);
        json results = json::array();
        if (!subset.empty()) {
            std::vector<FundamentalSubmodule> chosen;
            size_t pos = 0;
            while (pos <= subset.size()) {
                size_t comma = subset.find(',', pos);
                int idx = std::stoi(subset.substr(pos, comma == std::string::npos ? comma : comma - pos));
                chosen.push_back(submods.at(static_cast<size_t>(idx)));
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
            auto iso = isotype_oracle(lam, chosen, p, cap);
            results.push_back(json{{"subset", subset},
                                   {"isotype", iso ? json(iso->str()) : json(nullptr)}});
        } else {
            for (size_t i = 0; i < submods.size(); ++i) {
                auto iso = isotype_oracle(lam, {submods[i]}, p, cap);
                RPartition rule = lowest_degree_isotype(submods[i], p);
                results.push_back(json{{"index", i},
                                       {"submodule", submods[i].str()},
                                       {"isotype", iso ? json(iso->str()) : json(nullptr)},
                                       {"ruleIsotype", rule.str()},
                                       {"agree", iso && *iso == rule}});
            }
        }
        emit(json{{"schemaVersion", 1},
                  {"params", params_json(p)},
                  {"lambda", lam.str()},
                  {"degreeCap", cap},
                  {"results", results}});
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const internal_error& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
