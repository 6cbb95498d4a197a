// Copyright (C) 2026 The hypergh Authors
// SPDX-License-Identifier: Apache-2.0
//
// hypergh command-line front end. Every subcommand prints a JSON report on
// stdout (or writes it to --out). Exit codes: 0 ok, 1 usage, 2 input error,
// 3 budget or cap exceeded.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include "hypergh/hypergh.h"

using json = nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

struct Failure {
    hg_status status;
    std::string message;
};

void check(hg_status s) {
    if (s != HG_OK) throw Failure{s, hg_last_error()};
}

struct HyperDeleter {
    void operator()(hg_hypernetwork* h) const { hg_hypernetwork_free(h); }
};
struct NetworkDeleter {
    void operator()(hg_network* n) const { hg_network_free(n); }
};
using Hyper = std::unique_ptr<hg_hypernetwork, HyperDeleter>;
using Net = std::unique_ptr<hg_network, NetworkDeleter>;

Hyper load_hyper(const std::string& path) {
    hg_hypernetwork* h = nullptr;
    check(hg_hypernetwork_load(path.c_str(), &h));
    return Hyper(h);
}

Net load_network(const std::string& path) {
    hg_network* n = nullptr;
    check(hg_network_load(path.c_str(), &n));
    return Net(n);
}

// Takes ownership of a library string and parses it.
json take_json(char* s) {
    json doc = json::parse(s);
    hg_string_free(s);
    return doc;
}

std::string take_string(char* s) {
    std::string out(s);
    hg_string_free(s);
    return out;
}

json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

std::string sha256_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Failure{HG_IO_ERROR, "cannot open '" + path + "'"};
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
    EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr);
    char buf[8192];
    while (f.read(buf, sizeof buf) || f.gcount() > 0) EVP_DigestUpdate(ctx.get(), buf, static_cast<std::size_t>(f.gcount()));
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx.get(), digest, &len);
    std::ostringstream hex;
    for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
    return hex.str();
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text)) throw Failure{HG_IO_ERROR, "cannot write '" + path + "'"};
}

int exit_code_for(hg_status s) {
    return (s == HG_BUDGET_EXCEEDED || s == HG_CAP_EXCEEDED) ? kExitBudget : kExitInput;
}

hg_graphification graph_kind(const std::string& name) {
    if (name == "clique") return HG_GRAPH_CLIQUE;
    if (name == "line") return HG_GRAPH_LINE;
    if (name == "node-affinity") return HG_GRAPH_NODE_AFFINITY;
    if (name == "edge-affinity") return HG_GRAPH_EDGE_AFFINITY;
    return HG_GRAPH_BIPARTITE;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hypernetwork distances, invariants and Dowker persistence"};
    app.require_subcommand(1);

    std::string out_path, svg_path;
    std::uint64_t seed = 0;
    double budget = 0;
    bool no_timings = false;
    app.add_option("--out", out_path, "Write the report here instead of stdout");
    app.add_option("--seed", seed, "Seed for randomized search (default 0)");
    app.add_option("--budget", budget, "Search budget for exact solvers (default 1e8 or HYPERGH_BUDGET)");
    app.add_flag("--no-timings", no_timings, "Omit wall-clock timings from the report");

    std::vector<std::string> files;

    auto* dist = app.add_subcommand("dist", "Hypernetwork or network distance");
    bool exact = false, network = false, upper = false;
    unsigned restarts = 8;
    dist->add_flag("--exact", exact, "Exact branch-and-bound search (default)");
    dist->add_flag("--network", network, "Treat both inputs as networks and compute d_N");
    dist->add_flag("--upper", upper, "Local-search upper bound instead of the exact value");
    dist->add_option("--restarts", restarts, "Restarts for --upper");
    dist->add_option("files", files, "Two input files")->required()->expected(2);

    auto* weakiso = app.add_subcommand("weakiso", "Weak isomorphism test");
    weakiso->add_option("files", files, "Two input files")->required()->expected(2);

    auto* graphify = app.add_subcommand("graphify", "Graphification of a hypernetwork");
    std::string kind;
    graphify->add_option("kind", kind, "bipartite|clique|line|node-affinity|edge-affinity|slhc")
        ->required()
        ->check(CLI::IsMember({"bipartite", "clique", "line", "node-affinity", "edge-affinity", "slhc"}));
    graphify->add_option("files", files, "Input file")->required()->expected(1);

    auto* invariants = app.add_subcommand("invariants", "Weak-isomorphism invariants");
    invariants->add_option("files", files, "Input file")->required()->expected(1);

    auto* bounds = app.add_subcommand("bounds", "Lower bounds on the hypernetwork distance");
    bounds->add_option("files", files, "Two input files")->required()->expected(2);

    auto* dowker = app.add_subcommand("dowker", "Dowker filtrations and persistence");
    std::string action, axis_name = "node";
    std::size_t k = 0, max_dim = 2;
    dowker->add_option("action", action, "filtration|barcode|bottleneck|bound")
        ->required()
        ->check(CLI::IsMember({"filtration", "barcode", "bottleneck", "bound"}));
    dowker->add_option("--k", k, "Largest homology degree (default 0)");
    dowker->add_option("--axis", axis_name, "node|edge")->check(CLI::IsMember({"node", "edge"}));
    dowker->add_option("--max-dim", max_dim, "Largest simplex dimension for 'filtration' (default 2)");
    dowker->add_option("files", files, "Input file(s)")->required()->expected(1, 2);

    auto* haus = app.add_subcommand("haus", "Hausdorff map on subsets");
    bool haus_network = false;
    std::size_t cap = 0;
    haus->add_flag("--network", haus_network, "Input is a network");
    haus->add_option("--cap", cap, "Size cap (default 16 for |X|+|Y|, 12 for networks)");
    haus->add_option("files", files, "Input file")->required()->expected(1);

    auto* nncc = app.add_subcommand("nncc", "Non-negative cross curvature check");
    double tol = 0.0;
    nncc->add_option("--tol", tol, "Slack in the defining inequality (default 0)")->check(CLI::NonNegativeNumber);
    nncc->add_option("files", files, "Input file")->required()->expected(1);

    for (auto* sub : {dist, weakiso, graphify, invariants, bounds, dowker, haus, nncc}) {
        sub->add_option("--out", out_path, "Write the report here instead of stdout");
        sub->add_option("--svg", svg_path, "Also write an SVG rendering (barcode, dendrogram)");
        sub->add_option("--seed", seed, "Seed for randomized search");
        sub->add_option("--budget", budget, "Search budget for exact solvers");
        sub->add_flag("--no-timings", no_timings, "Omit wall-clock timings");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    const CLI::App* sub = app.get_subcommands().front();
    if (sub == dowker) {
        const std::size_t want = (action == "bottleneck" || action == "bound") ? 2 : 1;
        if (files.size() != want) {
            std::cerr << "dowker " << action << " takes " << want << " input file(s)\n";
            return kExitUsage;
        }
    }
    const auto start = std::chrono::steady_clock::now();
    json report;
    json command = {{"subcommand", sub->get_name()}, {"argv", json::array()}};
    for (int i = 1; i < argc; ++i) command["argv"].push_back(argv[i]);
    report["command"] = command;

    try {
        json inputs = json::array();
        for (const auto& f : files) inputs.push_back({{"path", f}, {"sha256", sha256_file(f)}});
        report["inputs"] = inputs;
        json result;
        std::string svg;

        if (sub == dist) {
            double value = 0;
            char* witness = nullptr;
            if (network) {
                auto a = load_network(files[0]);
                auto b = load_network(files[1]);
                check(hg_exact_dn(a.get(), b.get(), budget, &value, &witness));
                result = {{"method", "exact_network"}};
            } else if (upper) {
                auto a = load_hyper(files[0]);
                auto b = load_hyper(files[1]);
                check(hg_upper_bound_dh(a.get(), b.get(), restarts, seed, &value, &witness));
                result = {{"method", "upper_bound"}, {"seed", seed}, {"restarts", restarts}};
            } else {
                auto a = load_hyper(files[0]);
                auto b = load_hyper(files[1]);
                check(hg_exact_dh(a.get(), b.get(), budget, &value, &witness));
                result = {{"method", "exact"}};
            }
            result["value"] = value;
            result["witness"] = take_json(witness);
        } else if (sub == weakiso) {
            auto a = load_hyper(files[0]);
            auto b = load_hyper(files[1]);
            int weak = 0, strong = 0;
            check(hg_is_weakly_isomorphic(a.get(), b.get(), budget, &weak));
            check(hg_is_strongly_isomorphic(a.get(), b.get(), &strong));
            result = {{"weakly_isomorphic", weak != 0}, {"strongly_isomorphic", strong != 0}};
        } else if (sub == graphify) {
            if (kind == "slhc") {
                auto n = load_network(files[0]);
                hg_network* u = nullptr;
                check(hg_slhc_ultrametric(n.get(), &u));
                Net owned(u);
                char* text = nullptr;
                check(hg_network_to_json(owned.get(), &text));
                result = {{"kind", kind}, {"network", take_json(text)}};
            } else {
                auto h = load_hyper(files[0]);
                char* text = nullptr;
                check(hg_graphify(h.get(), graph_kind(kind), &text));
                result = {{"kind", kind}, {"network", take_json(text)}};
                if (kind == "node-affinity" || kind == "edge-affinity") {
                    hg_network* g = nullptr;
                    check(hg_graphify_network(h.get(), graph_kind(kind), &g));
                    Net owned(g);
                    char* tree = nullptr;
                    check(hg_dendrogram_json(owned.get(), &tree));
                    result["dendrogram"] = take_json(tree);
                    if (!svg_path.empty()) {
                        char* drawing = nullptr;
                        check(hg_dendrogram_svg(owned.get(), &drawing));
                        svg = take_string(drawing);
                    }
                }
            }
        } else if (sub == invariants) {
            auto h = load_hyper(files[0]);
            char* text = nullptr;
            check(hg_invariants_json(h.get(), &text));
            result = take_json(text);
        } else if (sub == bounds) {
            auto a = load_hyper(files[0]);
            auto b = load_hyper(files[1]);
            char* text = nullptr;
            check(hg_lower_bounds_json(a.get(), b.get(), &text));
            result = take_json(text);
        } else if (sub == dowker) {
            const hg_axis axis = axis_name == "edge" ? HG_AXIS_EDGE : HG_AXIS_NODE;
            auto a = load_hyper(files[0]);
            result = {{"action", action}, {"axis", axis_name}, {"k", k}};
            if (action == "filtration") {
                char* text = nullptr;
                check(hg_dowker_filtration_json(a.get(), axis, max_dim, &text));
                result["filtration"] = take_json(text);
            } else if (action == "barcode") {
                char* text = nullptr;
                check(hg_dowker_barcode_json(a.get(), axis, k, &text));
                result["barcode"] = take_json(text);
                if (!svg_path.empty()) {
                    char* drawing = nullptr;
                    check(hg_dowker_barcode_svg(a.get(), axis, k, &drawing));
                    svg = take_string(drawing);
                }
            } else {
                auto b = load_hyper(files[1]);
                double value = 0;
                if (action == "bottleneck") {
                    check(hg_dowker_bottleneck(a.get(), b.get(), axis, k, &value));
                } else {
                    check(hg_dowker_bound(a.get(), b.get(), k, &value));
                }
                result["value"] = number(value);
            }
        } else if (sub == haus) {
            char* text = nullptr;
            if (haus_network) {
                auto n = load_network(files[0]);
                hg_network* lifted = nullptr;
                check(hg_hausdorff_network(n.get(), cap, &lifted));
                Net owned(lifted);
                check(hg_network_to_json(owned.get(), &text));
            } else {
                auto h = load_hyper(files[0]);
                hg_hypernetwork* lifted = nullptr;
                check(hg_hausdorff_hyper(h.get(), cap, &lifted));
                Hyper owned(lifted);
                check(hg_hypernetwork_to_json(owned.get(), &text));
            }
            result = {{"hausdorff", take_json(text)}};
        } else if (sub == nncc) {
            auto h = load_hyper(files[0]);
            int holds = 0;
            char* text = nullptr;
            check(hg_nncc_check(h.get(), tol, &holds, &text));
            result = take_json(text);
            result["tol"] = tol;
        }

        report["results"] = result;
        if (!svg_path.empty()) {
            if (svg.empty()) {
                std::cerr << "--svg applies to 'dowker barcode' and affinity graphifications\n";
                return kExitUsage;
            }
            write_text(svg_path, svg);
            report["svg"] = svg_path;
        }
    } catch (const Failure& f) {
        std::cerr << "error: " << hg_status_string(f.status) << ": " << f.message << "\n";
        return exit_code_for(f.status);
    }

    if (!no_timings) {
        report["timings"] = {
            {"wall_seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()}};
    }
    const std::string text = report.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        try {
            write_text(out_path, text);
        } catch (const Failure& f) {
            std::cerr << "error: " << f.message << "\n";
            return kExitInput;
        }
    }
    return kExitOk;
}
