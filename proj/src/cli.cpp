#include "vog/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "vog/assembler.hpp"
#include "vog/decomposition.hpp"
#include "vog/generators.hpp"
#include "vog/graph.hpp"
#include "vog/labeler.hpp"
#include "vog/model_io.hpp"

namespace vog {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitData = 3;

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open input file '" + path + "'");
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open output file '" + path + "'");
    return out;
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("VOG_SEED")) {
        try {
            return std::stoull(env);
        } catch (...) {
            throw IoError("VOG_SEED is not a number");
        }
    }
    return 0;
}

std::vector<Heuristic> parse_heuristics(const std::string& spec, std::size_t gnf_cap) {
    std::vector<Heuristic> out;
    std::stringstream ss(spec);
    std::string name;
    while (std::getline(ss, name, ',')) {
        if (name.empty()) continue;
        if (name == "plain") {
            out.push_back(Heuristic::plain());
        } else if (name == "gnf") {
            out.push_back(Heuristic::greedy_n_forget(gnf_cap));
        } else if (name.rfind("top", 0) == 0) {
            std::size_t k = std::stoull(name.substr(3));
            if (k < 1) throw ValidationError("top-k needs k >= 1");
            out.push_back(Heuristic::top_k(k));
        } else {
            throw ValidationError("unknown heuristic '" + name + "' (expected plain, topN, gnf)");
        }
    }
    if (out.empty()) throw ValidationError("no heuristics selected");
    return out;
}

struct CommonGraphOpts {
    std::string input;
    bool one_based = false;
    bool keep_isolated = false;

    void attach(CLI::App* cmd) {
        cmd->add_option("--input", input, "edge list file")->required();
        cmd->add_flag("--one-based", one_based, "treat labels as 1-based integers");
        cmd->add_flag("--keep-isolated", keep_isolated, "keep nodes that only appear in self-loops");
    }

    Graph load() const {
        auto in = open_input(input);
        return Graph::load_edge_list(in, LoadOptions{one_based, keep_isolated});
    }
};

void print_summary_line(std::ostream& os, const SummaryResult& r) {
    os << "heuristic=" << r.heuristic.name() << " ratio=" << r.report.ratio()
       << " total_bits=" << r.report.total_bits << " baseline_bits=" << r.report.baseline_bits
       << " structures=" << r.model.size();
    for (std::size_t t = 0; t < kVocabularySize; ++t)
        if (r.report.type_counts[t] > 0)
            os << ' ' << type_code(static_cast<StructureType>(t)) << '=' << r.report.type_counts[t];
    os << " unexplained=" << r.report.unexplained_edge_fraction << '\n';
}

int cmd_summarize(CLI::App& app) {
    CommonGraphOpts graph_opts;
    auto* cmd = app.add_subcommand("summarize", "decompose, label and assemble a graph summary");
    graph_opts.attach(cmd);
    std::string candidates_path, output_model, output_report;
    std::string heuristics_spec = "plain,top10,top100,gnf";
    SlashburnParams sb;
    LabelParams lp;
    std::size_t gnf_cap = 500, threads = 0;
    bool plain_include_all = false, verbose = false;
    std::uint64_t seed = default_seed();
    cmd->add_option("--candidates", candidates_path, "external candidate file (skips the decomposition)");
    cmd->add_option("--min-size", sb.min_size, "candidate size floor")->capture_default_str();
    cmd->add_option("--k", sb.k, "hubs removed per iteration (0 = 0.5% of n)");
    cmd->add_option("--gcc-stop", sb.gcc_stop, "stop when the giant component is this small (0 = min-size)");
    cmd->add_option("--seed", seed, "RNG seed (or env VOG_SEED)");
    cmd->add_option("--heuristics", heuristics_spec, "comma list: plain, topN, gnf")->capture_default_str();
    cmd->add_option("--gnf-cap", gnf_cap, "candidates considered by gnf")->capture_default_str();
    cmd->add_option("--output-model", output_model, "write the chosen model here");
    cmd->add_option("--output-report", output_report, "write the cost report here");
    cmd->add_option("--threads", threads, "labeling threads (0 = hardware)");
    cmd->add_flag("--plain-include-all", plain_include_all, "plain/top-k keep non-beneficial candidates too");
    cmd->add_flag("-v,--verbose", verbose, "per-stage progress on stderr");

    cmd->callback([=]() {
        Graph g = graph_opts.load();
        if (verbose)
            std::cerr << "loaded n=" << g.node_count() << " m=" << g.edge_count() << '\n';

        CandidateSet cands;
        if (!candidates_path.empty()) {
            auto in = open_input(candidates_path);
            cands = load_external_candidates(in, g, sb.min_size);
        } else {
            cands = slashburn_decompose(g, sb);
        }
        if (verbose) std::cerr << "candidates: " << cands.size() << '\n';

        LabelParams params = lp;
        params.seed = seed;
        auto labeled = label_all(g, cands, params, threads);
        if (verbose) std::cerr << "labeled: " << labeled.size() << '\n';

        AssemblyOptions opts;
        opts.plain_include_all = plain_include_all;
        auto heuristics = parse_heuristics(heuristics_spec, gnf_cap);
        auto results = run_heuristics(g, labeled, heuristics, opts);
        std::size_t best = best_result_index(results);

        if (!output_model.empty()) {
            auto out = open_output(output_model);
            write_model(out, results[best].model, g);
        }
        if (!output_report.empty()) {
            auto out = open_output(output_report);
            out << report_to_json(g, results, best);
        }
        print_summary_line(std::cout, results[best]);
    });
    return kExitOk;
}

int cmd_decompose(CLI::App& app) {
    CommonGraphOpts graph_opts;
    auto* cmd = app.add_subcommand("decompose", "emit candidate subgraphs via hub removal");
    graph_opts.attach(cmd);
    SlashburnParams sb;
    std::string output;
    cmd->add_option("--k", sb.k, "hubs removed per iteration (0 = 0.5% of n)");
    cmd->add_option("--min-size", sb.min_size, "candidate size floor")->capture_default_str();
    cmd->add_option("--gcc-stop", sb.gcc_stop, "stop when the giant component is this small (0 = min-size)");
    cmd->add_option("--output", output, "candidate file, one per line")->required();

    cmd->callback([=]() {
        Graph g = graph_opts.load();
        CandidateSet cands = slashburn_decompose(g, sb);
        auto out = open_output(output);
        write_candidates(out, cands, g);
        std::cout << "candidates=" << cands.size() << '\n';
    });
    return kExitOk;
}

int cmd_label(CLI::App& app) {
    CommonGraphOpts graph_opts;
    auto* cmd = app.add_subcommand("label", "assign vocabulary types to candidate subgraphs");
    graph_opts.attach(cmd);
    std::string candidates_path, output;
    std::size_t min_size = 2, threads = 0;
    std::uint64_t seed = default_seed();
    cmd->add_option("--candidates", candidates_path, "candidate file")->required();
    cmd->add_option("--min-size", min_size, "candidate size floor")->capture_default_str();
    cmd->add_option("--seed", seed, "RNG seed (or env VOG_SEED)");
    cmd->add_option("--threads", threads, "labeling threads (0 = hardware)");
    cmd->add_option("--output", output, "labeled structures, model format, benefit-ranked")->required();

    cmd->callback([=]() {
        Graph g = graph_opts.load();
        auto in = open_input(candidates_path);
        CandidateSet cands = load_external_candidates(in, g, min_size);
        LabelParams params;
        params.seed = seed;
        auto labeled = rank_candidates(label_all(g, cands, params, threads));
        Model m;
        for (auto& c : labeled) m.structures.push_back(std::move(c.structure));
        auto out = open_output(output);
        write_model(out, m, g);
        std::cout << "labeled=" << m.size() << '\n';
    });
    return kExitOk;
}

int cmd_cost(CLI::App& app) {
    CommonGraphOpts graph_opts;
    auto* cmd = app.add_subcommand("cost", "recompute the encoded cost of a model, verbatim");
    graph_opts.attach(cmd);
    std::string model_path, output_report;
    cmd->add_option("--model", model_path, "model file")->required();
    cmd->add_option("--output-report", output_report, "write the cost report here");

    cmd->callback([=]() {
        Graph g = graph_opts.load();
        auto in = open_input(model_path);
        Model m = read_model(in, g);
        CostReport report = total_cost(g, m);
        std::string json = report_to_json(g, report);
        if (!output_report.empty()) {
            auto out = open_output(output_report);
            out << json;
        }
        std::cout << json;
    });
    return kExitOk;
}

int cmd_generate(CLI::App& app) {
    auto* cmd = app.add_subcommand("generate", "write a synthetic edge list");
    std::string kind, output, structure = "fc";
    std::size_t n = 1000, size = 20, size_b = 0, attach = 4;
    double p = 0.01, noise_p = 0.01;
    std::uint64_t seed = default_seed();
    std::size_t clique_a = 42, clique_b = 110, star_big = 601, star_small = 90;
    cmd->add_option("--kind", kind, "cavemen | er | planted | powerlaw")->required();
    cmd->add_option("--output", output, "edge list file")->required();
    cmd->add_option("--n", n, "node count (er, planted, powerlaw)");
    cmd->add_option("--p", p, "edge probability (er)");
    cmd->add_option("--seed", seed, "RNG seed (or env VOG_SEED)");
    cmd->add_option("--structure", structure, "planted type: fc st fb ch");
    cmd->add_option("--size", size, "planted size (spokes for st, side A for fb)");
    cmd->add_option("--size-b", size_b, "planted side B (fb)");
    cmd->add_option("--noise-p", noise_p, "background density (planted)");
    cmd->add_option("--attach", attach, "edges per new node (powerlaw)");
    cmd->add_option("--clique-a", clique_a, "cavemen: first clique size");
    cmd->add_option("--clique-b", clique_b, "cavemen: second clique size");
    cmd->add_option("--star-big", star_big, "cavemen: big star spoke count");
    cmd->add_option("--star-small", star_small, "cavemen: small star spoke count");

    cmd->callback([=]() {
        Graph g;
        if (kind == "cavemen") {
            g = generate_cavemen(clique_a, clique_b, star_big, star_small).graph;
        } else if (kind == "er") {
            g = generate_er(n, p, seed);
        } else if (kind == "planted") {
            std::size_t b = size_b > 0 ? size_b : size;
            g = generate_planted(type_from_code(structure), size, b, n, noise_p, seed).graph;
        } else if (kind == "powerlaw") {
            g = generate_powerlaw(n, attach, seed);
        } else {
            throw ValidationError("unknown kind '" + kind + "'");
        }
        auto out = open_output(output);
        g.save_edge_list(out);
        std::cout << "n=" << g.node_count() << " m=" << g.edge_count() << '\n';
    });
    return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"vocabulary-based graph summarization"};
    app.require_subcommand(1);
    cmd_summarize(app);
    cmd_decompose(app);
    cmd_label(app);
    cmd_cost(app);
    cmd_generate(app);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    }
    return kExitOk;
}

} // namespace vog
