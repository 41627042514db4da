#include "kdelta/baselines.hpp"
#include "kdelta/enumerate.hpp"
#include "kdelta/graph.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using kdelta::Graph;
using kdelta::VertexId;

constexpr int kExitError = 1;
constexpr int kExitVerifyFailed = 2;
constexpr int kExitTimeLimit = 3;

struct InputOptions {
    std::string path;
    std::string gen_spec;
    std::string format = "auto";
};

void add_input_flags(CLI::App *cmd, InputOptions &in) {
    auto *file = cmd->add_option("-i,--input", in.path, "graph file to read");
    auto *gen = cmd->add_option(
        "--gen", in.gen_spec,
        "generator spec: 'path N', 'cycle N', 'star N', 'clique N', "
        "'random N P SEED'");
    cmd->add_option("--format", in.format, "input format")
        ->check(CLI::IsMember({"auto", "edge_list", "matrix_market"}));
    file->excludes(gen);
}

Graph load_input(const InputOptions &in) {
    if (!in.gen_spec.empty())
        return kdelta::generate_graph(in.gen_spec);
    if (in.path.empty())
        throw std::runtime_error("one of --input or --gen is required");
    kdelta::GraphFormat fmt = kdelta::GraphFormat::auto_detect;
    if (in.format == "edge_list")
        fmt = kdelta::GraphFormat::edge_list;
    else if (in.format == "matrix_market")
        fmt = kdelta::GraphFormat::matrix_market;
    return kdelta::load_graph(in.path, fmt);
}

std::string input_name(const InputOptions &in) {
    if (!in.gen_spec.empty()) {
        std::string name = in.gen_spec;
        std::replace(name.begin(), name.end(), ' ', '_');
        return name;
    }
    auto slash = in.path.find_last_of("/\\");
    return slash == std::string::npos ? in.path : in.path.substr(slash + 1);
}

// "4" or "2..6"
std::vector<int> parse_k_range(const std::string &spec) {
    auto dots = spec.find("..");
    int lo, hi;
    if (dots == std::string::npos) {
        lo = hi = std::stoi(spec);
    } else {
        lo = std::stoi(spec.substr(0, dots));
        hi = std::stoi(spec.substr(dots + 2));
    }
    if (lo < 1 || hi < lo)
        throw std::runtime_error("invalid k range: " + spec);
    std::vector<int> ks;
    for (int k = lo; k <= hi; ++k)
        ks.push_back(k);
    return ks;
}

// Sorts a solution's labels ascending: numerically when every label in the
// graph parses as an integer, lexicographically otherwise.
struct LabelPrinter {
    const Graph &g;
    bool numeric = true;

    explicit LabelPrinter(const Graph &graph) : g(graph) {
        for (const auto &lab : g.labels()) {
            try {
                std::size_t pos = 0;
                (void)std::stoll(lab, &pos);
                if (pos != lab.size())
                    numeric = false;
            } catch (const std::exception &) {
                numeric = false;
            }
            if (!numeric)
                break;
        }
    }

    std::string line(std::span<const VertexId> sol) const {
        std::vector<std::string> labs;
        labs.reserve(sol.size());
        for (VertexId v : sol)
            labs.push_back(g.label(v));
        if (numeric)
            std::sort(labs.begin(), labs.end(),
                      [](const std::string &a, const std::string &b) {
                          return std::stoll(a) < std::stoll(b);
                      });
        else
            std::sort(labs.begin(), labs.end());
        std::string out;
        for (std::size_t i = 0; i < labs.size(); ++i) {
            if (i)
                out += ' ';
            out += labs[i];
        }
        return out;
    }
};

struct BenchRecord {
    std::string graph;
    VertexId n;
    std::size_t edges;
    VertexId max_degree;
    int k;
    std::string algorithm;
    std::uint64_t solutions;
    double wall_seconds;
    double max_delay_seconds;
    std::uint64_t max_calls_between_outputs;
    bool completed;
};

nlohmann::json to_json(const BenchRecord &r) {
    return {{"graph", r.graph},
            {"n", r.n},
            {"edges", r.edges},
            {"max_degree", r.max_degree},
            {"k", r.k},
            {"algorithm", r.algorithm},
            {"solutions", r.solutions},
            {"wall_seconds", r.wall_seconds},
            {"max_delay_seconds", r.max_delay_seconds},
            {"max_calls_between_outputs", r.max_calls_between_outputs},
            {"completed", r.completed}};
}

std::string to_tsv(const BenchRecord &r) {
    char buf[512];
    std::snprintf(buf, sizeof(buf), "%s\t%d\t%zu\t%d\t%d\t%s\t%llu\t%.6f\t%.6f\t%llu\t%d",
                  r.graph.c_str(), r.n, r.edges, r.max_degree, r.k,
                  r.algorithm.c_str(),
                  static_cast<unsigned long long>(r.solutions), r.wall_seconds,
                  r.max_delay_seconds,
                  static_cast<unsigned long long>(r.max_calls_between_outputs),
                  r.completed ? 1 : 0);
    return buf;
}

int cmd_enumerate(const InputOptions &in, int k, const std::string &out_path) {
    Graph g = load_input(in);
    LabelPrinter printer(g);
    std::ofstream file;
    std::ostream *out = &std::cout;
    if (!out_path.empty() && out_path != "-") {
        file.open(out_path);
        if (!file)
            throw std::runtime_error("cannot open output file: " + out_path);
        out = &file;
    }
    kdelta::enumerate_k_subgraphs(
        g, k, [&](std::span<const VertexId> sol, std::uint64_t) {
            *out << printer.line(sol) << '\n';
            return true;
        });
    return 0;
}

int cmd_count(const InputOptions &in, int k) {
    Graph g = load_input(in);
    auto stats = kdelta::enumerate_k_subgraphs(
        g, k, [](std::span<const VertexId>, std::uint64_t) { return true; });
    std::cout << stats.solutions << '\n';
    return 0;
}

int cmd_verify(const InputOptions &in, const std::string &k_spec,
               std::uint64_t cap) {
    Graph g = load_input(in);
    bool ok = true;
    for (int k : parse_k_range(k_spec)) {
        if (k > g.num_vertices())
            continue;
        auto oracle = kdelta::brute_force_enumerate(g, k, cap);
        for (auto algo : {kdelta::Algorithm::kdelta, kdelta::Algorithm::simple}) {
            const char *name = algo == kdelta::Algorithm::kdelta ? "kdelta" : "simple";
            auto got = kdelta::collect_canonical(g, k, algo);
            if (got == oracle) {
                std::cout << "PASS k=" << k << " " << name << " (" << got.size()
                          << " solutions)\n";
                continue;
            }
            ok = false;
            std::cout << "FAIL k=" << k << " " << name << ": " << got.size()
                      << " solutions vs oracle " << oracle.size() << "\n";
            auto mismatch =
                std::mismatch(got.begin(), got.end(), oracle.begin(), oracle.end());
            const auto &divergent = mismatch.second != oracle.end()
                                        ? *mismatch.second
                                        : *mismatch.first;
            std::cout << "  first divergent set:";
            for (VertexId v : divergent)
                std::cout << ' ' << g.label(v);
            std::cout << '\n';
        }
    }
    std::cout << (ok ? "VERIFY PASS" : "VERIFY FAIL") << '\n';
    return ok ? 0 : kExitVerifyFailed;
}

int cmd_bench(const InputOptions &in, const std::string &k_spec,
              const std::string &algos_spec, double time_limit,
              bool include_sink_time, const std::string &jsonl_path) {
    Graph g = load_input(in);
    std::string name = input_name(in);
    VertexId delta = kdelta::max_degree(g);

    std::vector<std::string> algos;
    {
        std::string tok;
        std::istringstream iss(algos_spec);
        while (std::getline(iss, tok, ','))
            algos.push_back(tok);
    }
    std::ofstream jsonl;
    if (!jsonl_path.empty()) {
        jsonl.open(jsonl_path);
        if (!jsonl)
            throw std::runtime_error("cannot open jsonl file: " + jsonl_path);
    }

    std::cout << "graph\tn\tedges\tmax_degree\tk\talgorithm\tsolutions\t"
                 "wall_seconds\tmax_delay_seconds\tmax_calls_between_outputs\t"
                 "completed\n";
    bool hit_limit = false;
    for (int k : parse_k_range(k_spec)) {
        for (const auto &algo : algos) {
            BenchRecord rec{name, g.num_vertices(), g.num_edges(), delta,
                            k,    algo,             0,             0.0,
                            0.0,  0,                true};
            auto start = std::chrono::steady_clock::now();
            auto deadline_sink = [&](std::span<const VertexId>, std::uint64_t) {
                auto elapsed = std::chrono::duration<double>(
                                   std::chrono::steady_clock::now() - start)
                                   .count();
                return elapsed < time_limit;
            };
            if (algo == "kdelta") {
                kdelta::EnumerateOptions opts;
                opts.include_sink_time = include_sink_time;
                auto stats = kdelta::enumerate_k_subgraphs(g, k, deadline_sink, opts);
                rec.solutions = stats.solutions;
                rec.wall_seconds = stats.wall_seconds;
                rec.max_delay_seconds = stats.max_delay_seconds;
                rec.max_calls_between_outputs = stats.max_calls_between_outputs;
                rec.completed = !stats.aborted;
            } else if (algo == "simple") {
                auto stats = kdelta::simple_enumerate(g, k, deadline_sink);
                rec.solutions = stats.solutions;
                rec.wall_seconds = stats.wall_seconds;
                rec.max_calls_between_outputs = stats.max_calls_between_outputs;
                rec.completed = !stats.aborted;
            } else if (algo == "brute") {
                auto sets = kdelta::brute_force_enumerate(g, k);
                rec.solutions = sets.size();
                rec.wall_seconds = std::chrono::duration<double>(
                                       std::chrono::steady_clock::now() - start)
                                       .count();
                rec.completed = rec.wall_seconds < time_limit;
            } else {
                throw std::runtime_error("unknown algorithm: " + algo);
            }
            hit_limit = hit_limit || !rec.completed;
            std::cout << to_tsv(rec) << '\n';
            if (jsonl.is_open())
                jsonl << to_json(rec).dump() << '\n';
        }
    }
    return hit_limit ? kExitTimeLimit : 0;
}

int cmd_info(const InputOptions &in, const std::string &k_spec) {
    Graph g = load_input(in);
    VertexId delta = kdelta::max_degree(g);
    std::cout << "graph: " << input_name(in) << '\n'
              << "n: " << g.num_vertices() << '\n'
              << "edges: " << g.num_edges() << '\n'
              << "max_degree: " << delta << '\n'
              << "self_loops_dropped: " << g.self_loops_dropped() << '\n'
              << "duplicate_edges_dropped: " << g.duplicate_edges_dropped() << '\n';
    auto comps = kdelta::connected_components(g);
    std::cout << "components: " << comps.size() << '\n' << "component_sizes:";
    for (const auto &c : comps)
        std::cout << ' ' << c.size();
    std::cout << '\n';
    if (!k_spec.empty()) {
        for (int k : parse_k_range(k_spec))
            std::cout << "count_upper_bound(k=" << k << "): "
                      << kdelta::count_upper_bound(
                             static_cast<std::uint64_t>(g.num_vertices()),
                             static_cast<std::uint64_t>(delta),
                             static_cast<std::uint64_t>(k))
                      << '\n';
    }
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Bounded-delay enumeration of connected induced subgraphs of "
                 "size k"};
    app.require_subcommand(1);

    InputOptions in_enum, in_count, in_verify, in_bench, in_info;
    int k_enum = 0, k_count = 0;
    std::string out_path, k_verify = "1", k_bench = "2..5", k_info;
    std::string algos = "kdelta,simple";
    std::uint64_t cap = 50'000'000;
    double time_limit = 600.0; // seconds
    bool include_sink_time = false;

    auto *enumerate = app.add_subcommand("enumerate", "stream one solution per line");
    add_input_flags(enumerate, in_enum);
    enumerate->add_option("-k,--k", k_enum, "subgraph size")->required();
    enumerate->add_option("-o,--output", out_path, "output file ('-' = stdout)");

    auto *count = app.add_subcommand("count", "print the number of solutions");
    add_input_flags(count, in_count);
    count->add_option("-k,--k", k_count, "subgraph size")->required();

    auto *verify = app.add_subcommand(
        "verify", "check kdelta and simple against the brute-force oracle");
    add_input_flags(verify, in_verify);
    verify->add_option("-k,--k", k_verify, "k or range 'A..B'")->required();
    verify->add_option("--cap", cap, "brute-force subset cap");

    auto *bench = app.add_subcommand("bench", "emit per-(k,algorithm) records");
    add_input_flags(bench, in_bench);
    bench->add_option("-k,--k", k_bench, "k or range 'A..B'");
    bench->add_option("--algo", algos, "comma list of kdelta,simple,brute");
    bench->add_option("--time-limit", time_limit, "seconds per cell")
        ->check(CLI::PositiveNumber);
    bench->add_flag("--include-sink-time", include_sink_time,
                    "count sink time toward measured delay");
    bench->add_option("--jsonl", out_path, "also write JSON-lines records here");

    auto *info = app.add_subcommand("info", "print graph characteristics");
    add_input_flags(info, in_info);
    info->add_option("-k,--k", k_info, "report count_upper_bound for k or 'A..B'");

    CLI11_PARSE(app, argc, argv);

    try {
        if (enumerate->parsed())
            return cmd_enumerate(in_enum, k_enum, out_path);
        if (count->parsed())
            return cmd_count(in_count, k_count);
        if (verify->parsed())
            return cmd_verify(in_verify, k_verify, cap);
        if (bench->parsed())
            return cmd_bench(in_bench, k_bench, algos, time_limit,
                             include_sink_time, out_path);
        if (info->parsed())
            return cmd_info(in_info, k_info);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
