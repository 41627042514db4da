// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Runs the full verification roster (seeded random graphs plus the
// closed-form families), the walkthrough trace, the delay and invariant
// checks, the count bound, the relative-performance run, and sink abort.

#include "kdelta/baselines.hpp"
#include "kdelta/enumerate.hpp"
#include "kdelta/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

using namespace kdelta;

namespace {

int failures = 0;

void report(int criterion, const std::string &what, bool ok,
            const std::string &detail = "") {
    std::printf("%s criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", criterion,
                what.c_str(), detail.empty() ? "" : " — ", detail.c_str());
    if (!ok)
        ++failures;
}

Graph sample_graph() {
    return Graph(6, {{0, 1}, {1, 2}, {1, 5}, {2, 3}, {2, 4}, {3, 4}, {4, 5}, {3, 5}});
}

struct Roster {
    std::vector<std::pair<std::string, Graph>> graphs;
};

Roster build_roster() {
    Roster r;
    const double ps[] = {0.2, 0.4, 0.7};
    for (int i = 0; i < 200; ++i) {
        VertexId n = 4 + (i % 9); // 4..12
        double p = ps[i % 3];
        r.graphs.emplace_back("random n=" + std::to_string(n) +
                                  " p=" + std::to_string(p) +
                                  " seed=" + std::to_string(i),
                              generate_random(n, p, static_cast<std::uint64_t>(i)));
    }
    for (VertexId n = 1; n <= 12; ++n)
        r.graphs.emplace_back("path " + std::to_string(n), generate_path(n));
    for (VertexId n = 3; n <= 12; ++n)
        r.graphs.emplace_back("cycle " + std::to_string(n), generate_cycle(n));
    for (VertexId m = 1; m <= 11; ++m)
        r.graphs.emplace_back("star " + std::to_string(m), generate_star(m));
    for (VertexId n = 1; n <= 12; ++n)
        r.graphs.emplace_back("clique " + std::to_string(n), generate_clique(n));
    return r;
}

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
    if (k > n)
        return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

std::uint64_t count_solutions(const Graph &g, int k) {
    return enumerate_k_subgraphs(g, k, [](std::span<const VertexId>, std::uint64_t) {
               return true;
           }).solutions;
}

} // namespace

int main() {
    // ---- criteria 1, 4, 5, 6 share the roster sweep -------------------------
    Roster roster = build_roster();
    std::string c1_detail, c4_detail, c5_detail, c6_detail;
    std::size_t compared = 0;
    bool c1_ok = true, c4_ok = true, c5_ok = true, c6_ok = true;

    for (const auto &[name, g] : roster.graphs) {
        VertexId n = g.num_vertices();
        VertexId delta = n > 0 ? max_degree(g) : 0;
        for (int k = 1; k <= n; ++k) {
            std::vector<std::vector<VertexId>> raw;
            EnumerationStats stats;
            EnumerateOptions opts;
            opts.diagnostics = true;
            try {
                stats = enumerate_k_subgraphs(
                    g, k,
                    [&](std::span<const VertexId> sol, std::uint64_t) {
                        raw.emplace_back(sol.begin(), sol.end());
                        return true;
                    },
                    opts);
            } catch (const std::logic_error &e) {
                if (c5_ok)
                    c5_detail = name + " k=" + std::to_string(k) + ": " + e.what();
                c5_ok = false;
                continue;
            }

            // zero duplicate emissions + canonical comparison
            std::set<std::vector<VertexId>> unique_sets;
            for (auto &s : raw) {
                std::sort(s.begin(), s.end());
                if (!unique_sets.insert(s).second && c1_ok) {
                    c1_ok = false;
                    c1_detail = "duplicate emission on " + name + " k=" + std::to_string(k);
                }
            }
            CanonicalSolutionSet kd(unique_sets.begin(), unique_sets.end());
            auto oracle = brute_force_enumerate(g, k);
            auto simple = collect_canonical(g, k, Algorithm::simple);
            ++compared;
            if ((kd != oracle || simple != oracle) && c1_ok) {
                c1_ok = false;
                c1_detail = "mismatch on " + name + " k=" + std::to_string(k);
            }

            // delay bound: at most k calls between outputs; every top-level call
            // is productive
            if (stats.solutions > 0 &&
                stats.max_calls_between_outputs > static_cast<std::uint64_t>(k) &&
                c4_ok) {
                c4_ok = false;
                c4_detail = name + " k=" + std::to_string(k) + ": " +
                            std::to_string(stats.max_calls_between_outputs) +
                            " calls between outputs";
            }
            if (stats.unproductive_top_level_calls > 0 && c4_ok) {
                c4_ok = false;
                c4_detail = name + " k=" + std::to_string(k) +
                            ": unproductive top-level call";
            }

            // count bound, delta >= 2 only (the formula divides by delta-1)
            if (delta >= 2) {
                double bound = count_upper_bound(
                    static_cast<std::uint64_t>(n),
                    static_cast<std::uint64_t>(delta),
                    static_cast<std::uint64_t>(k));
                if (static_cast<double>(oracle.size()) > bound && c6_ok) {
                    c6_ok = false;
                    c6_detail = name + " k=" + std::to_string(k) + ": count " +
                                std::to_string(oracle.size()) + " > bound " +
                                std::to_string(bound);
                }
            }
        }
    }
    report(1, "oracle equivalence across kdelta/simple/brute", c1_ok,
           c1_ok ? std::to_string(compared) + " (graph,k) cells, exact match"
                 : c1_detail);

    // ---- criterion 2: closed-form counts ------------------------------------
    bool c2_ok = true;
    std::string c2_detail;
    auto expect = [&](const Graph &g, int k, std::uint64_t want,
                      const std::string &what) {
        auto got = count_solutions(g, k);
        if (got != want && c2_ok) {
            c2_ok = false;
            c2_detail = what + " k=" + std::to_string(k) + ": got " +
                        std::to_string(got) + ", want " + std::to_string(want);
        }
    };
    for (VertexId n = 1; n <= 12; ++n)
        for (int k = 1; k <= n; ++k)
            expect(generate_path(n), k, static_cast<std::uint64_t>(n - k + 1),
                   "path " + std::to_string(n));
    for (VertexId n = 3; n <= 12; ++n)
        for (int k = 1; k <= n; ++k)
            expect(generate_cycle(n), k,
                   k < n ? static_cast<std::uint64_t>(n) : 1,
                   "cycle " + std::to_string(n));
    for (VertexId n = 1; n <= 12; ++n)
        for (int k = 1; k <= n; ++k)
            expect(generate_clique(n), k,
                   binom(static_cast<std::uint64_t>(n),
                         static_cast<std::uint64_t>(k)),
                   "clique " + std::to_string(n));
    for (VertexId m = 1; m <= 11; ++m)
        for (int k = 2; k <= m + 1; ++k)
            expect(generate_star(m), k,
                   binom(static_cast<std::uint64_t>(m),
                         static_cast<std::uint64_t>(k - 1)),
                   "star " + std::to_string(m));
    report(2, "closed-form counts on paths/cycles/cliques/stars", c2_ok,
           c2_ok ? "exact for all n,m <= 12" : c2_detail);

    // ---- criterion 3: walkthrough golden trace ------------------------------
    {
        bool ok = true;
        std::string detail;
        Graph g = sample_graph();
        std::vector<TopLevelCall> calls;
        EnumerateOptions opts;
        opts.top_level_observer = [&](const TopLevelCall &c) { calls.push_back(c); };
        std::uint64_t solutions = 0;
        auto order = dfs_discovery_order(g, connected_components(g)[0]);
        if (order != std::vector<VertexId>{0, 1, 2, 3, 4, 5}) {
            ok = false;
            detail = "unexpected DFS order";
        }
        enumerate_k_subgraphs(g, 5,
                              [&](std::span<const VertexId>, std::uint64_t) {
                                  ++solutions;
                                  return true;
                              },
                              opts);
        if (solutions != 5) {
            ok = false;
            detail = "expected 5 solutions, got " + std::to_string(solutions);
        }
        if (calls.size() != 2 ||
            calls[0].s != std::vector<VertexId>{5} || !calls[0].n.empty() ||
            calls[0].f != std::vector<VertexId>{1, 3, 4} ||
            calls[0].open_count != 3 ||
            calls[1].s != std::vector<VertexId>{4} || !calls[1].n.empty() ||
            calls[1].f != std::vector<VertexId>{5, 2, 3} ||
            calls[1].open_count != 2) {
            ok = false;
            detail = "top-level call arguments diverge from the walkthrough";
        }
        report(3, "case-study golden trace (k=5, two top-level calls)", ok, detail);
    }

    report(4, "delay bound: <= k calls between outputs, productive top-level calls",
           c4_ok, c4_detail);
    report(5, "state-machine invariants under diagnostics", c5_ok, c5_detail);
    report(6, "count upper bound n(e*delta)^k/((delta-1)k)", c6_ok, c6_detail);

    // ---- criterion 7: relative performance at desk scale --------------------
    {
        Graph g = generate_random(300, 0.03, 12345);
        auto discard = [](std::span<const VertexId>, std::uint64_t) { return true; };
        // best of three per algorithm to damp scheduler noise
        auto kd = enumerate_k_subgraphs(g, 4, discard);
        auto sp = simple_enumerate(g, 4, discard);
        for (int rep = 0; rep < 2; ++rep) {
            auto kd2 = enumerate_k_subgraphs(g, 4, discard);
            if (kd2.wall_seconds < kd.wall_seconds)
                kd = kd2;
            auto sp2 = simple_enumerate(g, 4, discard);
            if (sp2.wall_seconds < sp.wall_seconds)
                sp = sp2;
        }
        bool ok = kd.solutions == sp.solutions &&
                  kd.wall_seconds <= 1.5 * sp.wall_seconds;
        char detail[160];
        std::snprintf(detail, sizeof(detail),
                      "%llu solutions; kdelta %.3fs vs simple %.3fs (speedup %.2fx)",
                      static_cast<unsigned long long>(kd.solutions),
                      kd.wall_seconds, sp.wall_seconds,
                      sp.wall_seconds / kd.wall_seconds);
        report(7, "kdelta wall time <= 1.5x simple (n=300, p=0.03, k=4)", ok,
               detail);
    }

    // ---- criterion 8: streaming abort ---------------------------------------
    {
        Graph g = generate_clique(12); // roster graph with >= 10 solutions
        std::uint64_t emissions = 0;
        auto stats = enumerate_k_subgraphs(
            g, 3, [&](std::span<const VertexId>, std::uint64_t) {
                return ++emissions < 10;
            });
        bool ok = emissions == 10 && stats.solutions == 10 && stats.aborted;
        report(8, "sink abort after 10 solutions stops the run", ok,
               "emitted " + std::to_string(emissions));
    }

    if (failures)
        std::printf("%d criterion(s) FAILED\n", failures);
    else
        std::printf("all acceptance criteria passed\n");
    return failures ? 1 : 0;
}
