#include "kdelta/baselines.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace kdelta {

CanonicalSolutionSet canonicalize(std::vector<std::vector<VertexId>> sets) {
    for (auto &s : sets)
        std::sort(s.begin(), s.end());
    std::sort(sets.begin(), sets.end());
    if (std::adjacent_find(sets.begin(), sets.end()) != sets.end())
        throw std::logic_error("canonicalize: duplicate solution sets");
    return sets;
}

CanonicalSolutionSet brute_force_enumerate(const Graph &g, int k,
                                           std::uint64_t subset_cap) {
    VertexId n = g.num_vertices();
    if (k < 1 || k > n)
        throw std::invalid_argument("brute_force_enumerate: need 1 <= k <= n");

    // C(n,k) with overflow saturation
    double binom = 1.0;
    for (int i = 1; i <= k; ++i)
        binom = binom * static_cast<double>(n - k + i) / static_cast<double>(i);
    if (binom > static_cast<double>(subset_cap))
        throw std::runtime_error(
            "brute_force_enumerate: C(n,k) exceeds the subset cap of " +
            std::to_string(subset_cap) + " subsets");

    CanonicalSolutionSet out;
    std::vector<VertexId> comb(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        comb[i] = i;
    while (true) {
        if (induced_is_connected(g, comb))
            out.push_back(comb);
        // next lexicographic combination
        int i = k - 1;
        while (i >= 0 && comb[i] == n - k + i)
            --i;
        if (i < 0)
            break;
        ++comb[i];
        for (int j = i + 1; j < k; ++j)
            comb[j] = comb[j - 1] + 1;
    }
    return out; // generated in lexicographic order, already canonical
}

namespace {

using Clock = std::chrono::steady_clock;

struct SimpleEnumerator {
    const Graph &g;
    const std::size_t k;
    const SolutionSink &sink;
    EnumerationStats stats;

    std::vector<VertexId> s;
    std::vector<char> in_s, forbidden;
    std::uint64_t calls_since_output = 0;
    bool aborted = false;

    SimpleEnumerator(const Graph &graph, int size, const SolutionSink &sk)
        : g(graph), k(static_cast<std::size_t>(size)), sink(sk),
          in_s(static_cast<std::size_t>(graph.num_vertices()), 0),
          forbidden(static_cast<std::size_t>(graph.num_vertices()), 0) {}

    void emit() {
        stats.max_calls_between_outputs =
            std::max(stats.max_calls_between_outputs, calls_since_output);
        calls_since_output = 0;
        ++stats.solutions;
        if (!sink(s, stats.solutions))
            aborted = true;
    }

    VertexId pick_open_neighbor() const {
        for (VertexId v : s)
            for (VertexId u : g.neighbors(v))
                if (!in_s[u] && !forbidden[u])
                    return u;
        return -1;
    }

    bool extend() {
        ++stats.calls_total;
        ++calls_since_output;
        if (s.size() == k) {
            emit();
            return true;
        }
        VertexId u = pick_open_neighbor();
        if (u < 0)
            return false;
        in_s[u] = 1;
        s.push_back(u);
        bool with_u = extend();
        s.pop_back();
        in_s[u] = 0;
        if (aborted || !with_u)
            return with_u; // prune: excluding u cannot succeed either
        forbidden[u] = 1;
        extend();
        forbidden[u] = 0;
        return true;
    }

    void run() {
        for (VertexId v = 0; v < g.num_vertices() && !aborted; ++v) {
            in_s[v] = 1;
            s.push_back(v);
            extend();
            s.pop_back();
            in_s[v] = 0;
            forbidden[v] = 1; // later starts exclude earlier ones
        }
    }
};

} // namespace

EnumerationStats simple_enumerate(const Graph &g, int k,
                                  const SolutionSink &sink) {
    if (k <= 0)
        throw std::invalid_argument("simple_enumerate: k must be >= 1");
    SimpleEnumerator e(g, k, sink);
    auto start = Clock::now();
    if (k <= g.num_vertices())
        e.run();
    e.stats.wall_seconds =
        std::chrono::duration<double>(Clock::now() - start).count();
    e.stats.aborted = e.aborted;
    return e.stats;
}

CanonicalSolutionSet collect_canonical(const Graph &g, int k, Algorithm algo) {
    if (algo == Algorithm::brute)
        return brute_force_enumerate(g, k);
    std::vector<std::vector<VertexId>> sets;
    SolutionSink collect = [&](std::span<const VertexId> sol, std::uint64_t) {
        sets.emplace_back(sol.begin(), sol.end());
        return true;
    };
    if (algo == Algorithm::kdelta)
        enumerate_k_subgraphs(g, k, collect);
    else
        simple_enumerate(g, k, collect);
    return canonicalize(std::move(sets));
}

} // namespace kdelta
