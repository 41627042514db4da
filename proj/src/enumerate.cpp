#include "kdelta/enumerate.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace kdelta {

namespace {

using Clock = std::chrono::steady_clock;

// Mutable global lists of the enumeration. All appends and removals happen
// at the back of each list; the two flag vectors give O(1) membership tests
// for S∪N∪F and for T.
struct Enumerator {
    const Graph &g;
    const std::size_t k;
    const SolutionSink &sink;
    const EnumerateOptions &opts;
    EnumerationStats stats;

    std::vector<VertexId> s, n, f, t;
    std::vector<char> in_snf, in_t;
    std::vector<VertexId> emit_buf;

    std::uint64_t calls_since_output = 0;
    Clock::time_point delay_ref;
    bool aborted = false;

    Enumerator(const Graph &graph, int size, const SolutionSink &sk,
               const EnumerateOptions &options)
        : g(graph), k(static_cast<std::size_t>(size)), sink(sk), opts(options),
          in_snf(static_cast<std::size_t>(graph.num_vertices()), 0),
          in_t(static_cast<std::size_t>(graph.num_vertices()), 0) {}

    void fail(const char *what) const {
        throw std::logic_error(std::string("enumeration invariant violated: ") +
                               what);
    }

    void check_state() const {
        std::vector<char> expect(in_snf.size(), 0);
        for (VertexId v : s)
            if (expect[v]++) fail("S/N/F not disjoint");
        for (VertexId v : n)
            if (expect[v]++) fail("S/N/F not disjoint");
        for (VertexId v : f)
            if (expect[v]++) fail("S/N/F not disjoint");
        for (std::size_t v = 0; v < expect.size(); ++v)
            if (expect[v] != in_snf[v]) fail("S∪N∪F flag out of sync");
        std::vector<char> expect_t(in_t.size(), 0);
        for (VertexId v : t)
            expect_t[v] = 1;
        for (std::size_t v = 0; v < expect_t.size(); ++v)
            if (expect_t[v] != in_t[v]) fail("T flag out of sync");
        if (s.size() + t.size() > k) fail("|S|+|T| > k");
    }

    void note_peaks() {
        stats.peak_s = std::max(stats.peak_s, s.size());
        stats.peak_t = std::max(stats.peak_t, t.size());
        stats.peak_nf = std::max(stats.peak_nf, n.size() + f.size());
    }

    void emit(std::span<const VertexId> solution) {
        auto pre = Clock::now();
        double gap = std::chrono::duration<double>(pre - delay_ref).count();
        stats.max_delay_seconds = std::max(stats.max_delay_seconds, gap);
        stats.max_calls_between_outputs =
            std::max(stats.max_calls_between_outputs, calls_since_output);
        if (stats.call_gap_histogram.size() <= calls_since_output)
            stats.call_gap_histogram.resize(calls_since_output + 1, 0);
        ++stats.call_gap_histogram[calls_since_output];
        calls_since_output = 0;
        ++stats.solutions;
        if (!sink(solution, stats.solutions))
            aborted = true;
        delay_ref = opts.include_sink_time ? pre : Clock::now();
    }

    // Procedure Enumerate(S, N, F, l): the last open_count entries of F are
    // this frame's open neighbors.
    bool enumerate_rec(std::size_t open_count) {
        ++stats.calls_total;
        ++calls_since_output;
        note_peaks();
        if (opts.diagnostics)
            check_state();

        bool has_solution = false;
        if (s.size() == k) {
            if (opts.diagnostics && !t.empty())
                fail("T not empty at leaf emission");
            emit(s);
            return true;
        }
        if (s.size() + t.size() == k) {
            emit_buf.assign(s.begin(), s.end());
            emit_buf.insert(emit_buf.end(), t.begin(), t.end());
            emit(emit_buf);
            for (VertexId v : t)
                in_t[v] = 0;
            t.clear();
            has_solution = true;
        }

        for (std::size_t i = 0; i < open_count && !aborted; ++i) {
            VertexId u = f.back();
            f.pop_back();
            s.push_back(u);

            std::size_t appended_n = 0; // visited neighbors routed into N
            std::size_t opened = 0;     // fresh neighbors appended to F
            std::size_t child_open = 0;
            if (s.size() < k) {
                for (VertexId v : g.neighbors(u)) {
                    if (in_snf[v])
                        continue;
                    in_snf[v] = 1;
                    if (in_t[v]) {
                        n.push_back(v);
                        ++appended_n;
                    } else {
                        f.push_back(v);
                        ++opened;
                    }
                }
                child_open = opened;
                if (has_solution) {
                    // reopen every retained neighbor: N drains into F, the
                    // child moves all of them back to N in visitation order
                    child_open += n.size();
                    while (!n.empty()) {
                        f.push_back(n.back());
                        n.pop_back();
                    }
                }
                note_peaks();
            }

            std::size_t f_before = f.size();
            std::size_t n_before = n.size();
            if (enumerate_rec(child_open))
                has_solution = true;
            else if (!aborted) {
                t.push_back(u);
                in_t[u] = 1;
            }
            if (aborted)
                break;
            if (opts.diagnostics) {
                if (f.size() != f_before - child_open)
                    fail("child frame did not consume its open neighbors");
                if (n.size() != n_before + child_open)
                    fail("child frame did not retire opens into N");
            }

            // restore: only this iteration's own appends to N are popped; the
            // entries drained by the hasSolution reopen came back via the child
            s.pop_back();
            for (std::size_t j = 0; j < appended_n + opened; ++j) {
                in_snf[n.back()] = 0;
                n.pop_back();
            }
            n.push_back(u); // u stays marked in in_snf
        }
        return has_solution;
    }

    void run_component(std::span<const VertexId> component) {
        if (component.size() < k)
            return;
        auto order = dfs_discovery_order(g, component);
        for (auto it = order.rbegin(); it != order.rend() && !aborted; ++it) {
            VertexId v = *it;
            s.push_back(v);
            in_snf[v] = 1;
            std::size_t opens = 0;
            for (VertexId u : g.neighbors(v)) {
                if (!in_snf[u]) {
                    f.push_back(u);
                    in_snf[u] = 1;
                    ++opens;
                }
            }
            if (opts.top_level_observer)
                opts.top_level_observer({s, n, f, opens});
            ++stats.top_level_calls;
            std::uint64_t before = stats.solutions;
            enumerate_rec(opens);
            if (aborted)
                break;
            if (stats.solutions == before)
                ++stats.unproductive_top_level_calls;
            for (std::size_t j = 0; j < opens; ++j) {
                in_snf[n.back()] = 0;
                n.pop_back();
            }
            s.pop_back();
            f.push_back(v); // v closed, stays marked
            if (component.size() - f.size() < k)
                break;
        }
        // reset per-component state; other components never touch these ids
        for (VertexId v : f)
            in_snf[v] = 0;
        f.clear();
        for (VertexId v : t)
            in_t[v] = 0;
        t.clear();
        for (VertexId v : n)
            in_snf[v] = 0;
        n.clear();
        s.clear();
    }

    void run_singletons() {
        // k == 1: every vertex of every component is a solution; the list
        // machinery degenerates here (a leaf frame never consumes its opens),
        // so emit directly
        for (VertexId v = 0; v < g.num_vertices() && !aborted; ++v) {
            ++stats.calls_total;
            ++calls_since_output;
            ++stats.top_level_calls;
            VertexId single[1] = {v};
            emit(single);
        }
        stats.peak_s = std::max<std::size_t>(stats.peak_s, 1);
    }
};

} // namespace

EnumerationStats enumerate_k_subgraphs(const Graph &g, int k,
                                       const SolutionSink &sink,
                                       const EnumerateOptions &options) {
    if (k <= 0)
        throw std::invalid_argument("enumerate_k_subgraphs: k must be >= 1");

    Enumerator e(g, k, sink, options);
    auto start = Clock::now();
    e.delay_ref = start;
    if (k == 1) {
        e.run_singletons();
    } else if (k <= g.num_vertices()) {
        for (const auto &comp : connected_components(g)) {
            if (e.aborted)
                break;
            e.run_component(comp);
        }
    }
    e.stats.wall_seconds =
        std::chrono::duration<double>(Clock::now() - start).count();
    e.stats.aborted = e.aborted;
    return e.stats;
}

DelayReport delay_probe(const EnumerationStats &stats, int k) {
    DelayReport report{stats.max_calls_between_outputs, stats.max_delay_seconds,
                       stats.call_gap_histogram};
    if (stats.solutions == 0) {
        report.histogram.clear();
        return report;
    }
    if (report.max_calls_between_outputs > static_cast<std::uint64_t>(k))
        throw std::logic_error(
            "delay_probe: more than k calls between consecutive outputs");
    return report;
}

} // namespace kdelta
