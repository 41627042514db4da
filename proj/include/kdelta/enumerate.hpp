#ifndef KDELTA_ENUMERATE_HPP
#define KDELTA_ENUMERATE_HPP

#include "kdelta/graph.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace kdelta {

// Receives each size-k solution exactly once, as internal vertex ids in
// emission order (not sorted), plus a 1-based emission ordinal. Returning
// false aborts the enumeration; the run's state is discarded.
using SolutionSink =
    std::function<bool(std::span<const VertexId>, std::uint64_t)>;

struct EnumerationStats {
    std::uint64_t solutions = 0;
    std::uint64_t calls_total = 0;
    // max recursive invocations between consecutive emissions (the gap before
    // the first emission counts too); never exceeds k once solutions >= 1
    std::uint64_t max_calls_between_outputs = 0;
    double max_delay_seconds = 0.0;
    double wall_seconds = 0.0;
    std::uint64_t top_level_calls = 0;
    std::uint64_t unproductive_top_level_calls = 0;
    bool aborted = false;
    // call_gap_histogram[c] = number of emissions preceded by exactly c calls
    std::vector<std::uint64_t> call_gap_histogram;
    // auxiliary-space high-water marks
    std::size_t peak_s = 0;
    std::size_t peak_t = 0;
    std::size_t peak_nf = 0;
};

// Arguments of a top-level Enumerate(S, N, F, l) call issued by the main
// loop, in list order; used by trace tests.
struct TopLevelCall {
    std::vector<VertexId> s, n, f;
    std::size_t open_count = 0;
};

struct EnumerateOptions {
    // runtime invariant checking (disjointness, flag consistency, frame
    // restoration); throws std::logic_error on any violation
    bool diagnostics = false;
    // include time spent inside the sink in delay measurement
    bool include_sink_time = false;
    std::function<void(const TopLevelCall &)> top_level_observer;
};

// Streams every connected induced subgraph of size k, exactly once, with at
// most k recursive calls between consecutive emissions. Components smaller
// than k are skipped. Throws std::invalid_argument on k == 0; k > n yields
// zero solutions.
EnumerationStats enumerate_k_subgraphs(const Graph &g, int k,
                                       const SolutionSink &sink,
                                       const EnumerateOptions &options = {});

struct DelayReport {
    std::uint64_t max_calls_between_outputs = 0;
    double max_delay_seconds = 0.0;
    std::vector<std::uint64_t> histogram;
};

// Summarizes delay instrumentation of a completed run and asserts the
// at-most-k-calls bound when at least one solution was emitted.
DelayReport delay_probe(const EnumerationStats &stats, int k);

} // namespace kdelta

#endif // KDELTA_ENUMERATE_HPP
