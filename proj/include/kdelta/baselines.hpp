#ifndef KDELTA_BASELINES_HPP
#define KDELTA_BASELINES_HPP

#include "kdelta/enumerate.hpp"
#include "kdelta/graph.hpp"

#include <cstdint>
#include <vector>

namespace kdelta {

// Size-k vertex sets, each sorted ascending, the collection sorted
// lexicographically, no duplicates.
using CanonicalSolutionSet = std::vector<std::vector<VertexId>>;

// Sorts each set and the collection; throws std::logic_error if the input
// contained duplicate sets.
CanonicalSolutionSet canonicalize(std::vector<std::vector<VertexId>> sets);

// Checks all C(n,k) subsets against induced_is_connected. Refuses with
// std::runtime_error when C(n,k) exceeds subset_cap.
CanonicalSolutionSet brute_force_enumerate(const Graph &g, int k,
                                           std::uint64_t subset_cap = 50'000'000);

// Classical bottom-up baseline: per start vertex (ascending, earlier starts
// forbidden), binary include/exclude branching on an open neighbor of S,
// pruning the exclude branch as soon as the include branch finds no solution.
EnumerationStats simple_enumerate(const Graph &g, int k,
                                  const SolutionSink &sink);

// Convenience: run the named algorithm and collect its output canonically.
enum class Algorithm { kdelta, simple, brute };
CanonicalSolutionSet collect_canonical(const Graph &g, int k, Algorithm algo);

} // namespace kdelta

#endif // KDELTA_BASELINES_HPP
