#ifndef KDELTA_GRAPH_HPP
#define KDELTA_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kdelta {

using VertexId = int;

// Immutable undirected simple graph in CSR form. Construction normalizes the
// edge list: self-loops and parallel edges are dropped but counted, so the
// counts stay retrievable for ingestion diagnostics.
class Graph {
public:
    Graph() = default;

    // labels may be empty, in which case "0".."n-1" is used.
    Graph(VertexId n, std::vector<std::pair<VertexId, VertexId>> edges,
          std::vector<std::string> labels = {});

    VertexId num_vertices() const { return n_; }
    std::size_t num_edges() const { return neighbors_.size() / 2; }

    std::span<const VertexId> neighbors(VertexId v) const {
        return {neighbors_.data() + offsets_[v],
                neighbors_.data() + offsets_[v + 1]};
    }
    VertexId degree(VertexId v) const {
        return static_cast<VertexId>(offsets_[v + 1] - offsets_[v]);
    }
    const std::string &label(VertexId v) const { return labels_[v]; }
    const std::vector<std::string> &labels() const { return labels_; }

    std::size_t self_loops_dropped() const { return self_loops_dropped_; }
    std::size_t duplicate_edges_dropped() const { return duplicates_dropped_; }

private:
    VertexId n_ = 0;
    std::vector<std::size_t> offsets_{0};
    std::vector<VertexId> neighbors_;
    std::vector<std::string> labels_;
    std::size_t self_loops_dropped_ = 0;
    std::size_t duplicates_dropped_ = 0;
};

enum class GraphFormat { auto_detect, edge_list, matrix_market };

// Parses whitespace edge lists ('%'/'#' comments) or Matrix Market coordinate
// files (symmetric pattern accepted, 1-based indices). Throws std::runtime_error
// on malformed input, std::invalid_argument on empty input.
Graph parse_graph(std::string_view text,
                  GraphFormat hint = GraphFormat::auto_detect);

Graph load_graph(const std::string &path,
                 GraphFormat hint = GraphFormat::auto_detect);

// Partition of 0..n-1 into maximal connected sets, each sorted ascending,
// ordered by smallest contained id.
std::vector<std::vector<VertexId>> connected_components(const Graph &g);

// Iterative DFS discovery order from the smallest id in the component,
// neighbors explored in ascending id order. The component must be connected.
std::vector<VertexId> dfs_discovery_order(const Graph &g,
                                          std::span<const VertexId> component);

// True iff the subgraph induced on `vertices` is connected. Throws on an
// empty set.
bool induced_is_connected(const Graph &g, std::span<const VertexId> vertices);

VertexId max_degree(const Graph &g);

// n*(e*delta)^k / ((delta-1)*k) for delta >= 2; the formula divides by
// delta-1, so for delta <= 1 this returns n (a graph of max degree <= 1 has
// at most n connected size-k sets). Throws on k == 0.
double count_upper_bound(std::uint64_t n, std::uint64_t delta, std::uint64_t k);

// Deterministic generators used by the harness and tests.
Graph generate_path(VertexId n);
Graph generate_cycle(VertexId n);
Graph generate_star(VertexId leaves);
Graph generate_clique(VertexId n);
Graph generate_random(VertexId n, double p, std::uint64_t seed);

// Spec strings: "path N", "cycle N", "star N", "clique N", "random N P SEED".
Graph generate_graph(std::string_view spec);

} // namespace kdelta

#endif // KDELTA_GRAPH_HPP
