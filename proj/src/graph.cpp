#include "kdelta/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace kdelta {

Graph::Graph(VertexId n, std::vector<std::pair<VertexId, VertexId>> edges,
             std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels)) {
    if (n < 0)
        throw std::invalid_argument("graph: negative vertex count");
    if (labels_.empty()) {
        labels_.reserve(static_cast<std::size_t>(n));
        for (VertexId v = 0; v < n; ++v)
            labels_.push_back(std::to_string(v));
    }
    if (labels_.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("graph: label count != vertex count");

    std::vector<std::pair<VertexId, VertexId>> clean;
    clean.reserve(edges.size());
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw std::invalid_argument("graph: edge endpoint out of range");
        if (a == b) {
            ++self_loops_dropped_;
            continue;
        }
        clean.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(clean.begin(), clean.end());
    auto last = std::unique(clean.begin(), clean.end());
    duplicates_dropped_ = static_cast<std::size_t>(clean.end() - last);
    clean.erase(last, clean.end());

    std::vector<std::size_t> deg(static_cast<std::size_t>(n), 0);
    for (auto [a, b] : clean) {
        ++deg[a];
        ++deg[b];
    }
    offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (VertexId v = 0; v < n; ++v)
        offsets_[v + 1] = offsets_[v] + deg[v];
    neighbors_.resize(offsets_[n]);
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (auto [a, b] : clean) {
        neighbors_[cursor[a]++] = b;
        neighbors_[cursor[b]++] = a;
    }
    for (VertexId v = 0; v < n; ++v)
        std::sort(neighbors_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
                  neighbors_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));
}

namespace {

bool is_comment(std::string_view line) {
    for (char c : line) {
        if (c == ' ' || c == '\t' || c == '\r')
            continue;
        return c == '%' || c == '#';
    }
    return true; // blank
}

std::vector<std::string> tokenize(std::string_view line) {
    std::vector<std::string> out;
    std::istringstream iss{std::string(line)};
    std::string tok;
    while (iss >> tok)
        out.push_back(tok);
    return out;
}

Graph parse_edge_list(std::string_view text) {
    std::unordered_map<std::string, VertexId> ids;
    std::vector<std::string> labels;
    std::vector<std::pair<VertexId, VertexId>> edges;

    auto intern = [&](const std::string &lab) {
        auto it = ids.find(lab);
        if (it != ids.end())
            return it->second;
        VertexId id = static_cast<VertexId>(labels.size());
        ids.emplace(lab, id);
        labels.push_back(lab);
        return id;
    };

    std::size_t lineno = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++lineno;
        if (is_comment(line))
            continue;
        auto toks = tokenize(line);
        if (toks.size() != 2)
            throw std::runtime_error("edge list line " + std::to_string(lineno) +
                                     ": expected 2 tokens, got " +
                                     std::to_string(toks.size()));
        VertexId a = intern(toks[0]);
        VertexId b = intern(toks[1]);
        edges.emplace_back(a, b);
    }
    if (labels.empty())
        throw std::invalid_argument("edge list: no vertices in input");
    VertexId n = static_cast<VertexId>(labels.size());
    return Graph(n, std::move(edges), std::move(labels));
}

long parse_coord(const std::string &tok, std::size_t lineno) {
    std::size_t pos = 0;
    long v = 0;
    try {
        v = std::stol(tok, &pos);
    } catch (const std::exception &) {
        pos = 0;
    }
    if (pos != tok.size())
        throw std::runtime_error("matrix market line " + std::to_string(lineno) +
                                 ": non-numeric coordinate '" + tok + "'");
    return v;
}

Graph parse_matrix_market(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    long rows = -1, cols = -1;
    std::vector<std::pair<VertexId, VertexId>> edges;

    while (std::getline(in, line)) {
        ++lineno;
        if (lineno == 1 && line.rfind("%%MatrixMarket", 0) == 0)
            continue;
        if (is_comment(line))
            continue;
        auto toks = tokenize(line);
        if (rows < 0) {
            if (toks.size() != 3)
                throw std::runtime_error("matrix market line " +
                                         std::to_string(lineno) +
                                         ": expected 'rows cols nnz' header");
            rows = parse_coord(toks[0], lineno);
            cols = parse_coord(toks[1], lineno);
            if (rows <= 0 || cols <= 0)
                throw std::runtime_error("matrix market: non-positive dimensions");
            continue;
        }
        // pattern entries have 2 tokens; a weight column is tolerated and ignored
        if (toks.size() < 2 || toks.size() > 3)
            throw std::runtime_error("matrix market line " + std::to_string(lineno) +
                                     ": expected 2 or 3 tokens");
        long a = parse_coord(toks[0], lineno);
        long b = parse_coord(toks[1], lineno);
        long n = std::max(rows, cols);
        if (a < 1 || b < 1 || a > n || b > n)
            throw std::runtime_error("matrix market line " + std::to_string(lineno) +
                                     ": coordinate out of range");
        edges.emplace_back(static_cast<VertexId>(a - 1),
                           static_cast<VertexId>(b - 1));
    }
    if (rows < 0)
        throw std::invalid_argument("matrix market: no size header in input");
    long n = std::max(rows, cols);
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (long v = 1; v <= n; ++v)
        labels.push_back(std::to_string(v)); // original 1-based ids
    return Graph(static_cast<VertexId>(n), std::move(edges), std::move(labels));
}

} // namespace

Graph parse_graph(std::string_view text, GraphFormat hint) {
    if (hint == GraphFormat::auto_detect) {
        hint = text.rfind("%%MatrixMarket", 0) == 0 ? GraphFormat::matrix_market
                                                    : GraphFormat::edge_list;
    }
    if (text.find_first_not_of(" \t\r\n") == std::string_view::npos)
        throw std::invalid_argument("parse_graph: empty input");
    return hint == GraphFormat::matrix_market ? parse_matrix_market(text)
                                              : parse_edge_list(text);
}

Graph load_graph(const std::string &path, GraphFormat hint) {
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot open graph file: " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_graph(buf.str(), hint);
}

std::vector<std::vector<VertexId>> connected_components(const Graph &g) {
    VertexId n = g.num_vertices();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<VertexId>> comps;
    std::vector<VertexId> stack;
    for (VertexId root = 0; root < n; ++root) {
        if (seen[root])
            continue;
        std::vector<VertexId> comp;
        stack.push_back(root);
        seen[root] = 1;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (VertexId u : g.neighbors(v)) {
                if (!seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::vector<VertexId> dfs_discovery_order(const Graph &g,
                                          std::span<const VertexId> component) {
    if (component.empty())
        throw std::invalid_argument("dfs_discovery_order: empty component");
    VertexId root = *std::min_element(component.begin(), component.end());

    std::vector<char> seen(static_cast<std::size_t>(g.num_vertices()), 0);
    std::vector<VertexId> order;
    order.reserve(component.size());

    // explicit stack of (vertex, next-neighbor index) to mimic recursive DFS
    std::vector<std::pair<VertexId, std::size_t>> stack;
    seen[root] = 1;
    order.push_back(root);
    stack.emplace_back(root, 0);
    while (!stack.empty()) {
        auto &[v, i] = stack.back();
        auto nbrs = g.neighbors(v);
        if (i == nbrs.size()) {
            stack.pop_back();
            continue;
        }
        VertexId u = nbrs[i++];
        if (!seen[u]) {
            seen[u] = 1;
            order.push_back(u);
            stack.emplace_back(u, 0);
        }
    }
    if (order.size() != component.size())
        throw std::invalid_argument("dfs_discovery_order: component not connected");
    return order;
}

bool induced_is_connected(const Graph &g, std::span<const VertexId> vertices) {
    if (vertices.empty())
        throw std::invalid_argument("induced_is_connected: empty vertex set");
    std::vector<VertexId> members(vertices.begin(), vertices.end());
    std::sort(members.begin(), members.end());
    auto is_member = [&](VertexId v) {
        return std::binary_search(members.begin(), members.end(), v);
    };
    std::vector<VertexId> stack{members.front()};
    std::vector<char> seen(members.size(), 0);
    auto idx = [&](VertexId v) {
        return static_cast<std::size_t>(
            std::lower_bound(members.begin(), members.end(), v) - members.begin());
    };
    seen[idx(members.front())] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (VertexId u : g.neighbors(v)) {
            if (is_member(u) && !seen[idx(u)]) {
                seen[idx(u)] = 1;
                ++reached;
                stack.push_back(u);
            }
        }
    }
    return reached == members.size();
}

VertexId max_degree(const Graph &g) {
    if (g.num_vertices() == 0)
        throw std::invalid_argument("max_degree: empty graph");
    VertexId best = 0;
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        best = std::max(best, g.degree(v));
    return best;
}

double count_upper_bound(std::uint64_t n, std::uint64_t delta, std::uint64_t k) {
    if (k == 0)
        throw std::invalid_argument("count_upper_bound: k must be >= 1");
    if (delta <= 1)
        return static_cast<double>(n);
    double e = std::exp(1.0);
    return static_cast<double>(n) *
           std::pow(e * static_cast<double>(delta), static_cast<double>(k)) /
           (static_cast<double>(delta - 1) * static_cast<double>(k));
}

Graph generate_path(VertexId n) {
    if (n <= 0)
        throw std::invalid_argument("generate_path: n must be >= 1");
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId v = 0; v + 1 < n; ++v)
        edges.emplace_back(v, v + 1);
    return Graph(n, std::move(edges));
}

Graph generate_cycle(VertexId n) {
    if (n < 3)
        throw std::invalid_argument("generate_cycle: n must be >= 3");
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId v = 0; v < n; ++v)
        edges.emplace_back(v, (v + 1) % n);
    return Graph(n, std::move(edges));
}

Graph generate_star(VertexId leaves) {
    if (leaves < 0)
        throw std::invalid_argument("generate_star: negative leaf count");
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId v = 1; v <= leaves; ++v)
        edges.emplace_back(0, v);
    return Graph(leaves + 1, std::move(edges));
}

Graph generate_clique(VertexId n) {
    if (n <= 0)
        throw std::invalid_argument("generate_clique: n must be >= 1");
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b = a + 1; b < n; ++b)
            edges.emplace_back(a, b);
    return Graph(n, std::move(edges));
}

Graph generate_random(VertexId n, double p, std::uint64_t seed) {
    if (n <= 0)
        throw std::invalid_argument("generate_random: n must be >= 1");
    if (p < 0.0 || p > 1.0)
        throw std::invalid_argument("generate_random: p outside [0,1]");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b = a + 1; b < n; ++b)
            if (coin(rng) < p)
                edges.emplace_back(a, b);
    return Graph(n, std::move(edges));
}

Graph generate_graph(std::string_view spec) {
    auto toks = tokenize(spec);
    if (toks.empty())
        throw std::invalid_argument("generate_graph: empty spec");
    const std::string &family = toks[0];
    auto want = [&](std::size_t n) {
        if (toks.size() != n + 1)
            throw std::invalid_argument("generate_graph: '" + family + "' takes " +
                                        std::to_string(n) + " argument(s)");
    };
    if (family == "path") {
        want(1);
        return generate_path(std::stoi(toks[1]));
    }
    if (family == "cycle") {
        want(1);
        return generate_cycle(std::stoi(toks[1]));
    }
    if (family == "star") {
        want(1);
        return generate_star(std::stoi(toks[1]));
    }
    if (family == "clique") {
        want(1);
        return generate_clique(std::stoi(toks[1]));
    }
    if (family == "random") {
        want(3);
        return generate_random(std::stoi(toks[1]), std::stod(toks[2]),
                               std::stoull(toks[3]));
    }
    throw std::invalid_argument("generate_graph: unknown family '" + family + "'");
}

} // namespace kdelta
