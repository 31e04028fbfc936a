#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string_view>
#include <vector>

namespace vsz {

using Vertex = std::uint32_t;

/// Undirected edge, normalized so that u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1, immutable after construction.
///
/// Construction rejects loops, duplicate edges and out-of-range endpoints with
/// std::invalid_argument. Connectivity is not required here; the index
/// operations check it themselves.
class Graph {
public:
    Graph() = default;
    Graph(std::size_t vertex_count, std::span<const Edge> edges);

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    /// Sorted neighbor list of v.
    std::span<const Vertex> neighbors(Vertex v) const {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }
    std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

    /// Edges in lexicographic order, each with u < v.
    std::span<const Edge> edges() const noexcept { return edges_; }

    bool has_edge(Vertex a, Vertex b) const;

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_{0};
    std::vector<Vertex> adjacency_;
};

/// Dense n x n hop-distance matrix, row-major 32-bit entries.
class DistanceMatrix {
public:
    static constexpr std::int32_t kInfinity = std::numeric_limits<std::int32_t>::max();

    explicit DistanceMatrix(std::size_t n) : n_(n), data_(n * n, kInfinity) {}

    std::size_t size() const noexcept { return n_; }
    std::int32_t operator()(Vertex u, Vertex v) const { return data_[std::size_t{u} * n_ + v]; }
    std::span<const std::int32_t> row(Vertex u) const { return {data_.data() + std::size_t{u} * n_, n_}; }
    std::span<std::int32_t> row(Vertex u) { return {data_.data() + std::size_t{u} * n_, n_}; }

    std::int32_t max_entry() const noexcept;

private:
    std::size_t n_;
    std::vector<std::int32_t> data_;
};

/// Parses "u v" lines. '#' lines and blank lines are skipped; n = 1 + max id.
/// Throws ParseError on malformed tokens, loops, duplicates or empty input.
Graph parse_edge_list(std::string_view text);

bool is_connected(const Graph& g);

/// Hop distances from `source`; unreachable vertices get DistanceMatrix::kInfinity.
std::vector<std::int32_t> bfs_distances(const Graph& g, Vertex source);

/// One BFS per source. Throws DisconnectedGraphError if g is not connected.
DistanceMatrix all_pairs_distances(const Graph& g);

/// Throws DisconnectedGraphError, or std::invalid_argument when n < 2.
std::int32_t diameter(const Graph& g);

bool is_bipartite(const Graph& g);

/// True iff every biconnected component induces a clique.
bool is_block_graph(const Graph& g);

bool is_complete(const Graph& g);

}  // namespace vsz
