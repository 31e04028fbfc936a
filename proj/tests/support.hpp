#pragma once

// Builders and brute-force oracles shared by the unit and acceptance suites.
// Nothing here calls into the BFS or Szeged code paths under test.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "vsz/graph.hpp"

namespace vsz::testing {

inline Graph from_pairs(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
    std::vector<Edge> edges;
    for (auto [u, v] : pairs) edges.push_back({u, v});
    return Graph(n, edges);
}

inline Graph path(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Graph(n, edges);
}

inline Graph cycle(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    edges.push_back({0, static_cast<Vertex>(n - 1)});
    return Graph(n, edges);
}

/// Star with `leaves` leaves; vertex 0 is the centre.
inline Graph star(std::size_t leaves) {
    std::vector<Edge> edges;
    for (Vertex i = 1; i <= leaves; ++i) edges.push_back({0, i});
    return Graph(leaves + 1, edges);
}

inline Graph complete(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
    return Graph(n, edges);
}

inline Graph without_edge(const Graph& g, Edge drop) {
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (!(e == drop)) edges.push_back(e);
    return Graph(g.vertex_count(), edges);
}

constexpr int kFwInf = 1 << 28;

/// All-pairs distances by Floyd-Warshall on the adjacency predicate.
inline std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<int>> d(n, std::vector<int>(n, kFwInf));
    for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
    for (const Edge& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
    return d;
}

inline bool fw_connected(const std::vector<std::vector<int>>& d) {
    for (const auto& row : d)
        for (int x : row)
            if (x >= kFwInf) return false;
    return true;
}

/// Szeged edge terms straight from the definition, unsorted, edge order.
inline std::vector<std::int64_t> brute_szeged_terms(const Graph& g, const std::vector<std::vector<int>>& d) {
    std::vector<std::int64_t> out;
    for (const Edge& e : g.edges()) {
        std::int64_t nu = 0, nv = 0;
        for (std::size_t w = 0; w < g.vertex_count(); ++w) {
            if (d[w][e.u] < d[w][e.v]) ++nu;
            if (d[w][e.v] < d[w][e.u]) ++nv;
        }
        out.push_back(nu * nv);
    }
    return out;
}

inline std::int64_t brute_wiener(const std::vector<std::vector<int>>& d) {
    std::int64_t w = 0;
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j) w += d[i][j];
    return w;
}

inline std::int64_t brute_szeged(const Graph& g, const std::vector<std::vector<int>>& d) {
    std::int64_t s = 0;
    for (auto t : brute_szeged_terms(g, d)) s += t;
    return s;
}

/// Exhaustive search over simple cycles for one of odd length.
inline bool has_odd_cycle(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<char> on_path(n, 0);
    std::function<bool(Vertex, Vertex, std::size_t)> dfs = [&](Vertex start, Vertex x, std::size_t len) {
        for (Vertex y : g.neighbors(x)) {
            if (y == start && len >= 3 && len % 2 == 1) return true;
            if (y > start && !on_path[y]) {
                on_path[y] = 1;
                if (dfs(start, y, len + 1)) return true;
                on_path[y] = 0;
            }
        }
        return false;
    };
    for (Vertex s = 0; s < n; ++s) {
        std::fill(on_path.begin(), on_path.end(), 0);
        on_path[s] = 1;
        if (dfs(s, s, 1)) return true;
    }
    return false;
}

/// Calls f for each of the 2^{n(n-1)/2} labelled graphs on n vertices.
template <typename F>
void for_each_labelled_graph(std::size_t n, F&& f) {
    std::vector<Edge> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    std::vector<Edge> edges;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        edges.clear();
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1) edges.push_back(pairs[i]);
        f(Graph(n, edges));
    }
}

/// Connected graph on n vertices: random edge density, rejection on connectivity.
inline Graph random_connected(std::size_t n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    while (true) {
        const double p = 0.15 + 0.8 * unit(rng);
        std::vector<Edge> edges;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (unit(rng) < p) edges.push_back({u, v});
        Graph g(n, edges);
        if (fw_connected(floyd_warshall(g))) return g;
    }
}

/// Block graph with exactly n vertices built by gluing cliques at vertices.
inline Graph random_block_graph(std::size_t n, std::mt19937_64& rng) {
    std::vector<Edge> edges;
    std::size_t used = 1;
    while (used < n) {
        const std::size_t room = n - used;
        const std::size_t extra = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(room, 4))(rng);
        const auto anchor = static_cast<Vertex>(std::uniform_int_distribution<std::size_t>(0, used - 1)(rng));
        std::vector<Vertex> clique{anchor};
        for (std::size_t i = 0; i < extra; ++i) clique.push_back(static_cast<Vertex>(used + i));
        for (std::size_t i = 0; i < clique.size(); ++i)
            for (std::size_t j = i + 1; j < clique.size(); ++j) edges.push_back({clique[i], clique[j]});
        used += extra;
    }
    return Graph(n, edges);
}

namespace detail {

inline std::string rooted_code(const std::vector<std::vector<Vertex>>& adj, Vertex v, Vertex parent) {
    std::vector<std::string> kids;
    for (Vertex w : adj[v])
        if (w != parent) kids.push_back(rooted_code(adj, w, v));
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (const auto& k : kids) s += k;
    return s + ")";
}

inline std::string tree_code(const std::vector<std::vector<Vertex>>& adj) {
    const std::size_t n = adj.size();
    if (n == 1) return "()";
    // Peel leaves to find the centre(s).
    std::vector<std::size_t> deg(n);
    std::vector<Vertex> layer;
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = adj[v].size();
        if (deg[v] <= 1) layer.push_back(v);
    }
    std::size_t remaining = n;
    while (remaining > 2) {
        remaining -= layer.size();
        std::vector<Vertex> next;
        for (Vertex v : layer)
            for (Vertex w : adj[v])
                if (--deg[w] == 1) next.push_back(w);
        layer = std::move(next);
    }
    std::string best;
    for (Vertex c : layer) {
        auto code = rooted_code(adj, c, c);
        if (best.empty() || code < best) best = code;
    }
    return best;
}

}  // namespace detail

/// One representative of every unlabelled tree on n vertices.
inline std::vector<Graph> all_trees(std::size_t n) {
    using Adj = std::vector<std::vector<Vertex>>;
    std::map<std::string, Adj> level{{"()", Adj(1)}};
    for (std::size_t size = 2; size <= n; ++size) {
        std::map<std::string, Adj> next;
        for (const auto& [code, adj] : level) {
            for (Vertex v = 0; v < adj.size(); ++v) {
                Adj grown = adj;
                grown.emplace_back();
                const auto leaf = static_cast<Vertex>(grown.size() - 1);
                grown[v].push_back(leaf);
                grown[leaf].push_back(v);
                next.emplace(detail::tree_code(grown), std::move(grown));
            }
        }
        level = std::move(next);
    }
    std::vector<Graph> out;
    for (const auto& [code, adj] : level) {
        std::vector<Edge> edges;
        for (Vertex v = 0; v < adj.size(); ++v)
            for (Vertex w : adj[v])
                if (v < w) edges.push_back({v, w});
        out.emplace_back(adj.size(), edges);
    }
    return out;
}

}  // namespace vsz::testing
