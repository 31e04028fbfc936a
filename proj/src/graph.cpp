#include "vsz/graph.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "parallel.hpp"
#include "vsz/errors.hpp"

namespace vsz {

namespace {

// Above this many vertices all-pairs BFS is spread across threads.
constexpr std::size_t kParallelVertexThreshold = 256;

void bfs_into(const Graph& g, Vertex source, std::span<std::int32_t> dist, std::vector<Vertex>& queue) {
    std::ranges::fill(dist, DistanceMatrix::kInfinity);
    queue.clear();
    dist[source] = 0;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex x = queue[head];
        const std::int32_t next = dist[x] + 1;
        for (Vertex y : g.neighbors(x)) {
            if (dist[y] == DistanceMatrix::kInfinity) {
                dist[y] = next;
                queue.push_back(y);
            }
        }
    }
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\f\v");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\f\v");
    return s.substr(first, last - first + 1);
}

}  // namespace

Graph::Graph(std::size_t vertex_count, std::span<const Edge> edges) : n_(vertex_count) {
    if (vertex_count > std::numeric_limits<Vertex>::max()) {
        throw std::invalid_argument("too many vertices");
    }
    edges_.reserve(edges.size());
    for (Edge e : edges) {
        if (e.u == e.v) throw std::invalid_argument("loop edge at vertex " + std::to_string(e.u));
        if (e.u >= n_ || e.v >= n_) throw std::invalid_argument("edge endpoint out of range");
        if (e.u > e.v) std::swap(e.u, e.v);
        edges_.push_back(e);
    }
    std::ranges::sort(edges_);
    if (auto dup = std::ranges::adjacent_find(edges_); dup != edges_.end()) {
        throw std::invalid_argument("duplicate edge " + std::to_string(dup->u) + " " + std::to_string(dup->v));
    }

    std::vector<std::size_t> degree(n_, 0);
    for (const Edge& e : edges_) {
        ++degree[e.u];
        ++degree[e.v];
    }
    offsets_.assign(n_ + 1, 0);
    for (std::size_t v = 0; v < n_; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
    adjacency_.resize(offsets_[n_]);
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (const Edge& e : edges_) {
        adjacency_[fill[e.u]++] = e.v;
        adjacency_[fill[e.v]++] = e.u;
    }
    for (std::size_t v = 0; v < n_; ++v) {
        std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
                  adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));
    }
}

bool Graph::has_edge(Vertex a, Vertex b) const {
    if (a >= n_ || b >= n_) return false;
    return std::ranges::binary_search(neighbors(a), b);
}

std::int32_t DistanceMatrix::max_entry() const noexcept {
    return data_.empty() ? 0 : *std::ranges::max_element(data_);
}

Graph parse_edge_list(std::string_view text) {
    std::vector<Edge> edges;
    std::unordered_set<std::uint64_t> seen;
    Vertex max_id = 0;
    std::size_t line_no = 0;

    auto parse_id = [&](std::string_view token) {
        Vertex value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size() || value == std::numeric_limits<Vertex>::max()) {
            throw ParseError(line_no, "malformed token '" + std::string(token) + "'");
        }
        return value;
    };

    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        std::string_view line = trim(text.substr(0, nl));
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (line.empty() || line.front() == '#') continue;

        std::vector<std::string_view> tokens;
        while (!line.empty()) {
            const auto end = line.find_first_of(" \t");
            tokens.push_back(line.substr(0, end));
            line = end == std::string_view::npos ? std::string_view{} : trim(line.substr(end));
        }
        if (tokens.size() != 2) throw ParseError(line_no, "expected two vertex ids");

        Vertex u = parse_id(tokens[0]);
        Vertex v = parse_id(tokens[1]);
        if (u == v) throw ParseError(line_no, "loop edge at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (!seen.insert((std::uint64_t{u} << 32) | v).second) {
            throw ParseError(line_no, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        }
        max_id = std::max(max_id, v);
        edges.push_back({u, v});
    }
    if (edges.empty()) throw ParseError(0, "empty input");
    return Graph(std::size_t{max_id} + 1, edges);
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() <= 1) return true;
    const auto dist = bfs_distances(g, 0);
    return std::ranges::none_of(dist, [](std::int32_t d) { return d == DistanceMatrix::kInfinity; });
}

std::vector<std::int32_t> bfs_distances(const Graph& g, Vertex source) {
    if (source >= g.vertex_count()) throw std::out_of_range("source vertex out of range");
    std::vector<std::int32_t> dist(g.vertex_count());
    std::vector<Vertex> queue;
    queue.reserve(g.vertex_count());
    bfs_into(g, source, dist, queue);
    return dist;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
    if (!is_connected(g)) throw DisconnectedGraphError();
    const std::size_t n = g.vertex_count();
    DistanceMatrix dm(n);
    detail::parallel_for(n, n >= kParallelVertexThreshold, [&](std::size_t s) {
        thread_local std::vector<Vertex> queue;
        bfs_into(g, static_cast<Vertex>(s), dm.row(static_cast<Vertex>(s)), queue);
    });
    return dm;
}

std::int32_t diameter(const Graph& g) {
    if (g.vertex_count() < 2) throw std::invalid_argument("diameter needs at least two vertices");
    if (!is_connected(g)) throw DisconnectedGraphError();
    std::vector<std::int32_t> dist(g.vertex_count());
    std::vector<Vertex> queue;
    std::int32_t best = 0;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        bfs_into(g, s, dist, queue);
        best = std::max(best, dist[queue.back()]);
    }
    return best;
}

bool is_bipartite(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::int8_t> color(n, -1);
    std::vector<Vertex> queue;
    for (Vertex root = 0; root < n; ++root) {
        if (color[root] != -1) continue;
        color[root] = 0;
        queue.assign(1, root);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const Vertex x = queue[head];
            for (Vertex y : g.neighbors(x)) {
                if (color[y] == -1) {
                    color[y] = static_cast<std::int8_t>(1 - color[x]);
                    queue.push_back(y);
                } else if (color[y] == color[x]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_block_graph(const Graph& g) {
    // Iterative Hopcroft-Tarjan biconnected components with an edge stack.
    const std::size_t n = g.vertex_count();
    constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> disc(n, kUnvisited);
    std::vector<std::size_t> low(n, 0);
    std::vector<Edge> edge_stack;
    std::vector<Vertex> component_mark(n, 0);
    Vertex mark = 0;

    struct Frame {
        Vertex v;
        Vertex parent;
        std::size_t next;
    };
    std::vector<Frame> stack;
    std::size_t time = 0;

    auto block_is_clique = [&](Edge boundary) {
        ++mark;
        std::size_t vertices = 0;
        std::size_t edges = 0;
        while (true) {
            const Edge e = edge_stack.back();
            edge_stack.pop_back();
            ++edges;
            for (Vertex x : {e.u, e.v}) {
                if (component_mark[x] != mark) {
                    component_mark[x] = mark;
                    ++vertices;
                }
            }
            if (e == boundary) break;
        }
        return edges == vertices * (vertices - 1) / 2;
    };

    for (Vertex root = 0; root < n; ++root) {
        if (disc[root] != kUnvisited) continue;
        disc[root] = low[root] = time++;
        stack.push_back({root, root, 0});
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto nbrs = g.neighbors(f.v);
            if (f.next < nbrs.size()) {
                const Vertex w = nbrs[f.next++];
                if (disc[w] == kUnvisited) {
                    edge_stack.push_back({f.v, w});
                    disc[w] = low[w] = time++;
                    stack.push_back({w, f.v, 0});
                } else if (w != f.parent && disc[w] < disc[f.v]) {
                    edge_stack.push_back({f.v, w});
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
                continue;
            }
            const Vertex v = f.v;
            const Vertex parent = f.parent;
            stack.pop_back();
            if (stack.empty()) break;
            low[parent] = std::min(low[parent], low[v]);
            if (low[v] >= disc[parent] && !block_is_clique({parent, v})) return false;
        }
    }
    return true;
}

bool is_complete(const Graph& g) {
    const std::size_t n = g.vertex_count();
    return g.edge_count() == n * (n - 1) / 2;
}

}  // namespace vsz
