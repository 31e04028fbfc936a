#include "vsz/randgen.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "vsz/errors.hpp"

namespace vsz {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

std::uint64_t pair_count(std::size_t n) { return std::uint64_t{n} * (n > 0 ? n - 1 : 0) / 2; }

// Lexicographic index of the pair (u, v), u < v, among all pairs of [0, n).
Edge pair_from_index(std::uint64_t idx, std::size_t n) {
    Vertex u = 0;
    std::uint64_t row = n - 1;
    while (idx >= row) {
        idx -= row;
        --row;
        ++u;
    }
    return {u, static_cast<Vertex>(u + 1 + idx)};
}

// Floyd's algorithm: `count` distinct values from [0, total).
std::vector<std::uint64_t> sample_distinct(Xoshiro256& rng, std::uint64_t total, std::size_t count) {
    std::unordered_set<std::uint64_t> chosen;
    chosen.reserve(count * 2);
    std::vector<std::uint64_t> out;
    out.reserve(count);
    for (std::uint64_t j = total - count; j < total; ++j) {
        const std::uint64_t t = rng.below(j + 1);
        const std::uint64_t pick = chosen.contains(t) ? j : t;
        chosen.insert(pick);
        out.push_back(pick);
    }
    return out;
}

template <typename Sample>
Graph rejection_loop(std::size_t retry_cap, Sample&& sample) {
    for (std::size_t attempt = 0; attempt < retry_cap; ++attempt) {
        Graph g = sample();
        if (is_connected(g)) return g;
    }
    throw RetryCapExceeded(retry_cap);
}

}  // namespace

Xoshiro256::Xoshiro256(std::uint64_t seed) {
    for (auto& word : s_) word = splitmix64(seed);
}

std::uint64_t Xoshiro256::next() noexcept {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

std::uint64_t Xoshiro256::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("bound must be positive");
    // Largest multiple of bound that fits; draws at or above it are rejected.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return x % bound;
}

Graph random_gnm_connected(std::size_t n, std::size_t m, std::uint64_t seed, std::size_t retry_cap) {
    if (n == 0 || m + 1 < n || m > pair_count(n)) {
        throw std::invalid_argument("infeasible (n, m): need n-1 <= m <= n(n-1)/2");
    }
    Xoshiro256 rng(seed);
    const std::uint64_t total = pair_count(n);
    return rejection_loop(retry_cap, [&] {
        std::vector<Edge> edges;
        edges.reserve(m);
        for (auto idx : sample_distinct(rng, total, m)) edges.push_back(pair_from_index(idx, n));
        return Graph(n, edges);
    });
}

Graph random_gnp_connected(std::size_t n, double p, std::uint64_t seed, std::size_t retry_cap) {
    if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("need 0 < p <= 1");
    if (n == 0) throw std::invalid_argument("need n >= 1");
    Xoshiro256 rng(seed);
    return rejection_loop(retry_cap, [&] {
        std::vector<Edge> edges;
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = u + 1; v < n; ++v) {
                if (rng.uniform01() < p) edges.push_back({u, v});
            }
        }
        return Graph(n, edges);
    });
}

Graph random_tree_plus_edges(std::size_t n, std::size_t m, std::uint64_t seed) {
    if (n == 0 || m + 1 < n || m > pair_count(n)) {
        throw std::invalid_argument("infeasible (n, m): need n-1 <= m <= n(n-1)/2");
    }
    Xoshiro256 rng(seed);
    std::vector<Edge> edges;
    edges.reserve(m);

    if (n == 2) {
        edges.push_back({0, 1});
    } else if (n > 2) {
        std::vector<Vertex> code(n - 2);
        for (auto& c : code) c = static_cast<Vertex>(rng.below(n));
        std::vector<std::size_t> degree(n, 1);
        for (Vertex c : code) ++degree[c];
        std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
        for (Vertex v = 0; v < n; ++v) {
            if (degree[v] == 1) leaves.push(v);
        }
        for (Vertex c : code) {
            const Vertex leaf = leaves.top();
            leaves.pop();
            edges.push_back({std::min(leaf, c), std::max(leaf, c)});
            if (--degree[c] == 1) leaves.push(c);
        }
        const Vertex a = leaves.top();
        leaves.pop();
        const Vertex b = leaves.top();
        edges.push_back({std::min(a, b), std::max(a, b)});
    }

    std::unordered_set<std::uint64_t> present;
    for (const Edge& e : edges) present.insert((std::uint64_t{e.u} << 32) | e.v);
    // Dense targets would make pair rejection slow; draw the extra edges as
    // distinct indices over the non-tree pairs instead.
    std::vector<std::uint64_t> free_pairs;
    const std::size_t extra = m - edges.size();
    if (extra > 0) {
        free_pairs.reserve(pair_count(n) - edges.size());
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = u + 1; v < n; ++v) {
                const std::uint64_t key = (std::uint64_t{u} << 32) | v;
                if (!present.contains(key)) free_pairs.push_back(key);
            }
        }
        for (auto pick : sample_distinct(rng, free_pairs.size(), extra)) {
            const std::uint64_t key = free_pairs[pick];
            edges.push_back({static_cast<Vertex>(key >> 32), static_cast<Vertex>(key & 0xffffffffULL)});
        }
    }
    return Graph(n, edges);
}

}  // namespace vsz
