#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

#include "vsz/graph.hpp"

namespace vsz {

/// xoshiro256** seeded through splitmix64 (Blackman and Vigna). Streams are
/// fully specified, so other implementations can reproduce them bit for bit.
class Xoshiro256 {
public:
    explicit Xoshiro256(std::uint64_t seed);

    std::uint64_t next() noexcept;

    /// Uniform integer in [0, bound) by rejection on the top of the range.
    std::uint64_t below(std::uint64_t bound);

    /// Uniform double in [0, 1) from the top 53 bits.
    double uniform01() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::array<std::uint64_t, 4> s_{};
};

inline constexpr std::size_t kRetryCap = 100'000;

/// Uniform connected graph with n vertices and m edges by rejection from G(n, m).
/// Throws std::invalid_argument unless n-1 <= m <= n(n-1)/2, RetryCapExceeded
/// when no connected sample is found within retry_cap attempts.
Graph random_gnm_connected(std::size_t n, std::size_t m, std::uint64_t seed, std::size_t retry_cap = kRetryCap);

/// G(n, p) conditioned on connectivity by rejection. Requires 0 < p <= 1.
Graph random_gnp_connected(std::size_t n, double p, std::uint64_t seed, std::size_t retry_cap = kRetryCap);

/// Uniform labelled spanning tree (Pruefer code) plus m-n+1 uniformly chosen
/// extra edges. Always connected, but not uniform over connected graphs;
/// meant for sparse regimes where rejection from G(n, m) never succeeds.
Graph random_tree_plus_edges(std::size_t n, std::size_t m, std::uint64_t seed);

}  // namespace vsz
