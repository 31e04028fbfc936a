#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "vsz/graph.hpp"

namespace vsz {

/// The two ordered multisets behind W^alpha and Sz^alpha.
///
/// d_seq holds the N = n(n-1)/2 pairwise distances and n_seq the m edge terms
/// n_u(v) * n_v(u), both sorted in decreasing order. n_seq majorizes d_seq for
/// every connected graph (checked by assertion in debug builds).
struct IndexProfile {
    std::vector<std::int32_t> d_seq;
    std::vector<std::int64_t> n_seq;
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t N = 0;
    std::int32_t diam = 0;
    bool bipartite = false;
};

/// Edge terms n_u(v) * n_v(u), sorted decreasing. Vertices equidistant from
/// both endpoints count toward neither side.
std::vector<std::int64_t> szeged_terms(const Graph& g, const DistanceMatrix& dm);

/// Upper-triangle entries of dm, sorted decreasing.
std::vector<std::int32_t> distance_sequence(const DistanceMatrix& dm);

/// Throws DisconnectedGraphError for disconnected input.
IndexProfile make_profile(const Graph& g);
IndexProfile make_profile(const Graph& g, const DistanceMatrix& dm);

double wiener_alpha(const IndexProfile& p, double alpha);
double szeged_alpha(const IndexProfile& p, double alpha);
double gap(const IndexProfile& p, double alpha);
double gap_derivative(const IndexProfile& p, double alpha);

struct ClassicalIndices {
    std::int64_t wiener = 0;
    std::int64_t szeged = 0;
};

ClassicalIndices classical_indices(const IndexProfile& p);

/// A base value with its multiplicity in one of the two sums.
struct WeightedTerm {
    std::int64_t base = 1;
    std::int64_t count = 0;
};

/// h(alpha) = Sz^alpha - W^alpha evaluated over run-length compressed terms.
///
/// Built either from an IndexProfile or from explicit term lists (closed
/// forms). Evaluation is pure; instances are safe to share across threads.
class GapFunction {
public:
    explicit GapFunction(const IndexProfile& p);
    GapFunction(std::vector<WeightedTerm> szeged_terms, std::vector<WeightedTerm> wiener_terms);

    double szeged(double alpha) const;
    double wiener(double alpha) const;
    double value(double alpha) const;
    double derivative(double alpha) const;

    std::int64_t szeged_exact() const noexcept { return szeged_exact_; }
    std::int64_t wiener_exact() const noexcept { return wiener_exact_; }
    std::int64_t edge_count() const noexcept { return edge_count_; }
    std::int64_t pair_count() const noexcept { return pair_count_; }

    /// Identical multisets, so h vanishes for every alpha (complete graphs).
    bool degenerate() const noexcept { return szeged_ == wiener_; }

    /// Absolute tolerance on |h| at a root: 1e-9 times the classical Szeged index.
    double root_tolerance() const noexcept { return 1e-9 * static_cast<double>(szeged_exact_); }

private:
    struct Term {
        double base;
        double log_base;
        double count;
        friend bool operator==(const Term& a, const Term& b) { return a.base == b.base && a.count == b.count; }
    };

    static std::vector<Term> compress(std::vector<WeightedTerm> terms);
    static double power_sum(const std::vector<Term>& terms, double alpha);
    static double log_weighted_sum(const std::vector<Term>& terms, double alpha);

    std::vector<Term> szeged_;
    std::vector<Term> wiener_;
    std::int64_t szeged_exact_ = 0;
    std::int64_t wiener_exact_ = 0;
    std::int64_t edge_count_ = 0;
    std::int64_t pair_count_ = 0;
};

}  // namespace vsz
