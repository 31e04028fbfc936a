#include "vsz/family_gkl.hpp"

#include <stdexcept>

#include "parallel.hpp"
#include "vsz/summation.hpp"

namespace vsz::gkl {

namespace {

std::int64_t choose2(std::int64_t x) { return x * (x - 1) / 2; }

double weighted_power_sum(const std::vector<WeightedTerm>& terms, double alpha) {
    NeumaierSum acc;
    for (const auto& t : terms) acc += static_cast<double>(t.count) * power(static_cast<double>(t.base), alpha);
    return acc.value();
}

std::int64_t weighted_sum(const std::vector<WeightedTerm>& terms) {
    std::int64_t s = 0;
    for (const auto& t : terms) s += t.count * t.base;
    return s;
}

}  // namespace

void validate(const Params& p) {
    if (p.k < 6) throw std::invalid_argument("G_{k,ell} needs k >= 6");
    if (p.ell < 1) throw std::invalid_argument("G_{k,ell} needs ell >= 1");
}

std::size_t vertex_count(const Params& p) { return static_cast<std::size_t>(p.k + p.ell + 1); }

std::size_t edge_count(const Params& p) { return static_cast<std::size_t>(choose2(p.k) + p.ell); }

Graph build(const Params& p) {
    validate(p);
    const auto k = static_cast<Vertex>(p.k);
    const auto ell = static_cast<Vertex>(p.ell);
    std::vector<Edge> edges;
    edges.reserve(edge_count(p));
    for (Vertex i = 0; i < k; ++i) {
        for (Vertex j = i + 1; j < k; ++j) {
            const bool on_cycle = j == i + 1 || (i == 0 && j == k - 1);
            if (!on_cycle) edges.push_back({i, j});
        }
        edges.push_back({i, k});  // v_{i+1} -- u_1
    }
    for (Vertex j = 0; j < ell; ++j) edges.push_back({k + j, k + j + 1});
    return Graph(vertex_count(p), edges);
}

std::vector<WeightedTerm> wiener_terms(const Params& p) {
    validate(p);
    const std::int64_t k = p.k;
    const std::int64_t ell = p.ell;
    std::vector<WeightedTerm> terms;
    terms.push_back({1, choose2(k) + ell});
    terms.push_back({2, 2 * k + ell - 1});
    for (std::int64_t i = 3; i <= ell + 1; ++i) terms.push_back({i, k + ell + 1 - i});
    return terms;
}

std::vector<WeightedTerm> szeged_terms(const Params& p) {
    validate(p);
    const std::int64_t k = p.k;
    const std::int64_t ell = p.ell;
    std::vector<WeightedTerm> terms;
    terms.push_back({4, k});
    terms.push_back({9, choose2(k) - 2 * k});
    terms.push_back({ell + 3, k});
    for (std::int64_t i = 1; i <= ell; ++i) terms.push_back({(k + i) * (ell + 1 - i), 1});
    return terms;
}

double wiener_alpha_closed(const Params& p, double alpha) { return weighted_power_sum(wiener_terms(p), alpha); }

double szeged_alpha_closed(const Params& p, double alpha) { return weighted_power_sum(szeged_terms(p), alpha); }

std::int64_t wiener_closed_exact(const Params& p) { return weighted_sum(wiener_terms(p)); }

std::int64_t szeged_closed_exact(const Params& p) { return weighted_sum(szeged_terms(p)); }

GapFunction closed_form_gap(const Params& p) { return GapFunction(szeged_terms(p), wiener_terms(p)); }

ScanOptions multiroot_scan() {
    ScanOptions opts;
    opts.hi = 1.0;
    return opts;
}

std::size_t count_roots_closed(const Params& p, const ScanOptions& opts) {
    return find_roots(closed_form_gap(p), opts).roots.size();
}

std::vector<MultirootHit> search_multiroot(Range k, Range ell, const ScanOptions& opts) {
    if (k.lo > k.hi || ell.lo > ell.hi) return {};
    if (k.lo < 6 || ell.lo < 1) throw std::invalid_argument("search ranges need k >= 6 and ell >= 1");
    const auto ks = static_cast<std::size_t>(k.hi - k.lo + 1);
    const auto ls = static_cast<std::size_t>(ell.hi - ell.lo + 1);
    std::vector<std::size_t> counts(ks * ls);
    detail::parallel_for(counts.size(), counts.size() > 1, [&](std::size_t idx) {
        const Params p{k.lo + static_cast<std::int64_t>(idx / ls), ell.lo + static_cast<std::int64_t>(idx % ls)};
        counts[idx] = count_roots_closed(p, opts);
    });
    std::vector<MultirootHit> hits;
    for (std::size_t idx = 0; idx < counts.size(); ++idx) {
        if (counts[idx] >= 3) {
            hits.push_back({{k.lo + static_cast<std::int64_t>(idx / ls), ell.lo + static_cast<std::int64_t>(idx % ls)},
                            counts[idx]});
        }
    }
    return hits;
}

}  // namespace vsz::gkl
