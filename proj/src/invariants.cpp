#include "vsz/invariants.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <functional>
#include <map>

#include "parallel.hpp"
#include "vsz/errors.hpp"
#include "vsz/summation.hpp"

namespace vsz {

namespace {

constexpr std::size_t kParallelEdgeThreshold = 4096;

// Sum of count * f(value) over runs of equal values in a sorted sequence.
template <typename Seq, typename F>
double run_length_sum(const Seq& seq, F&& f) {
    NeumaierSum acc;
    for (std::size_t i = 0; i < seq.size();) {
        std::size_t j = i;
        while (j < seq.size() && seq[j] == seq[i]) ++j;
        acc += static_cast<double>(j - i) * f(static_cast<double>(seq[i]));
        i = j;
    }
    return acc.value();
}

template <typename Seq>
double power_sum(const Seq& seq, double alpha) {
    return run_length_sum(seq, [alpha](double x) { return power(x, alpha); });
}

template <typename Seq>
double log_weighted_sum(const Seq& seq, double alpha) {
    return run_length_sum(seq, [alpha](double x) { return std::log(x) * power(x, alpha); });
}

template <typename Seq>
std::vector<WeightedTerm> run_lengths(const Seq& seq) {
    std::vector<WeightedTerm> out;
    for (auto x : seq) {
        if (!out.empty() && out.back().base == static_cast<std::int64_t>(x)) {
            ++out.back().count;
        } else {
            out.push_back({static_cast<std::int64_t>(x), 1});
        }
    }
    return out;
}

[[maybe_unused]] bool prefix_dominates(const IndexProfile& p) {
    std::int64_t sn = 0;
    std::int64_t sd = 0;
    for (std::size_t k = 0; k < p.N; ++k) {
        if (k < p.m) sn += p.n_seq[k];
        sd += p.d_seq[k];
        if (sn < sd) return false;
    }
    return true;
}

}  // namespace

std::vector<std::int64_t> szeged_terms(const Graph& g, const DistanceMatrix& dm) {
    const auto edges = g.edges();
    const std::size_t n = g.vertex_count();
    std::vector<std::int64_t> terms(edges.size());
    detail::parallel_for(edges.size(), edges.size() * n >= kParallelEdgeThreshold * 64, [&](std::size_t i) {
        const auto du = dm.row(edges[i].u);
        const auto dv = dm.row(edges[i].v);
        std::int64_t closer_u = 0;
        std::int64_t closer_v = 0;
        for (std::size_t w = 0; w < n; ++w) {
            closer_u += du[w] < dv[w];
            closer_v += dv[w] < du[w];
        }
        terms[i] = closer_u * closer_v;
    });
    std::ranges::sort(terms, std::greater<>{});
    return terms;
}

std::vector<std::int32_t> distance_sequence(const DistanceMatrix& dm) {
    const std::size_t n = dm.size();
    std::vector<std::int32_t> seq;
    seq.reserve(n * (n - (n > 0 ? 1 : 0)) / 2);
    for (Vertex u = 0; u < n; ++u) {
        const auto row = dm.row(u);
        seq.insert(seq.end(), row.begin() + u + 1, row.end());
    }
    std::ranges::sort(seq, std::greater<>{});
    return seq;
}

IndexProfile make_profile(const Graph& g) {
    return make_profile(g, all_pairs_distances(g));
}

IndexProfile make_profile(const Graph& g, const DistanceMatrix& dm) {
    IndexProfile p;
    p.n = g.vertex_count();
    p.m = g.edge_count();
    p.N = p.n * (p.n - (p.n > 0 ? 1 : 0)) / 2;
    p.d_seq = distance_sequence(dm);
    p.n_seq = szeged_terms(g, dm);
    p.diam = p.d_seq.empty() ? 0 : p.d_seq.front();
    p.bipartite = is_bipartite(g);
    assert(prefix_dominates(p));
    return p;
}

double wiener_alpha(const IndexProfile& p, double alpha) { return power_sum(p.d_seq, alpha); }

double szeged_alpha(const IndexProfile& p, double alpha) { return power_sum(p.n_seq, alpha); }

double gap(const IndexProfile& p, double alpha) {
    if (alpha == 1.0) {
        const auto c = classical_indices(p);
        return static_cast<double>(c.szeged - c.wiener);
    }
    return szeged_alpha(p, alpha) - wiener_alpha(p, alpha);
}

double gap_derivative(const IndexProfile& p, double alpha) {
    return log_weighted_sum(p.n_seq, alpha) - log_weighted_sum(p.d_seq, alpha);
}

ClassicalIndices classical_indices(const IndexProfile& p) {
    ClassicalIndices c;
    for (auto d : p.d_seq) c.wiener += d;
    for (auto x : p.n_seq) c.szeged += x;
    return c;
}

GapFunction::GapFunction(const IndexProfile& p) : GapFunction(run_lengths(p.n_seq), run_lengths(p.d_seq)) {}

GapFunction::GapFunction(std::vector<WeightedTerm> szeged_terms, std::vector<WeightedTerm> wiener_terms) {
    for (const auto& t : szeged_terms) {
        szeged_exact_ += t.base * t.count;
        edge_count_ += t.count;
    }
    for (const auto& t : wiener_terms) {
        wiener_exact_ += t.base * t.count;
        pair_count_ += t.count;
    }
    szeged_ = compress(std::move(szeged_terms));
    wiener_ = compress(std::move(wiener_terms));
}

std::vector<GapFunction::Term> GapFunction::compress(std::vector<WeightedTerm> terms) {
    std::map<std::int64_t, std::int64_t, std::greater<>> merged;
    for (const auto& t : terms) {
        if (t.base < 1) throw std::invalid_argument("gap terms must have base >= 1");
        if (t.count < 0) throw std::invalid_argument("gap terms must have nonnegative count");
        if (t.count > 0) merged[t.base] += t.count;
    }
    std::vector<Term> out;
    out.reserve(merged.size());
    for (auto [base, count] : merged) {
        const double b = static_cast<double>(base);
        out.push_back({b, std::log(b), static_cast<double>(count)});
    }
    return out;
}

double GapFunction::power_sum(const std::vector<Term>& terms, double alpha) {
    NeumaierSum acc;
    for (const auto& t : terms) {
        const double x = alpha == 0.0 ? 1.0 : alpha == 1.0 ? t.base : std::exp(alpha * t.log_base);
        acc += t.count * x;
    }
    return acc.value();
}

double GapFunction::log_weighted_sum(const std::vector<Term>& terms, double alpha) {
    NeumaierSum acc;
    for (const auto& t : terms) {
        if (t.base == 1.0) continue;
        acc += t.count * t.log_base * std::exp(alpha * t.log_base);
    }
    return acc.value();
}

double GapFunction::szeged(double alpha) const {
    if (alpha == 1.0) return static_cast<double>(szeged_exact_);
    return power_sum(szeged_, alpha);
}

double GapFunction::wiener(double alpha) const {
    if (alpha == 1.0) return static_cast<double>(wiener_exact_);
    return power_sum(wiener_, alpha);
}

double GapFunction::value(double alpha) const {
    if (alpha == 0.0) return static_cast<double>(edge_count_ - pair_count_);
    if (alpha == 1.0) return static_cast<double>(szeged_exact_ - wiener_exact_);
    if (degenerate()) return 0.0;
    return szeged(alpha) - wiener(alpha);
}

double GapFunction::derivative(double alpha) const {
    if (degenerate()) return 0.0;
    return log_weighted_sum(szeged_, alpha) - log_weighted_sum(wiener_, alpha);
}

}  // namespace vsz
