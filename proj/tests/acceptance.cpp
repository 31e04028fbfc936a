// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "support.hpp"
#include "vsz/critical.hpp"
#include "vsz/errors.hpp"
#include "vsz/family_gkl.hpp"
#include "vsz/graph.hpp"
#include "vsz/invariants.hpp"
#include "vsz/majorization.hpp"
#include "vsz/randgen.hpp"

using namespace vsz;
using namespace vsz::testing;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            if (pass) detail.clear();
            pass = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

std::string fmt(const char* format, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

double ms_since(Clock::time_point t) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t).count();
}

std::size_t roots_in_open_unit(const RootReport& r) {
    return static_cast<std::size_t>(
        std::ranges::count_if(r.roots, [](const Root& x) { return x.alpha > 0.0 && x.alpha < 1.0; }));
}

bool rel_close(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

// Multiset of a sorted sequence as value -> count.
template <typename T>
std::map<std::int64_t, std::int64_t> histogram(const std::vector<T>& v) {
    std::map<std::int64_t, std::int64_t> h;
    for (const auto x : v) ++h[static_cast<std::int64_t>(x)];
    return h;
}

// Brute-force profile pieces: Floyd-Warshall distances and per-edge strict counts.
struct BruteIndices {
    std::int64_t wiener = 0;
    std::int64_t szeged = 0;
};

BruteIndices brute(const Graph& g) {
    const auto d = floyd_warshall(g);
    return {brute_wiener(d), brute_szeged(g, d)};
}

bool plain_prefix_dominates(std::vector<std::int64_t> x, std::vector<std::int64_t> y) {
    std::ranges::sort(x, std::greater<>());
    std::ranges::sort(y, std::greater<>());
    const std::size_t len = std::max(x.size(), y.size());
    x.resize(len, 0);
    y.resize(len, 0);
    std::int64_t sx = 0, sy = 0;
    for (std::size_t i = 0; i < len; ++i) {
        sx += x[i];
        sy += y[i];
        if (sx < sy) return false;
    }
    return true;
}

const double kC4Root = std::log2((1.0 + std::sqrt(17.0)) / 4.0);
constexpr double kG520Roots[] = {0.37148463668590868, 0.55930629443395053, 0.75467591126705811};

Outcome criterion_1() {
    Outcome o;
    const gkl::Params params{520, 82};

    const auto t0 = Clock::now();
    const GapFunction closed = gkl::closed_form_gap(params);
    const RootReport closed_report = find_roots(closed, gkl::multiroot_scan());
    const double closed_ms = ms_since(t0);

    const auto t1 = Clock::now();
    const IndexProfile p = make_profile(gkl::build(params));
    const GapFunction direct(p);
    const RootReport direct_report = find_roots(direct, gkl::multiroot_scan());
    const double direct_ms = ms_since(t1);

    o.require(p.n == 603, "direct graph has " + std::to_string(p.n) + " vertices");
    o.require(roots_in_open_unit(closed_report) == 3, "closed form roots in (0,1): " +
                                                           std::to_string(roots_in_open_unit(closed_report)));
    o.require(roots_in_open_unit(direct_report) == 3,
              "direct roots in (0,1): " + std::to_string(roots_in_open_unit(direct_report)));
    o.require(closed.value(1e-3) < 0 && p.m < p.N, "h keeps the sign of h(0) below the scan");
    for (const auto* rep : {&closed_report, &direct_report}) {
        if (rep->roots.size() != 3) continue;
        for (std::size_t i = 0; i < 3; ++i) {
            o.require(std::abs(rep->roots[i].alpha - kG520Roots[i]) <= 1e-8, fmt("root %zu off oracle", i));
            o.require(!rep->roots[i].exact, "roots are sign changes");
        }
    }

    double worst = 0.0;
    for (const double a : {0.25, 0.5, 0.75, 1.0, 2.0}) {
        const double dw = std::abs(closed.wiener(a) - direct.wiener(a)) / direct.wiener(a);
        const double ds = std::abs(closed.szeged(a) - direct.szeged(a)) / direct.szeged(a);
        const double dh = std::abs(closed.value(a) - direct.value(a)) / std::abs(direct.value(a));
        worst = std::max({worst, dw, ds, dh});
    }
    o.require(worst <= 1e-9, fmt("closed vs direct relative difference %.3g", worst));
    o.require(closed_ms < 10.0, fmt("closed form took %.2f ms", closed_ms));
    o.require(direct_ms < 30000.0, fmt("direct path took %.0f ms", direct_ms));
    if (o.pass) {
        o.detail = fmt("3 roots (%.6f, %.6f, %.6f) both ways; max rel diff %.2g; closed %.2f ms, direct %.0f ms",
                       closed_report.roots[0].alpha, closed_report.roots[1].alpha, closed_report.roots[2].alpha,
                       worst, closed_ms, direct_ms);
    }
    return o;
}

Outcome criterion_2() {
    Outcome o;
    std::size_t checked = 0, certified = 0, degenerate = 0;
    auto check = [&](const Graph& g, const std::string& label) {
        ++checked;
        const BruteIndices b = brute(g);
        const IndexProfile p = make_profile(g);
        const auto idx = classical_indices(p);
        o.require(b.szeged - b.wiener == 0, label + ": brute Sz - W = " + std::to_string(b.szeged - b.wiener));
        o.require(idx.szeged == b.szeged && idx.wiener == b.wiener, label + ": library indices differ from brute");
        if (p.m == p.N) {
            ++degenerate;  // a single clique: h vanishes identically
            return;
        }
        const RootReport r = analyze(p);
        const bool ok = r.strong_verdict && r.strong_verdict->kind == StrongVerdictKind::CertifiedUnique &&
                        r.roots.size() == 1 && r.roots[0].alpha == 1.0;
        o.require(ok, label + ": not CertifiedUnique at alpha = 1");
        certified += ok;
    };
    for (std::size_t n = 1; n <= 9; ++n) {
        for (const Graph& t : all_trees(n)) check(t, "tree n=" + std::to_string(n));
    }
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 2000; ++i) {
        const std::size_t n = 3 + static_cast<std::size_t>(i) % 10;
        check(random_block_graph(n, rng), "block n=" + std::to_string(n));
    }
    if (o.pass) {
        o.detail = fmt("%zu graphs (all trees n<=9, 2000 block graphs n<=12): Sz = W; %zu CertifiedUnique at 1, "
                       "%zu complete (h = 0)",
                       checked, certified, degenerate);
    }
    return o;
}

Outcome criterion_3() {
    Outcome o;
    std::mt19937_64 rng(3);
    std::size_t violations = 0;
    const std::size_t total = 10000;
    for (std::size_t i = 0; i < total; ++i) {
        const Graph g = random_connected(2 + i % 11, rng);
        const IndexProfile p = make_profile(g);
        const auto d = floyd_warshall(g);
        std::vector<std::int64_t> dist;
        for (std::size_t u = 0; u < d.size(); ++u)
            for (std::size_t v = u + 1; v < d.size(); ++v) dist.push_back(d[u][v]);
        const bool lib = majorizes(p.n_seq, p.d_seq);
        const bool oracle = plain_prefix_dominates(brute_szeged_terms(g, d), dist);
        violations += !(lib && oracle);
    }
    o.require(violations == 0, std::to_string(violations) + " violations");
    if (o.pass) o.detail = fmt("%zu random connected graphs n<=12, 0 violations", total);
    return o;
}

Outcome criterion_4() {
    Outcome o;
    std::size_t checked = 0, violations = 0;
    auto check = [&](const Graph& g) {
        if (g.vertex_count() < 2 || is_complete(g)) return;
        const GapFunction h(make_profile(g));
        ++checked;
        const bool ok = h.szeged_exact() >= h.wiener_exact() && weak_conjecture_check(h, kDefaultWeakAlphas);
        violations += !ok;
    };
    for (std::size_t n = 2; n <= 6; ++n) {
        for_each_labelled_graph(n, [&](const Graph& g) {
            if (is_connected(g)) check(g);
        });
    }
    for (std::size_t n = 1; n <= 9; ++n) {
        for (const Graph& t : all_trees(n)) check(t);
    }
    std::mt19937_64 rng(4);
    for (int i = 0; i < 10000; ++i) check(random_connected(2 + static_cast<std::size_t>(i) % 11, rng));
    for (int i = 0; i < 2000; ++i) check(random_block_graph(3 + static_cast<std::size_t>(i) % 10, rng));
    check(gkl::build({520, 82}));
    o.require(violations == 0, std::to_string(violations) + " violations");
    if (o.pass) {
        o.detail = fmt("%zu non-complete graphs, alpha in {1.1, 1.5, 2, 3}: 0 violations", checked);
    }
    return o;
}

Outcome criterion_5() {
    Outcome o;
    const std::vector<std::int64_t> x = {625, 81, 81, 16};
    const std::vector<std::int64_t> y = {256, 256, 256, 1};
    o.require(majorizes(x, y), "x does not majorize y");

    // Fourth roots are integers: 5 + 3 + 3 + 2 = 4 + 4 + 4 + 1 = 13.
    std::int64_t fx = 0, fy = 0;
    for (const auto v : x) fx += static_cast<std::int64_t>(std::llround(std::sqrt(std::sqrt(double(v)))));
    for (const auto v : y) fy += static_cast<std::int64_t>(std::llround(std::sqrt(std::sqrt(double(v)))));
    o.require(fx == 13 && fy == 13, "fourth-root sums are not both 13");

    const GapFunction h({{625, 1}, {81, 2}, {16, 1}}, {{256, 3}, {1, 1}});
    o.require(h.value(0.0) == 0.0, "sums differ at alpha = 0");
    o.require(std::abs(h.value(0.25)) <= 1e-12 * 13, fmt("sums differ at 0.25 by %.3g", h.value(0.25)));

    const RootReport r = find_roots(h, ScanOptions{.lo = 0.3, .hi = 1.5});
    o.require(r.roots.size() == 1, "expected one crossing in [0.3, 1.5], found " + std::to_string(r.roots.size()));
    if (r.roots.size() == 1) {
        o.require(std::abs(r.roots[0].alpha - 0.88) <= 0.01, fmt("third crossing at %.6f", r.roots[0].alpha));
        o.require(std::abs(r.roots[0].alpha - 0.8805236074197236) <= 1e-8, "third crossing off oracle");
        if (o.pass) o.detail = fmt("majorizes; equal sums at 0 and 0.25 (13 = 13); third crossing %.10f",
                                   r.roots[0].alpha);
    }
    return o;
}

Outcome criterion_6() {
    Outcome o;
    const RootReport r = find_roots(GapFunction(make_profile(cycle(4))));
    o.require(r.roots.size() == 1, "C4 root count " + std::to_string(r.roots.size()));
    if (r.roots.size() == 1) {
        const double err = std::abs(r.roots[0].alpha - kC4Root);
        o.require(err <= 1e-8, fmt("error %.3g", err));
        if (o.pass) o.detail = fmt("alpha = %.15f, |error| = %.2g", r.roots[0].alpha, err);
    }
    return o;
}

Outcome criterion_7() {
    Outcome o;
    std::string summary;
    for (const std::size_t q : {5, 6, 7, 8, 10}) {
        const IndexProfile p = make_profile(star(q));
        const double qd = static_cast<double>(q);
        const double expected = qd * std::log(qd) - qd * (qd - 1) / 2 * std::log(2.0);
        const double got = gap_derivative(p, 0.0);
        const bool big = q + 1 >= 8;
        o.require(rel_close(got, expected, 1e-12), fmt("q=%zu: h'(0) = %.17g, closed form %.17g", q, got, expected));
        o.require(big ? got < 0 : got > 0, fmt("q=%zu: wrong sign", q));
        o.require(std::signbit(gap_derivative(p, 1e-9)) == std::signbit(got), fmt("q=%zu: sign flips at 1e-9", q));
        summary += fmt("%sq=%zu:%.4f", summary.empty() ? "" : " ", q, got);
    }
    if (o.pass) o.detail = "h'(0+) " + summary + "; negative iff >= 8 vertices";
    return o;
}

Outcome criterion_8() {
    Outcome o;
    std::size_t certified = 0;
    std::map<std::string, std::size_t> kinds;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const std::size_t m = 99 + seed % 16;  // 99..114
        const IndexProfile p = make_profile(random_tree_plus_edges(100, m, seed));
        const RootReport r = analyze(p);
        const bool ok = r.strong_verdict && r.strong_verdict->kind == StrongVerdictKind::CertifiedUnique;
        o.require(ok, fmt("seed %llu (m=%zu) not certified", static_cast<unsigned long long>(seed), m));
        if (ok) {
            ++certified;
            ++kinds[std::string(to_string(r.strong_verdict->certificate.kind))];
        }
    }
    o.require(check_sparse_regime(100, 114).holds, "m = 114 should satisfy the bound");
    o.require(!check_sparse_regime(100, 115).holds, "m = 115 should violate the bound");
    if (o.pass) {
        std::string k;
        for (const auto& [name, count] : kinds) k += fmt("%s%s=%zu", k.empty() ? "" : ",", name.c_str(), count);
        o.detail = fmt("%zu/100 CertifiedUnique (n=100, m in 99..114; %s); bound admits 114, rejects 115",
                       certified, k.c_str());
    }
    return o;
}

Outcome criterion_9() {
    Outcome o;
    std::size_t checked = 0, equal = 0;
    auto check = [&](const Graph& g, const char* label) {
        ++checked;
        const BruteIndices b = brute(g);
        const auto idx = classical_indices(make_profile(g));
        const std::int64_t diff = b.szeged - b.wiener;
        o.require(idx.szeged == b.szeged && idx.wiener == b.wiener, std::string(label) + ": library != brute");
        o.require((diff == 0) == is_block_graph(g), std::string(label) + ": Sz = W disagrees with is_block_graph");
        o.require(diff != 1 && diff != 3, std::string(label) + ": Sz - W = " + std::to_string(diff));
        equal += diff == 0;
    };
    std::mt19937_64 rng(9);
    for (int i = 0; i < 5000; ++i) check(random_connected(2 + static_cast<std::size_t>(i) % 7, rng), "random");
    for (std::size_t n = 1; n <= 8; ++n) {
        for (const Graph& t : all_trees(n)) check(t, "tree");
    }
    if (o.pass) o.detail = fmt("%zu graphs (5000 random n<=8, all trees n<=8), %zu with Sz = W", checked, equal);
    return o;
}

// Random x majorizing y: start from y, move mass from later to earlier entries,
// optionally add to the top entry, then re-sort and trim zeros.
std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>> random_majorizing_pair(std::mt19937_64& rng) {
    auto uniform = [&](std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
    };
    std::vector<std::int64_t> y(static_cast<std::size_t>(uniform(1, 12)));
    for (auto& v : y) v = uniform(0, 40);
    std::ranges::sort(y, std::greater<>());
    std::vector<std::int64_t> x = y;
    const auto moves = uniform(0, 6);
    for (std::int64_t t = 0; t < moves && x.size() > 1; ++t) {
        const auto j = static_cast<std::size_t>(uniform(1, static_cast<std::int64_t>(x.size()) - 1));
        const auto i = static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(j) - 1));
        if (x[j] == 0) continue;
        const auto amount = uniform(1, x[j]);
        x[j] -= amount;
        x[i] += amount;
        std::ranges::sort(x, std::greater<>());
    }
    if (uniform(0, 2) == 0) x[0] += uniform(1, 20);
    while (!x.empty() && x.back() == 0) x.pop_back();
    return {x, y};
}

Outcome criterion_10() {
    Outcome o;
    const std::vector<std::pair<const char*, std::function<double(double)>>> fs = {
        {"x^2", [](double v) { return v * v; }},
        {"x^3", [](double v) { return v * v * v; }},
        {"x*2^(x-1)", [](double v) { return v * std::exp2(v - 1.0); }},
    };
    std::mt19937_64 rng(10);
    std::size_t pairs = 0, violations = 0, strict = 0;
    for (int i = 0; i < 10000; ++i) {
        const auto [x, y] = random_majorizing_pair(rng);
        if (!plain_prefix_dominates(x, y)) {
            o.require(false, "generator produced a non-majorizing pair");
            break;
        }
        ++pairs;
        strict += x != y;
        for (const auto& [name, f] : fs) violations += !karamata_gap_check(x, y, f);
    }
    o.require(violations == 0, std::to_string(violations) + " violations");
    if (o.pass) {
        o.detail = fmt("%zu pairs (%zu distinct) x 3 functions: 0 violations", pairs, strict);
    }
    return o;
}

Outcome criterion_11() {
    Outcome o;
    const gkl::Params params{8, 5};
    const Graph g = gkl::build(params);
    const IndexProfile p = make_profile(g);
    const std::map<std::int64_t, std::int64_t> distances = {{1, 33}, {2, 20}, {3, 11}, {4, 10}, {5, 9}, {6, 8}};
    const std::map<std::int64_t, std::int64_t> edges = {{4, 8},  {9, 12}, {8, 8},  {45, 1},
                                                        {40, 1}, {33, 1}, {24, 1}, {13, 1}};
    o.require(histogram(p.d_seq) == distances, "distance multiset mismatch");
    o.require(histogram(p.n_seq) == edges, "Szeged edge classes mismatch");

    std::map<std::int64_t, std::int64_t> closed_w, closed_sz;
    for (const auto& t : gkl::wiener_terms(params)) closed_w[t.base] += t.count;
    for (const auto& t : gkl::szeged_terms(params)) closed_sz[t.base] += t.count;
    o.require(closed_w == distances, "closed-form distance terms mismatch");
    o.require(closed_sz == edges, "closed-form edge terms mismatch");
    if (o.pass) o.detail = "n=14 m=33: distances {1:33,2:20,3:11,4:10,5:9,6:8}; edges 8x4, 12x9, 8x8, {45,40,33,24,13}";
    return o;
}

Outcome diameter_two_smoke() {
    Outcome o;
    std::string summary;
    for (const std::size_t n : {200, 400}) {
        const std::size_t m = n * (n - 1) / 6 + 1;
        std::size_t hits = 0;
        for (std::uint64_t seed = 0; seed < 100; ++seed) hits += diameter(random_gnm_connected(n, m, seed)) == 2;
        o.require(hits >= 95, fmt("n=%zu: %zu/100 with diameter 2", n, hits));
        summary += fmt("%sn=%zu:%zu/100", summary.empty() ? "" : " ", n, hits);
    }
    if (o.pass) o.detail = "diameter 2 at m = N/3 + 1: " + summary;
    return o;
}

}  // namespace

int main() {
    struct Entry {
        const char* id;
        const char* title;
        Outcome (*run)();
    };
    const Entry entries[] = {
        {"1", "G_{520,82} has three critical exponents", criterion_1},
        {"2", "block graphs: Sz = W and certified at alpha = 1", criterion_2},
        {"3", "edge terms majorize distances", criterion_3},
        {"4", "h(alpha) > h(1) >= 0 for alpha > 1", criterion_4},
        {"5", "sequence example crossings", criterion_5},
        {"6", "C_4 critical exponent", criterion_6},
        {"7", "star derivative threshold", criterion_7},
        {"8", "sparse random graphs certified", criterion_8},
        {"9", "Sz = W iff block graph; Sz - W not in {1, 3}", criterion_9},
        {"10", "Karamata gap oracle", criterion_10},
        {"11", "G_{8,5} census", criterion_11},
        {"smoke", "dense random graphs have diameter 2", diameter_two_smoke},
    };
    int failures = 0;
    for (const auto& e : entries) {
        const auto t = Clock::now();
        Outcome o;
        try {
            o = e.run();
        } catch (const std::exception& ex) {
            o.pass = false;
            o.detail = std::string("exception: ") + ex.what();
        }
        failures += !o.pass;
        std::printf("[%s] criterion %s: %s -- %s (%.0f ms)\n", o.pass ? "PASS" : "FAIL", e.id, e.title,
                    o.detail.c_str(), ms_since(t));
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria failed\n", failures, std::size(entries));
    return failures == 0 ? 0 : 1;
}
