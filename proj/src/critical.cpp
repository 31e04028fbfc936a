#include "vsz/critical.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "parallel.hpp"
#include "vsz/errors.hpp"

namespace vsz {

namespace {

int sign_of(double x) { return (x > 0.0) - (x < 0.0); }

// Above this many (grid points * terms) grid evaluation is spread across threads.
constexpr std::size_t kParallelGridWork = 1 << 22;

}  // namespace

std::string_view to_string(StrongVerdictKind kind) {
    switch (kind) {
        case StrongVerdictKind::CertifiedUnique: return "CertifiedUnique";
        case StrongVerdictKind::MultipleRoots: return "MultipleRoots";
        case StrongVerdictKind::SingleRootUncertified: return "SingleRootUncertified";
        case StrongVerdictKind::NoRootInScan: return "NoRootInScan";
    }
    return "NoRootInScan";
}

RootReport find_roots(const GapFunction& h, const ScanOptions& opts) {
    if (!(opts.lo > 0.0) || !(opts.hi > opts.lo)) throw std::invalid_argument("scan interval must satisfy 0 < lo < hi");
    if (!(opts.grid_step > 0.0)) throw std::invalid_argument("grid step must be positive");
    if (!(opts.tol_x > 0.0)) throw std::invalid_argument("tol_x must be positive");
    if (h.degenerate()) throw DegenerateGapError();

    RootReport report;
    report.lo = opts.lo;
    report.hi = opts.hi;
    report.tol_f = h.root_tolerance();

    const auto cells = static_cast<std::size_t>(std::ceil((opts.hi - opts.lo) / opts.grid_step - 1e-9));
    std::vector<double> xs;
    xs.reserve(cells + 2);
    for (std::size_t i = 0; i < cells; ++i) xs.push_back(opts.lo + static_cast<double>(i) * opts.grid_step);
    xs.push_back(opts.hi);
    // h(1) is exact on the integer path, so alpha = 1 is always a grid point.
    if (opts.lo < 1.0 && 1.0 < opts.hi) {
        const auto it = std::ranges::lower_bound(xs, 1.0);
        if (*it != 1.0) xs.insert(it, 1.0);
    }

    std::vector<double> hs(xs.size());
    const std::size_t work = xs.size() * static_cast<std::size_t>(h.edge_count() + 64);
    detail::parallel_for(xs.size(), work >= kParallelGridWork, [&](std::size_t i) { hs[i] = h.value(xs[i]); });

    const double tol_f = report.tol_f;
    auto derivative_sign = [&](double alpha) {
        const double d = h.derivative(alpha);
        return std::abs(d) <= tol_f ? Sign::Zero : d > 0 ? Sign::Positive : Sign::Negative;
    };

    const std::size_t last = xs.size() - 1;
    for (std::size_t i = 0; i <= last; ++i) {
        const int s = sign_of(hs[i]);
        if (s == 0) {
            const int left = i > 0 ? sign_of(hs[i - 1]) : 0;
            const int right = i < last ? sign_of(hs[i + 1]) : 0;
            if (left * right < 0 || (left == 0) != (right == 0)) {
                report.roots.push_back({xs[i], xs[i], xs[i], derivative_sign(xs[i]), true});
            } else {
                report.suspected_tangencies.push_back({i > 0 ? xs[i - 1] : xs[i], i < last ? xs[i + 1] : xs[i], 0.0});
            }
            continue;
        }
        if (i > 0 && i < last && std::abs(hs[i]) < tol_f && sign_of(hs[i - 1]) == s && sign_of(hs[i + 1]) == s &&
            std::abs(hs[i]) <= std::abs(hs[i - 1]) && std::abs(hs[i]) <= std::abs(hs[i + 1])) {
            report.suspected_tangencies.push_back({xs[i - 1], xs[i + 1], std::abs(hs[i])});
        }
        if (i == last) break;
        const int s_next = sign_of(hs[i + 1]);
        if (s_next == 0 || s_next == s) continue;

        double a = xs[i];
        double b = xs[i + 1];
        bool exact = false;
        while (b - a > opts.tol_x) {
            const double mid = a + (b - a) / 2;
            if (mid <= a || mid >= b) break;
            const int sm = sign_of(h.value(mid));
            if (sm == 0) {
                a = b = mid;
                exact = true;
                break;
            }
            (sm == s ? a : b) = mid;
        }
        const double alpha = exact ? a : a + (b - a) / 2;
        report.roots.push_back({alpha, a, b, derivative_sign(alpha), exact});
    }
    return report;
}

StrongVerdict strong_conjecture_verdict(const IndexProfile& p, const RootReport& report) {
    if (report.lo > 0.01 || report.hi < 1.5) {
        throw std::invalid_argument("verdict needs a scan covering (0.01, 1.5]");
    }
    StrongVerdict v;
    if (report.roots.empty()) {
        v.kind = StrongVerdictKind::NoRootInScan;
        v.certificate.detail = "no sign change found in scan interval";
    } else if (report.roots.size() >= 2) {
        v.kind = StrongVerdictKind::MultipleRoots;
    } else {
        v.certificate = certify_uniqueness(p, report.roots.front().alpha);
        v.kind = v.certificate.holds ? StrongVerdictKind::CertifiedUnique : StrongVerdictKind::SingleRootUncertified;
    }
    return v;
}

bool weak_conjecture_check(const GapFunction& h, std::span<const double> alphas) {
    if (std::ranges::any_of(alphas, [](double a) { return !(a > 1.0); })) {
        throw std::invalid_argument("weak conjecture check needs alpha > 1");
    }
    if (h.degenerate()) throw DegenerateGapError();
    const double h1 = h.value(1.0);
    if (h1 < 0.0) return false;
    return std::ranges::all_of(alphas, [&](double a) { return h.value(a) > h1; });
}

RootReport analyze(const IndexProfile& p, const ScanOptions& opts) {
    const GapFunction h(p);
    RootReport report = find_roots(h, opts);
    report.strong_verdict = strong_conjecture_verdict(p, report);
    report.weak_check = weak_conjecture_check(h, kDefaultWeakAlphas);
    return report;
}

}  // namespace vsz
