#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "vsz/invariants.hpp"
#include "vsz/majorization.hpp"

namespace vsz {

struct ScanOptions {
    double lo = 1e-3;
    double hi = 1.5;
    double grid_step = 1e-3;
    double tol_x = 1e-10;
};

enum class Sign { Negative = -1, Zero = 0, Positive = 1 };

struct Root {
    double alpha = 0.0;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    Sign derivative_sign = Sign::Zero;
    // h was exactly zero at alpha (grid point or the integer path at alpha = 1);
    // the bracket then collapses to [alpha, alpha].
    bool exact = false;
};

/// A grid neighbourhood where |h| dropped below tol_f without changing sign.
struct Tangency {
    double lo = 0.0;
    double hi = 0.0;
    double min_abs_h = 0.0;
};

enum class StrongVerdictKind { CertifiedUnique, MultipleRoots, SingleRootUncertified, NoRootInScan };

std::string_view to_string(StrongVerdictKind kind);

struct StrongVerdict {
    StrongVerdictKind kind = StrongVerdictKind::NoRootInScan;
    Certificate certificate;
};

struct RootReport {
    double lo = 0.0;
    double hi = 0.0;
    double tol_f = 0.0;
    std::vector<Root> roots;  // increasing alpha
    std::vector<Tangency> suspected_tangencies;
    std::optional<StrongVerdict> strong_verdict;
    std::optional<bool> weak_check;
};

/// Brackets every sign change of h on a grid over [lo, hi] and bisects each
/// bracket to width tol_x. Throws DegenerateGapError if h vanishes
/// identically and std::invalid_argument for a bad interval or step.
RootReport find_roots(const GapFunction& h, const ScanOptions& opts = {});

/// Needs a report whose scan covers at least (0.01, 1.5].
StrongVerdict strong_conjecture_verdict(const IndexProfile& p, const RootReport& report);

/// h(alpha) > h(1) >= 0 for every supplied alpha (each must exceed 1).
bool weak_conjecture_check(const GapFunction& h, std::span<const double> alphas);

inline constexpr double kDefaultWeakAlphas[] = {1.1, 1.5, 2.0, 3.0};

/// find_roots plus both verdicts.
RootReport analyze(const IndexProfile& p, const ScanOptions& opts = {});

}  // namespace vsz
