#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <ranges>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vsz/invariants.hpp"
#include "vsz/summation.hpp"

namespace vsz {

/// Relative slack for floating-point prefix comparisons.
inline constexpr double kPrefixRelTol = 1e-12;

namespace detail {

template <typename R>
void require_decreasing(const R& r, const char* name) {
    if (!std::ranges::is_sorted(r, std::greater<>{})) {
        throw std::invalid_argument(std::string(name) + " is not sorted in decreasing order");
    }
}

}  // namespace detail

/// True iff every prefix sum of x dominates the matching prefix sum of y, the
/// shorter sequence being padded with zeros. Both inputs must be decreasing.
///
/// Integer inputs compare exactly. Floating inputs treat a prefix as dominating
/// when sum_x >= sum_y - rel_tol * |sum_y| (plus `abs_slack`).
template <std::ranges::random_access_range X, std::ranges::random_access_range Y>
bool majorizes(const X& x, const Y& y, double rel_tol = kPrefixRelTol, double abs_slack = 0.0) {
    detail::require_decreasing(x, "x");
    detail::require_decreasing(y, "y");
    using XT = std::ranges::range_value_t<X>;
    using YT = std::ranges::range_value_t<Y>;
    const std::size_t len = std::max(std::ranges::size(x), std::ranges::size(y));

    if constexpr (std::integral<XT> && std::integral<YT>) {
        std::int64_t sx = 0;
        std::int64_t sy = 0;
        for (std::size_t k = 0; k < len; ++k) {
            if (k < std::ranges::size(x)) sx += x[k];
            if (k < std::ranges::size(y)) sy += y[k];
            if (sx < sy) return false;
        }
        return true;
    } else {
        NeumaierSum sx;
        NeumaierSum sy;
        for (std::size_t k = 0; k < len; ++k) {
            if (k < std::ranges::size(x)) sx += static_cast<double>(x[k]);
            if (k < std::ranges::size(y)) sy += static_cast<double>(y[k]);
            const double rhs = sy.value();
            if (sx.value() < rhs - rel_tol * std::abs(rhs) - abs_slack) return false;
        }
        return true;
    }
}

/// Checks sum f(x_i) >= sum f(y_i) + t with t = sum x_i - sum y_i.
///
/// A property oracle: for nonnegative integer x majorizing y and f convex,
/// increasing, f(0) = 0, f(1) = 1, the inequality always holds, so `false`
/// points at a bug. Throws std::invalid_argument if x does not majorize y.
bool karamata_gap_check(std::span<const std::int64_t> x, std::span<const std::int64_t> y,
                        const std::function<double(double)>& f);

enum class CertificateKind {
    None,
    BlockGraph,
    SparseRegime,
    Bipartite,
    Diameter2,
    Diameter3Sparse,
    ConditionI,
    ConditionII,
    PowerMean,
    PoweredMajorization,
};

std::string_view to_string(CertificateKind kind);
std::optional<CertificateKind> certificate_kind_from_string(std::string_view name);

/// Outcome of one or more sufficient conditions for a unique critical exponent.
///
/// `kind` is the first holding check in the order listed in CertificateKind;
/// `satisfied` lists every check that held. holds == false means "not
/// certified", never "the root is not unique".
struct Certificate {
    CertificateKind kind = CertificateKind::None;
    bool holds = false;
    std::optional<std::size_t> crossing_index;  // condition I, 1-based
    std::vector<CertificateKind> satisfied;
    std::string detail;

    bool has(CertificateKind k) const { return std::ranges::find(satisfied, k) != satisfied.end(); }
};

/// Condition I over n_seq padded with zeros to length N. Reports the largest
/// valid crossing index j (n_i >= d_i for i <= j, n_i <= d_i for i > j).
Certificate check_condition_I(const IndexProfile& p);

/// True iff j is a valid condition-I crossing index for p (1-based, 0..N).
bool is_crossing_index(const IndexProfile& p, std::size_t j);

/// Prefix products of n_i dominate those of d_i for j <= m (compared as log sums).
Certificate check_condition_II(const IndexProfile& p);

/// sum d_i^alpha >= m * diam^alpha, the power-mean criterion. Requires alpha > 0.
Certificate check_power_mean(const IndexProfile& p, double alpha);

/// m <= (n^{4/3} - n^{1/3}) / 4. Requires n >= 2.
Certificate check_sparse_regime(std::size_t n, std::size_t m);

/// Whether (n_i^alpha) majorizes (d_i^alpha). Prefixes beyond m are given
/// `tail_slack` of absolute slack, since at a root they only depend on h = 0.
bool powered_majorization(const IndexProfile& p, double alpha, double tail_slack = 0.0);

/// Runs every sufficient condition at a root of h and reports which hold.
/// Throws std::invalid_argument if alpha_root <= 0 or |h(alpha_root)| exceeds
/// the root tolerance, DegenerateGapError for complete graphs.
Certificate certify_uniqueness(const IndexProfile& p, double alpha_root);

}  // namespace vsz
