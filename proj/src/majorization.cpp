#include "vsz/majorization.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "vsz/errors.hpp"

namespace vsz {

namespace {

constexpr std::array kKindNames{
    std::pair{CertificateKind::None, std::string_view{"None"}},
    std::pair{CertificateKind::BlockGraph, std::string_view{"BlockGraph"}},
    std::pair{CertificateKind::SparseRegime, std::string_view{"SparseRegime"}},
    std::pair{CertificateKind::Bipartite, std::string_view{"Bipartite"}},
    std::pair{CertificateKind::Diameter2, std::string_view{"Diameter2"}},
    std::pair{CertificateKind::Diameter3Sparse, std::string_view{"Diameter3Sparse"}},
    std::pair{CertificateKind::ConditionI, std::string_view{"ConditionI"}},
    std::pair{CertificateKind::ConditionII, std::string_view{"ConditionII"}},
    std::pair{CertificateKind::PowerMean, std::string_view{"PowerMean"}},
    std::pair{CertificateKind::PoweredMajorization, std::string_view{"PoweredMajorization"}},
};

Certificate single(CertificateKind kind, bool holds, std::string detail) {
    Certificate c;
    c.kind = kind;
    c.holds = holds;
    if (holds) c.satisfied.push_back(kind);
    c.detail = std::move(detail);
    return c;
}

std::int64_t padded_n(const IndexProfile& p, std::size_t i) { return i < p.m ? p.n_seq[i] : 0; }

}  // namespace

std::string_view to_string(CertificateKind kind) {
    for (auto [k, name] : kKindNames) {
        if (k == kind) return name;
    }
    return "None";
}

std::optional<CertificateKind> certificate_kind_from_string(std::string_view name) {
    for (auto [k, n] : kKindNames) {
        if (n == name) return k;
    }
    return std::nullopt;
}

bool karamata_gap_check(std::span<const std::int64_t> x, std::span<const std::int64_t> y,
                        const std::function<double(double)>& f) {
    if (std::ranges::any_of(x, [](auto v) { return v < 0; }) || std::ranges::any_of(y, [](auto v) { return v < 0; })) {
        throw std::invalid_argument("karamata_gap_check needs nonnegative sequences");
    }
    if (!majorizes(x, y)) throw std::invalid_argument("x does not majorize y");

    NeumaierSum fx;
    NeumaierSum fy;
    std::int64_t t = 0;
    for (auto v : x) {
        fx += f(static_cast<double>(v));
        t += v;
    }
    for (auto v : y) {
        fy += f(static_cast<double>(v));
        t -= v;
    }
    const double rhs = fy.value() + static_cast<double>(t);
    return fx.value() >= rhs - kPrefixRelTol * std::abs(rhs);
}

bool is_crossing_index(const IndexProfile& p, std::size_t j) {
    if (j > p.N) return false;
    for (std::size_t i = 0; i < p.N; ++i) {
        const std::int64_t n = padded_n(p, i);
        const std::int64_t d = p.d_seq[i];
        if (i < j ? n < d : n > d) return false;
    }
    return true;
}

Certificate check_condition_I(const IndexProfile& p) {
    std::size_t j = 0;
    while (j < p.N && padded_n(p, j) >= p.d_seq[j]) ++j;
    for (std::size_t i = j; i < p.N; ++i) {
        if (padded_n(p, i) > p.d_seq[i]) {
            std::ostringstream os;
            os << "n_" << j + 1 << " < d_" << j + 1 << " but n_" << i + 1 << " > d_" << i + 1;
            return single(CertificateKind::ConditionI, false, os.str());
        }
    }
    auto c = single(CertificateKind::ConditionI, true, "crossing index j=" + std::to_string(j));
    c.crossing_index = j;
    return c;
}

Certificate check_condition_II(const IndexProfile& p) {
    NeumaierSum log_n;
    NeumaierSum log_d;
    for (std::size_t j = 0; j < p.m; ++j) {
        log_n += std::log(static_cast<double>(p.n_seq[j]));
        log_d += std::log(static_cast<double>(p.d_seq[j]));
        const double rhs = log_d.value();
        if (log_n.value() < rhs - kPrefixRelTol * std::abs(rhs)) {
            return single(CertificateKind::ConditionII, false, "prefix product fails at j=" + std::to_string(j + 1));
        }
    }
    return single(CertificateKind::ConditionII, true, "");
}

Certificate check_power_mean(const IndexProfile& p, double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("power-mean check needs alpha > 0");
    const double lhs = wiener_alpha(p, alpha);
    const double rhs = static_cast<double>(p.m) * power(static_cast<double>(p.diam), alpha);
    std::ostringstream os;
    os.precision(17);
    os << "sum d^alpha=" << lhs << " m*diam^alpha=" << rhs;
    return single(CertificateKind::PowerMean, lhs >= rhs - kPrefixRelTol * rhs, os.str());
}

Certificate check_sparse_regime(std::size_t n, std::size_t m) {
    if (n < 2) throw std::invalid_argument("sparse-regime check needs n >= 2");
    const double nd = static_cast<double>(n);
    const double bound = (std::pow(nd, 4.0 / 3.0) - std::cbrt(nd)) / 4.0;
    std::ostringstream os;
    os.precision(17);
    os << "m=" << m << " bound=" << bound;
    return single(CertificateKind::SparseRegime, static_cast<double>(m) <= bound, os.str());
}

bool powered_majorization(const IndexProfile& p, double alpha, double tail_slack) {
    std::vector<double> n_pow(p.n_seq.size());
    std::vector<double> d_pow(p.d_seq.size());
    for (std::size_t i = 0; i < n_pow.size(); ++i) n_pow[i] = power(static_cast<double>(p.n_seq[i]), alpha);
    for (std::size_t i = 0; i < d_pow.size(); ++i) d_pow[i] = power(static_cast<double>(p.d_seq[i]), alpha);
    if (!majorizes(std::span<const double>(n_pow), std::span<const double>(d_pow).first(p.m))) return false;

    // Tail: the n-side prefix is frozen at Sz^alpha from k = m on.
    NeumaierSum sn;
    for (double v : n_pow) sn += v;
    NeumaierSum sd;
    for (std::size_t k = 0; k < d_pow.size(); ++k) {
        sd += d_pow[k];
        if (k < p.m) continue;
        const double rhs = sd.value();
        if (sn.value() < rhs - kPrefixRelTol * std::abs(rhs) - tail_slack) return false;
    }
    return true;
}

Certificate certify_uniqueness(const IndexProfile& p, double alpha_root) {
    if (p.m == p.N) throw DegenerateGapError();
    const GapFunction h(p);
    if (!(alpha_root > 0.0)) throw std::invalid_argument("alpha_root must be positive");
    const double h_root = h.value(alpha_root);
    if (std::abs(h_root) > h.root_tolerance()) {
        throw std::invalid_argument("alpha_root is not a root of h");
    }

    Certificate out;
    std::ostringstream detail;
    auto record = [&](CertificateKind kind, bool holds, std::string_view note = {}) {
        if (holds) out.satisfied.push_back(kind);
        detail << to_string(kind) << '=' << (holds ? "yes" : "no");
        if (!note.empty()) detail << " (" << note << ')';
        detail << "; ";
    };

    const auto c = classical_indices(p);
    record(CertificateKind::BlockGraph, c.szeged == c.wiener);
    const auto sparse = check_sparse_regime(p.n, p.m);
    record(CertificateKind::SparseRegime, sparse.holds, sparse.detail);
    record(CertificateKind::Bipartite, p.bipartite);
    record(CertificateKind::Diameter2, p.diam == 2);
    record(CertificateKind::Diameter3Sparse, p.diam == 3 && 2 * p.m <= p.N);
    const auto cond1 = check_condition_I(p);
    record(CertificateKind::ConditionI, cond1.holds, cond1.detail);
    if (cond1.holds) out.crossing_index = cond1.crossing_index;
    const auto cond2 = check_condition_II(p);
    record(CertificateKind::ConditionII, cond2.holds, cond2.detail);
    const auto pm = check_power_mean(p, alpha_root);
    record(CertificateKind::PowerMean, pm.holds);
    record(CertificateKind::PoweredMajorization, powered_majorization(p, alpha_root, std::abs(h_root)));

    out.holds = !out.satisfied.empty();
    out.kind = out.holds ? out.satisfied.front() : CertificateKind::None;
    out.detail = detail.str();
    if (out.detail.size() >= 2) out.detail.resize(out.detail.size() - 2);
    return out;
}

}  // namespace vsz
