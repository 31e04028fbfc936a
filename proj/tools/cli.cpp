#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string_view>

#include "CLI11.hpp"
#include "record.hpp"
#include "vsz/critical.hpp"
#include "vsz/errors.hpp"
#include "vsz/family_gkl.hpp"
#include "vsz/graph.hpp"
#include "vsz/invariants.hpp"
#include "vsz/majorization.hpp"
#include "vsz/randgen.hpp"

namespace vsz::cli {
namespace {

using Clock = std::chrono::steady_clock;

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (;;) {
        const auto pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos - start));
        if (pos == std::string_view::npos) return parts;
        start = pos + 1;
    }
}

template <typename T>
T parse_number(std::string_view text, std::string_view what) {
    T value{};
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc{} || ptr != end) {
        throw UsageError("invalid " + std::string(what) + ": '" + std::string(text) + "'");
    }
    return value;
}

ScanRow parse_scan(std::string_view text) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw UsageError("--scan expects lo:hi:step");
    ScanRow s{parse_number<double>(parts[0], "scan lo"), parse_number<double>(parts[1], "scan hi"),
              parse_number<double>(parts[2], "scan step")};
    if (!(s.step > 0.0)) throw UsageError("scan step must be positive");
    if (!(s.lo < s.hi)) throw UsageError("scan interval must satisfy lo < hi");
    return s;
}

gkl::Range parse_range(std::string_view text, std::string_view what) {
    const auto parts = split(text, ':');
    if (parts.size() == 1) {
        const auto v = parse_number<std::int64_t>(parts[0], what);
        return {v, v};
    }
    if (parts.size() != 2) throw UsageError(std::string(what) + " expects lo:hi");
    return {parse_number<std::int64_t>(parts[0], what), parse_number<std::int64_t>(parts[1], what)};
}

std::string_view sign_name(Sign s) {
    switch (s) {
        case Sign::Negative: return "-";
        case Sign::Zero: return "0";
        case Sign::Positive: return "+";
    }
    return "?";
}

struct Source {
    std::string file;
    std::vector<std::int64_t> gkl;

    std::optional<gkl::Params> params() const {
        if (gkl.empty()) return std::nullopt;
        return gkl::Params{gkl[0], gkl[1]};
    }

    std::string descriptor() const {
        if (const auto p = params()) return "gkl:" + std::to_string(p->k) + ":" + std::to_string(p->ell);
        return file;
    }
};

void add_source(CLI::App* sub, Source& src) {
    auto* file = sub->add_option("file", src.file, "Edge-list file ('-' reads stdin)");
    auto* gkl = sub->add_option("--gkl", src.gkl, "Use the G_{k,l} family member instead of a file")
                    ->expected(2)
                    ->type_name("K ELL");
    file->excludes(gkl);
}

Graph load_graph(const Source& src) {
    if (const auto p = src.params()) {
        gkl::validate(*p);
        return gkl::build(*p);
    }
    if (src.file.empty()) throw UsageError("an edge-list file or --gkl K ELL is required");
    std::string text;
    if (src.file == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(src.file, std::ios::binary);
        if (!in) throw std::invalid_argument("cannot open '" + src.file + "'");
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    return parse_edge_list(text);
}

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

AnalysisRecord basic_record(std::string input, const IndexProfile& p) {
    AnalysisRecord r;
    r.input = std::move(input);
    r.n = p.n;
    r.m = p.m;
    r.N = p.N;
    r.diameter = p.diam;
    const auto idx = classical_indices(p);
    r.wiener = idx.wiener;
    r.szeged = idx.szeged;
    return r;
}

/// Fills roots and verdicts. Returns false when h vanishes identically.
bool fill_analysis(AnalysisRecord& r, const IndexProfile& p, const ScanRow& scan) {
    RootReport report;
    try {
        report = analyze(p, ScanOptions{.lo = scan.lo, .hi = scan.hi, .grid_step = scan.step});
    } catch (const DegenerateGapError&) {
        r.status = "degenerate";
        return false;
    }
    r.scan = scan;
    for (const auto& root : report.roots) {
        r.roots.push_back(
            {root.alpha, root.bracket_lo, root.bracket_hi, std::string(sign_name(root.derivative_sign)), root.exact});
    }
    for (const auto& t : report.suspected_tangencies) r.tangencies.push_back({t.lo, t.hi, t.min_abs_h});
    if (report.strong_verdict) {
        const auto& v = *report.strong_verdict;
        r.strong_verdict = std::string(to_string(v.kind));
        if (v.certificate.holds) r.certificate = std::string(to_string(v.certificate.kind));
        for (const auto k : v.certificate.satisfied) r.certificates.emplace_back(to_string(k));
        r.crossing_index = v.certificate.crossing_index;
    }
    r.weak_check = report.weak_check;
    return true;
}

class Printer {
public:
    Printer(std::ostream& out, bool json) : out_(out), json_(json) {}

    void emit(const AnalysisRecord& r) {
        if (json_) {
            out_ << nlohmann::json(r).dump() << '\n';
        } else {
            write_key_values(out_, r);
        }
    }

private:
    std::ostream& out_;
    bool json_;
};

int finish_analysis(const AnalysisRecord& r, bool analyzed_ok, Printer& printer, std::ostream& err) {
    printer.emit(r);
    if (!analyzed_ok) {
        err << "degenerate: h ≡ 0\n";
        return kExitDegenerate;
    }
    return kExitOk;
}

int cmd_index(const Source& src, const std::vector<double>& alphas, Printer& printer) {
    const auto start = Clock::now();
    const Graph g = load_graph(src);
    const IndexProfile p = make_profile(g);
    AnalysisRecord r = basic_record(src.descriptor(), p);
    const GapFunction h(p);
    for (const double a : alphas) r.alphas.push_back({a, h.wiener(a), h.szeged(a), h.value(a)});
    r.time_ms = elapsed_ms(start);
    printer.emit(r);
    return kExitOk;
}

int cmd_analyze(const Source& src, const ScanRow& scan, Printer& printer, std::ostream& err) {
    const auto start = Clock::now();
    const Graph g = load_graph(src);
    const IndexProfile p = make_profile(g);
    AnalysisRecord r = basic_record(src.descriptor(), p);
    const bool ok = fill_analysis(r, p, scan);
    r.time_ms = elapsed_ms(start);
    return finish_analysis(r, ok, printer, err);
}

int cmd_curve(const Source& src, const ScanRow& scan, std::ostream& out) {
    std::optional<GapFunction> h;
    if (const auto p = src.params()) {
        h.emplace(gkl::closed_form_gap(*p));
    } else {
        h.emplace(make_profile(load_graph(src)));
    }
    out << "alpha,h\n";
    const double limit = scan.hi + 1e-9 * scan.step;
    for (std::int64_t i = 0;; ++i) {
        const double alpha = scan.lo + static_cast<double>(i) * scan.step;
        if (alpha > limit) break;
        if (alpha <= 0.0) continue;
        char line[64];
        std::snprintf(line, sizeof line, "%.17g,%.17g\n", alpha, h->value(alpha));
        out << line;
    }
    return kExitOk;
}

int cmd_search(const std::string& k_text, const std::string& ell_text, bool json, std::ostream& out) {
    const auto hits = gkl::search_multiroot(parse_range(k_text, "--k"), parse_range(ell_text, "--ell"));
    for (const auto& hit : hits) {
        if (json) {
            out << nlohmann::json{{"k", hit.params.k}, {"ell", hit.params.ell}, {"roots", hit.root_count}}.dump()
                << '\n';
        } else {
            out << "k=" << hit.params.k << " ell=" << hit.params.ell << " roots=" << hit.root_count << '\n';
        }
    }
    return kExitOk;
}

struct RandomArgs {
    std::size_t n = 0;
    std::optional<std::size_t> m;
    std::optional<double> p;
    std::optional<std::uint64_t> seed;
    std::string method = "gnm";
    bool analyze = false;
    std::string save;
};

int cmd_random(const RandomArgs& a, const ScanRow& scan, Printer& printer, std::ostream& err) {
    if (a.m.has_value() == a.p.has_value()) throw UsageError("exactly one of --m or --p is required");
    if (a.p && a.method != "gnm") throw UsageError("--method applies to --m only");
    const std::uint64_t seed = a.seed ? *a.seed : std::random_device{}();

    const auto start = Clock::now();
    std::string input = "random:n=" + std::to_string(a.n);
    std::optional<Graph> g;
    if (a.p) {
        std::ostringstream ps;
        ps << *a.p;
        input = "random:gnp:n=" + std::to_string(a.n) + ":p=" + ps.str();
        g.emplace(random_gnp_connected(a.n, *a.p, seed));
    } else if (a.method == "tree") {
        input = "random:tree:n=" + std::to_string(a.n) + ":m=" + std::to_string(*a.m);
        g.emplace(random_tree_plus_edges(a.n, *a.m, seed));
    } else {
        input = "random:gnm:n=" + std::to_string(a.n) + ":m=" + std::to_string(*a.m);
        g.emplace(random_gnm_connected(a.n, *a.m, seed));
    }
    if (!a.save.empty()) {
        std::ofstream os(a.save);
        if (!os) throw std::invalid_argument("cannot write '" + a.save + "'");
        os << "# " << input << " seed=" << seed << '\n';
        for (const auto& e : g->edges()) os << e.u << ' ' << e.v << '\n';
    }

    const IndexProfile p = make_profile(*g);
    AnalysisRecord r = basic_record(input, p);
    r.seed = seed;
    bool ok = true;
    if (a.analyze) ok = fill_analysis(r, p, scan);
    r.time_ms = elapsed_ms(start);
    return finish_analysis(r, ok, printer, err);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Variable Wiener and Szeged index analysis"};
    app.name("vsz");
    app.require_subcommand(1);
    app.fallthrough();

    bool json = false;
    app.add_flag("--json", json, "Emit one JSON record per analysis");

    const ScanOptions defaults;
    std::string scan_text = CLI::detail::to_string(defaults.lo) + ":" + CLI::detail::to_string(defaults.hi) + ":" +
                            CLI::detail::to_string(defaults.grid_step);

    Source src;
    std::vector<double> alphas;
    auto* index = app.add_subcommand("index", "Print n, m, W, Sz and the variable indices");
    add_source(index, src);
    index->add_option("--alpha", alphas, "Exponent to evaluate (repeatable)");

    auto* analyze_cmd = app.add_subcommand("analyze", "Find critical exponents and certify uniqueness");
    add_source(analyze_cmd, src);
    analyze_cmd->add_option("--scan", scan_text, "Scan interval lo:hi:step")->capture_default_str();

    std::string curve_scan;
    auto* curve = app.add_subcommand("curve", "Write h(alpha) on a grid as CSV");
    add_source(curve, src);
    curve->add_option("--scan", curve_scan, "Grid lo:hi:step")->required();

    std::string k_text;
    std::string ell_text;
    auto* search = app.add_subcommand("search", "List G_{k,l} with at least three critical exponents");
    search->add_option("--k", k_text, "Range lo:hi of k")->required();
    search->add_option("--ell", ell_text, "Range lo:hi of l")->required();

    RandomArgs ra;
    auto* random = app.add_subcommand("random", "Generate a seeded random connected graph");
    random->add_option("--n", ra.n, "Vertex count")->required();
    auto* m_opt = random->add_option("--m", ra.m, "Edge count");
    auto* p_opt = random->add_option("--p", ra.p, "Edge probability");
    m_opt->excludes(p_opt);
    random->add_option("--seed", ra.seed, "PRNG seed (random if omitted)");
    random->add_option("--method", ra.method, "Sampler for --m: gnm or tree")
        ->check(CLI::IsMember({"gnm", "tree"}))
        ->capture_default_str();
    random->add_flag("--analyze", ra.analyze, "Also run the critical-exponent analysis");
    random->add_option("--scan", scan_text, "Scan interval lo:hi:step for --analyze");
    random->add_option("--save", ra.save, "Write the generated edge list to this file");

    for (auto* sub : {index, analyze_cmd, curve, search, random}) {
        sub->add_flag("--json", json, "Emit one JSON record per analysis");
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitInputError;
    }

    Printer printer(out, json);
    try {
        if (*index) return cmd_index(src, alphas, printer);
        if (*analyze_cmd) return cmd_analyze(src, parse_scan(scan_text), printer, err);
        if (*curve) return cmd_curve(src, parse_scan(curve_scan), out);
        if (*search) return cmd_search(k_text, ell_text, json, out);
        if (*random) return cmd_random(ra, parse_scan(scan_text), printer, err);
    } catch (const RetryCapExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kExitCapExceeded;
    } catch (const DegenerateGapError& e) {
        err << e.what() << '\n';
        return kExitDegenerate;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::logic_error& e) {
        // invalid_argument, out_of_range, DisconnectedGraphError and UsageError
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitCapExceeded;
    }
    return kExitInputError;
}

}  // namespace vsz::cli
