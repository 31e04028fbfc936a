#include "record.hpp"

#include <cstdio>
#include <cstdlib>
#include <ostream>

namespace vsz::cli {

using nlohmann::json;

namespace {

template <typename T>
void put_optional(json& j, const char* key, const std::optional<T>& v) {
    j[key] = v ? json(*v) : json(nullptr);
}

template <typename T>
void get_optional(const json& j, const char* key, std::optional<T>& v) {
    if (j.contains(key) && !j.at(key).is_null()) {
        v = j.at(key).get<T>();
    } else {
        v.reset();
    }
}

std::string join(const std::vector<std::string>& parts, char sep) {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += sep;
        out += p;
    }
    return out;
}

}  // namespace

std::string format_double(double x) {
    char buf[32];
    for (int precision = 1; precision <= 17; ++precision) {
        std::snprintf(buf, sizeof buf, "%.*g", precision, x);
        if (std::strtod(buf, nullptr) == x) break;
    }
    return buf;
}

void to_json(json& j, const AnalysisRecord& r) {
    j = json{{"input", r.input},
             {"status", r.status},
             {"n", r.n},
             {"m", r.m},
             {"N", r.N},
             {"diameter", r.diameter},
             {"W", r.wiener},
             {"Sz", r.szeged},
             {"time_ms", r.time_ms}};
    put_optional(j, "seed", r.seed);

    j["alphas"] = json::array();
    for (const auto& a : r.alphas) {
        j["alphas"].push_back({{"alpha", a.alpha}, {"W_alpha", a.wiener}, {"Sz_alpha", a.szeged}, {"h", a.h}});
    }
    j["scan"] = r.scan ? json{{"lo", r.scan->lo}, {"hi", r.scan->hi}, {"step", r.scan->step}} : json(nullptr);
    j["roots"] = json::array();
    for (const auto& x : r.roots) {
        j["roots"].push_back({{"alpha", x.alpha},
                              {"bracket", {x.bracket_lo, x.bracket_hi}},
                              {"derivative_sign", x.derivative},
                              {"exact", x.exact}});
    }
    j["suspected_tangencies"] = json::array();
    for (const auto& t : r.tangencies) {
        j["suspected_tangencies"].push_back({{"lo", t.lo}, {"hi", t.hi}, {"min_abs_h", t.min_abs_h}});
    }
    put_optional(j, "strong_verdict", r.strong_verdict);
    put_optional(j, "certificate", r.certificate);
    j["certificates"] = r.certificates;
    put_optional(j, "crossing_index", r.crossing_index);
    put_optional(j, "weak_check", r.weak_check);
}

void from_json(const json& j, AnalysisRecord& r) {
    r.input = j.at("input").get<std::string>();
    r.status = j.at("status").get<std::string>();
    r.n = j.at("n").get<std::uint64_t>();
    r.m = j.at("m").get<std::uint64_t>();
    r.N = j.at("N").get<std::uint64_t>();
    r.diameter = j.at("diameter").get<std::int64_t>();
    r.wiener = j.at("W").get<std::int64_t>();
    r.szeged = j.at("Sz").get<std::int64_t>();
    r.time_ms = j.at("time_ms").get<double>();
    get_optional(j, "seed", r.seed);

    r.alphas.clear();
    for (const auto& a : j.at("alphas")) {
        r.alphas.push_back({a.at("alpha").get<double>(), a.at("W_alpha").get<double>(), a.at("Sz_alpha").get<double>(),
                            a.at("h").get<double>()});
    }
    if (j.at("scan").is_null()) {
        r.scan.reset();
    } else {
        const auto& s = j.at("scan");
        r.scan = ScanRow{s.at("lo").get<double>(), s.at("hi").get<double>(), s.at("step").get<double>()};
    }
    r.roots.clear();
    for (const auto& x : j.at("roots")) {
        const auto& b = x.at("bracket");
        r.roots.push_back({x.at("alpha").get<double>(), b.at(0).get<double>(), b.at(1).get<double>(),
                           x.at("derivative_sign").get<std::string>(), x.at("exact").get<bool>()});
    }
    r.tangencies.clear();
    for (const auto& t : j.at("suspected_tangencies")) {
        r.tangencies.push_back({t.at("lo").get<double>(), t.at("hi").get<double>(), t.at("min_abs_h").get<double>()});
    }
    get_optional(j, "strong_verdict", r.strong_verdict);
    get_optional(j, "certificate", r.certificate);
    r.certificates = j.at("certificates").get<std::vector<std::string>>();
    get_optional(j, "crossing_index", r.crossing_index);
    get_optional(j, "weak_check", r.weak_check);
}

void write_key_values(std::ostream& os, const AnalysisRecord& r) {
    os << "input=" << r.input << '\n';
    if (r.seed) os << "seed=" << *r.seed << '\n';
    os << "n=" << r.n << '\n'
       << "m=" << r.m << '\n'
       << "N=" << r.N << '\n'
       << "diameter=" << r.diameter << '\n'
       << "W=" << r.wiener << '\n'
       << "Sz=" << r.szeged << '\n';
    for (const auto& a : r.alphas) {
        os << "alpha=" << format_double(a.alpha) << " W_alpha=" << format_double(a.wiener)
           << " Sz_alpha=" << format_double(a.szeged) << " h=" << format_double(a.h) << '\n';
    }
    if (r.scan) {
        os << "scan=" << format_double(r.scan->lo) << ':' << format_double(r.scan->hi) << ':'
           << format_double(r.scan->step) << '\n';
        os << "roots=" << r.roots.size() << '\n';
        for (const auto& x : r.roots) {
            os << "root=" << format_double(x.alpha) << " bracket=" << format_double(x.bracket_lo) << ':'
               << format_double(x.bracket_hi) << " derivative=" << x.derivative
               << " exact=" << (x.exact ? "true" : "false") << '\n';
        }
        os << "tangencies=" << r.tangencies.size() << '\n';
        for (const auto& t : r.tangencies) {
            os << "tangency=" << format_double(t.lo) << ':' << format_double(t.hi)
               << " min_abs_h=" << format_double(t.min_abs_h) << '\n';
        }
    }
    if (r.strong_verdict) os << "strong_verdict=" << *r.strong_verdict << '\n';
    if (r.certificate) os << "certificate=" << *r.certificate << '\n';
    if (!r.certificates.empty()) os << "certificates=" << join(r.certificates, ',') << '\n';
    if (r.crossing_index) os << "crossing_index=" << *r.crossing_index << '\n';
    if (r.weak_check) os << "weak_check=" << (*r.weak_check ? "true" : "false") << '\n';
    os << "status=" << r.status << '\n';
    os << "time_ms=" << format_double(r.time_ms) << '\n';
}

}  // namespace vsz::cli
