#include "report.hpp"

#include <chrono>
#include <cstdlib>

#include "cyclocode/error.hpp"
#include "cyclocode/theory.hpp"

namespace cyclocode::cli {

Method parse_method(const std::string& s) {
    if (s == "brute") return Method::Brute;
    if (s == "theory") return Method::Theory;
    if (s == "both") return Method::Both;
    throw Error(ErrorCode::InvalidArgument, "unknown method '" + s + "'");
}

std::string to_string(Method m) {
    switch (m) {
        case Method::Brute: return "brute";
        case Method::Theory: return "theory";
        case Method::Both: return "both";
    }
    return "?";
}

RunReport run(const CodeSpec& spec, const RunOptions& opt) {
    const auto start = std::chrono::steady_clock::now();
    RunReport r;
    r.spec = spec;
    r.method = to_string(opt.method);

    if (opt.method == Method::Theory) {
        r.distribution = predict(spec, opt.theory).distribution;
    } else {
        const CyclicCode code(spec);
        if (opt.method == Method::Brute) {
            r.distribution = weight_distribution_brute(code, opt.threads);
        } else {
            const Verdict v = compare(code, opt.threads, opt.theory);
            r.distribution = v.observed;
            r.verdict = v.match ? "match" : "mismatch";
            r.difference = v.difference;
        }
    }
    r.min_distance = min_distance(r.distribution);
    r.lower_bound = min_distance_lower_bound(spec);
    r.griesmer_optimal = is_griesmer_optimal(spec, r.min_distance);
    if (opt.dual) r.dual_distance = to_string(dual_distance_probe(CyclicCode(spec)));

    r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

nlohmann::ordered_json to_json(const RunReport& r) {
    using json = nlohmann::ordered_json;
    json dist = json::array();
    for (const auto& [w, c] : r.distribution.entries) dist.push_back({{"w", w}, {"count", c}});
    return {
        {"spec",
         {{"p", r.spec.p},
          {"e", r.spec.e},
          {"k", r.spec.k},
          {"e1", r.spec.e1},
          {"e2", r.spec.e2},
          {"q", r.spec.q},
          {"n", r.spec.n},
          {"dim", r.spec.dimension},
          {"d", r.spec.d}}},
        {"method", r.method},
        {"distribution", dist},
        {"min_distance", r.min_distance},
        {"lower_bound", r.lower_bound},
        {"griesmer_optimal", r.griesmer_optimal},
        {"dual_distance", r.dual_distance ? json(*r.dual_distance) : json(nullptr)},
        {"verdict", r.verdict ? json(*r.verdict) : json(nullptr)},
        {"ms", r.ms},
    };
}

RunReport report_from_json(const nlohmann::ordered_json& j) {
    RunReport r;
    const auto& s = j.at("spec");
    r.spec.p = s.at("p").get<u64>();
    r.spec.e = s.at("e").get<unsigned>();
    r.spec.k = s.at("k").get<unsigned>();
    r.spec.e1 = s.at("e1").get<u64>();
    r.spec.e2 = s.at("e2").get<u64>();
    r.spec.q = s.at("q").get<u64>();
    r.spec.n = s.at("n").get<u64>();
    r.spec.dimension = s.at("dim").get<u64>();
    r.spec.d = s.at("d").get<u64>();
    r.method = j.at("method").get<std::string>();
    for (const auto& row : j.at("distribution")) {
        r.distribution.entries.emplace_back(row.at("w").get<u64>(), row.at("count").get<u64>());
    }
    r.min_distance = j.at("min_distance").get<u64>();
    r.lower_bound = j.at("lower_bound").get<i64>();
    r.griesmer_optimal = j.at("griesmer_optimal").get<bool>();
    if (!j.at("dual_distance").is_null()) r.dual_distance = j.at("dual_distance").get<std::string>();
    if (!j.at("verdict").is_null()) r.verdict = j.at("verdict").get<std::string>();
    r.ms = j.at("ms").get<double>();
    return r;
}

unsigned default_threads() {
    if (const char* env = std::getenv("CHARCODE_THREADS")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0') return static_cast<unsigned>(v);
    }
    return 0;
}

}  // namespace cyclocode::cli
