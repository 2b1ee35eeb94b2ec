#pragma once

// Run reports shared by the command-line tool and its tests.

#include <optional>
#include <string>

#include <json.hpp>

#include "cyclocode/code.hpp"
#include "cyclocode/theory.hpp"

namespace cyclocode::cli {

enum class Method { Brute, Theory, Both };

Method parse_method(const std::string& s);
std::string to_string(Method m);

struct RunReport {
    CodeSpec spec;
    std::string method;
    WeightDistribution distribution;
    u64 min_distance = 0;
    i64 lower_bound = 0;
    bool griesmer_optimal = false;
    std::optional<std::string> dual_distance;
    std::optional<std::string> verdict;  // "match" or "mismatch", only for Both
    double ms = 0.0;

    // Not serialised; carries the first disagreement for error output.
    std::string difference;

    bool operator==(const RunReport& o) const {
        return spec == o.spec && method == o.method && distribution == o.distribution &&
               min_distance == o.min_distance && lower_bound == o.lower_bound &&
               griesmer_optimal == o.griesmer_optimal && dual_distance == o.dual_distance &&
               verdict == o.verdict && ms == o.ms;
    }
};

struct RunOptions {
    Method method = Method::Both;
    unsigned threads = 0;
    bool dual = false;
    TheoryOptions theory;
};

RunReport run(const CodeSpec& spec, const RunOptions& opt);

nlohmann::ordered_json to_json(const RunReport& r);
RunReport report_from_json(const nlohmann::ordered_json& j);

/// CHARCODE_THREADS when set and numeric, otherwise 0 (all cores).
unsigned default_threads();

}  // namespace cyclocode::cli
