#pragma once

// Closed-form weight distributions for d = 1, 2, 3, 4, computed in exact
// integer, Z[omega] or Z[i] arithmetic, and the comparator against
// exhaustive enumeration.

#include <optional>
#include <string>
#include <vector>

#include "cyclocode/code.hpp"
#include "cyclocode/cyclotomic_int.hpp"

namespace cyclocode {

struct TheoryOptions {
    /// The order-d character is phi(delta) = zeta_d^generator_power; must be
    /// coprime to d.
    u64 generator_power = 1;
    /// Replaces the cubic Jacobi sum J(phi, phi).
    std::optional<EisensteinInt> cubic_jacobi;
    /// Replaces the quartic Jacobi sum J(phi, phi); only J^2 enters.
    std::optional<GaussianInt> quartic_jacobi;
};

struct PredictedRow {
    u64 weight = 0;
    u64 frequency = 0;
    std::string source;
};

struct PredictedDistribution {
    std::vector<PredictedRow> rows;  // before merging
    WeightDistribution distribution;
    bool merged = false;
};

/// Weight of c(a,b) for a, b nonzero, indexed by the class j of
/// N(b) a^{-k} in delta^j <delta^d>.
std::vector<u64> class_weights(const CodeSpec& spec, const TheoryOptions& opt = {});

/// Dispatches on d; throws UnsupportedD for d >= 5.
PredictedDistribution predict(const CodeSpec& spec, const TheoryOptions& opt = {});
PredictedDistribution predict_d1(const CodeSpec& spec);
PredictedDistribution predict_d2(const CodeSpec& spec);
PredictedDistribution predict_d3(const CodeSpec& spec, const TheoryOptions& opt = {});
PredictedDistribution predict_d4(const CodeSpec& spec, const TheoryOptions& opt = {});

/// Closed-form weight of one codeword.
u64 predicted_weight(const CyclicCode& code, Elem a, Elem b, const TheoryOptions& opt = {});

/// Human-readable first disagreement, or nullopt when equal.
std::optional<std::string> first_difference(const WeightDistribution& expected,
                                            const WeightDistribution& actual);

struct Verdict {
    bool match = false;
    WeightDistribution predicted;
    WeightDistribution observed;
    std::string difference;
};

Verdict compare(const CyclicCode& code, unsigned threads = 1, const TheoryOptions& opt = {});
/// As compare, but throws Mismatch carrying the difference.
Verdict require_match(const CyclicCode& code, unsigned threads = 1, const TheoryOptions& opt = {});

struct TemplateRow {
    i64 weight = 0;
    u64 frequency = 0;
    std::string label;
};

/// A tabulated weight template instantiated at a concrete q (and k).
struct TableTemplate {
    int id = 0;
    u64 q = 0;
    unsigned k = 0;
    std::string hypothesis;
    std::vector<TemplateRow> rows;

    WeightDistribution merged() const;
};

inline constexpr int kTableCount = 20;

/// Evaluates template `id` row by row without merging. Templates with a fixed
/// k ignore a missing `k`; throws HypothesisUnmet or UnknownTable.
TableTemplate evaluate_table(int id, u64 p, unsigned e, std::optional<unsigned> k = std::nullopt);

struct SpecializationResult {
    int table = 0;
    bool matches = false;
    std::size_t distinct_weights = 0;
    /// Number of nonzero weights the template asserts, when it asserts one.
    std::optional<std::size_t> claimed_weights;
};

/// Evaluates every fixed-k or special-decomposition template whose
/// hypothesis holds for `spec` and compares it with predict(spec).
/// Throws NoTemplateApplies when none does.
std::vector<SpecializationResult> specialize_check(const CodeSpec& spec);

/// Codes whose distributions are known independently, with expected
/// enumerators.
struct KnownCode {
    std::string name;
    u64 p;
    unsigned e;
    unsigned k;
    u64 e1;
    u64 e2;
    std::string enumerator;
};

const std::vector<KnownCode>& known_codes();

}  // namespace cyclocode
