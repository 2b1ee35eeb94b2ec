#pragma once

// The cyclic code C_{((q^k-1)/(q-1))e1, e2}: every codeword is
//   c(a,b)_i = a * gamma^{(q^k-1) e1 i / (q-1)} + Tr(b * gamma^{e2 i}),  0 <= i < q^k - 1,
// for a in F_q and b in F_{q^k}.

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cyclocode/extension_field.hpp"

namespace cyclocode {

/// Validated code parameters together with the derived length, dimension and
/// d = gcd(q-1, k e1 - e2).
struct CodeSpec {
    u64 p = 0;
    unsigned e = 0;
    unsigned k = 0;
    u64 e1 = 0;
    u64 e2 = 0;
    u64 q = 0;
    u64 n = 0;
    u64 dimension = 0;
    u64 d = 0;

    bool operator==(const CodeSpec&) const = default;
};

/// Rejects parameters that violate the standing gcd conditions, naming the
/// violated condition in the message.
CodeSpec validate_spec(u64 p, unsigned e, unsigned k, u64 e1, u64 e2);

std::string describe(const CodeSpec& spec);

/// A constructed code: the field tower plus the per-coordinate tables the
/// enumeration kernel reads. Immutable after construction.
class CyclicCode {
public:
    explicit CyclicCode(const CodeSpec& spec);

    const CodeSpec& spec() const noexcept { return spec_; }
    const ExtensionField& field() const noexcept { return field_; }
    const BaseField& base() const noexcept { return field_.base(); }
    u64 length() const noexcept { return spec_.n; }

    /// Coordinate i of c(a,b), evaluated with field arithmetic only.
    Elem coordinate(Elem a, Elem b, u64 i) const noexcept;

    /// Tr(gamma^t) for t in [0, q^k-1).
    std::span<const Elem> trace_of_powers() const noexcept { return trace_of_powers_; }

private:
    CodeSpec spec_;
    ExtensionField field_;
    std::vector<Elem> trace_of_powers_;
};

struct Codeword {
    std::vector<Elem> symbols;

    bool operator==(const Codeword&) const = default;
};

Codeword build_codeword(const CyclicCode& code, Elem a, Elem b);
u64 weight(const Codeword& cw) noexcept;

/// Weight -> frequency, sorted ascending by weight, zero frequencies omitted.
struct WeightDistribution {
    std::vector<std::pair<u64, u64>> entries;

    static WeightDistribution from_histogram(std::span<const u64> histogram);

    u64 total() const noexcept;
    u64 frequency(u64 weight) const noexcept;
    std::size_t distinct_nonzero_weights() const noexcept;
    /// "1+189z^47+63z^48+3z^63"
    std::string enumerator() const;

    bool operator==(const WeightDistribution&) const = default;
};

inline constexpr u64 kBruteForceCap = 1'000'000'000;

/// Exact distribution over all (a,b) in F_q x F_{q^k}. The outer loop runs
/// over b and may be split across `threads` workers with private histograms.
WeightDistribution weight_distribution_brute(const CyclicCode& code, unsigned threads = 1);

/// Smallest nonzero weight; throws ZeroCode when only the zero word exists.
u64 min_distance(const WeightDistribution& dist);

/// sum_{i<l} ceil(h / q^i)
u64 griesmer_sum(u64 l, u64 h, u64 q);
bool is_griesmer_optimal(const CodeSpec& spec, u64 h);

/// floor(q^{k-1}(q-1) - 1 - (d-1) q^{(k-1)/2})
i64 min_distance_lower_bound(const CodeSpec& spec);

enum class DualDistance { One, Two, Three, MoreThanThree };
std::string to_string(DualDistance d);

inline constexpr u64 kDualProbeCap = 5000;

/// Rows (delta^{e1 i})_i and (Tr(x^j gamma^{e2 i}))_i for j < k, where x is
/// the root of the extension modulus.
std::vector<std::vector<Elem>> generator_matrix(const CyclicCode& code);

/// Minimum distance of the dual, decided from column dependencies of a
/// generator matrix given column-major over `field`.
DualDistance dual_distance_of_columns(const BaseField& field,
                                      const std::vector<std::vector<Elem>>& columns);
DualDistance dual_distance_probe(const CyclicCode& code);

/// First two Pless moments: sum A_w = q^{k+1} and sum w A_w = n (q-1) q^k.
/// Throws MomentMismatch on failure.
void pless_moment_check(const CodeSpec& spec, const WeightDistribution& dist);

/// h(x) = h_{(q^k-1)e1/(q-1)}(x) * h_{e2}(x).
Polynomial parity_check_polynomial(const CyclicCode& code);

/// True when f divides x^n - 1 over `field`.
bool divides_xn_minus_one(const BaseField& field, const Polynomial& f, u64 n);

/// c(x) h(x) == 0 mod x^n - 1.
bool annihilated_by(const BaseField& field, const Codeword& cw, const Polynomial& h);

}  // namespace cyclocode
