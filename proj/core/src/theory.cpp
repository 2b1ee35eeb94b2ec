#include "cyclocode/theory.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "cyclocode/characters.hpp"
#include "cyclocode/error.hpp"
#include "cyclocode/jacobi.hpp"

namespace cyclocode {

namespace {

i64 base_weight(u64 q, unsigned k) { return static_cast<i64>(ipow(q, k - 1) * (q - 1)) - 1; }

// base - r/q, with r required to be a multiple of q and the result a valid weight
u64 weight_from_offset(const CodeSpec& s, i64 r) {
    const auto q = static_cast<i64>(s.q);
    if (r % q != 0) {
        throw Error(ErrorCode::NonIntegralResult, "offset " + std::to_string(r) + " is not divisible by q");
    }
    const i64 w = base_weight(s.q, s.k) - r / q;
    if (w <= 0 || w > static_cast<i64>(s.n)) {
        throw Error(ErrorCode::InvariantViolation, "predicted weight " + std::to_string(w) + " out of range");
    }
    return static_cast<u64>(w);
}

i64 pow_i(i64 b, unsigned n) { return ipow_signed(b, n); }

u64 check_generator(const CodeSpec& s, const TheoryOptions& opt) {
    const u64 u = opt.generator_power % s.d;
    if (gcd(u, s.d) != 1) {
        throw Error(ErrorCode::InvalidArgument, "generator power must be coprime to d");
    }
    return u;
}

std::vector<u64> class_weights_d2(const CodeSpec& s) {
    if (s.q % 2 == 0 || s.k % 2 == 0) {
        throw Error(ErrorCode::ParityViolation, "d = 2 requires odd q and odd k");
    }
    // T - 1 = eta(c) G(eta)^{k+1} with G(eta)^2 = +-q
    const i64 g2 = gauss_quadratic_exact(s.p, s.e).square();
    const i64 r = pow_i(g2, (s.k + 1) / 2);
    return {weight_from_offset(s, r), weight_from_offset(s, -r)};
}

std::vector<u64> class_weights_d3(const CodeSpec& s, const TheoryOptions& opt) {
    if (s.k % 3 == 0) throw Error(ErrorCode::KDivisibleBy3, "d = 3 requires k not divisible by 3");
    const u64 u = check_generator(s, opt);
    const EisensteinInt j = opt.cubic_jacobi ? *opt.cubic_jacobi : jacobi_cubic(BaseField(s.p, s.e), u);
    // G(phi)^3 = q J; k = 3t+1 leaves q^{t+1} J^t, k = 3t+2 leaves q^{t+1} J^{t+1}
    const unsigned t = (s.k - 1) / 3;
    const unsigned power = (s.k % 3 == 1) ? t : t + 1;
    const i64 sign = (s.k % 2 == 1) ? 1 : -1;
    const EisensteinInt jp = j.pow(power);
    std::vector<u64> out;
    for (u64 c = 0; c < 3; ++c) {
        const i64 re2 = (EisensteinInt::omega_pow(-static_cast<i64>(u * c)) * jp).two_re();
        out.push_back(weight_from_offset(s, sign * pow_i(static_cast<i64>(s.q), t + 1) * re2));
    }
    return out;
}

std::vector<u64> class_weights_d4(const CodeSpec& s, const TheoryOptions& opt) {
    if (s.k % 2 == 0) throw Error(ErrorCode::KEven, "d = 4 requires odd k");
    const u64 u = check_generator(s, opt);
    const GaussianInt j = opt.quartic_jacobi ? *opt.quartic_jacobi : jacobi_quartic(BaseField(s.p, s.e), u);
    // G(phi)^4 = q J^2 and G(eta)^2 = q since q = 1 mod 4
    const auto q = static_cast<i64>(s.q);
    const unsigned t = s.k / 4;
    const GaussianInt j2 = j * j;
    GaussianInt jp;
    i64 unit_sign = 1;
    if (s.k % 4 == 1) {
        jp = j2.pow(t);
        unit_sign = ((s.q - 1) / 4) % 2 == 0 ? 1 : -1;  // phi(-1)
    } else {
        jp = j2.pow(t + 1);
    }
    const i64 eta_term = pow_i(q, (s.k + 1) / 2);
    std::vector<u64> out;
    for (u64 c = 0; c < 4; ++c) {
        const i64 re2 = (GaussianInt::i_pow(-static_cast<i64>(u * c)) * jp).two_re();
        const i64 r = (c % 2 == 0 ? eta_term : -eta_term) + unit_sign * pow_i(q, t + 1) * re2;
        out.push_back(weight_from_offset(s, r));
    }
    return out;
}

PredictedDistribution assemble(const CodeSpec& s, const std::vector<u64>& cw) {
    PredictedDistribution out;
    const u64 class_freq = (s.q - 1) * s.n / s.d;
    out.rows.push_back({0, 1, "zero"});
    for (std::size_t c = 0; c < cw.size(); ++c) {
        out.rows.push_back({cw[c], class_freq, "class " + std::to_string(c) + " of " + std::to_string(s.d)});
    }
    out.rows.push_back({ipow(s.q, s.k - 1) * (s.q - 1), s.n, "a = 0"});
    out.rows.push_back({s.n, s.q - 1, "b = 0"});

    std::map<u64, u64> m;
    for (const auto& r : out.rows) m[r.weight] += r.frequency;
    out.merged = m.size() < out.rows.size();
    out.distribution.entries.assign(m.begin(), m.end());
    return out;
}

void require_d(const CodeSpec& s, u64 d) {
    if (s.d != d) {
        throw Error(ErrorCode::InvalidArgument, "spec has d = " + std::to_string(s.d) + ", expected " + std::to_string(d));
    }
}

}  // namespace

std::vector<u64> class_weights(const CodeSpec& s, const TheoryOptions& opt) {
    switch (s.d) {
        case 1: return {weight_from_offset(s, 0)};
        case 2: return class_weights_d2(s);
        case 3: return class_weights_d3(s, opt);
        case 4: return class_weights_d4(s, opt);
        default:
            throw Error(ErrorCode::UnsupportedD,
                        "no closed form for d = " + std::to_string(s.d) +
                            "; weight distributions for d >= 5 are an open problem (use brute force)");
    }
}

PredictedDistribution predict(const CodeSpec& s, const TheoryOptions& opt) {
    return assemble(s, class_weights(s, opt));
}

PredictedDistribution predict_d1(const CodeSpec& s) {
    require_d(s, 1);
    return predict(s);
}

PredictedDistribution predict_d2(const CodeSpec& s) {
    require_d(s, 2);
    return predict(s);
}

PredictedDistribution predict_d3(const CodeSpec& s, const TheoryOptions& opt) {
    require_d(s, 3);
    return predict(s, opt);
}

PredictedDistribution predict_d4(const CodeSpec& s, const TheoryOptions& opt) {
    require_d(s, 4);
    return predict(s, opt);
}

u64 predicted_weight(const CyclicCode& code, Elem a, Elem b, const TheoryOptions& opt) {
    const CodeSpec& s = code.spec();
    if (a == 0 && b == 0) return 0;
    if (b == 0) return s.n;
    if (a == 0) return ipow(s.q, s.k - 1) * (s.q - 1);
    const BaseField& f = code.base();
    const Elem c = f.mul(code.field().norm(b), f.pow(f.inv(a), s.k));
    return class_weights(s, opt)[f.log(c) % s.d];
}

std::optional<std::string> first_difference(const WeightDistribution& expected, const WeightDistribution& actual) {
    std::map<u64, u64> e(expected.entries.begin(), expected.entries.end());
    std::map<u64, u64> a(actual.entries.begin(), actual.entries.end());
    std::map<u64, u64> all = e;
    all.insert(a.begin(), a.end());
    for (const auto& [w, unused] : all) {
        const u64 fe = e.contains(w) ? e[w] : 0;
        const u64 fa = a.contains(w) ? a[w] : 0;
        if (fe != fa) {
            std::ostringstream os;
            os << "weight " << w << ": expected " << fe << ", got " << fa;
            return os.str();
        }
    }
    return std::nullopt;
}

Verdict compare(const CyclicCode& code, unsigned threads, const TheoryOptions& opt) {
    Verdict v;
    v.predicted = predict(code.spec(), opt).distribution;
    v.observed = weight_distribution_brute(code, threads);
    const auto diff = first_difference(v.predicted, v.observed);
    v.match = !diff;
    if (diff) v.difference = *diff;
    return v;
}

Verdict require_match(const CyclicCode& code, unsigned threads, const TheoryOptions& opt) {
    Verdict v = compare(code, threads, opt);
    if (!v.match) throw Error(ErrorCode::Mismatch, describe(code.spec()) + ": " + v.difference);
    return v;
}

WeightDistribution TableTemplate::merged() const {
    std::map<u64, u64> m;
    for (const auto& r : rows) m[static_cast<u64>(r.weight)] += r.frequency;
    WeightDistribution d;
    d.entries.assign(m.begin(), m.end());
    return d;
}

namespace {

struct CubicParams {
    i64 A, B, a, b;
};

CubicParams cubic_params(u64 q) {
    const CubicAB ab = cubic_AB(q);
    // a + b omega with A = 2a - b, B = b/3
    return {ab.A, ab.B, (ab.A + 3 * ab.B) / 2, 3 * ab.B};
}

[[noreturn]] void unmet(int id, const std::string& why) {
    throw Error(ErrorCode::HypothesisUnmet, "table " + std::to_string(id) + ": " + why);
}

unsigned fixed_k(int id, unsigned want, std::optional<unsigned> k) {
    if (k && *k != want) unmet(id, "requires k = " + std::to_string(want));
    return want;
}

// 2 Re(x) for x in Z[omega] given as a + b omega
i64 re2(EisensteinInt x) { return x.two_re(); }

}  // namespace

TableTemplate evaluate_table(int id, u64 p, unsigned e, std::optional<unsigned> k_opt) {
    if (id < 1 || id > kTableCount) {
        throw Error(ErrorCode::UnknownTable, "unknown table id " + std::to_string(id));
    }
    if (!is_prime(p)) throw Error(ErrorCode::NonPrime, "p = " + std::to_string(p) + " is not prime");
    const auto qq = checked_pow(p, e);
    if (!qq || *qq > kMaxBaseFieldSize) throw Error(ErrorCode::TooLarge, "q too large");
    const u64 q = *qq;
    const auto Q = static_cast<i64>(q);

    TableTemplate t;
    t.id = id;
    t.q = q;

    auto need_k = [&]() -> unsigned {
        if (!k_opt) unmet(id, "requires k");
        if (*k_opt < 2) unmet(id, "requires k >= 2");
        return *k_opt;
    };

    unsigned k = 0;
    u64 divisor = 1;  // class frequency denominator
    std::vector<std::pair<i64, std::string>> offsets;  // weight - base, label
    std::vector<u64> multiplicity;                      // class rows absorbed per template row
    bool a0_absorbs_one_class = false;

    auto push = [&](i64 off, const std::string& label, u64 mult = 1) {
        offsets.emplace_back(off, label);
        multiplicity.push_back(mult);
    };

    switch (id) {
        case 1: {
            k = need_k();
            t.hypothesis = "d = 1";
            divisor = 1;
            push(0, "a,b != 0");
            break;
        }
        case 2: {
            k = need_k();
            t.hypothesis = "d = 2, q and k odd";
            if (q % 2 == 0) unmet(id, "requires odd q");
            if (k % 2 == 0) unmet(id, "requires odd k");
            divisor = 2;
            const i64 pstar = (p % 4 == 1) ? static_cast<i64>(p) : -static_cast<i64>(p);
            const i64 v = pow_i(pow_i(pstar, e), (k + 1) / 2);
            if (v % Q != 0) throw Error(ErrorCode::NonIntegralResult, "table 2 offset not integral");
            push(v / Q, "+");
            push(-v / Q, "-");
            break;
        }
        case 3:
        case 4: {
            k = need_k();
            t.hypothesis = id == 3 ? "d = 3, k = 1 mod 3" : "d = 3, k = 2 mod 3";
            if (q % 3 != 1) unmet(id, "requires q = 1 mod 3");
            if (k % 3 != static_cast<unsigned>(id - 2)) unmet(id, id == 3 ? "requires k = 1 mod 3" : "requires k = 2 mod 3");
            divisor = 3;
            const auto c = cubic_params(q);
            const unsigned tt = id == 3 ? (k - 1) / 3 : (k - 2) / 3;
            const unsigned s = id == 3 ? tt : tt + 1;
            const EisensteinInt jp = EisensteinInt{c.a, c.b}.pow(s);
            const i64 sign = (k % 2 == 1) ? 1 : -1;
            const i64 scale = pow_i(Q, tt);
            push(-scale * sign * re2(jp), "1");
            push(-scale * sign * re2(EisensteinInt::omega_pow(1) * jp), "omega");
            push(-scale * sign * re2(EisensteinInt::omega_pow(2) * jp), "omega^2");
            break;
        }
        case 5:
        case 6:
        case 7:
        case 8:
        case 9:
        case 10:
        case 11:
        case 12: {
            static constexpr unsigned ks[] = {2, 4, 5, 7};
            const int slot = (id - 5) % 4;
            k = fixed_k(id, ks[slot], k_opt);
            t.hypothesis = "d = 3, k = " + std::to_string(k) + (id >= 9 ? ", B = 0" : "");
            if (q % 3 != 1) unmet(id, "requires q = 1 mod 3");
            divisor = 3;
            const auto c = cubic_params(q);
            const i64 A = c.A, B = c.B;
            if (id >= 9 && B != 0) unmet(id, "requires B = 0");
            if (id <= 8) {
                switch (k) {
                    case 2:
                        push(A, "A");
                        push(-(A + 9 * B) / 2, "-(A+9B)/2");
                        push((9 * B - A) / 2, "(9B-A)/2");
                        break;
                    case 4:
                        push(Q * A, "qA");
                        push(-Q * (A + 9 * B) / 2, "-q(A+9B)/2");
                        push(Q * (9 * B - A) / 2, "q(9B-A)/2");
                        break;
                    default: {
                        const unsigned h = (k - 1) / 2;  // 2 for k=5, 3 for k=7
                        const i64 qh = pow_i(Q, h), qh1 = pow_i(Q, h - 1);
                        push(-2 * qh + 27 * qh1 * B * B, "-2q^h+27q^{h-1}B^2");
                        push(qh + 9 * qh1 * B * (A - 3 * B) / 2, "q^h+9q^{h-1}B(A-3B)/2");
                        push(qh - 9 * qh1 * B * (A + 3 * B) / 2, "q^h-9q^{h-1}B(A+3B)/2");
                    }
                }
            } else {
                switch (k) {
                    case 2:
                        push(A, "A");
                        push(-A / 2, "-A/2", 2);
                        break;
                    case 4:
                        push(Q * A, "qA");
                        push(-Q * A / 2, "-qA/2", 2);
                        break;
                    default: {
                        const i64 qh = pow_i(Q, (k - 1) / 2);
                        push(-2 * qh, "-2q^h");
                        push(qh, "q^h", 2);
                    }
                }
            }
            break;
        }
        case 13:
        case 14: {
            k = fixed_k(id, 2, k_opt);
            if (q % 3 != 1) unmet(id, "requires q = 1 mod 3");
            divisor = 3;
            const auto c = cubic_params(q);
            if (id == 13) {
                t.hypothesis = "d = 3, k = 2, A = 1";
                if (c.A != 1) unmet(id, "requires A = 1");
                const i64 B = c.B;
                push(-(1 + 9 * B) / 2, "-(1+9B)/2");
                push((9 * B - 1) / 2, "(9B-1)/2");
            } else {
                t.hypothesis = "d = 3, k = 2, A = 9B - 2";
                i64 B = 0;
                if (c.A == 9 * c.B - 2) {
                    B = c.B;
                } else if (c.A == -9 * c.B - 2) {
                    B = -c.B;
                } else {
                    unmet(id, "requires A = 9B - 2 for some sign of B");
                }
                push(9 * B - 2, "9B-2");
                push(-9 * B + 1, "1-9B");
            }
            a0_absorbs_one_class = true;
            break;
        }
        case 15:
        case 16:
        case 17:
        case 18:
        case 19:
        case 20: {
            if (q % 4 != 1) unmet(id, "requires q = 1 mod 4");
            if (id == 15 || id == 16) {
                k = need_k();
                if (k % 4 != static_cast<unsigned>(id == 15 ? 1 : 3)) {
                    unmet(id, id == 15 ? "requires k = 1 mod 4" : "requires k = 3 mod 4");
                }
            } else {
                k = fixed_k(id, (id == 17 || id == 19) ? 3 : 5, k_opt);
            }
            t.hypothesis = "d = 4, k = " + std::to_string(k) + (id >= 19 ? ", n = 0" : "");
            divisor = 4;
            const GaussianInt pi = quartic_decompose(q);
            const i64 m = pi.m, n = pi.n;
            if (id >= 19 && n != 0) unmet(id, "requires n = 0");
            if (id == 15 || id == 16) {
                const i64 head = pow_i(Q, (k + 1) / 2);
                const i64 scale = (id == 15) ? 2 * pow_i(Q, 1 + (k - 1) / 4) : 2 * pow_i(Q, 1 + (k - 3) / 4);
                const GaussianInt pp = pi.pow(id == 15 ? (k - 1) / 2 : 2 + (k - 3) / 2);
                auto re = [&](i64 unit) { return (GaussianInt::i_pow(unit) * pp).m; };
                auto over_q = [&](i64 v) {
                    if (v % Q != 0) throw Error(ErrorCode::NonIntegralResult, "template offset not integral");
                    return v / Q;
                };
                push(-over_q(head + scale * re(0)), "-(..Re(pi^s))/q");
                push(over_q(head + scale * re(1)), "+(..Re(i pi^s))/q");
                push(-over_q(head + scale * re(2)), "-(..Re(-pi^s))/q");
                push(over_q(head + scale * re(3)), "+(..Re(-i pi^s))/q");
            } else if (id == 17 || id == 18) {
                const i64 g = (id == 17) ? 1 : Q;
                push(-(g * Q + 2 * g * (m * m - n * n)), "-(q+2(m^2-n^2))");
                push(g * Q - 4 * g * m * n, "q-4mn");
                push(-(g * Q + 2 * g * (n * n - m * m)), "-(q+2(n^2-m^2))");
                push(g * Q + 4 * g * m * n, "q+4mn");
            } else {
                const i64 g = (id == 19) ? Q : Q * Q;
                push(-3 * g, "-3q^h");
                push(g, "q^h", 3);
            }
            break;
        }
        default:
            break;
    }

    t.k = k;
    const auto qk = checked_pow(q, k);
    if (!qk || *qk > kMaxExtensionFieldSize) throw Error(ErrorCode::TooLarge, "q^k too large");
    const u64 n = *qk - 1;
    const i64 base = base_weight(q, k);
    const u64 class_freq = (q - 1) * n / divisor;

    t.rows.push_back({0, 1, "zero"});
    for (std::size_t i = 0; i < offsets.size(); ++i) {
        t.rows.push_back({base + offsets[i].first, class_freq * multiplicity[i], offsets[i].second});
    }
    const i64 a0 = static_cast<i64>(ipow(q, k - 1) * (q - 1));
    t.rows.push_back({a0, a0_absorbs_one_class ? (q + 2) * n / 3 : n, "a = 0"});
    t.rows.push_back({static_cast<i64>(n), q - 1, "b = 0"});
    for (const auto& r : t.rows) {
        if (r.weight < 0 || r.weight > static_cast<i64>(n)) {
            throw Error(ErrorCode::InvariantViolation, "template weight out of range");
        }
    }
    return t;
}

std::vector<SpecializationResult> specialize_check(const CodeSpec& s) {
    std::vector<int> ids;
    if (s.d == 3) {
        const auto c = cubic_AB(s.q);
        const int slot = s.k == 2 ? 0 : s.k == 4 ? 1 : s.k == 5 ? 2 : s.k == 7 ? 3 : -1;
        if (slot >= 0) {
            ids.push_back(5 + slot);
            if (c.B == 0) ids.push_back(9 + slot);
        }
        if (s.k == 2 && c.A == 1) ids.push_back(13);
        if (s.k == 2 && (c.A == 9 * c.B - 2 || c.A == -9 * c.B - 2)) ids.push_back(14);
    } else if (s.d == 4) {
        if (s.k == 3 || s.k == 5) {
            ids.push_back(s.k == 3 ? 17 : 18);
            if (quartic_decompose(s.q).n == 0) ids.push_back(s.k == 3 ? 19 : 20);
        }
    }
    if (ids.empty()) {
        throw Error(ErrorCode::NoTemplateApplies, "no specialised template applies to " + describe(s));
    }
    const WeightDistribution predicted = predict(s).distribution;
    std::vector<SpecializationResult> out;
    for (int id : ids) {
        const TableTemplate t = evaluate_table(id, s.p, s.e, s.k);
        SpecializationResult r;
        r.table = id;
        const WeightDistribution m = t.merged();
        r.matches = (m == predicted);
        r.distinct_weights = m.distinct_nonzero_weights();
        if ((id >= 9 && id <= 14) || id >= 19) r.claimed_weights = 4;
        out.push_back(r);
    }
    return out;
}

const std::vector<KnownCode>& known_codes() {
    static const std::vector<KnownCode> codes = {
        {"q4-k3-d1", 2, 2, 3, 1, 1, "1+189z^47+63z^48+3z^63"},
        {"q3-k4-d1", 3, 1, 4, 1, 3, "1+160z^53+80z^54+2z^80"},
        {"q3-k3-d2", 3, 1, 3, 1, 1, "1+26z^14+26z^18+26z^20+2z^26"},
        {"q9-k3-d2", 3, 2, 3, 1, 1, "1+2912z^638+728z^648+2912z^656+8z^728"},
        {"q4-k2-d3", 2, 2, 2, 2, 1, "1+30z^9+15z^12+18z^15"},
        {"q7-k4-d3", 7, 1, 4, 1, 1, "1+4800z^2022+2400z^2058+4800z^2064+4800z^2085+6z^2400"},
        {"q4-k5-d3", 2, 2, 5, 1, 2, "1+1023z^735+1023z^768+2046z^783+3z^1023"},
        {"q9-k3-d4", 3, 2, 3, 3, 5, "1+1456z^620+728z^648+4368z^656+8z^728"},
        {"q5-k5-d4", 5, 1, 5, 1, 1, "1+3124z^2444+3124z^2484+3124z^2500+3124z^2504+3124z^2564+4z^3124"},
    };
    return codes;
}

}  // namespace cyclocode
