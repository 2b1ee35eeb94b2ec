#include "cyclocode/code.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "cyclocode/error.hpp"

namespace cyclocode {

namespace {

u64 isqrt_ceil(u64 x) {
    u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(x)));
    while (r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r * r == x ? r : r + 1;
}

}  // namespace

CodeSpec validate_spec(u64 p, unsigned e, unsigned k, u64 e1, u64 e2) {
    if (!is_prime(p)) throw Error(ErrorCode::NonPrime, "p = " + std::to_string(p) + " is not prime");
    if (e == 0) throw Error(ErrorCode::InvalidArgument, "e must be at least 1");
    if (k < 2) throw Error(ErrorCode::InvalidArgument, "k must be at least 2");
    if (e1 == 0 || e2 == 0) throw Error(ErrorCode::InvalidArgument, "e1 and e2 must be positive");
    const auto q = checked_pow(p, e);
    if (!q || *q > kMaxBaseFieldSize) {
        throw Error(ErrorCode::TooLarge, "q = p^e exceeds " + std::to_string(kMaxBaseFieldSize));
    }
    const auto qk = checked_pow(*q, k);
    if (!qk || *qk > kMaxExtensionFieldSize) {
        throw Error(ErrorCode::TooLarge, "q^k exceeds " + std::to_string(kMaxExtensionFieldSize));
    }

    CodeSpec s;
    s.p = p;
    s.e = e;
    s.k = k;
    s.e1 = e1;
    s.e2 = e2;
    s.q = *q;
    s.n = *qk - 1;
    s.dimension = k + 1;

    const u64 m = s.n / (s.q - 1);
    if (gcd(m, e2) != 1) {
        throw Error(ErrorCode::GcdE2Violation,
                    "gcd((q^k-1)/(q-1), e2) = gcd(" + std::to_string(m) + ", " + std::to_string(e2) +
                        ") != 1");
    }
    if (gcd(gcd(s.q - 1, e1), e2) != 1) {
        throw Error(ErrorCode::GcdE1E2Violation, "gcd(q-1, e1, e2) = gcd(" + std::to_string(s.q - 1) +
                                                     ", " + std::to_string(e1) + ", " +
                                                     std::to_string(e2) + ") != 1");
    }
    const u64 qm1 = s.q - 1;
    const u64 diff = (mulmod(k % qm1, e1 % qm1, qm1) + qm1 - e2 % qm1) % qm1;
    s.d = gcd(qm1, diff);
    if (gcd(k, s.d) != 1) {
        throw Error(ErrorCode::InvariantViolation, "gcd(k, d) != 1 for a spec that passed the gcd checks");
    }
    return s;
}

std::string describe(const CodeSpec& s) {
    std::ostringstream os;
    os << "q=" << s.q << " (p=" << s.p << ",e=" << s.e << ") k=" << s.k << " e1=" << s.e1
       << " e2=" << s.e2 << " n=" << s.n << " d=" << s.d;
    return os.str();
}

CyclicCode::CyclicCode(const CodeSpec& spec)
    : spec_(spec), field_(BaseField(spec.p, spec.e), spec.k) {
    trace_of_powers_.resize(field_.order());
    for (std::uint32_t t = 0; t < field_.order(); ++t) trace_of_powers_[t] = field_.trace(field_.exp(t));
}

Elem CyclicCode::coordinate(Elem a, Elem b, u64 i) const noexcept {
    const BaseField& f = base();
    const Elem lhs = f.mul(a, f.exp(mulmod(spec_.e1 % f.order(), i, f.order())));
    const Elem rhs = field_.trace(field_.mul(b, field_.exp(mulmod(spec_.e2, i, field_.order()))));
    return f.add(lhs, rhs);
}

Codeword build_codeword(const CyclicCode& code, Elem a, Elem b) {
    Codeword cw;
    cw.symbols.resize(code.length());
    for (u64 i = 0; i < code.length(); ++i) cw.symbols[i] = code.coordinate(a, b, i);
    return cw;
}

u64 weight(const Codeword& cw) noexcept {
    return static_cast<u64>(std::count_if(cw.symbols.begin(), cw.symbols.end(), [](Elem s) { return s != 0; }));
}

WeightDistribution WeightDistribution::from_histogram(std::span<const u64> histogram) {
    WeightDistribution out;
    for (std::size_t w = 0; w < histogram.size(); ++w) {
        if (histogram[w] != 0) out.entries.emplace_back(w, histogram[w]);
    }
    return out;
}

u64 WeightDistribution::total() const noexcept {
    u64 s = 0;
    for (const auto& [w, c] : entries) s += c;
    return s;
}

u64 WeightDistribution::frequency(u64 weight) const noexcept {
    for (const auto& [w, c] : entries) {
        if (w == weight) return c;
    }
    return 0;
}

std::size_t WeightDistribution::distinct_nonzero_weights() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(), [](const auto& e) { return e.first != 0; }));
}

std::string WeightDistribution::enumerator() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : entries) {
        if (!first) os << '+';
        first = false;
        if (w == 0) {
            os << c;
        } else {
            if (c != 1) os << c;
            os << "z^" << w;
        }
    }
    return first ? "0" : os.str();
}

WeightDistribution weight_distribution_brute(const CyclicCode& code, unsigned threads) {
    const CodeSpec& s = code.spec();
    const u64 words = s.q * (s.n + 1);
    if (words > kBruteForceCap / s.n) {
        throw Error(ErrorCode::TooLarge, "q^{k+1} * n exceeds the enumeration cap of " +
                                             std::to_string(kBruteForceCap));
    }
    const BaseField& f = code.base();
    const u64 n = s.n;
    const u64 qm1 = f.order();
    const u64 e1 = s.e1 % qm1;
    const u64 e2 = s.e2 % n;
    const auto trpow = code.trace_of_powers();

    // log(-t) for nonzero t in F_q
    std::vector<std::uint32_t> neglog(f.q(), 0);
    for (Elem t = 1; t < f.q(); ++t) neglog[t] = f.log_unchecked(f.neg(t));

    if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<u64>(threads, n));

    std::vector<std::vector<u64>> hist(threads, std::vector<u64>(n + 1, 0));
    auto worker = [&](unsigned id) {
        std::vector<u64>& h = hist[id];
        std::vector<u64> zeros_at(qm1, 0);
        const u64 lo = n * id / threads;
        const u64 hi = n * (id + 1) / threads;
        for (u64 l = lo; l < hi; ++l) {
            std::fill(zeros_at.begin(), zeros_at.end(), 0);
            u64 z0 = 0;
            u64 idx = l;
            u64 shift = 0;  // e1 * i mod (q-1)
            for (u64 i = 0; i < n; ++i) {
                const Elem t = trpow[idx];
                if (t == 0) {
                    ++z0;
                } else {
                    // a * delta^{e1 i} = -t  <=>  log a = log(-t) - e1 i
                    u64 r = neglog[t] + qm1 - shift;
                    if (r >= qm1) r -= qm1;
                    ++zeros_at[r];
                }
                idx += e2;
                if (idx >= n) idx -= n;
                shift += e1;
                if (shift >= qm1) shift -= qm1;
            }
            ++h[n - z0];
            for (u64 r = 0; r < qm1; ++r) ++h[n - zeros_at[r]];
        }
    };

    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned id = 0; id < threads; ++id) pool.emplace_back(worker, id);
        for (auto& t : pool) t.join();
    }

    std::vector<u64> total(n + 1, 0);
    for (const auto& h : hist) {
        for (u64 w = 0; w <= n; ++w) total[w] += h[w];
    }
    total[0] += 1;       // (0, 0)
    total[n] += qm1;     // (a, 0), a != 0
    return WeightDistribution::from_histogram(total);
}

u64 min_distance(const WeightDistribution& dist) {
    for (const auto& [w, c] : dist.entries) {
        if (w != 0 && c != 0) return w;
    }
    throw Error(ErrorCode::ZeroCode, "distribution has no nonzero codeword");
}

u64 griesmer_sum(u64 l, u64 h, u64 q) {
    u64 sum = 0;
    u64 qi = 1;
    for (u64 i = 0; i < l; ++i) {
        sum += qi >= h ? 1 : (h + qi - 1) / qi;
        if (qi < h) qi *= q;
    }
    return sum;
}

bool is_griesmer_optimal(const CodeSpec& spec, u64 h) {
    return griesmer_sum(spec.dimension, h, spec.q) == spec.n;
}

i64 min_distance_lower_bound(const CodeSpec& s) {
    const i64 base = static_cast<i64>(ipow(s.q, s.k - 1) * (s.q - 1)) - 1;
    // (d-1) q^{(k-1)/2} = sqrt((d-1)^2 q^{k-1}); subtracting its ceiling floors the bound
    const u64 sq = (s.d - 1) * (s.d - 1) * ipow(s.q, s.k - 1);
    return base - static_cast<i64>(isqrt_ceil(sq));
}

std::string to_string(DualDistance d) {
    switch (d) {
        case DualDistance::One: return "1";
        case DualDistance::Two: return "2";
        case DualDistance::Three: return "3";
        case DualDistance::MoreThanThree: return ">3";
    }
    return "?";
}

std::vector<std::vector<Elem>> generator_matrix(const CyclicCode& code) {
    const CodeSpec& s = code.spec();
    const ExtensionField& ext = code.field();
    const BaseField& f = code.base();
    std::vector<std::vector<Elem>> rows(s.k + 1, std::vector<Elem>(s.n));
    for (u64 i = 0; i < s.n; ++i) {
        rows[0][i] = f.exp(mulmod(s.e1 % f.order(), i, f.order()));
        const Elem g = ext.exp(mulmod(s.e2, i, ext.order()));
        for (unsigned j = 0; j < s.k; ++j) {
            const auto xj = static_cast<Elem>(ipow(s.q, j));
            rows[j + 1][i] = ext.trace(ext.mul(xj, g));
        }
    }
    return rows;
}

namespace {

// Column scaled so its first nonzero entry is 1, packed base q.
u64 projective_key(const BaseField& f, const std::vector<Elem>& col) {
    Elem scale = 0;
    for (Elem c : col) {
        if (c != 0) {
            scale = f.inv(c);
            break;
        }
    }
    u64 key = 0;
    for (std::size_t j = col.size(); j-- > 0;) key = key * f.q() + f.mul(col[j], scale);
    return key;
}

}  // namespace

DualDistance dual_distance_of_columns(const BaseField& f, const std::vector<std::vector<Elem>>& columns) {
    if (columns.empty()) return DualDistance::MoreThanThree;
    const std::size_t rows = columns.front().size();
    if (!checked_pow(f.q(), static_cast<unsigned>(rows)) || *checked_pow(f.q(), static_cast<unsigned>(rows)) > (u64{1} << 62)) {
        throw Error(ErrorCode::TooLarge, "column space too large to index");
    }
    std::unordered_set<u64> keys;
    std::vector<u64> key_of(columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        const auto& col = columns[c];
        if (std::all_of(col.begin(), col.end(), [](Elem x) { return x == 0; })) return DualDistance::One;
        key_of[c] = projective_key(f, col);
        if (!keys.insert(key_of[c]).second) return DualDistance::Two;
    }
    // Columns are pairwise independent; look for a third in the span of two.
    std::vector<Elem> combo(rows);
    for (std::size_t i = 0; i < columns.size(); ++i) {
        for (std::size_t j = i + 1; j < columns.size(); ++j) {
            for (Elem lambda = 1; lambda < f.q(); ++lambda) {
                for (std::size_t r = 0; r < rows; ++r) {
                    combo[r] = f.add(columns[i][r], f.mul(lambda, columns[j][r]));
                }
                if (keys.contains(projective_key(f, combo))) return DualDistance::Three;
            }
        }
    }
    return DualDistance::MoreThanThree;
}

DualDistance dual_distance_probe(const CyclicCode& code) {
    if (code.length() > kDualProbeCap) {
        throw Error(ErrorCode::TooLarge, "dual distance probe limited to n <= " + std::to_string(kDualProbeCap));
    }
    const auto rows = generator_matrix(code);
    std::vector<std::vector<Elem>> cols(code.length(), std::vector<Elem>(rows.size()));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (u64 i = 0; i < code.length(); ++i) cols[i][r] = rows[r][i];
    }
    return dual_distance_of_columns(code.base(), cols);
}

void pless_moment_check(const CodeSpec& s, const WeightDistribution& dist) {
    u64 m0 = 0;
    u64 m1 = 0;
    for (const auto& [w, c] : dist.entries) {
        m0 += c;
        m1 += w * c;
    }
    const u64 want0 = ipow(s.q, s.k + 1);
    const u64 want1 = s.n * (s.q - 1) * ipow(s.q, s.k);
    if (dist.frequency(0) != 1) {
        throw Error(ErrorCode::MomentMismatch, "weight 0 frequency is " + std::to_string(dist.frequency(0)));
    }
    if (m0 != want0) {
        throw Error(ErrorCode::MomentMismatch,
                    "sum A_w = " + std::to_string(m0) + ", expected " + std::to_string(want0));
    }
    if (m1 != want1) {
        throw Error(ErrorCode::MomentMismatch,
                    "sum w A_w = " + std::to_string(m1) + ", expected " + std::to_string(want1));
    }
}

Polynomial parity_check_polynomial(const CyclicCode& code) {
    const CodeSpec& s = code.spec();
    const u64 n = s.n;
    const u64 a = mulmod(n / (s.q - 1), s.e1, n);
    const Polynomial h1 = minimal_polynomial(code.field(), a);
    const Polynomial h2 = minimal_polynomial(code.field(), s.e2 % n);
    return Polynomial{poly::mul(code.base(), h1.coeffs, h2.coeffs)};
}

bool divides_xn_minus_one(const BaseField& f, const Polynomial& g, u64 n) {
    if (g.is_zero()) return false;
    if (g.degree() == 0) return true;
    const Coeffs xn = poly::powmod(f, Coeffs{0, 1}, n, g.coeffs);
    return xn == poly::mod(f, Coeffs{1}, g.coeffs);
}

bool annihilated_by(const BaseField& f, const Codeword& cw, const Polynomial& h) {
    const std::size_t n = cw.symbols.size();
    std::vector<Elem> acc(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (cw.symbols[i] == 0) continue;
        for (std::size_t l = 0; l < h.coeffs.size(); ++l) {
            const std::size_t pos = (i + l) % n;
            acc[pos] = f.add(acc[pos], f.mul(cw.symbols[i], h.coeffs[l]));
        }
    }
    return std::all_of(acc.begin(), acc.end(), [](Elem x) { return x == 0; });
}

}  // namespace cyclocode
