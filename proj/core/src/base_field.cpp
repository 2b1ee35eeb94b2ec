#include "cyclocode/base_field.hpp"

#include <string>

#include "cyclocode/error.hpp"

namespace cyclocode {

u64 lex_rank_to_index(u64 r, u64 radix, unsigned len) noexcept {
    // digit i of r (least significant first) becomes coefficient len-1-i
    u64 index = 0;
    for (unsigned i = 0; i < len; ++i) {
        const u64 digit = r % radix;
        r /= radix;
        index += digit * ipow(radix, len - 1 - i);
    }
    return index;
}

namespace {

Coeffs unpack(u64 index, u64 radix, unsigned len) {
    Coeffs c(len, 0);
    for (unsigned i = 0; i < len; ++i) {
        c[i] = static_cast<std::uint32_t>(index % radix);
        index /= radix;
    }
    return c;
}

u64 pack(const Coeffs& c, u64 radix) {
    u64 index = 0;
    for (std::size_t i = c.size(); i-- > 0;) index = index * radix + c[i];
    return index;
}

}  // namespace

BaseField::BaseField(u64 p, unsigned e) {
    if (!is_prime(p)) throw Error(ErrorCode::NonPrime, std::to_string(p) + " is not prime");
    if (e < 1) throw Error(ErrorCode::DegreeTooLarge, "extension degree must be at least 1");
    const auto q = checked_pow(p, e);
    if (!q || *q > kMaxBaseFieldSize) {
        throw Error(ErrorCode::DegreeTooLarge,
                    "p^e exceeds the base field cap 2^20 (p=" + std::to_string(p) +
                        ", e=" + std::to_string(e) + ")");
    }
    p_ = static_cast<std::uint32_t>(p);
    e_ = e;
    q_ = static_cast<std::uint32_t>(*q);

    const PrimeFieldOps fp{p_};
    for (u64 r = 0;; ++r) {
        Coeffs m = unpack(lex_rank_to_index(r, p, e), p, e);
        m.push_back(1);
        if (poly::is_irreducible(fp, m, p)) {
            modulus_.coeffs = std::move(m);
            break;
        }
    }

    const u64 n = q_ - 1;
    const auto cofactors = prime_divisors(n);
    auto power = [&](u64 a, u64 k) {
        return pack(poly::powmod(fp, unpack(a, p, e), k, modulus_.coeffs), p);
    };
    for (u64 r = 1; r < q_; ++r) {
        const u64 cand = lex_rank_to_index(r, p, e);
        if (cand == 0) continue;
        bool primitive = power(cand, n) == 1;
        for (u64 f : cofactors) {
            if (!primitive) break;
            primitive = power(cand, n / f) != 1;
        }
        if (primitive) {
            delta_ = static_cast<Elem>(cand);
            break;
        }
    }

    exp_.assign(2 * n, 0);
    log_.assign(q_, 0);
    const Coeffs g = unpack(delta_, p, e);
    Coeffs cur{1};
    for (u64 i = 0; i < n; ++i) {
        const auto idx = static_cast<Elem>(pack(cur, p));
        exp_[i] = idx;
        exp_[i + n] = idx;
        log_[idx] = static_cast<std::uint32_t>(i);
        cur = poly::mulmod(fp, cur, g, modulus_.coeffs);
    }

    abs_trace_.assign(q_, 0);
    for (Elem a = 1; a < q_; ++a) {
        Elem t = 0;
        u64 frob = 1;
        for (unsigned i = 0; i < e_; ++i) {
            t = add(t, exp((static_cast<u64>(log_[a]) * frob) % n));
            frob *= p_;
        }
        if (t >= p_) {
            throw Error(ErrorCode::InvariantViolation, "absolute trace left the prime field");
        }
        abs_trace_[a] = t;
    }
}

Elem BaseField::add(Elem a, Elem b) const noexcept {
    if (p_ == 2) return a ^ b;
    if (e_ == 1) return (a + b) % p_;
    Elem r = 0, scale = 1;
    for (unsigned i = 0; i < e_; ++i) {
        r += ((a % p_ + b % p_) % p_) * scale;
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return r;
}

Elem BaseField::neg(Elem a) const noexcept {
    if (p_ == 2) return a;
    if (e_ == 1) return (p_ - a) % p_;
    Elem r = 0, scale = 1;
    for (unsigned i = 0; i < e_; ++i) {
        r += ((p_ - a % p_) % p_) * scale;
        a /= p_;
        scale *= p_;
    }
    return r;
}

Elem BaseField::sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

Elem BaseField::inv(Elem a) const {
    if (a == 0) throw Error(ErrorCode::ZeroInput, "inverse of zero");
    return exp_[(order() - log_[a]) % order()];
}

Elem BaseField::pow(Elem a, u64 n) const noexcept {
    if (n == 0) return 1;
    if (a == 0) return 0;
    return exp_[mulmod(log_[a], n, order())];
}

std::uint32_t BaseField::log(Elem a) const {
    if (a == 0) throw Error(ErrorCode::ZeroInput, "discrete log of zero");
    return log_[a];
}

std::vector<std::uint32_t> BaseField::coeffs(Elem a) const { return unpack(a, p_, e_); }

Elem BaseField::from_coeffs(std::span<const std::uint32_t> c) const {
    Elem r = 0;
    for (std::size_t i = c.size(); i-- > 0;) r = r * p_ + c[i] % p_;
    return r;
}

BaseField build_base_field(u64 p, unsigned e) { return BaseField(p, e); }

}  // namespace cyclocode
