#include "cyclocode/numtheory.hpp"

#include "cyclocode/error.hpp"

namespace cyclocode {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NonPrime: return "NonPrime";
        case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::ZeroInput: return "ZeroInput";
        case ErrorCode::EvenCharacteristic: return "EvenCharacteristic";
        case ErrorCode::OrderNotDividing: return "OrderNotDividing";
        case ErrorCode::NotOneModFour: return "NotOneModFour";
        case ErrorCode::NonIntegralResult: return "NonIntegralResult";
        case ErrorCode::GcdE2Violation: return "GcdE2Violation";
        case ErrorCode::GcdE1E2Violation: return "GcdE1E2Violation";
        case ErrorCode::ZeroCode: return "ZeroCode";
        case ErrorCode::MomentMismatch: return "MomentMismatch";
        case ErrorCode::UnsupportedD: return "UnsupportedD";
        case ErrorCode::ParityViolation: return "ParityViolation";
        case ErrorCode::KDivisibleBy3: return "KDivisibleBy3";
        case ErrorCode::KEven: return "KEven";
        case ErrorCode::NoTemplateApplies: return "NoTemplateApplies";
        case ErrorCode::HypothesisUnmet: return "HypothesisUnmet";
        case ErrorCode::UnknownTable: return "UnknownTable";
        case ErrorCode::Mismatch: return "Mismatch";
        case ErrorCode::InvariantViolation: return "InvariantViolation";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

bool is_prime(u64 n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (u64 d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

std::vector<u64> prime_divisors(u64 n) {
    std::vector<u64> out;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

u64 gcd(u64 a, u64 b) noexcept {
    while (b != 0) {
        u64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::optional<u64> checked_pow(u64 base, unsigned exp) noexcept {
    u64 r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && r > UINT64_MAX / base) return std::nullopt;
        r *= base;
    }
    return r;
}

u64 ipow(u64 base, unsigned exp) noexcept {
    u64 r = 1;
    while (exp != 0) {
        if (exp & 1U) r *= base;
        base *= base;
        exp >>= 1U;
    }
    return r;
}

i64 ipow_signed(i64 base, unsigned exp) noexcept {
    i64 r = 1;
    for (unsigned i = 0; i < exp; ++i) r *= base;
    return r;
}

u64 mod_floor(i64 a, u64 m) noexcept {
    i64 r = a % static_cast<i64>(m);
    if (r < 0) r += static_cast<i64>(m);
    return static_cast<u64>(r);
}

__extension__ typedef unsigned __int128 u128;

u64 mulmod(u64 a, u64 b, u64 m) noexcept {
    return static_cast<u64>((static_cast<u128>(a) * b) % m);
}

u64 powmod(u64 base, u64 exp, u64 m) noexcept {
    u64 r = 1 % m;
    base %= m;
    while (exp != 0) {
        if (exp & 1U) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1U;
    }
    return r;
}

std::optional<u64> invmod(u64 a, u64 m) noexcept {
    i64 old_r = static_cast<i64>(a % m), r = static_cast<i64>(m);
    i64 old_s = 1, s = 0;
    while (r != 0) {
        i64 quot = old_r / r;
        i64 t = old_r - quot * r;
        old_r = r;
        r = t;
        t = old_s - quot * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1) return std::nullopt;
    return mod_floor(old_s, m);
}

std::optional<std::pair<u64, unsigned>> prime_power(u64 q) noexcept {
    if (q < 2) return std::nullopt;
    u64 p = 0;
    for (u64 d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) return std::make_pair(q, 1U);
    unsigned e = 0;
    while (q % p == 0) {
        q /= p;
        ++e;
    }
    if (q != 1) return std::nullopt;
    return std::make_pair(p, e);
}

}  // namespace cyclocode
