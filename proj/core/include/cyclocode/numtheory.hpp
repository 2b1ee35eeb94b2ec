#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace cyclocode {

using i64 = std::int64_t;
using u64 = std::uint64_t;

bool is_prime(u64 n) noexcept;

/// Distinct prime divisors in ascending order.
std::vector<u64> prime_divisors(u64 n);

u64 gcd(u64 a, u64 b) noexcept;

/// Integer power with overflow detection; nullopt when the result exceeds u64.
std::optional<u64> checked_pow(u64 base, unsigned exp) noexcept;

/// Integer power; caller guarantees no overflow.
u64 ipow(u64 base, unsigned exp) noexcept;
i64 ipow_signed(i64 base, unsigned exp) noexcept;

/// Non-negative residue of a mod m (m > 0).
u64 mod_floor(i64 a, u64 m) noexcept;

u64 mulmod(u64 a, u64 b, u64 m) noexcept;
u64 powmod(u64 base, u64 exp, u64 m) noexcept;

/// Modular inverse of a mod m, nullopt when gcd(a, m) != 1.
std::optional<u64> invmod(u64 a, u64 m) noexcept;

/// Writes q = p^e with p prime; nullopt when q is not a prime power.
std::optional<std::pair<u64, unsigned>> prime_power(u64 q) noexcept;

}  // namespace cyclocode
