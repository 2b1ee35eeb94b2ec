#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cyclocode/numtheory.hpp"
#include "cyclocode/poly.hpp"

namespace cyclocode {

/// Packed field element: the coefficient vector (c_0, ..., c_{deg-1}) over
/// the immediate base stored as sum c_i * base^i.
using Elem = std::uint32_t;

inline constexpr u64 kMaxBaseFieldSize = u64{1} << 20;

/// F_q = GF(p^e) as GF(p)[x]/(modulus) with eager log/antilog tables.
///
/// The modulus is the lexicographically smallest monic irreducible of degree
/// e (coefficients compared constant term first) and delta is the smallest
/// element in the same order whose multiplicative order is q-1.
class BaseField {
public:
    BaseField(u64 p, unsigned e);

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t characteristic() const noexcept { return p_; }
    unsigned e() const noexcept { return e_; }
    std::uint32_t q() const noexcept { return q_; }
    std::uint32_t size() const noexcept { return q_; }
    /// Order of the multiplicative group, q-1.
    std::uint32_t order() const noexcept { return q_ - 1; }

    const Polynomial& modulus() const noexcept { return modulus_; }
    Elem delta() const noexcept { return delta_; }
    Elem generator() const noexcept { return delta_; }

    Elem add(Elem a, Elem b) const noexcept;
    Elem sub(Elem a, Elem b) const noexcept;
    Elem neg(Elem a) const noexcept;
    Elem mul(Elem a, Elem b) const noexcept {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    /// Inverse of a nonzero element; throws ZeroInput on zero.
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, u64 n) const noexcept;

    /// delta^t for any t >= 0.
    Elem exp(u64 t) const noexcept { return exp_[t % order()]; }
    /// Discrete log base delta; throws ZeroInput on zero.
    std::uint32_t log(Elem a) const;
    /// Unchecked discrete log, a must be nonzero.
    std::uint32_t log_unchecked(Elem a) const noexcept { return log_[a]; }

    /// Absolute trace Tr_{q/p}(a) as an integer in [0, p).
    std::uint32_t abs_trace(Elem a) const noexcept { return abs_trace_[a]; }

    /// Image of an integer under Z -> GF(p) -> F_q.
    Elem from_int(i64 n) const noexcept { return static_cast<Elem>(mod_floor(n, p_)); }
    Elem minus_one() const noexcept { return neg(1); }

    std::vector<std::uint32_t> coeffs(Elem a) const;
    Elem from_coeffs(std::span<const std::uint32_t> c) const;

    /// Field ops in the shape the polynomial helpers expect.
    const BaseField& ops() const noexcept { return *this; }

private:
    std::uint32_t p_;
    unsigned e_;
    std::uint32_t q_;
    Polynomial modulus_;
    Elem delta_ = 0;
    std::vector<Elem> exp_;  // length 2(q-1) so exp_[i + j] needs no reduction
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> abs_trace_;
};

BaseField build_base_field(u64 p, unsigned e);

/// Packed index of the r-th word of length `len` over an alphabet of size
/// `radix` in lexicographic order with position 0 most significant.
u64 lex_rank_to_index(u64 r, u64 radix, unsigned len) noexcept;

}  // namespace cyclocode
