#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cyclocode/base_field.hpp"

namespace cyclocode {

inline constexpr u64 kMaxExtensionFieldSize = u64{1} << 24;

/// F_{q^k} as the tower F_q[x]/(modulus), elements packed as sum c_j q^j
/// with c_j base-field indices.
///
/// gamma is primitive and normalised so that gamma^((q^k-1)/(q-1)) equals
/// base().delta(); the norm map therefore sends gamma^t to delta^t.
class ExtensionField {
public:
    ExtensionField(BaseField base, unsigned k);

    const BaseField& base() const noexcept { return base_; }
    unsigned k() const noexcept { return k_; }
    std::uint32_t characteristic() const noexcept { return base_.p(); }
    std::uint32_t size() const noexcept { return size_; }
    std::uint32_t order() const noexcept { return size_ - 1; }
    /// (q^k-1)/(q-1), the exponent of the norm map.
    std::uint32_t norm_exponent() const noexcept { return order() / base_.order(); }

    const Polynomial& modulus() const noexcept { return modulus_; }
    Elem gamma() const noexcept { return gamma_; }
    Elem generator() const noexcept { return gamma_; }

    Elem add(Elem a, Elem b) const noexcept;
    Elem sub(Elem a, Elem b) const noexcept;
    Elem neg(Elem a) const noexcept;
    Elem mul(Elem a, Elem b) const noexcept {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    Elem inv(Elem a) const;
    Elem pow(Elem a, u64 n) const noexcept;
    /// x -> x^q.
    Elem frobenius(Elem a) const noexcept { return pow(a, base_.q()); }

    Elem exp(u64 t) const noexcept { return exp_[t % order()]; }
    std::uint32_t log(Elem a) const;
    std::uint32_t log_unchecked(Elem a) const noexcept { return log_[a]; }

    /// The embedded copy of F_q consists of the constant polynomials.
    Elem embed(Elem c) const noexcept { return c; }
    bool in_base(Elem a) const noexcept { return a < base_.q(); }

    /// Tr_{q^k/q}, evaluated through the F_q-linear map on the polynomial basis.
    Elem trace(Elem a) const noexcept;
    /// N_{q^k/q}(a) = a^((q^k-1)/(q-1)); throws ZeroInput on zero.
    Elem norm(Elem a) const;
    /// Canonical additive character exponent: Tr_{q/p}(Tr_{q^k/q}(a)).
    std::uint32_t abs_trace(Elem a) const noexcept { return base_.abs_trace(trace(a)); }

    std::vector<Elem> coeffs(Elem a) const;
    Elem from_coeffs(std::span<const Elem> c) const;

private:
    BaseField base_;
    unsigned k_;
    std::uint32_t size_;
    Polynomial modulus_;
    Elem gamma_ = 0;
    std::vector<Elem> exp_;
    std::vector<std::uint32_t> log_;
    std::vector<Elem> basis_trace_;  // Tr(x^j), j < k
};

ExtensionField build_extension(const BaseField& base, unsigned k);

/// Free-function forms of the field-core operations.
inline Elem trace(const ExtensionField& ext, Elem x) noexcept { return ext.trace(x); }
inline Elem norm(const ExtensionField& ext, Elem x) { return ext.norm(x); }
inline std::uint32_t discrete_log(const BaseField& f, Elem x) { return f.log(x); }
inline std::uint32_t discrete_log(const ExtensionField& f, Elem x) { return f.log(x); }

/// Monic minimal polynomial of gamma^(-a) over F_q.
Polynomial minimal_polynomial(const ExtensionField& ext, u64 a);

/// Evaluates a polynomial over F_q at an element of F_{q^k}.
Elem evaluate(const ExtensionField& ext, const Polynomial& f, Elem x) noexcept;

}  // namespace cyclocode
