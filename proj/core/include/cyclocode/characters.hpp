#pragma once

// Additive and multiplicative characters of F_q and F_{q^k}, Gauss sums.
// Values are double-precision complex numbers; anything that must be exact is
// computed elsewhere with integer arithmetic.

#include <cmath>
#include <complex>
#include <numbers>

#include "cyclocode/error.hpp"
#include "cyclocode/extension_field.hpp"

namespace cyclocode {

using cplx = std::complex<double>;

/// 1e-6 * max(1, sqrt(q^{k+1}))
double default_tolerance(u64 q, unsigned k = 1) noexcept;

struct ComplexApprox {
    cplx value;
    double tol = 1e-6;

    double re() const noexcept { return value.real(); }
    double im() const noexcept { return value.imag(); }
    bool near(cplx other) const noexcept { return std::abs(value - other) < tol; }
    bool is_integral() const noexcept;
    /// Nearest integer to the real part; throws NonIntegralResult unless
    /// is_integral().
    i64 rounded() const;
};

/// e^{2 pi i num / den}
inline cplx root_of_unity(i64 num, u64 den) noexcept {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(mod_floor(num, den)) / static_cast<double>(den);
    return {std::cos(t), std::sin(t)};
}

/// The multiplicative character delta^t -> e^{2 pi i power t / order} of a
/// field whose multiplicative group has `group_order` elements.
struct CharSpec {
    u64 order = 1;
    u64 power = 1;

    CharSpec() = default;
    CharSpec(u64 group_order, u64 order_, u64 power_ = 1);

    bool trivial() const noexcept { return power % order == 0; }
    CharSpec conj() const;
    CharSpec pow(i64 m) const;
};

/// zeta_p^{Tr(x)}, the canonical additive character (lifted through the
/// trace for an extension field).
template <class Field>
cplx additive_char(const Field& f, Elem x) noexcept {
    return root_of_unity(f.abs_trace(x), f.characteristic());
}

/// psi(x) with psi(0) = 1 for the trivial character and 0 otherwise.
template <class Field>
cplx mult_char(const Field& f, const CharSpec& c, Elem x) noexcept {
    if (x == 0) return c.trivial() ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
    return root_of_unity(static_cast<i64>(mulmod(c.power % c.order, f.log_unchecked(x), c.order)), c.order);
}

/// G(psi, chi) = sum_{x != 0} psi(x) chi(x).
template <class Field>
ComplexApprox gauss_sum(const Field& f, const CharSpec& c) {
    cplx s{0.0, 0.0};
    for (Elem x = 1; x < f.size(); ++x) s += mult_char(f, c, x) * additive_char(f, x);
    return {s, default_tolerance(f.size())};
}

/// G(psi o N, chi o Tr) on F_{q^k} for a character psi of F_q.
ComplexApprox gauss_sum_lifted(const ExtensionField& ext, const CharSpec& c);

/// G(eta, chi) = sign * (i if imaginary) * sqrt(q) for the quadratic character.
struct QuadraticGauss {
    int sign = 1;
    bool imaginary = false;
    u64 q = 0;

    cplx value() const noexcept;
    /// G^2 as an exact integer: q or -q.
    i64 square() const noexcept { return imaginary ? -static_cast<i64>(q) : static_cast<i64>(q); }
};

QuadraticGauss gauss_quadratic_exact(u64 p, unsigned e);

/// Index i with x in delta^i <delta^N>; N must divide q-1.
std::uint32_t cyclotomic_class_index(const BaseField& f, u64 N, Elem x);

}  // namespace cyclocode
