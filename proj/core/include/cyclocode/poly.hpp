#pragma once

// Dense univariate polynomials over a finite field given by an "ops" object.
// Coefficients are stored constant term first; field elements are packed
// integer indices where 0 is the additive and 1 the multiplicative identity.

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "cyclocode/numtheory.hpp"

namespace cyclocode {

using Coeffs = std::vector<std::uint32_t>;

/// A polynomial over F_q. The leading coefficient is nonzero unless the
/// polynomial is zero, in which case `coeffs` is empty.
struct Polynomial {
    Coeffs coeffs;

    int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const noexcept { return coeffs.empty(); }
    bool operator==(const Polynomial&) const = default;
};

/// GF(p) arithmetic on residues; used before any table-driven field exists.
struct PrimeFieldOps {
    std::uint32_t p;

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept { return (a + b) % p; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return (a + p - b) % p; }
    std::uint32_t neg(std::uint32_t a) const noexcept { return (p - a) % p; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
        return static_cast<std::uint32_t>(static_cast<u64>(a) * b % p);
    }
    std::uint32_t inv(std::uint32_t a) const noexcept {
        return static_cast<std::uint32_t>(powmod(a, p - 2, p));
    }
};

namespace poly {

inline void trim(Coeffs& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

template <class F>
Coeffs add(const F& f, const Coeffs& a, const Coeffs& b) {
    Coeffs r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint32_t x = i < a.size() ? a[i] : 0;
        std::uint32_t y = i < b.size() ? b[i] : 0;
        r[i] = f.add(x, y);
    }
    trim(r);
    return r;
}

template <class F>
Coeffs sub(const F& f, const Coeffs& a, const Coeffs& b) {
    Coeffs r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint32_t x = i < a.size() ? a[i] : 0;
        std::uint32_t y = i < b.size() ? b[i] : 0;
        r[i] = f.sub(x, y);
    }
    trim(r);
    return r;
}

template <class F>
Coeffs mul(const F& f, const Coeffs& a, const Coeffs& b) {
    if (a.empty() || b.empty()) return {};
    Coeffs r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
        }
    }
    trim(r);
    return r;
}

/// Quotient and remainder of a by a nonzero m.
template <class F>
std::pair<Coeffs, Coeffs> divmod(const F& f, Coeffs a, const Coeffs& m) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    if (a.size() < m.size()) return {Coeffs{}, a};
    const std::uint32_t lead_inv = f.inv(m.back());
    Coeffs q(a.size() - dm, 0);
    for (std::size_t i = a.size(); i-- > dm;) {
        const std::uint32_t c = f.mul(a[i], lead_inv);
        q[i - dm] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dm; ++j) {
            a[i - dm + j] = f.sub(a[i - dm + j], f.mul(c, m[j]));
        }
    }
    a.resize(dm);
    trim(a);
    trim(q);
    return {q, a};
}

template <class F>
Coeffs mod(const F& f, const Coeffs& a, const Coeffs& m) {
    return divmod(f, a, m).second;
}

template <class F>
Coeffs mulmod(const F& f, const Coeffs& a, const Coeffs& b, const Coeffs& m) {
    return mod(f, mul(f, a, b), m);
}

template <class F>
Coeffs powmod(const F& f, Coeffs base, u64 exp, const Coeffs& m) {
    Coeffs r = mod(f, Coeffs{1}, m);
    base = mod(f, base, m);
    while (exp != 0) {
        if (exp & 1U) r = mulmod(f, r, base, m);
        exp >>= 1U;
        if (exp != 0) base = mulmod(f, base, base, m);
    }
    return r;
}

/// Monic gcd.
template <class F>
Coeffs gcd(const F& f, Coeffs a, Coeffs b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Coeffs r = mod(f, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const std::uint32_t li = f.inv(a.back());
        for (auto& c : a) c = f.mul(c, li);
    }
    return a;
}

/// Rabin's test for a monic m of degree n over a field with q elements.
template <class F>
bool is_irreducible(const F& f, const Coeffs& m, u64 q) {
    const auto n = static_cast<unsigned>(m.size() - 1);
    if (n == 0) return false;
    if (n == 1) return true;
    const Coeffs x{0, 1};
    // frob[i] = x^(q^i) mod m
    std::vector<Coeffs> frob(n + 1);
    frob[0] = mod(f, x, m);
    for (unsigned i = 1; i <= n; ++i) frob[i] = powmod(f, frob[i - 1], q, m);
    if (frob[n] != frob[0]) return false;
    for (u64 r : prime_divisors(n)) {
        const Coeffs h = sub(f, frob[n / r], frob[0]);
        if (gcd(f, h, m) != Coeffs{1}) return false;
    }
    return true;
}

}  // namespace poly
}  // namespace cyclocode
