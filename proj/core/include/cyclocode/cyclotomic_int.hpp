#pragma once

// Exact arithmetic in Z[omega] (omega^2 + omega + 1 = 0) and Z[i].

#include <complex>
#include <numbers>
#include <ostream>

#include "cyclocode/numtheory.hpp"

namespace cyclocode {

/// a + b*omega, omega = (-1 + sqrt(-3)) / 2.
struct EisensteinInt {
    i64 a = 0;
    i64 b = 0;

    friend EisensteinInt operator+(EisensteinInt x, EisensteinInt y) { return {x.a + y.a, x.b + y.b}; }
    friend EisensteinInt operator-(EisensteinInt x, EisensteinInt y) { return {x.a - y.a, x.b - y.b}; }
    friend EisensteinInt operator*(EisensteinInt x, EisensteinInt y) {
        return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b};
    }
    bool operator==(const EisensteinInt&) const = default;

    static EisensteinInt omega_pow(i64 j) {
        switch (mod_floor(j, 3)) {
            case 0: return {1, 0};
            case 1: return {0, 1};
            default: return {-1, -1};
        }
    }

    EisensteinInt conj() const { return {a - b, -b}; }
    i64 norm() const { return a * a - a * b + b * b; }
    /// 2 Re(a + b omega)
    i64 two_re() const { return 2 * a - b; }
    EisensteinInt pow(unsigned n) const {
        EisensteinInt r{1, 0};
        for (unsigned i = 0; i < n; ++i) r = r * *this;
        return r;
    }
    std::complex<double> to_complex() const {
        return {static_cast<double>(a) - 0.5 * static_cast<double>(b),
                static_cast<double>(b) * std::numbers::sqrt3 / 2.0};
    }
};

/// m + n*i.
struct GaussianInt {
    i64 m = 0;
    i64 n = 0;

    friend GaussianInt operator+(GaussianInt x, GaussianInt y) { return {x.m + y.m, x.n + y.n}; }
    friend GaussianInt operator-(GaussianInt x, GaussianInt y) { return {x.m - y.m, x.n - y.n}; }
    friend GaussianInt operator*(GaussianInt x, GaussianInt y) {
        return {x.m * y.m - x.n * y.n, x.m * y.n + x.n * y.m};
    }
    bool operator==(const GaussianInt&) const = default;

    static GaussianInt i_pow(i64 j) {
        switch (mod_floor(j, 4)) {
            case 0: return {1, 0};
            case 1: return {0, 1};
            case 2: return {-1, 0};
            default: return {0, -1};
        }
    }

    GaussianInt conj() const { return {m, -n}; }
    i64 norm() const { return m * m + n * n; }
    i64 two_re() const { return 2 * m; }
    GaussianInt pow(unsigned k) const {
        GaussianInt r{1, 0};
        for (unsigned i = 0; i < k; ++i) r = r * *this;
        return r;
    }
    std::complex<double> to_complex() const { return {static_cast<double>(m), static_cast<double>(n)}; }
};

inline std::ostream& operator<<(std::ostream& os, const EisensteinInt& x) {
    return os << x.a << (x.b < 0 ? "-" : "+") << (x.b < 0 ? -x.b : x.b) << "w";
}

inline std::ostream& operator<<(std::ostream& os, const GaussianInt& x) {
    return os << x.m << (x.n < 0 ? "-" : "+") << (x.n < 0 ? -x.n : x.n) << "i";
}

}  // namespace cyclocode
