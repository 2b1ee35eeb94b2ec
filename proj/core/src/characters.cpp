#include "cyclocode/characters.hpp"

#include <algorithm>
#include <string>

namespace cyclocode {

double default_tolerance(u64 q, unsigned k) noexcept {
    return 1e-6 * std::max(1.0, std::sqrt(std::pow(static_cast<double>(q), static_cast<double>(k + 1))));
}

bool ComplexApprox::is_integral() const noexcept {
    return std::abs(value.imag()) < tol && std::abs(value.real() - std::round(value.real())) < tol;
}

i64 ComplexApprox::rounded() const {
    if (!is_integral()) {
        throw Error(ErrorCode::NonIntegralResult, "value (" + std::to_string(value.real()) + ", " +
                                                      std::to_string(value.imag()) + ") is not an integer");
    }
    return static_cast<i64>(std::llround(value.real()));
}

CharSpec::CharSpec(u64 group_order, u64 order_, u64 power_) : order(order_), power(0) {
    if (order_ == 0 || group_order % order_ != 0) {
        throw Error(ErrorCode::OrderNotDividing,
                    "character order " + std::to_string(order_) + " does not divide " + std::to_string(group_order));
    }
    power = power_ % order_;
}

CharSpec CharSpec::conj() const { return pow(-1); }

CharSpec CharSpec::pow(i64 m) const {
    CharSpec c = *this;
    c.power = (mod_floor(m, order) * power) % order;
    return c;
}

ComplexApprox gauss_sum_lifted(const ExtensionField& ext, const CharSpec& c) {
    // N(gamma^t) = delta^t, so psi(N(gamma^t)) depends only on t mod (q-1)
    cplx s{0.0, 0.0};
    for (u64 t = 0; t < ext.order(); ++t) {
        const Elem x = ext.exp(t);
        s += root_of_unity(static_cast<i64>(mulmod(c.power, t % c.order, c.order)), c.order) * additive_char(ext, x);
    }
    return {s, default_tolerance(ext.base().q(), ext.k())};
}

cplx QuadraticGauss::value() const noexcept {
    const double r = sign * std::sqrt(static_cast<double>(q));
    return imaginary ? cplx{0.0, r} : cplx{r, 0.0};
}

QuadraticGauss gauss_quadratic_exact(u64 p, unsigned e) {
    if (p == 2) throw Error(ErrorCode::EvenCharacteristic, "quadratic Gauss sum needs odd characteristic");
    QuadraticGauss g;
    g.q = ipow(p, e);
    int sign = (e % 2 == 1) ? 1 : -1;  // (-1)^{e-1}
    if (p % 4 == 1) {
        g.sign = sign;
        return g;
    }
    // times i^e
    if (e % 2 == 0) {
        g.sign = sign * ((e / 2) % 2 == 0 ? 1 : -1);
    } else {
        g.imaginary = true;
        g.sign = sign * (((e - 1) / 2) % 2 == 0 ? 1 : -1);
    }
    return g;
}

std::uint32_t cyclotomic_class_index(const BaseField& f, u64 N, Elem x) {
    if (N == 0 || f.order() % N != 0) {
        throw Error(ErrorCode::OrderNotDividing, std::to_string(N) + " does not divide q-1");
    }
    return static_cast<std::uint32_t>(f.log(x) % N);
}

}  // namespace cyclocode
