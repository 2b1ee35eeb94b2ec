#include "cyclocode/jacobi.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <string>

#include "cyclocode/error.hpp"

namespace cyclocode {

namespace {

// counts[c] = #{u != 0, 1 : power * (log u + log(1-u)) = c mod N}
template <std::size_t N>
std::array<i64, N> exponent_class_counts(const BaseField& f, u64 power) {
    if (f.order() % N != 0) {
        throw Error(ErrorCode::OrderNotDividing,
                    std::to_string(N) + " does not divide q-1 = " + std::to_string(f.order()));
    }
    std::array<i64, N> counts{};
    for (Elem u = 2; u < f.q(); ++u) {
        const Elem v = f.sub(1, u);
        if (v == 0) continue;
        const u64 c = (power % N) * ((f.log_unchecked(u) + f.log_unchecked(v)) % N) % N;
        ++counts[c];
    }
    return counts;
}

BaseField field_of_order(u64 q) {
    const auto pe = prime_power(q);
    if (!pe) throw Error(ErrorCode::InvalidArgument, std::to_string(q) + " is not a prime power");
    return BaseField(pe->first, pe->second);
}

}  // namespace

EisensteinInt jacobi_cubic(const BaseField& f, u64 power) {
    if (power % 3 == 0) throw Error(ErrorCode::InvalidArgument, "cubic character must be nontrivial");
    const auto c = exponent_class_counts<3>(f, power);
    // c0 + c1 w + c2 w^2 with w^2 = -1 - w
    const EisensteinInt j{c[0] - c[2], c[1] - c[2]};
    const i64 q = f.q();
    if (j.norm() != q || mod_floor(j.a, 3) != 2 || mod_floor(j.b, 3) != 0) {
        throw Error(ErrorCode::InvariantViolation, "cubic Jacobi sum fails norm or congruence conditions");
    }
    return j;
}

CubicAB cubic_AB(const BaseField& f) {
    const EisensteinInt j = jacobi_cubic(f);
    CubicAB r{j.two_re(), std::abs(j.b) / 3};
    if (r.A * r.A + 27 * r.B * r.B != 4 * static_cast<i64>(f.q()) || mod_floor(r.A, 3) != 1) {
        throw Error(ErrorCode::InvariantViolation, "4q != A^2 + 27B^2 or A != 1 mod 3");
    }
    return r;
}

CubicAB cubic_AB(u64 q) { return cubic_AB(field_of_order(q)); }

std::vector<CubicAB> cubic_AB_search(u64 q) {
    std::vector<CubicAB> out;
    const i64 four_q = 4 * static_cast<i64>(q);
    for (i64 B = 0; 27 * B * B <= four_q; ++B) {
        const i64 rest = four_q - 27 * B * B;
        for (i64 A = 0; A * A <= rest; ++A) {
            if (A * A != rest) continue;
            if (mod_floor(A, 3) == 1) out.push_back({A, B});
            if (A != 0 && mod_floor(-A, 3) == 1) out.push_back({-A, B});
        }
    }
    return out;
}

GaussianInt jacobi_quartic(const BaseField& f, u64 power) {
    if (power % 4 == 0) throw Error(ErrorCode::InvalidArgument, "quartic character must be nontrivial");
    const auto c = exponent_class_counts<4>(f, power);
    return GaussianInt{c[0] - c[2], c[1] - c[3]};
}

GaussianInt quartic_decompose(const BaseField& f) {
    if (f.q() % 4 != 1) {
        throw Error(ErrorCode::NotOneModFour, "q = " + std::to_string(f.q()) + " is not 1 mod 4");
    }
    const GaussianInt j = jacobi_quartic(f);
    if (j.norm() != static_cast<i64>(f.q())) {
        throw Error(ErrorCode::InvariantViolation, "quartic Jacobi sum does not have norm q");
    }
    GaussianInt r = (j.m % 2 != 0) ? GaussianInt{std::abs(j.m), std::abs(j.n)}
                                   : GaussianInt{std::abs(j.n), std::abs(j.m)};
    const auto all = sum_of_two_squares(f.q());
    if (std::find(all.begin(), all.end(), r) == all.end()) {
        throw Error(ErrorCode::InvariantViolation, "decomposition from the Jacobi sum not found by search");
    }
    return r;
}

GaussianInt quartic_decompose(u64 q) {
    if (q % 4 != 1) throw Error(ErrorCode::NotOneModFour, "q = " + std::to_string(q) + " is not 1 mod 4");
    return quartic_decompose(field_of_order(q));
}

std::vector<GaussianInt> sum_of_two_squares(u64 q) {
    std::vector<GaussianInt> out;
    const auto qq = static_cast<i64>(q);
    for (i64 m = 1; m * m <= qq; m += 2) {
        for (i64 n = 0; m * m + n * n <= qq; n += 2) {
            if (m * m + n * n == qq) out.push_back({m, n});
        }
    }
    return out;
}

}  // namespace cyclocode
