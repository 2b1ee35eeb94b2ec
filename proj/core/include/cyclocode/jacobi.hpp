#pragma once

// Exact cubic and quartic Jacobi sums J(phi, phi) = sum_{u+v=1} phi(u) phi(v)
// and the integer decompositions 4q = A^2 + 27B^2, q = m^2 + n^2.

#include <utility>
#include <vector>

#include "cyclocode/base_field.hpp"
#include "cyclocode/cyclotomic_int.hpp"

namespace cyclocode {

/// J(phi, phi) for the cubic character phi(delta) = omega^power, summed by
/// counting exponent classes. Requires 3 | q-1. The result satisfies
/// a = -1, b = 0 (mod 3) and a^2 - ab + b^2 = q; a violation throws
/// InvariantViolation.
EisensteinInt jacobi_cubic(const BaseField& f, u64 power = 1);

struct CubicAB {
    i64 A = 0;
    i64 B = 0;
};

/// A = 2a - b and B = |b| / 3 from jacobi_cubic.
CubicAB cubic_AB(const BaseField& f);
CubicAB cubic_AB(u64 q);

/// All (A, B) with 4q = A^2 + 27 B^2, A = 1 (mod 3), B >= 0.
std::vector<CubicAB> cubic_AB_search(u64 q);

/// J(phi, phi) for the quartic character phi(delta) = i^power. Requires 4 | q-1.
GaussianInt jacobi_quartic(const BaseField& f, u64 power = 1);

/// q = m^2 + n^2 with m odd, m > 0, n even, n >= 0, taken from the associate
/// class of the quartic Jacobi sum. Throws NotOneModFour.
GaussianInt quartic_decompose(const BaseField& f);
GaussianInt quartic_decompose(u64 q);

/// Every (m, n) with m^2 + n^2 = q, m odd and positive, n even and non-negative.
std::vector<GaussianInt> sum_of_two_squares(u64 q);

}  // namespace cyclocode
