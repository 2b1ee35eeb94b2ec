#pragma once

// The exponential sums behind the weight formula:
//   Z(a,b) = #{i : c(a,b)_i = 0}
//   S(a,b) = sum_{x != 0} chi(a x^{(q^k-1)e1/(q-1)}) chi'(b x^{e2})
//   T(a,b) = sum_{y != 0} S(ya, yb) = q Z(a,b) - (q^k - 1)

#include "cyclocode/characters.hpp"
#include "cyclocode/code.hpp"

namespace cyclocode {

/// Number of zero coordinates of c(a,b), by direct iteration.
u64 z_count(const CyclicCode& code, Elem a, Elem b);

/// T(a,b) from the zero count; exact.
i64 t_sum_exact(const CyclicCode& code, Elem a, Elem b);

/// (-1)^{k-1} sum_{i<d} conj(phi)^i(N(b) a^{-k}) G(conj(phi)^{ki}) G(phi^i)^k
/// with phi of order d, rounded to an integer. Requires a, b nonzero; throws
/// NonIntegralResult when the floating value is not within tolerance of one.
i64 t_sum_closed_form(const CyclicCode& code, Elem a, Elem b);

/// Unrounded value of the closed form above.
ComplexApprox t_sum_closed_form_value(const CyclicCode& code, Elem a, Elem b);

/// S(a,b) by direct summation over F_{q^k}^*.
ComplexApprox s_sum_numeric(const CyclicCode& code, Elem a, Elem b);

/// sum_{x in F_q} chi(a x^n + b), directly.
ComplexApprox power_sum_direct(const BaseField& f, Elem a, Elem b, u64 n);

/// chi(b) sum_{j=1}^{s-1} conj(psi)^j(a) G(psi^j), psi of order s = gcd(n, q-1).
ComplexApprox power_sum_gauss(const BaseField& f, Elem a, Elem b, u64 n);

}  // namespace cyclocode
