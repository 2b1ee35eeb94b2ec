#include "cyclocode/exp_sums.hpp"

#include <vector>

namespace cyclocode {

u64 z_count(const CyclicCode& code, Elem a, Elem b) {
    u64 z = 0;
    for (u64 i = 0; i < code.length(); ++i) {
        if (code.coordinate(a, b, i) == 0) ++z;
    }
    return z;
}

i64 t_sum_exact(const CyclicCode& code, Elem a, Elem b) {
    return static_cast<i64>(code.spec().q * z_count(code, a, b)) - static_cast<i64>(code.spec().n);
}

ComplexApprox t_sum_closed_form_value(const CyclicCode& code, Elem a, Elem b) {
    if (a == 0 || b == 0) throw Error(ErrorCode::ZeroInput, "closed form needs a and b nonzero");
    const CodeSpec& s = code.spec();
    const BaseField& f = code.base();
    const u64 d = s.d;
    // c = N(b) a^{-k}
    const Elem c = f.mul(code.field().norm(b), f.pow(f.inv(a), s.k));

    std::vector<cplx> g(d);
    for (u64 i = 0; i < d; ++i) g[i] = gauss_sum(f, CharSpec(f.order(), d, i)).value;

    cplx sum{0.0, 0.0};
    for (u64 i = 0; i < d; ++i) {
        const CharSpec phi_i(f.order(), d, i);
        const u64 ki_conj = mod_floor(-static_cast<i64>((s.k % d) * i), d);
        sum += mult_char(f, phi_i.conj(), c) * g[ki_conj] * std::pow(g[i], static_cast<int>(s.k));
    }
    if (s.k % 2 == 0) sum = -sum;
    return {sum, default_tolerance(s.q, s.k)};
}

i64 t_sum_closed_form(const CyclicCode& code, Elem a, Elem b) {
    return t_sum_closed_form_value(code, a, b).rounded();
}

ComplexApprox s_sum_numeric(const CyclicCode& code, Elem a, Elem b) {
    const CodeSpec& s = code.spec();
    const BaseField& f = code.base();
    const ExtensionField& ext = code.field();
    const u64 qm1 = f.order();
    cplx sum{0.0, 0.0};
    for (u64 t = 0; t < ext.order(); ++t) {
        // x = gamma^t: x^{(q^k-1)e1/(q-1)} = delta^{e1 t}
        const Elem u = f.mul(a, f.exp(mulmod(s.e1 % qm1, t % qm1, qm1)));
        const Elem v = ext.mul(b, ext.exp(mulmod(s.e2, t, ext.order())));
        sum += additive_char(f, u) * additive_char(ext, v);
    }
    return {sum, default_tolerance(s.q, s.k)};
}

ComplexApprox power_sum_direct(const BaseField& f, Elem a, Elem b, u64 n) {
    cplx sum{0.0, 0.0};
    for (Elem x = 0; x < f.q(); ++x) sum += additive_char(f, f.add(f.mul(a, f.pow(x, n)), b));
    return {sum, default_tolerance(f.q())};
}

ComplexApprox power_sum_gauss(const BaseField& f, Elem a, Elem b, u64 n) {
    if (a == 0) throw Error(ErrorCode::ZeroInput, "power sum identity needs a nonzero");
    const u64 s = gcd(n, f.order());
    cplx sum{0.0, 0.0};
    for (u64 j = 1; j < s; ++j) {
        const CharSpec psi_j(f.order(), s, j);
        sum += mult_char(f, psi_j.conj(), a) * gauss_sum(f, psi_j).value;
    }
    return {additive_char(f, b) * sum, default_tolerance(f.q())};
}

}  // namespace cyclocode
