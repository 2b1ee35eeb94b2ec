#include "cyclocode/extension_field.hpp"

#include <algorithm>
#include <string>

#include "cyclocode/error.hpp"

namespace cyclocode {

namespace {

Coeffs unpack(u64 index, u64 radix, unsigned len) {
    Coeffs c(len, 0);
    for (unsigned i = 0; i < len; ++i) {
        c[i] = static_cast<std::uint32_t>(index % radix);
        index /= radix;
    }
    return c;
}

u64 pack(const Coeffs& c, u64 radix) {
    u64 index = 0;
    for (std::size_t i = c.size(); i-- > 0;) index = index * radix + c[i];
    return index;
}

}  // namespace

ExtensionField::ExtensionField(BaseField base, unsigned k) : base_(std::move(base)), k_(k) {
    const u64 q = base_.q();
    if (k < 2) throw Error(ErrorCode::DegreeTooLarge, "extension degree must be at least 2");
    const auto size = checked_pow(q, k);
    if (!size || *size > kMaxExtensionFieldSize) {
        throw Error(ErrorCode::DegreeTooLarge,
                    "q^k exceeds the extension field cap 2^24 (q=" + std::to_string(q) +
                        ", k=" + std::to_string(k) + ")");
    }
    size_ = static_cast<std::uint32_t>(*size);

    const BaseField& f = base_;
    for (u64 r = 0;; ++r) {
        Coeffs m = unpack(lex_rank_to_index(r, q, k), q, k);
        m.push_back(1);
        if (poly::is_irreducible(f, m, q)) {
            modulus_.coeffs = std::move(m);
            break;
        }
    }
    const Coeffs& mod = modulus_.coeffs;

    const u64 n = order();
    const u64 norm_exp = n / (q - 1);
    auto power = [&](u64 a, u64 e) { return pack(poly::powmod(f, unpack(a, q, k), e, mod), q); };

    const auto cofactors = prime_divisors(n);
    u64 cand_gamma = 0;
    for (u64 r = 1; r < size_; ++r) {
        const u64 cand = lex_rank_to_index(r, q, k);
        if (cand == 0) continue;
        bool primitive = true;
        for (u64 c : cofactors) {
            if (power(cand, n / c) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            cand_gamma = cand;
            break;
        }
    }

    // Replace gamma by gamma^u, u the smallest exponent coprime to q^k-1 with
    // N(gamma)^u = delta.
    const u64 nval = power(cand_gamma, norm_exp);
    if (nval >= q || nval == 0) {
        throw Error(ErrorCode::InvariantViolation, "norm of gamma left the base field");
    }
    const u64 v = base_.log(static_cast<Elem>(nval));
    u64 u = 1;
    for (;; ++u) {
        if ((u * v) % (q - 1) == 1 % (q - 1) && gcd(u, n) == 1) break;
    }
    gamma_ = static_cast<Elem>(power(cand_gamma, u));

    exp_.assign(2 * n, 0);
    log_.assign(size_, 0);
    const Coeffs g = unpack(gamma_, q, k);
    Coeffs cur{1};
    for (u64 i = 0; i < n; ++i) {
        const auto idx = static_cast<Elem>(pack(cur, q));
        if (i != 0 && idx == 1) {
            throw Error(ErrorCode::InvariantViolation, "gamma is not primitive");
        }
        exp_[i] = idx;
        exp_[i + n] = idx;
        log_[idx] = static_cast<std::uint32_t>(i);
        cur = poly::mulmod(f, cur, g, mod);
    }

    basis_trace_.assign(k_, 0);
    for (unsigned j = 0; j < k_; ++j) {
        const auto a = static_cast<Elem>(ipow(q, j));
        Elem t = 0;
        Elem y = a;
        for (unsigned i = 0; i < k_; ++i) {
            t = add(t, y);
            y = frobenius(y);
        }
        if (!in_base(t)) throw Error(ErrorCode::InvariantViolation, "trace left the base field");
        basis_trace_[j] = t;
    }
}

Elem ExtensionField::add(Elem a, Elem b) const noexcept {
    const Elem q = base_.q();
    Elem r = 0, scale = 1;
    for (unsigned i = 0; i < k_; ++i) {
        r += base_.add(a % q, b % q) * scale;
        a /= q;
        b /= q;
        scale *= q;
    }
    return r;
}

Elem ExtensionField::neg(Elem a) const noexcept {
    const Elem q = base_.q();
    Elem r = 0, scale = 1;
    for (unsigned i = 0; i < k_; ++i) {
        r += base_.neg(a % q) * scale;
        a /= q;
        scale *= q;
    }
    return r;
}

Elem ExtensionField::sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

Elem ExtensionField::inv(Elem a) const {
    if (a == 0) throw Error(ErrorCode::ZeroInput, "inverse of zero");
    return exp_[(order() - log_[a]) % order()];
}

Elem ExtensionField::pow(Elem a, u64 n) const noexcept {
    if (n == 0) return 1;
    if (a == 0) return 0;
    return exp_[mulmod(log_[a], n, order())];
}

std::uint32_t ExtensionField::log(Elem a) const {
    if (a == 0) throw Error(ErrorCode::ZeroInput, "discrete log of zero");
    return log_[a];
}

Elem ExtensionField::trace(Elem a) const noexcept {
    const Elem q = base_.q();
    Elem t = 0;
    for (unsigned j = 0; j < k_; ++j) {
        t = base_.add(t, base_.mul(a % q, basis_trace_[j]));
        a /= q;
    }
    return t;
}

Elem ExtensionField::norm(Elem a) const {
    if (a == 0) throw Error(ErrorCode::ZeroInput, "norm of zero");
    return pow(a, norm_exponent());
}

std::vector<Elem> ExtensionField::coeffs(Elem a) const { return unpack(a, base_.q(), k_); }

Elem ExtensionField::from_coeffs(std::span<const Elem> c) const {
    Elem r = 0;
    for (std::size_t i = c.size(); i-- > 0;) r = r * base_.q() + c[i];
    return r;
}

ExtensionField build_extension(const BaseField& base, unsigned k) { return ExtensionField(base, k); }

Polynomial minimal_polynomial(const ExtensionField& ext, u64 a) {
    const u64 n = ext.order();
    const u64 q = ext.base().q();
    // conjugates gamma^(-a q^j) until the exponent repeats
    std::vector<u64> exps;
    u64 t = (n - a % n) % n;
    while (std::find(exps.begin(), exps.end(), t) == exps.end()) {
        exps.push_back(t);
        t = mulmod(t, q, n);
    }
    Coeffs f{1};
    for (u64 ex : exps) {
        const Elem root = ext.exp(ex);
        f = poly::mul(ext, f, Coeffs{ext.neg(root), 1});
    }
    for (Elem c : f) {
        if (!ext.in_base(c)) {
            throw Error(ErrorCode::InvariantViolation, "minimal polynomial not defined over F_q");
        }
    }
    return Polynomial{f};
}

Elem evaluate(const ExtensionField& ext, const Polynomial& f, Elem x) noexcept {
    Elem acc = 0;
    for (std::size_t i = f.coeffs.size(); i-- > 0;) {
        acc = ext.add(ext.mul(acc, x), ext.embed(f.coeffs[i]));
    }
    return acc;
}

}  // namespace cyclocode
