#include "verify.hpp"

#include <map>
#include <sstream>

#include "cyclocode/characters.hpp"
#include "cyclocode/error.hpp"
#include "cyclocode/jacobi.hpp"
#include "cyclocode/theory.hpp"

namespace cyclocode::cli {

namespace {

Check run_check(std::string name, const std::function<std::string()>& body) {
    Check c{std::move(name), false, {}};
    try {
        c.detail = body();
        c.pass = true;
    } catch (const std::exception& e) {
        c.detail = e.what();
    }
    return c;
}

void require(bool cond, const std::string& what) {
    if (!cond) throw Error(ErrorCode::InvariantViolation, what);
}

BaseField field_of(u64 q) {
    const auto pe = prime_power(q);
    require(pe.has_value(), std::to_string(q) + " is not a prime power");
    return BaseField(pe->first, pe->second);
}

std::string q_list(std::initializer_list<u64> qs) {
    std::ostringstream os;
    os << "q in {";
    bool first = true;
    for (u64 q : qs) {
        os << (first ? "" : ",") << q;
        first = false;
    }
    os << "}";
    return os.str();
}

}  // namespace

std::vector<Check> property_checks() {
    std::vector<Check> out;

    static constexpr std::initializer_list<u64> axiom_qs = {8, 9, 16, 25};
    out.push_back(run_check("field axioms", [] {
        for (u64 q : axiom_qs) {
            const BaseField f = field_of(q);
            for (Elem a = 0; a < q; ++a) {
                if (a != 0) require(f.mul(a, f.inv(a)) == 1, "inverse in GF(" + std::to_string(q) + ")");
                for (Elem b = 0; b < q; ++b) {
                    require(f.mul(a, b) == f.mul(b, a), "commutativity");
                    for (Elem c = 0; c < q; ++c) {
                        require(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)), "distributivity");
                    }
                }
            }
        }
        return q_list(axiom_qs);
    }));

    out.push_back(run_check("trace and norm fibres", [] {
        const ExtensionField ext(BaseField(2, 2), 3);
        const BaseField& f = ext.base();
        std::map<Elem, u64> tr, nm;
        for (Elem x = 0; x < ext.size(); ++x) {
            ++tr[ext.trace(x)];
            if (x != 0) ++nm[ext.norm(x)];
        }
        for (Elem a = 0; a < f.q(); ++a) {
            require(tr[a] == 16, "trace fibre size");
            if (a != 0) require(nm[a] == 21, "norm fibre size");
        }
        return std::string("GF(64)/GF(4)");
    }));

    static constexpr std::initializer_list<u64> gauss_qs = {5, 7, 9, 13, 16};
    out.push_back(run_check("gauss sum modulus", [] {
        for (u64 q : gauss_qs) {
            const BaseField f = field_of(q);
            for (u64 pw = 1; pw < f.order(); ++pw) {
                const auto g = gauss_sum(f, CharSpec(f.order(), f.order(), pw));
                require(std::abs(std::norm(g.value) - static_cast<double>(q)) < g.tol * static_cast<double>(q),
                        "|G|^2 != q");
            }
        }
        return q_list(gauss_qs);
    }));

    static constexpr std::initializer_list<u64> quad_qs = {3, 5, 7, 9, 25, 27};
    out.push_back(run_check("quadratic gauss sums", [] {
        for (u64 q : quad_qs) {
            const BaseField f = field_of(q);
            const auto g = gauss_sum(f, CharSpec(f.order(), 2));
            require(g.near(gauss_quadratic_exact(f.characteristic(), f.e()).value()), "closed form");
        }
        return q_list(quad_qs);
    }));

    static constexpr std::initializer_list<u64> cubic_qs = {4, 7, 13, 16, 19, 25, 31};
    out.push_back(run_check("cubic jacobi sums", [] {
        for (u64 q : cubic_qs) {
            const BaseField f = field_of(q);
            const EisensteinInt j = jacobi_cubic(f);
            const auto g = gauss_sum(f, CharSpec(f.order(), 3));
            require(std::abs(std::pow(g.value, 3) - static_cast<double>(q) * j.to_complex()) < g.tol * q, "G^3 != qJ");
            const CubicAB ab = cubic_AB(f);
            require(ab.A * ab.A + 27 * ab.B * ab.B == 4 * static_cast<i64>(q), "4q != A^2+27B^2");
        }
        return q_list(cubic_qs);
    }));

    static constexpr std::initializer_list<u64> quartic_qs = {5, 9, 13, 17, 25};
    out.push_back(run_check("quartic jacobi sums", [] {
        for (u64 q : quartic_qs) {
            const BaseField f = field_of(q);
            const GaussianInt j = jacobi_quartic(f);
            require(j.norm() == static_cast<i64>(q), "N(J) != q");
            const auto g = gauss_sum(f, CharSpec(f.order(), 4));
            const double qd = static_cast<double>(q);
            require(std::abs(std::pow(g.value, 4) - qd * (j * j).to_complex()) < g.tol * qd * qd, "G^4 != qJ^2");
        }
        return q_list(quartic_qs);
    }));

    out.push_back(run_check("lifted gauss sums", [] {
        for (auto [p, e, k] : {std::tuple{2U, 2U, 3U}, std::tuple{3U, 1U, 4U}}) {
            const ExtensionField ext(BaseField(p, e), k);
            const BaseField& f = ext.base();
            for (u64 pw = 1; pw < f.order(); ++pw) {
                const CharSpec c(f.order(), f.order(), pw);
                cplx expect = std::pow(gauss_sum(f, c).value, static_cast<int>(k));
                if (k % 2 == 0) expect = -expect;
                require(gauss_sum_lifted(ext, c).near(expect), "lifted sum");
            }
        }
        return std::string("GF(64)/GF(4), GF(81)/GF(3)");
    }));

    out.push_back(run_check("parity check and moments", [] {
        const CyclicCode code(validate_spec(3, 1, 3, 1, 1));
        const Polynomial h = parity_check_polynomial(code);
        require(divides_xn_minus_one(code.base(), h, code.length()), "h does not divide x^n - 1");
        for (Elem a = 0; a < code.base().q(); ++a) {
            for (Elem b = 0; b < code.field().size(); b += 5) {
                require(annihilated_by(code.base(), build_codeword(code, a, b), h), "codeword not annihilated");
            }
        }
        pless_moment_check(code.spec(), weight_distribution_brute(code));
        return describe(code.spec());
    }));

    return out;
}

std::vector<Check> example_checks(unsigned threads) {
    std::vector<Check> out;
    for (const auto& kc : known_codes()) {
        out.push_back(run_check(kc.name, [&] {
            const CodeSpec s = validate_spec(kc.p, kc.e, kc.k, kc.e1, kc.e2);
            const CyclicCode code(s);
            const WeightDistribution brute = weight_distribution_brute(code, threads);
            const WeightDistribution theory = predict(s).distribution;
            require(brute.enumerator() == kc.enumerator, "brute force gives " + brute.enumerator());
            require(theory.enumerator() == kc.enumerator, "theory gives " + theory.enumerator());
            pless_moment_check(s, brute);
            return kc.enumerator;
        }));
    }
    return out;
}

std::vector<Check> dual_checks() {
    std::vector<Check> out;
    for (const auto& kc : known_codes()) {
        const CodeSpec s = validate_spec(kc.p, kc.e, kc.k, kc.e1, kc.e2);
        if (s.d != 1 || s.n > kDualProbeCap) continue;
        out.push_back(run_check(kc.name + " dual distance", [&] {
            const DualDistance dd = dual_distance_probe(CyclicCode(s));
            require(dd == DualDistance::Three, "dual distance " + to_string(dd));
            return std::string("3");
        }));
    }
    return out;
}

SweepRange parse_sweep(const std::string& text) {
    SweepRange r;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw Error(ErrorCode::InvalidArgument, "sweep item '" + item + "' lacks '='");
        const std::string key = item.substr(0, eq);
        u64 value = 0;
        try {
            std::size_t used = 0;
            value = std::stoull(item.substr(eq + 1), &used);
            if (used != item.size() - eq - 1) throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw Error(ErrorCode::InvalidArgument, "sweep value in '" + item + "' is not a number");
        }
        if (key == "q") {
            r.q = value;
        } else if (key == "k") {
            r.k = static_cast<unsigned>(value);
        } else if (key == "e-max") {
            r.e_max = value;
        } else {
            throw Error(ErrorCode::InvalidArgument, "unknown sweep key '" + key + "'");
        }
    }
    if (r.q == 0 || r.k == 0 || r.e_max == 0) {
        throw Error(ErrorCode::InvalidArgument, "sweep needs q, k and e-max");
    }
    if (!prime_power(r.q)) throw Error(ErrorCode::NonPrime, std::to_string(r.q) + " is not a prime power");
    return r;
}

std::vector<Check> sweep_checks(const SweepRange& range, unsigned threads) {
    std::vector<Check> out;
    const auto pe = prime_power(range.q);
    if (!pe) throw Error(ErrorCode::NonPrime, std::to_string(range.q) + " is not a prime power");
    for (u64 e1 = 1; e1 <= range.e_max; ++e1) {
        for (u64 e2 = 1; e2 <= range.e_max; ++e2) {
            CodeSpec s;
            try {
                s = validate_spec(pe->first, pe->second, range.k, e1, e2);
            } catch (const Error& e) {
                if (e.code() == ErrorCode::GcdE2Violation || e.code() == ErrorCode::GcdE1E2Violation) continue;
                throw;
            }
            if (s.d > 4) continue;
            out.push_back(run_check(describe(s), [&] {
                const Verdict v = compare(CyclicCode(s), threads);
                require(v.match, v.difference);
                pless_moment_check(s, v.observed);
                require(static_cast<i64>(min_distance(v.observed)) >= min_distance_lower_bound(s),
                        "minimum distance below the lower bound");
                return v.observed.enumerator();
            }));
        }
    }
    return out;
}

}  // namespace cyclocode::cli
