#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "cyclocode/characters.hpp"
#include "cyclocode/error.hpp"
#include "cyclocode/exp_sums.hpp"
#include "cyclocode/jacobi.hpp"

using namespace cyclocode;

namespace {

BaseField field(u64 q) {
    auto pe = *prime_power(q);
    return BaseField(pe.first, pe.second);
}

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::InvariantViolation;
}

}  // namespace

TEST(AdditiveCharTest, OrthogonalityAndModulus) {
    for (u64 q : {3, 4, 7, 8, 9, 25}) {
        auto f = field(q);
        const double tol = default_tolerance(q);
        EXPECT_NEAR(std::abs(additive_char(f, 0) - cplx{1, 0}), 0.0, tol);
        for (Elem a = 0; a < f.q(); ++a) {
            cplx s{0, 0};
            for (Elem x = 0; x < f.q(); ++x) {
                s += additive_char(f, f.mul(a, x));
                EXPECT_NEAR(std::abs(additive_char(f, x)), 1.0, tol);
            }
            EXPECT_NEAR(std::abs(s - cplx{a == 0 ? double(q) : 0.0, 0}), 0.0, tol) << q << " " << a;
        }
    }
}

TEST(MultCharTest, OrthogonalityAndHomomorphism) {
    for (u64 q : {5, 7, 9, 13}) {
        auto f = field(q);
        const double tol = default_tolerance(q);
        for (u64 ord = 1; ord <= f.order(); ++ord) {
            if (f.order() % ord != 0) continue;
            for (u64 pw = 0; pw < ord; ++pw) {
                CharSpec c(f.order(), ord, pw);
                cplx s{0, 0};
                for (Elem x = 1; x < f.q(); ++x) s += mult_char(f, c, x);
                EXPECT_NEAR(std::abs(s - cplx{c.trivial() ? double(q - 1) : 0.0, 0}), 0.0, tol);
                EXPECT_NEAR(std::abs(mult_char(f, c, 0) - cplx{c.trivial() ? 1.0 : 0.0, 0}), 0.0, tol);
                EXPECT_NEAR(std::abs(std::pow(mult_char(f, c, f.delta()), static_cast<int>(ord)) - cplx{1, 0}), 0.0, tol);
                for (Elem x = 1; x < f.q(); ++x) {
                    for (Elem y = 1; y < f.q(); ++y) {
                        EXPECT_NEAR(std::abs(mult_char(f, c, f.mul(x, y)) - mult_char(f, c, x) * mult_char(f, c, y)),
                                    0.0, tol);
                    }
                    EXPECT_NEAR(std::abs(mult_char(f, c.conj(), x) - std::conj(mult_char(f, c, x))), 0.0, tol);
                }
            }
        }
    }
    EXPECT_EQ(code_of([] { CharSpec(6, 4); }), ErrorCode::OrderNotDividing);
}

TEST(GaussSumTest, TrivialAndAbsoluteValue) {
    for (u64 q : {4, 5, 7, 9, 13}) {
        auto f = field(q);
        EXPECT_TRUE(gauss_sum(f, CharSpec(f.order(), 1)).near({-1, 0}));
        for (u64 pw = 1; pw < f.order(); ++pw) {
            auto g = gauss_sum(f, CharSpec(f.order(), f.order(), pw));
            EXPECT_NEAR(std::norm(g.value), double(q), g.tol) << q << " " << pw;
        }
    }
}

TEST(GaussSumTest, QuadraticExactValues) {
    auto g3 = gauss_quadratic_exact(3, 1);
    EXPECT_TRUE(g3.imaginary);
    EXPECT_EQ(g3.sign, 1);
    auto g5 = gauss_quadratic_exact(5, 1);
    EXPECT_FALSE(g5.imaginary);
    EXPECT_EQ(g5.sign, 1);
    auto g9 = gauss_quadratic_exact(3, 2);
    EXPECT_FALSE(g9.imaginary);
    EXPECT_EQ(g9.sign, 1);
    EXPECT_EQ(code_of([] { gauss_quadratic_exact(2, 3); }), ErrorCode::EvenCharacteristic);
    for (u64 p : {3, 5, 7, 11, 13}) {
        for (unsigned e = 1; ipow(p, e) <= 3000; ++e) {
            BaseField f(p, e);
            auto numeric = gauss_sum(f, CharSpec(f.order(), 2));
            EXPECT_TRUE(numeric.near(gauss_quadratic_exact(p, e).value())) << p << "^" << e;
        }
    }
}

TEST(GaussSumTest, DavenportHasse) {
    for (auto [p, k] : {std::pair{2U, 3U}, std::pair{3U, 3U}}) {
        BaseField base(p, p == 2 ? 2 : 1);
        ExtensionField ext(base, k);
        for (u64 pw = 0; pw < base.order(); ++pw) {
            CharSpec c(base.order(), base.order(), pw);
            if (c.trivial()) continue;
            cplx expect = std::pow(gauss_sum(base, c).value, static_cast<int>(k));
            if (k % 2 == 0) expect = -expect;
            EXPECT_TRUE(gauss_sum_lifted(ext, c).near(expect)) << p << " " << pw;
        }
    }
}

TEST(JacobiTest, CubicValues) {
    EXPECT_EQ(jacobi_cubic(field(4)), (EisensteinInt{2, 0}));
    auto ab7 = cubic_AB(7);
    EXPECT_EQ(ab7.A, 1);
    EXPECT_EQ(ab7.B, 1);
    auto ab19 = cubic_AB(19);
    EXPECT_EQ(ab19.A, 7);
    EXPECT_EQ(ab19.A, 9 * ab19.B - 2);
    auto ab13 = cubic_AB(13);
    EXPECT_EQ(ab13.A, -5);
    EXPECT_EQ(ab13.B, 1);
    auto ab4 = cubic_AB(4);
    EXPECT_EQ(ab4.A, 4);
    EXPECT_EQ(ab4.B, 0);
    EXPECT_EQ(code_of([] { jacobi_cubic(field(5)); }), ErrorCode::OrderNotDividing);
}

TEST(JacobiTest, CubicCongruencesAndGaussCube) {
    for (u64 q = 4; q <= 400; ++q) {
        auto pe = prime_power(q);
        if (!pe || q % 3 != 1) continue;
        auto f = field(q);
        for (u64 pw : {1, 2}) {
            auto j = jacobi_cubic(f, pw);
            EXPECT_EQ(j.norm(), static_cast<i64>(q));
            EXPECT_EQ(mod_floor(j.a, 3), 2U);
            EXPECT_EQ(mod_floor(j.b, 3), 0U);
            if (q <= 19) {
                auto g = gauss_sum(f, CharSpec(f.order(), 3, pw));
                EXPECT_TRUE((ComplexApprox{std::pow(g.value, 3), g.tol}).near(double(q) * j.to_complex())) << q;
            }
        }
        auto ab = cubic_AB(f);
        EXPECT_EQ(ab.A * ab.A + 27 * ab.B * ab.B, 4 * static_cast<i64>(q));
        EXPECT_EQ(mod_floor(ab.A, 3), 1U);
        auto all = cubic_AB_search(q);
        EXPECT_TRUE(std::any_of(all.begin(), all.end(), [&](auto r) { return r.A == ab.A && r.B == ab.B; }));
        if (pe->second == 1) EXPECT_EQ(all.size(), 1U) << q;
    }
}

TEST(JacobiTest, QuarticDecomposition) {
    EXPECT_EQ(quartic_decompose(9), (GaussianInt{3, 0}));
    EXPECT_EQ(quartic_decompose(5), (GaussianInt{1, 2}));
    EXPECT_EQ(quartic_decompose(13), (GaussianInt{3, 2}));
    EXPECT_EQ(code_of([] { quartic_decompose(7); }), ErrorCode::NotOneModFour);
    EXPECT_EQ(code_of([] { quartic_decompose(8); }), ErrorCode::NotOneModFour);
    EXPECT_EQ(sum_of_two_squares(25).size(), 2U);
    auto r25 = quartic_decompose(25);
    EXPECT_EQ(r25.norm(), 25);
}

TEST(JacobiTest, QuarticGaussFourthPower) {
    for (u64 q : {5, 9, 13, 17, 25, 29, 37, 41, 49, 81}) {
        auto f = field(q);
        for (u64 pw : {1, 3}) {
            auto g = gauss_sum(f, CharSpec(f.order(), 4, pw));
            auto j = jacobi_quartic(f, pw);
            ComplexApprox g4{std::pow(g.value, 4), default_tolerance(q, 3)};
            EXPECT_TRUE(g4.near(double(q) * (j * j).to_complex())) << q;
            EXPECT_NEAR(std::abs(g4.value) / double(q), double(q), g4.tol);
            auto pi = quartic_decompose(f);
            EXPECT_EQ((pi * pi).norm(), static_cast<i64>(q * q));
        }
    }
}

TEST(CyclotomicTest, ClassSizes) {
    auto f = field(13);
    for (u64 N : {2, 3, 4}) {
        std::map<std::uint32_t, int> sizes;
        for (Elem x = 1; x < 13; ++x) ++sizes[cyclotomic_class_index(f, N, x)];
        EXPECT_EQ(sizes.size(), N);
        for (auto [i, s] : sizes) EXPECT_EQ(s, static_cast<int>(12 / N));
        EXPECT_EQ(cyclotomic_class_index(f, N, f.exp(N)), 0U);
        EXPECT_EQ(cyclotomic_class_index(f, N, f.delta()), 1U);
    }
    EXPECT_EQ(code_of([&] { cyclotomic_class_index(f, 3, 0); }), ErrorCode::ZeroInput);
    EXPECT_EQ(code_of([&] { cyclotomic_class_index(f, 5, 1); }), ErrorCode::OrderNotDividing);
}

TEST(PowerSumTest, GaussSumIdentity) {
    std::mt19937 rng(11);
    for (u64 q : {13, 16, 25}) {
        auto f = field(q);
        for (u64 n : {2, 3, 4}) {
            for (int t = 0; t < 10; ++t) {
                Elem a = 1 + rng() % (f.q() - 1), b = rng() % f.q();
                EXPECT_TRUE(power_sum_direct(f, a, b, n).near(power_sum_gauss(f, a, b, n).value)) << q << " " << n;
            }
        }
    }
}

TEST(ExpSumTest, ZCountSpecialCases) {
    CyclicCode code(validate_spec(2, 2, 3, 1, 1));
    EXPECT_EQ(z_count(code, 0, 0), 63U);
    for (Elem a = 1; a < 4; ++a) EXPECT_EQ(z_count(code, a, 0), 0U);
    for (Elem b = 1; b < 64; ++b) EXPECT_EQ(z_count(code, 0, b), 15U);
    for (Elem a = 0; a < 4; ++a) {
        for (Elem b = 0; b < 64; ++b) EXPECT_EQ(weight(build_codeword(code, a, b)), 63 - z_count(code, a, b));
    }
}

TEST(ExpSumTest, TSumSpecialValues) {
    CyclicCode code(validate_spec(2, 2, 3, 1, 1));
    for (Elem a = 1; a < 4; ++a) {
        EXPECT_EQ(t_sum_exact(code, a, 0), -63);
        for (Elem b = 1; b < 64; ++b) EXPECT_EQ(t_sum_exact(code, a, b), 1);
    }
    for (Elem b = 1; b < 64; ++b) EXPECT_EQ(t_sum_exact(code, 0, b), -3);
}

TEST(ExpSumTest, QuadraticTValues) {
    CyclicCode code(validate_spec(3, 1, 3, 1, 1));
    std::set<i64> seen;
    for (Elem a = 1; a < 3; ++a) {
        for (Elem b = 1; b < 27; ++b) seen.insert(t_sum_exact(code, a, b));
    }
    EXPECT_EQ(seen, (std::set<i64>{1 - 9, 1 + 9}));
}

TEST(ExpSumTest, ClosedFormMatchesCountEveryD) {
    for (auto s : {validate_spec(2, 2, 3, 1, 1), validate_spec(3, 1, 3, 1, 1), validate_spec(7, 1, 2, 1, 5),
                   validate_spec(5, 1, 3, 1, 3), validate_spec(7, 1, 4, 1, 1)}) {
        CyclicCode code(s);
        for (Elem a = 1; a < s.q; ++a) {
            for (Elem b = 1; b <= s.n; ++b) {
                ASSERT_EQ(t_sum_closed_form(code, a, b), t_sum_exact(code, a, b)) << describe(s) << " " << a << " " << b;
            }
        }
    }
}

TEST(ExpSumTest, SSumConsistency) {
    CyclicCode code(validate_spec(3, 1, 3, 1, 1));
    const auto& f = code.base();
    EXPECT_TRUE(s_sum_numeric(code, 0, 0).near({26, 0}));
    std::mt19937 rng(5);
    for (int t = 0; t < 20; ++t) {
        Elem a = rng() % 3, b = rng() % 27;
        cplx total{0, 0};
        for (Elem y = 1; y < 3; ++y) total += s_sum_numeric(code, f.mul(y, a), code.field().mul(y, b)).value;
        EXPECT_TRUE((ComplexApprox{total, default_tolerance(3, 3)}).near(double(t_sum_exact(code, a, b))));
    }
    auto sa = s_sum_numeric(code, 1, 0);
    EXPECT_NEAR(sa.im(), 0.0, sa.tol);
}
