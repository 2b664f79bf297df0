#include "doctest.h"

#include "lucaszeta/continuation.hpp"
#include "lucaszeta/errors.hpp"
#include "lucaszeta/special.hpp"

using namespace lucaszeta;

namespace {

LucasParams fib() { return LucasParams::validate(Rational(1), Rational(-1)); }

} // namespace

TEST_CASE("holomorphy parity predicate") {
    LucasParams f = fib();
    CHECK(holomorphic_at_neg(f, 2, NegIntPoint({1})));        // 2*1 = 2, not 0 mod 4
    CHECK_FALSE(holomorphic_at_neg(f, 2, NegIntPoint({2})));  // 2*2 = 4
    LucasParams p31 = LucasParams::validate(Rational(3), Rational(1));
    CHECK_FALSE(holomorphic_at_neg(p31, 2, NegIntPoint({2}))); // m even, Q = 1
    CHECK(holomorphic_at_neg(p31, 2, NegIntPoint({1})));
    // Q != +-1 with irrational sqrt(D): always holomorphic
    LucasParams p13 = LucasParams::validate(Rational(1), Rational(-3));
    CHECK(holomorphic_at_neg(p13, 2, NegIntPoint({2})));
    CHECK(holomorphic_at_neg(p13, 3, NegIntPoint({3, 2, 1})));
}

TEST_CASE("predicate matches the exact denominator scan on a grid") {
    for (auto [p, q_par] : std::vector<std::pair<long, long>>{{1, -1}, {2, -1}, {3, 1}}) {
        LucasParams lp = LucasParams::validate(Rational(p), Rational(q_par));
        for (long q : {1L, 2L, 3L}) {
            for (long m1 = 1; m1 <= 4; ++m1) {
                for (long m2 = 1; m2 <= 4; ++m2) {
                    NegIntPoint m({m1, m2});
                    CHECK(holomorphic_at_neg(lp, q, m) == !singular_by_exact_scan(lp, q, m));
                }
            }
        }
    }
}

TEST_CASE("hand-checked Fibonacci special value at -1") {
    // k=0 term alpha/(1 - alpha^2) = -1 (alpha^2 = alpha + 1), k=1 term +1.
    LucasParams f = fib();
    QuadExt a = f.alpha();
    QuadExt one = f.quad(Rational(1));
    QuadExt k0 = a / (one - f.alpha_power(2));
    CHECK(k0 == f.quad(Rational(-1)));
    QuadExt k1 = f.alpha_power(-1) / (one - f.alpha_power(-2));
    CHECK(k1 == one);

    SpecialValueResult sv = special_zeta_exact(f, ShiftSpec(2, {1}), NegIntPoint({1}));
    CHECK_FALSE(sv.singular);
    CHECK(sv.is_rational);
    CHECK(sv.value.rational_part() == 0);
    CHECK(sv.value.surd_part() == 0);
}

TEST_CASE("singular point is reported, not evaluated") {
    SpecialValueResult sv = special_zeta_exact(fib(), ShiftSpec(2, {1}), NegIntPoint({2}));
    CHECK(sv.singular);
}

TEST_CASE("D = 8 example stays rational") {
    LucasParams lp = LucasParams::validate(Rational(2), Rational(-1));
    CHECK(lp.d() == 8);
    SpecialValueResult sv = special_zeta_exact(lp, ShiftSpec(2, {1}), NegIntPoint({1}));
    CHECK_FALSE(sv.singular);
    CHECK(sv.value.surd_part() == 0);
}

TEST_CASE("symmetrized rearrangement and term counts") {
    LucasParams f = fib();
    SUBCASE("depth 1, m = 1: two barring classes per k") {
        SymmetrizedValue sym = symmetrized_special_zeta(f, ShiftSpec(2, {1}), NegIntPoint({1}));
        SpecialValueResult direct = special_zeta_exact(f, ShiftSpec(2, {1}), NegIntPoint({1}));
        CHECK(sym.result.value == direct.value);
        CHECK(sym.terms.size() == 4); // k in {0,1} x 2 masks
    }
    SUBCASE("depth 2, m = (1,1): four barring classes per k-pair") {
        LucasParams p13 = LucasParams::validate(Rational(1), Rational(-3));
        SymmetrizedValue sym =
            symmetrized_special_zeta(p13, ShiftSpec(2, {1, 2}), NegIntPoint({1, 1}));
        SpecialValueResult direct =
            special_zeta_exact(p13, ShiftSpec(2, {1, 2}), NegIntPoint({1, 1}));
        CHECK(sym.result.value == direct.value);
        CHECK(sym.terms.size() == 16); // 4 k-pairs x 4 masks
        CHECK(galois_audit(sym.terms, NegIntPoint({1, 1})));
    }
}

TEST_CASE("Galois pairing swaps barring classes with the parity sign") {
    LucasParams f = fib();
    SUBCASE("odd weight: sign -1") {
        SymmetrizedValue sym = symmetrized_special_zeta(f, ShiftSpec(2, {1}), NegIntPoint({1}));
        REQUIRE(galois_audit(sym.terms, NegIntPoint({1})));
        // explicit: psi(sigma_0(k)) = -sigma_1(k)
        for (const auto& t : sym.terms) {
            if (t.mask != 0) continue;
            for (const auto& u : sym.terms) {
                if (u.mask == 1 && u.k == t.k) CHECK(t.sigma.conj() == -u.sigma);
            }
        }
    }
    SUBCASE("even weight: sign +1") {
        LucasParams p13 = LucasParams::validate(Rational(1), Rational(-3));
        NegIntPoint m({1, 1}); // m_d(1) = 2
        SymmetrizedValue sym = symmetrized_special_zeta(p13, ShiftSpec(3, {1, 1}), m);
        REQUIRE(galois_audit(sym.terms, m));
        for (const auto& t : sym.terms) {
            if (t.mask != 0) continue;
            for (const auto& u : sym.terms) {
                if (u.mask == 3 && u.k == t.k) CHECK(t.sigma.conj() == u.sigma);
            }
        }
    }
}

TEST_CASE("assert_rational error paths") {
    LucasParams f = fib();
    SpecialValueResult ok = special_zeta_exact(f, ShiftSpec(2, {1}), NegIntPoint({1}));
    CHECK(assert_rational(ok, f) == 0);

    SpecialValueResult singular = special_zeta_exact(f, ShiftSpec(2, {1}), NegIntPoint({2}));
    try {
        assert_rational(singular, f);
        FAIL("expected SingularPoint");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SingularPoint);
    }

    // P = 9/2, Q = 2: D = 49/4 is a rational square with alpha = 4,
    // beta = 1/2, and m = 1 is not singular (beta^K alpha^{m-K} never hits 1).
    LucasParams sq = LucasParams::validate(Rational(9, 2), Rational(2));
    REQUIRE(sq.d_is_square());
    SpecialValueResult sqv = special_zeta_exact(sq, ShiftSpec(2, {1}), NegIntPoint({1}));
    REQUIRE_FALSE(sqv.singular);
    CHECK(sqv.requires_validation);
    try {
        assert_rational(sqv, sq);
        FAIL("expected SquareDiscriminant");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SquareDiscriminant);
    }
}

TEST_CASE("quadratic character special L-values") {
    SUBCASE("principal mod 3 on P=2, Q=-1") {
        LucasParams lp = LucasParams::validate(Rational(2), Rational(-1));
        auto chars = enumerate_characters(3);
        Rational v = special_L_quadratic(lp, {chars[0]}, NegIntPoint({1}));
        CHECK(v.get_den() > 0); // exact rational produced
    }
    SUBCASE("depth-2 quadratic pair mod 3") {
        LucasParams lp = LucasParams::validate(Rational(2), Rational(-1));
        auto chars = enumerate_characters(3);
        Rational v = special_L_quadratic(lp, {chars[1], chars[1]}, NegIntPoint({1, 1}));
        CHECK(v.get_den() > 0);
    }
    SUBCASE("non-principal quadratic mod 4 needs Q = 1 parameters") {
        // Fibonacci (Q = -1) admits no m at q = 4; P=3, Q=1 admits odd m.
        LucasParams fibp = fib();
        auto chars = enumerate_characters(4);
        CHECK_FALSE(holomorphic_at_neg(fibp, 4, NegIntPoint({1})));
        LucasParams lp = LucasParams::validate(Rational(3), Rational(1));
        REQUIRE(holomorphic_at_neg(lp, 4, NegIntPoint({1})));
        Rational v = special_L_quadratic(lp, {chars[1]}, NegIntPoint({1}));
        CHECK(v.get_den() > 0);
    }
    SUBCASE("complex characters are rejected") {
        LucasParams lp = LucasParams::validate(Rational(2), Rational(-1));
        auto chars = enumerate_characters(5);
        try {
            special_L_quadratic(lp, {chars[1]}, NegIntPoint({1}));
            FAIL("expected NonQuadraticCharacter");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::NonQuadraticCharacter);
        }
    }
    SUBCASE("square discriminant is rejected") {
        LucasParams sq = LucasParams::validate(Rational(3), Rational(2));
        auto chars = enumerate_characters(3);
        try {
            special_L_quadratic(sq, {chars[0]}, NegIntPoint({1}));
            FAIL("expected SquareDiscriminant");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::SquareDiscriminant);
        }
    }
}

TEST_CASE("additive special values") {
    LucasParams f = fib();
    SUBCASE("f = -1 at m = 1") {
        AdditiveTuple neg({AdditiveCharacter(Rational(-1), Rational(0))});
        Rational v = special_additive(f, neg, NegIntPoint({1}));
        CHECK(v == -1); // exact evaluation; cross-checked numerically below
    }
    SUBCASE("f = 1 equals the q = 1 shifted special value") {
        AdditiveTuple one({AdditiveCharacter(Rational(1), Rational(0))});
        LucasParams p13 = LucasParams::validate(Rational(1), Rational(-3));
        Rational a = special_additive(p13, one, NegIntPoint({2}));
        SpecialValueResult b = special_zeta_exact(p13, ShiftSpec(1, {1}), NegIntPoint({2}));
        CHECK_FALSE(b.singular);
        CHECK(a == b.value.rational_part());
    }
    SUBCASE("f = 1/2 on P=3, Q=1") {
        LucasParams lp = LucasParams::validate(Rational(3), Rational(1));
        AdditiveTuple half({AdditiveCharacter(Rational(1, 2), Rational(0))});
        Rational v = special_additive(lp, half, NegIntPoint({1}));
        CHECK(v.get_den() > 0);
    }
    SUBCASE("complex f rejected") {
        AdditiveTuple imag({AdditiveCharacter(Rational(0), Rational(1))});
        try {
            special_additive(f, imag, NegIntPoint({1}));
            FAIL("expected NonRationalCharacter");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::NonRationalCharacter);
        }
    }
    SUBCASE("unbounded partial products rejected") {
        AdditiveTuple big({AdditiveCharacter(Rational(2), Rational(0))});
        try {
            special_additive(f, big, NegIntPoint({1}));
            FAIL("expected PartialProductBound");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::PartialProductBound);
        }
    }
    SUBCASE("singular additive denominator rejected") {
        // f = 1, Q = 1 (P=3): alpha^{-m+2K} = 1 at K with 2K = m, m even.
        LucasParams lp = LucasParams::validate(Rational(3), Rational(1));
        AdditiveTuple one({AdditiveCharacter(Rational(1), Rational(0))});
        CHECK(additive_singular_by_exact_scan(lp, one, NegIntPoint({2})));
        try {
            special_additive(lp, one, NegIntPoint({2}));
            FAIL("expected SingularPoint");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::SingularPoint);
        }
    }
}

TEST_CASE("exact special values agree with the continuation numerically") {
    // embed the exact value and evaluate the continuation at s = -m.
    TruncationPolicy pol;
    pol.eps = 1e-30;
    pol.pole_guard_radius = 1e-9;
    long prec = 192;
    for (auto [p, q_par] : std::vector<std::pair<long, long>>{{1, -1}, {2, -1}, {3, 1}}) {
        LucasParams lp = LucasParams::validate(Rational(p), Rational(q_par));
        for (long q : {2L, 3L}) {
            for (long m1 = 1; m1 <= 3; ++m1) {
                NegIntPoint m({m1});
                if (!holomorphic_at_neg(lp, q, m)) continue;
                ShiftSpec sh(q, {1});
                SpecialValueResult sv = special_zeta_exact(lp, sh, m);
                REQUIRE_FALSE(sv.singular);
                Real exact = sv.value.to_real(prec);
                EvalResult cont =
                    shifted_zeta_cont(lp, sh, MultiPoint::real({-double(m1)}, prec), pol, prec);
                CHECK(abs(cont.value.re - exact).to_double() < 1e-25);
                CHECK(abs(cont.value.im).to_double() < 1e-25);
            }
        }
    }

    // additive cross-check of the f = -1, m = 1 value
    LucasParams f = fib();
    AdditiveTuple neg({AdditiveCharacter(Rational(-1), Rational(0))});
    EvalResult cont = additive_L_cont(f, neg, MultiPoint::real({-1.0}, prec), pol, prec);
    CHECK(abs(cont.value - Complex::of(-1, prec)).to_double() < 1e-25);
}
