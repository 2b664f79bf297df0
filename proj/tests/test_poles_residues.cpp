#include "doctest.h"

#include "lucaszeta/errors.hpp"
#include "lucaszeta/residues.hpp"

#include <algorithm>
#include <cmath>

using namespace lucaszeta;

namespace {

LucasParams fib() { return LucasParams::validate(Rational(1), Rational(-1)); }

} // namespace

TEST_CASE("real pole locations of the Fibonacci shifted zeta") {
    // Q = -1: log|Q| = 0, ell = k'; real locations need n = -q k'/2, giving
    // s = -2k' exactly.
    LucasParams lp = fib();
    PoleWindow win{-5, 1, -1e-9, 1e-9};
    auto poles = enumerate_poles_zeta(lp, 2, 1, 6, 8, win, 128);
    std::vector<double> re;
    for (const auto& h : poles) re.push_back(h.location.re.to_double());
    std::sort(re.begin(), re.end());
    REQUIRE(re.size() == 3);
    CHECK(re[0] == doctest::Approx(-4.0).epsilon(1e-25));
    CHECK(re[1] == doctest::Approx(-2.0).epsilon(1e-25));
    CHECK(re[2] == doctest::Approx(0.0).epsilon(1e-25));
}

TEST_CASE("purely imaginary pole ladder for Q = 1") {
    // P=3, Q=1: k'=0 poles at n pi i / log alpha (q = 2 gives 2n/q = n).
    LucasParams lp = LucasParams::validate(Rational(3), Rational(1));
    double la = lp.log_alpha(64).to_double();
    PoleWindow win{-0.5, 0.5, -10, 10};
    auto poles = enumerate_poles_zeta(lp, 2, 1, 0, 3, win, 128);
    REQUIRE(!poles.empty());
    for (const auto& h : poles) {
        CHECK(h.k_sum == 0);
        CHECK(std::abs(h.location.re.to_double()) < 1e-30);
        double expect = h.n * M_PI / la;
        CHECK(h.location.im.to_double() == doctest::Approx(expect).epsilon(1e-12));
    }
    // k'=0, n=0 sits at the origin
    Complex origin = zeta_pole_location(lp, 2, 0, 0, 128);
    CHECK(origin.re.is_zero());
    CHECK(origin.im.is_zero());
}

TEST_CASE("additive pole locations") {
    LucasParams lp = fib();
    Real la = lp.log_alpha(160);

    SUBCASE("f = 1 reduces to the q = 1 zeta pattern") {
        AdditiveTuple one({AdditiveCharacter(Rational(1), Rational(0))});
        PoleWindow win{-6, 1, -20, 20};
        auto add = enumerate_poles_additive(lp, one, 1, 3, 3, win, 128);
        auto zeta = enumerate_poles_zeta(lp, 1, 1, 3, 3, win, 128);
        REQUIRE(add.size() == zeta.size());
        for (std::size_t i = 0; i < add.size(); ++i) {
            CHECK(abs(Complex{add[i].location.re - zeta[i].location.re,
                              add[i].location.im - zeta[i].location.im})
                      .to_double() < 1e-30);
        }
    }
    SUBCASE("f = -1 shifts by the principal log") {
        AdditiveTuple neg({AdditiveCharacter(Rational(-1), Rational(0))});
        Complex loc = additive_pole_location(lp, neg.g_value(1, 160), 0, 0, 160);
        CHECK(loc.re.to_double() == doctest::Approx(0.0).epsilon(1e-30));
        CHECK(loc.im.to_double() ==
              doctest::Approx((Real::pi(160) / la).to_double()).epsilon(1e-30));
    }
    SUBCASE("f = 1/2 on P=3, Q=1 shifts by -log 2 / log alpha") {
        LucasParams lp31 = LucasParams::validate(Rational(3), Rational(1));
        AdditiveTuple half({AdditiveCharacter(Rational(1, 2), Rational(0))});
        Complex loc = additive_pole_location(lp31, half.g_value(1, 160), 0, 0, 160);
        Real expect = -log(Real::of(2L, 160)) / lp31.log_alpha(160);
        CHECK(std::abs(loc.re.to_double() - expect.to_double()) < 1e-30);
        CHECK(loc.im.is_zero());
    }
    SUBCASE("zero partial product is rejected") {
        CHECK_THROWS_AS(
            additive_pole_location(lp, Complex::of(0, 64), 0, 0, 64), Error);
    }
}

TEST_CASE("stored locations recompute exactly") {
    LucasParams lp = LucasParams::validate(Rational(1), Rational(-3));
    PoleWindow win{-8, 1, -12, 12};
    auto poles = enumerate_poles_zeta(lp, 3, 1, 4, 6, win, 128);
    REQUIRE(!poles.empty());
    for (const auto& h : poles) {
        Complex again = zeta_pole_location(lp, 3, h.k_sum, h.n, 192);
        CHECK(abs(Complex{h.location.re.round_to(192) - again.re,
                          h.location.im.round_to(192) - again.im})
                  .to_double() < std::ldexp(1.0, -120));
    }
}

TEST_CASE("numeric residue on model integrands") {
    long prec = 128;
    SUBCASE("1/s at the origin") {
        auto f = [](const Complex& z) { return Complex::of(1, 160) / z; };
        Complex r = numeric_residue(f, Complex::of(0, 160), 0.1, prec, 1e-12, 1024);
        CHECK(abs(r - Complex::of(1, 160)).to_double() < 1e-25);
    }
    SUBCASE("1/(1 - alpha^{-qs}) family has residue 1/(q log alpha)") {
        LucasParams lp = fib();
        long q = 2;
        Real la = lp.log_alpha(192);
        auto f = [&](const Complex& z) {
            Complex e = exp(Complex{-(z.re * la) * q, -(z.im * la) * q});
            return Complex::of(1, 192) / (Complex::of(1, 192) - e);
        };
        Complex r = numeric_residue(f, Complex::of(0, 192), 0.1, prec, 1e-12, 1024);
        Real expect = Real::of(1L, 192) / (la * q);
        CHECK(abs(r - Complex{expect, Real::of(0L, 192)}).to_double() < 1e-22);
    }
    SUBCASE("analytic integrand integrates to zero") {
        auto f = [](const Complex& z) { return exp(z) + z * z; };
        Complex r = numeric_residue(f, Complex::of(0, 160), 0.2, prec, 1e-13, 1024);
        CHECK(abs(r).to_double() < 1e-25);
    }
    SUBCASE("simplicity: (s - a) F(s) has vanishing residue") {
        auto f = [](const Complex& z) {
            // z * (1/z) = 1 ... use a genuinely simple pole: z * (1/z^1) * g
            return (z * (Complex::of(1, 160) / z)) + z; // analytic overall
        };
        Complex r = numeric_residue(f, Complex::of(0, 160), 0.15, prec, 1e-12, 1024);
        CHECK(abs(r).to_double() < 1e-25);
    }
}

TEST_CASE("simplicity of a continuation pole") {
    // (s - a) * zeta_cont has residue ~ 0 at a.
    LucasParams lp = fib();
    ShiftSpec sh(2, {1});
    TruncationPolicy pol;
    pol.eps = 1e-18;
    pol.pole_guard_radius = 1e-9;
    Complex a = zeta_pole_location(lp, 2, 0, 0, 192); // the origin
    auto f = [&](const Complex& z) {
        Complex v = shifted_zeta_cont(lp, sh, MultiPoint{{z}}, pol, 128).value;
        return (z - a) * v;
    };
    Complex r = numeric_residue(f, a, 0.05, 128, 1e-10, 512);
    CHECK(abs(r).to_double() < 1e-9);
}

TEST_CASE("classical depth-1 residue and Gauss-sum vanishing") {
    LucasParams lp = fib();
    ResidueOptions opt;
    opt.prec = 128;
    opt.policy.eps = 1e-18;

    SUBCASE("principal mod 2 at s = 0") {
        auto chars = enumerate_characters(2);
        ResidueValue rv = residue_dirichlet_last(lp, {chars[0]}, {}, 0, 0, opt);
        Real expect = Real::of(1L, 192) / (lp.log_alpha(192) * 2);
        CHECK(abs(rv.closed_form - Complex{expect, Real::of(0L, 192)}).to_double() < 1e-30);
        CHECK(rv.rel_error.to_double() < 1e-10);
    }
    SUBCASE("non-principal mod 4 on the real axis: residue vanishes") {
        auto chars = enumerate_characters(4);
        // k'=1, n=-2 gives the real location -2 (Q=-1, ell=k').
        ResidueValue rv = residue_dirichlet_last(lp, {chars[1]}, {}, 1, -2, opt);
        CHECK(abs(rv.closed_form).to_double() < 1e-30);
        CHECK(abs(rv.numeric_check).to_double() < 1e-9);
    }
}

TEST_CASE("pinned single-term inner residue") {
    // k'=0 pins every k_t to zero: one binomial (=1) and the plain trailing
    // factor; compare the closed form against that single term.
    LucasParams lp = fib();
    auto chars = enumerate_characters(2);
    std::vector<DirichletCharacter> tuple{chars[0], chars[0]};
    ResidueOptions opt;
    opt.prec = 128;
    opt.policy.eps = 1e-18;
    long wp = 192;
    Complex s2{Real::of(2.3, wp), Real::of(0.7, wp)};
    ResidueValue rv = residue_dirichlet_inner(lp, tuple, 1, 0, 0, {s2}, opt);

    Real la = lp.log_alpha(wp);
    Complex a = zeta_pole_location(lp, 2, 0, 0, wp); // = 0
    Complex expected(wp);
    long q = 2;
    for (long r1 = 1; r1 <= q; ++r1) {
        for (long r2 = 1; r2 <= q; ++r2) {
            auto e1 = tuple[0].value_exponent(r1);
            auto e2 = tuple[1].value_exponent(r1 + r2);
            if (!e1 || !e2) continue;
            // principal characters: weight 1; zeta_q^{-n r_1} = 1 at n = 0.
            Complex w = exp(Complex{-(s2.re * la), -(s2.im * la)});
            Complex num = pow_si(w, r2);
            Complex den = Complex::of(1, wp) - pow_si(w, q);
            expected += num / den;
        }
    }
    expected = expected / (la * Real::of(q, wp));
    // D^{a/2} = 1 at a = 0; binomial factor is 1 at k' = 0.
    CHECK(abs(rv.closed_form - expected).to_double() < 1e-25);
    CHECK(rv.rel_error.to_double() < 1e-8);
}

TEST_CASE("real-axis holomorphy report") {
    LucasParams lp = fib();
    SUBCASE("non-principal mod 4") {
        auto chars = enumerate_characters(4);
        RealAxisReport rep = real_axis_holomorphy_report(chars[1], lp, -6, 1, 128);
        CHECK(rep.all_certified);
        CHECK(!rep.candidates.empty());
        for (const auto& c : rep.candidates) {
            CHECK(c.tau_vanishes);
            CHECK(c.q_over_gcd <= 2);
        }
    }
    SUBCASE("non-principal mod 3") {
        auto chars = enumerate_characters(3);
        RealAxisReport rep = real_axis_holomorphy_report(chars[1], lp, -6, 1, 128);
        CHECK(rep.all_certified);
        for (const auto& c : rep.candidates) CHECK(c.lemma_applies);
    }
    SUBCASE("principal character is rejected") {
        auto chars = enumerate_characters(4);
        try {
            real_axis_holomorphy_report(chars[0], lp, -6, 1, 128);
            FAIL("expected PrincipalCharacter");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::PrincipalCharacter);
        }
    }
}

TEST_CASE("residue linearity across the character combination") {
    // Res L = sum over r-tuples of chi weights times Res zeta: rebuild the
    // d=1 closed form from the shifted-zeta scalar and compare.
    LucasParams lp = fib();
    auto chars = enumerate_characters(3);
    const auto& chi = chars[1];
    ResidueOptions opt;
    opt.prec = 128;
    opt.policy.eps = 1e-18;
    long wp = 192;
    long q = 3, kp = 0, n = 1;
    ResidueValue rv = residue_dirichlet_last(lp, {chi}, {}, kp, n, opt);

    Complex a = zeta_pole_location(lp, q, kp, n, wp);
    Real la = lp.log_alpha(wp);
    Complex scalar = real_pow(lp.d_real(wp), a / Real::of(2L, wp)) *
                     binom_complex(a, kp) / (la * Real::of(q, wp));
    Complex acc(wp);
    for (long r = 1; r <= q; ++r) {
        auto e = chi.value_exponent(r);
        if (!e) continue;
        long m = chi.value_order();
        Complex weight = Cyclotomic::monomial(Rational(1), *e, m).embed(wp);
        long zq_e = (((-n * r) % q) + q) % q;
        acc += weight * Cyclotomic::monomial(Rational(1), zq_e, q).embed(wp);
    }
    CHECK(abs(rv.closed_form - acc * scalar).to_double() < 1e-30);
}

TEST_CASE("complex additive character shifts the pole ladder by a complex log") {
    // f(1) = i: principal log(i) = (pi/2) i, so the k'=0, n=0 location sits
    // at (pi/2) i / log alpha.
    LucasParams lp = fib();
    AdditiveTuple im({AdditiveCharacter(Rational(0), Rational(1))});
    Complex loc = additive_pole_location(lp, im.g_value(1, 160), 0, 0, 160);
    Real la = lp.log_alpha(160);
    Real expect = Real::pi(160) / (la * 2);
    CHECK(std::abs(loc.re.to_double()) < 1e-40);
    CHECK(std::abs(loc.im.to_double() - expect.to_double()) < 1e-40);

    // the n integer absorbs full 2 pi i branch steps
    Complex loc1 = additive_pole_location(lp, im.g_value(1, 160), 0, 1, 160);
    Real step = Real::pi(160) * 2 / la;
    CHECK(std::abs((loc1.im - loc.im).to_double() - step.to_double()) < 1e-40);
}
