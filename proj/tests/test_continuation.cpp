#include "doctest.h"

#include "lucaszeta/continuation.hpp"
#include "test_util.hpp"
#include "lucaszeta/errors.hpp"
#include "lucaszeta/verify.hpp"

using namespace lucaszeta;

namespace {

LucasParams fib() { return LucasParams::validate(Rational(1), Rational(-1)); }

} // namespace

TEST_CASE("generalized binomial coefficients") {
    long wp = 128;
    CHECK(abs(binom_complex(Complex::of(7, wp), 0) - Complex::of(1, wp)).to_double() == 0.0);

    // C(3, 2) = 3 via s = -3
    Complex c32 = binom_complex(Complex::of(-3, wp), 2);
    CHECK(abs(c32 - Complex::of(3, wp)).to_double() < 1e-30);

    // C(-1/2, 1) = -1/2
    Complex chalf = binom_complex(Complex::of(Rational(1, 2), wp), 1);
    CHECK(abs(chalf - Complex::of(Rational(-1, 2), wp)).to_double() < 1e-30);

    // truncation at integer -s: C(m, k) = 0 for k > m
    Complex trunc = binom_complex(Complex::of(-2, wp), 3);
    CHECK(abs(trunc).to_double() < 1e-30);
}

TEST_CASE("shifted continuation: domain interior agreement and collapse at -1") {
    LucasParams lp = fib();
    LucasSequenceCache cache(lp);
    TruncationPolicy pol;
    pol.eps = 1e-24;
    OracleOptions oo;
    oo.prec = 128;
    oo.eps = 1e-24;
    ShiftSpec sh(2, {1});

    EvalResult direct = direct_shifted_zeta(cache, sh, MultiPoint::real({2.0}, 192), oo);
    EvalResult cont = shifted_zeta_cont(lp, sh, MultiPoint::real({2.0}, 192), pol, 128);
    CHECK(abs(direct.value - cont.value).to_double() <
          combinedBound(direct, cont));

    // exact collapse at s = -1 (the two surviving k-terms cancel)
    EvalResult c1 = shifted_zeta_cont(lp, sh, MultiPoint::real({-1.0}, 192), pol, 128);
    CHECK(abs(c1.value).to_double() < 1e-24);

    // s = 0 sits on the k = 0, n = 0 hyperplane
    try {
        shifted_zeta_cont(lp, sh, MultiPoint::real({0.0}, 192), pol, 128);
        FAIL("expected PoleProximity");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::PoleProximity);
    }
}

TEST_CASE("truncation monotonicity of the k-sum") {
    LucasParams lp = fib();
    ShiftSpec sh(2, {1});
    MultiPoint s{std::vector<Complex>{Complex{Real::of(1.3, 192), Real::of(0.4, 192)}}};

    TruncationPolicy a;
    a.forced_cutoff = 24;
    TruncationPolicy b;
    b.forced_cutoff = 48;
    EvalResult ra = shifted_zeta_cont(lp, sh, s, a, 128);
    EvalResult rb = shifted_zeta_cont(lp, sh, s, b, 128);
    CHECK(abs(ra.value - rb.value).to_double() <= ra.truncation_tail_bound.to_double());
}

TEST_CASE("Dirichlet continuation") {
    LucasParams lp = fib();
    LucasSequenceCache cache(lp);
    TruncationPolicy pol;
    pol.eps = 1e-24;
    OracleOptions oo;
    oo.prec = 128;
    oo.eps = 1e-24;

    SUBCASE("principal mod 2 at s = 2 matches the odd-index oracle") {
        auto chars = enumerate_characters(2);
        MultiPoint s = MultiPoint::real({2.0}, 192);
        EvalResult cont = dirichlet_L_cont(lp, {chars[0]}, s, pol, 128);
        EvalResult direct = direct_dirichlet_L(cache, {chars[0]}, s, oo);
        CHECK(abs(cont.value - direct.value).to_double() < combinedBound(direct, cont));
    }
    SUBCASE("quadratic character at negative real s gives a real value") {
        auto chars = enumerate_characters(4);
        EvalResult v = dirichlet_L_cont(lp, {chars[1]}, MultiPoint::real({-1.3}, 192), pol, 128);
        CHECK(v.value.is_finite());
        CHECK(abs(v.value.im).to_double() < 1e-22);
    }
    SUBCASE("depth-1 reduction against the Dirichlet-analogue series") {
        // Eq.-(2)-style L(s, chi) for chi mod 3, s inside the half plane
        auto chars = enumerate_characters(3);
        MultiPoint s = MultiPoint::real({1.5}, 192);
        EvalResult cont = dirichlet_L_cont(lp, {chars[1]}, s, pol, 128);
        long wp = 256;
        Complex brute(wp);
        for (long n = 1; n <= 200; ++n) {
            auto v = chars[1](n).as_rational();
            if (!v || *v == 0) continue;
            Real t = exp(Real::of(-1.5, wp) * cache.log_u(n, wp));
            brute.re += (*v == 1) ? t : -t;
        }
        CHECK(abs(cont.value - brute).to_double() < 1e-20);
    }
}

TEST_CASE("additive continuation") {
    LucasParams lp = fib();
    LucasSequenceCache cache(lp);
    TruncationPolicy pol;
    pol.eps = 1e-24;
    OracleOptions oo;
    oo.prec = 128;
    oo.eps = 1e-24;

    SUBCASE("trivial characters reduce to the multiple zeta") {
        AdditiveTuple one({AdditiveCharacter(Rational(1), Rational(0)),
                           AdditiveCharacter(Rational(1), Rational(0))});
        verify::Rng rng(99);
        for (int rep = 0; rep < 20; ++rep) {
            double t2 = rng.uniform(0.5, 2.0);
            double t1 = rng.uniform(0.5, 2.0);
            MultiPoint s{std::vector<Complex>{
                Complex{Real::of(t1 - t2, 192), Real::of(rng.uniform(-1.0, 1.0), 192)},
                Complex{Real::of(t2, 192), Real::of(rng.uniform(-1.0, 1.0), 192)}}};
            EvalResult a = additive_L_cont(lp, one, s, pol, 128);
            EvalResult b = shifted_zeta_cont(lp, ShiftSpec(1, {1, 1}), s, pol, 128);
            CHECK(abs(a.value - b.value).to_double() < combinedBound(a, b));
        }
    }
    SUBCASE("alternating series at s = 1 agrees with the oracle") {
        AdditiveTuple neg({AdditiveCharacter(Rational(-1), Rational(0))});
        MultiPoint s = MultiPoint::real({1.0}, 192);
        EvalResult cont = additive_L_cont(lp, neg, s, pol, 128);
        EvalResult direct = direct_additive_L(cache, neg, s, oo);
        CHECK(abs(cont.value - direct.value).to_double() < combinedBound(direct, cont));
    }
    SUBCASE("hyperplane point is guarded") {
        AdditiveTuple neg({AdditiveCharacter(Rational(-1), Rational(0))});
        // log(-1) = pi i puts the k'=0, n=0 hyperplane at pi i / log alpha
        Real la = lp.log_alpha(192);
        MultiPoint s{std::vector<Complex>{Complex{Real::of(0L, 192), Real::pi(192) / la}}};
        try {
            additive_L_cont(lp, neg, s, pol, 128);
            FAIL("expected PoleProximity");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::PoleProximity);
        }
    }
}

TEST_CASE("random interior equivalence across depths") {
    verify::Rng rng(1234);
    const std::vector<std::pair<long, long>> pss{{1, -1}, {2, -1}, {3, 1}, {1, -3}};
    int done = 0;
    for (int rep = 0; rep < 12; ++rep) {
        auto [p, q_par] = pss[rng.next_u64() % pss.size()];
        LucasParams lp = LucasParams::validate(Rational(p), Rational(q_par));
        LucasSequenceCache cache(lp);
        long d = rng.uniform_long(1, 3);
        long q = rng.uniform_long(2, 4);
        std::vector<long> r;
        for (long i = 0; i < d; ++i) r.push_back(rng.uniform_long(1, q));
        std::vector<Complex> coords(d, Complex(192));
        double next_suffix = 0;
        for (long j = d; j >= 1; --j) {
            double target = rng.uniform(0.25, 3.0);
            coords[j - 1] =
                Complex{Real::of(target - next_suffix, 192), Real::of(rng.uniform(-2.0, 2.0), 192)};
            next_suffix = target;
        }
        MultiPoint s{coords};
        OracleOptions oo;
        oo.prec = 128;
        oo.eps = 1e-20;
        TruncationPolicy pol;
        pol.eps = 1e-20;
        EvalResult direct = direct_shifted_zeta(cache, ShiftSpec(q, r), s, oo);
        EvalResult cont = shifted_zeta_cont(lp, ShiftSpec(q, r), s, pol, 128);
        CHECK(abs(direct.value - cont.value).to_double() <= combinedBound(direct, cont));
        ++done;
    }
    CHECK(done == 12);
}

TEST_CASE("random interior equivalence for the character variants") {
    verify::Rng rng(5150);
    LucasParams lp = fib();
    LucasSequenceCache cache(lp);
    OracleOptions oo;
    oo.prec = 128;
    oo.eps = 1e-20;
    TruncationPolicy pol;
    pol.eps = 1e-20;

    SUBCASE("Dirichlet tuples up to depth 3") {
        for (int rep = 0; rep < 6; ++rep) {
            long d = rng.uniform_long(1, 3);
            long q = rng.uniform_long(2, 4);
            auto all = enumerate_characters(q);
            std::vector<DirichletCharacter> tuple;
            for (long i = 0; i < d; ++i)
                tuple.push_back(all[static_cast<std::size_t>(rng.next_u64() % all.size())]);
            std::vector<Complex> coords(d, Complex(192));
            double next_suffix = 0;
            for (long j = d; j >= 1; --j) {
                double target = rng.uniform(0.3, 2.5);
                coords[j - 1] = Complex{Real::of(target - next_suffix, 192),
                                        Real::of(rng.uniform(-1.5, 1.5), 192)};
                next_suffix = target;
            }
            MultiPoint s{coords};
            EvalResult direct = direct_dirichlet_L(cache, tuple, s, oo);
            EvalResult cont = dirichlet_L_cont(lp, tuple, s, pol, 128);
            CHECK(abs(direct.value - cont.value).to_double() <= combinedBound(direct, cont));
        }
    }
    SUBCASE("additive tuples up to depth 3") {
        const std::vector<std::pair<long, long>> pool{{1, 1}, {-1, 1}, {1, 2}, {-1, 2}};
        for (int rep = 0; rep < 6; ++rep) {
            long d = rng.uniform_long(1, 3);
            std::vector<AdditiveCharacter> fs;
            for (long i = 0; i < d; ++i) {
                auto [num, den] = pool[static_cast<std::size_t>(rng.next_u64() % pool.size())];
                fs.emplace_back(Rational(num, den), Rational(0));
            }
            AdditiveTuple tuple(std::move(fs));
            std::vector<Complex> coords(d, Complex(192));
            double next_suffix = 0;
            for (long j = d; j >= 1; --j) {
                double target = rng.uniform(0.3, 2.5);
                coords[j - 1] = Complex{Real::of(target - next_suffix, 192),
                                        Real::of(rng.uniform(-1.5, 1.5), 192)};
                next_suffix = target;
            }
            MultiPoint s{coords};
            EvalResult direct = direct_additive_L(cache, tuple, s, oo);
            EvalResult cont = additive_L_cont(lp, tuple, s, pol, 128);
            CHECK(abs(direct.value - cont.value).to_double() <= combinedBound(direct, cont));
        }
    }
}
