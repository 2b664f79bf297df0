#include "doctest.h"

#include "lucaszeta/characters.hpp"
#include "lucaszeta/errors.hpp"

#include <numeric>
#include <random>

using namespace lucaszeta;

TEST_CASE("unit group decompositions") {
    auto g5 = UnitGroup::build(5);
    REQUIRE(g5->factors().size() == 1);
    CHECK(g5->factors()[0].generator == 2);
    CHECK(g5->factors()[0].order == 4);

    auto g8 = UnitGroup::build(8);
    REQUIRE(g8->factors().size() == 2);
    CHECK(g8->factors()[0].order == 2);
    CHECK(g8->factors()[1].order == 2);

    auto g2 = UnitGroup::build(2);
    CHECK(g2->factors().empty());
    CHECK(g2->phi() == 1);

    // product of orders = phi(q), unique exponent vector per unit
    for (long q : {12L, 15L, 16L, 24L, 36L, 60L}) {
        auto g = UnitGroup::build(q);
        long prod = 1;
        for (const auto& f : g->factors()) prod *= f.order;
        CHECK(prod == g->phi());
        long units = 0;
        for (long x = 0; x < q; ++x)
            if (g->is_unit(x)) ++units;
        CHECK(units == g->phi());
    }
}

TEST_CASE("character enumeration") {
    CHECK(enumerate_characters(5).size() == 4);
    CHECK(enumerate_characters(2).size() == 1);
    auto c5 = enumerate_characters(5);
    CHECK(c5[0].is_principal());

    auto c4 = enumerate_characters(4);
    REQUIRE(c4.size() == 2);
    CHECK_FALSE(c4[1].is_principal());
    auto v = c4[1](3).as_rational();
    REQUIRE(v.has_value());
    CHECK(*v == -1);
}

TEST_CASE("character values") {
    auto c5 = enumerate_characters(5);
    // the unique quadratic character mod 5 sends the non-residue 2 to -1
    for (const auto& chi : c5) {
        if (chi.is_principal() || !chi.is_quadratic()) continue;
        auto v = chi(2).as_rational();
        REQUIRE(v.has_value());
        CHECK(*v == -1);
    }
    auto c4 = enumerate_characters(4);
    CHECK(c4[0](2).is_zero());
    CHECK(c4[1](2).is_zero());
    for (const auto& chi : c4) {
        auto one = chi(1).as_rational();
        REQUIRE(one.has_value());
        CHECK(*one == 1);
    }
}

TEST_CASE("multiplicativity and orthogonality up to q = 60") {
    std::mt19937_64 rng(11);
    for (long q = 2; q <= 60; ++q) {
        auto chars = enumerate_characters(q);
        for (const auto& chi : chars) {
            // orthogonality
            Cyclotomic sum(chi.value_order());
            for (long n = 0; n < q; ++n) sum += chi(n);
            if (chi.is_principal()) {
                auto v = sum.as_rational();
                REQUIRE(v.has_value());
                CHECK(*v == UnitGroup::build(q)->phi());
            } else {
                CHECK(sum.is_zero());
            }
        }
        // multiplicativity on random pairs for a few characters
        for (std::size_t ci = 0; ci < chars.size(); ci += (chars.size() > 4 ? 3 : 1)) {
            const auto& chi = chars[ci];
            for (int rep = 0; rep < 4; ++rep) {
                long m = static_cast<long>(rng() % (2 * q + 1));
                long n = static_cast<long>(rng() % (2 * q + 1));
                CHECK(chi(m * n) == chi(m) * chi(n));
            }
        }
    }
}

TEST_CASE("can_define_mod") {
    auto c6 = enumerate_characters(6);
    CHECK(can_define_mod(c6[0], 1)); // principal descends to modulus 1

    auto c4 = enumerate_characters(4);
    CHECK_FALSE(can_define_mod(c4[1], 2)); // chi(3) = -1 but 3 = 1 mod 2
    CHECK(can_define_mod(c4[1], 4));
    CHECK_THROWS_AS(can_define_mod(c4[1], 3), Error);
}

TEST_CASE("Gauss sums") {
    auto c5 = enumerate_characters(5);
    for (const auto& chi : c5) {
        if (chi.is_principal() || !chi.is_quadratic()) continue;
        Cyclotomic tau = gauss_sum(chi, 1);
        auto sq = (tau * tau).as_rational();
        REQUIRE(sq.has_value());
        CHECK(*sq == 5);
    }

    auto c4 = enumerate_characters(4);
    CHECK(gauss_sum(c4[1], 2).is_zero());
    CHECK(gauss_sum(c4[1], 0).is_zero()); // orthogonality at n = 0

    // |tau(chi, 1)|^2 = q for primitive characters
    for (long q : {3L, 4L, 5L, 7L, 8L}) {
        for (const auto& chi : enumerate_characters(q)) {
            bool primitive = !chi.is_principal();
            for (long q1 = 1; q1 < q && primitive; ++q1)
                if (q % q1 == 0 && can_define_mod(chi, q1)) primitive = false;
            if (!primitive) continue;
            auto norm = (gauss_sum(chi, 1) * gauss_sum(chi, 1).conj()).as_rational();
            REQUIRE(norm.has_value());
            CHECK(*norm == q);
        }
    }
}

TEST_CASE("gauss_vanishing_check") {
    auto c4 = enumerate_characters(4);
    GaussVanishing gv = gauss_vanishing_check(c4[1], 2);
    CHECK(gv.predicted);
    CHECK(gv.actual);

    // primitive chi at a coprime to q: no vanishing either way
    auto c5 = enumerate_characters(5);
    for (const auto& chi : c5) {
        if (chi.is_principal()) continue;
        GaussVanishing g = gauss_vanishing_check(chi, 2);
        CHECK_FALSE(g.predicted);
        CHECK_FALSE(g.actual);
    }

    // principal chi with gcd(a, q) = q: defined mod 1, so no prediction
    auto c6 = enumerate_characters(6);
    GaussVanishing g0 = gauss_vanishing_check(c6[0], 0);
    CHECK_FALSE(g0.predicted);
    CHECK_FALSE(g0.actual); // tau(principal, 0) = phi(6) != 0
}

TEST_CASE("Gauss twist identity") {
    // sum_{r_d=1}^{q} chi(r_d(1)) zeta_q^{-n r_d(1)} = chi(-1) tau(chi, n),
    // for fixed prefixes r_1..r_{d-1}.
    for (long q = 2; q <= 24; ++q) {
        auto chars = enumerate_characters(q);
        for (std::size_t ci = 0; ci < chars.size(); ci += (chars.size() > 6 ? 4 : 1)) {
            const auto& chi = chars[ci];
            long big = static_cast<long>(
                lcm(Integer(q), Integer(chi.value_order())).get_si());
            for (long n = -q; n <= q; n += std::max<long>(1, q / 2)) {
                for (long prefix : {0L, 3L, 7L}) {
                    Cyclotomic lhs(big);
                    for (long rd = 1; rd <= q; ++rd) {
                        long x = prefix + rd;
                        auto e = chi.value_exponent(x);
                        if (!e) continue;
                        long expo = *e * (big / chi.value_order()) +
                                    ((((-n * x) % q) + q) % q) * (big / q);
                        lhs += Cyclotomic::monomial(Rational(1), expo, big);
                    }
                    Cyclotomic rhs = chi(q - 1).lift_to(big) * gauss_sum(chi, n);
                    CHECK(lhs == rhs);
                }
            }
        }
    }
}

TEST_CASE("additive characters") {
    AdditiveCharacter neg(Rational(-1), Rational(0));
    auto [r7, i7] = neg.eval(7);
    CHECK(r7 == -1);
    CHECK(i7 == 0);

    AdditiveCharacter half(Rational(1, 2), Rational(0));
    CHECK(half.eval(3).first == Rational(1, 8));

    AdditiveCharacter imag(Rational(0), Rational(1));
    auto [r4, i4] = imag.eval(4);
    CHECK(r4 == 1);
    CHECK(i4 == 0);

    CHECK_THROWS_AS(AdditiveCharacter(Rational(0), Rational(0)), Error);
}

TEST_CASE("additive tuples and partial products") {
    AdditiveTuple t({AdditiveCharacter(Rational(2), Rational(0)),
                     AdditiveCharacter(Rational(1, 2), Rational(0))});
    CHECK(t.g(1).first == 1);  // 2 * 1/2
    CHECK(t.g(2).first == Rational(1, 2));
    CHECK(t.partial_products_bounded()); // |g_1| = 1 boundary allowed

    AdditiveTuple bad({AdditiveCharacter(Rational(2), Rational(0)),
                       AdditiveCharacter(Rational(1), Rational(0))});
    CHECK_FALSE(bad.partial_products_bounded());
    CHECK_THROWS_AS(bad.require_bounded(), Error);
}

TEST_CASE("character addressing by spec string") {
    DirichletCharacter quad = character_by_spec("5:quadratic");
    CHECK(quad.is_quadratic());
    CHECK_FALSE(quad.is_principal());
    DirichletCharacter c0 = character_by_spec("5:0");
    CHECK(c0.is_principal());
    CHECK_THROWS_AS(character_by_spec("8:quadratic"), Error); // not unique mod 8
    CHECK_THROWS_AS(character_by_spec("5:9"), Error);
}

TEST_CASE("cyclotomic arithmetic basics") {
    // zeta_4^2 = -1 after reduction
    Cyclotomic i = Cyclotomic::monomial(Rational(1), 1, 4);
    auto v = (i * i).as_rational();
    REQUIRE(v.has_value());
    CHECK(*v == -1);

    // embedding is a ring homomorphism (spot check)
    Cyclotomic a = Cyclotomic::monomial(Rational(2, 3), 1, 5);
    Cyclotomic b = Cyclotomic::monomial(Rational(1), 3, 5) +
                   Cyclotomic::from_rational(Rational(1, 2), 5);
    Complex lhs = (a * b).embed(128);
    Complex rhs = a.embed(128) * b.embed(128);
    CHECK(abs(lhs - rhs).to_double() < 1e-30);

    // 1 + zeta_3 + zeta_3^2 = 0 exactly
    Cyclotomic s(3);
    for (long e = 0; e < 3; ++e) s += Cyclotomic::monomial(Rational(1), e, 3);
    CHECK(s.is_zero());
}
