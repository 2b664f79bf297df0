#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lucaszeta/complexnum.hpp"
#include "lucaszeta/rational.hpp"

namespace lucaszeta {

// Element of Q(zeta_N) stored on the redundant basis 1, zeta, ..., zeta^{N-1}
// (reduced only by zeta^N = 1 during arithmetic). Zero tests and equality go
// through the canonical remainder modulo the N-th cyclotomic polynomial.
class Cyclotomic {
public:
    Cyclotomic() : order_(1), coeffs_(1, Rational(0)) {}
    explicit Cyclotomic(long order) : order_(order), coeffs_(order, Rational(0)) {}

    static Cyclotomic zero(long order) { return Cyclotomic(order); }
    static Cyclotomic from_rational(const Rational& c, long order) {
        Cyclotomic z(order);
        z.coeffs_[0] = c;
        return z;
    }
    // c * zeta_order^e (e taken mod order).
    static Cyclotomic monomial(const Rational& c, long e, long order);

    long order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Rational& c);
    friend Cyclotomic operator-(const Cyclotomic& a) { return a * Rational(-1); }

    // Complex conjugation zeta -> zeta^{-1}.
    Cyclotomic conj() const;

    // Canonical coefficients: remainder mod Phi_N, length deg Phi_N.
    std::vector<Rational> canonical() const;
    bool is_zero() const;
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }
    // Exact rational value if the element is rational, nullopt otherwise.
    std::optional<Rational> as_rational() const;

    // Map into the given cyclotomic order (current order must divide it).
    Cyclotomic lift_to(long order) const;

    Complex embed(long prec) const;

    std::string str() const;

private:
    long order_;
    std::vector<Rational> coeffs_;
};

// Integer coefficients of the N-th cyclotomic polynomial (memoized).
const std::vector<Integer>& cyclotomic_polynomial(long n);

// Cyclic decomposition of (Z/qZ)^* found by CRT over prime powers with
// brute-force generator search; carries a full discrete-log table.
class UnitGroup {
public:
    struct Factor {
        long generator; // lifted mod q
        long order;
    };

    static std::shared_ptr<const UnitGroup> build(long q);

    long modulus() const { return q_; }
    long phi() const { return phi_; }
    const std::vector<Factor>& factors() const { return factors_; }
    bool is_unit(long n) const;
    // Exponent vector of a unit residue.
    const std::vector<long>& dlog(long n) const;

private:
    long q_ = 0;
    long phi_ = 1;
    std::vector<Factor> factors_;
    std::map<long, std::vector<long>> dlog_;
};

// Dirichlet character mod q addressed by an exponent vector on the unit
// group's cyclic factors; all values are exact phi(q)-th roots of unity.
class DirichletCharacter {
public:
    DirichletCharacter(std::shared_ptr<const UnitGroup> group, std::vector<long> exponents);

    long modulus() const { return group_->modulus(); }
    const std::vector<long>& exponents() const { return exponents_; }
    const UnitGroup& group() const { return *group_; }

    bool is_principal() const;
    // Real-valued (all values in {-1, 0, 1}).
    bool is_quadratic() const;
    // chi(-1) as +1/-1.
    int parity() const;

    // Exact chi(n); the zero element when gcd(n, q) > 1. Values live in
    // Q(zeta_{phi(q)}).
    Cyclotomic operator()(long n) const;
    long value_order() const { return value_order_; }
    // chi(n) as zeta^e: returns e, or nullopt when chi(n) = 0.
    std::optional<long> value_exponent(long n) const;

    std::string str() const;

private:
    std::shared_ptr<const UnitGroup> group_;
    std::vector<long> exponents_;
    long value_order_;
    std::vector<std::optional<long>> table_; // residue -> exponent of zeta
};

// All phi(q) characters mod q, principal first, then lexicographic by
// exponent vector.
std::vector<DirichletCharacter> enumerate_characters(long q);

// True iff chi descends to modulus q1 (chi trivial on units = 1 mod q1).
bool can_define_mod(const DirichletCharacter& chi, long q1);

// Exact Gauss sum tau(chi, n) = sum_x chi(x) zeta_q^{nx} in
// Q(zeta_{lcm(q, phi(q))}).
Cyclotomic gauss_sum(const DirichletCharacter& chi, long n);

struct GaussVanishing {
    bool predicted; // lemma premise: chi not definable mod q/gcd(a, q)
    bool actual;    // tau(chi, a) = 0 exactly
};

GaussVanishing gauss_vanishing_check(const DirichletCharacter& chi, long a);

// CLI addressing "q:index" or "q:quadratic".
DirichletCharacter character_by_spec(const std::string& spec);

// Additive character Z -> C^* pinned by its (exact rational-complex) value
// at 1.
struct AdditiveCharacter {
    Rational re, im;

    AdditiveCharacter(Rational r, Rational i);
    bool is_real() const { return im == 0; }
    Rational abs_sq() const { return re * re + im * im; }
    Complex value(long prec) const { return Complex::of(re, im, prec); }
    // f(1)^n exactly.
    std::pair<Rational, Rational> eval(long n) const;
    Complex eval(long n, long prec) const;
};

// Ordered tuple f_1..f_d with the partial products g_j = f_j(1)...f_d(1).
class AdditiveTuple {
public:
    explicit AdditiveTuple(std::vector<AdditiveCharacter> chars);

    std::size_t depth() const { return chars_.size(); }
    const AdditiveCharacter& f(std::size_t i) const { return chars_.at(i - 1); }        // 1-based
    const std::pair<Rational, Rational>& g(std::size_t j) const { return g_.at(j - 1); } // 1-based
    Complex g_value(std::size_t j, long prec) const {
        return Complex::of(g_.at(j - 1).first, g_.at(j - 1).second, prec);
    }
    // |g_j| <= 1 for every j, checked exactly.
    bool partial_products_bounded() const;
    void require_bounded() const;
    AdditiveTuple prefix(std::size_t depth) const;

private:
    std::vector<AdditiveCharacter> chars_;
    std::vector<std::pair<Rational, Rational>> g_;
};

Complex additive_eval(const AdditiveCharacter& f, long n, long prec);

} // namespace lucaszeta
