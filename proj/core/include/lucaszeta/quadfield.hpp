#pragma once

#include <string>

#include "lucaszeta/rational.hpp"
#include "lucaszeta/real.hpp"

namespace lucaszeta {

// Element a + b*sqrt(n) of the real quadratic field Q(sqrt(n)), n a positive
// integer. When n happens to be a perfect square the representation is still
// well defined (the ring Q[x]/(x^2-n) splits), but field inverses can then
// hit zero divisors; LucasParams tracks that case separately.
class QuadExt {
public:
    QuadExt() : a_(0), b_(0), n_(0) {}
    QuadExt(Rational rational_part, Rational surd_part, Integer radicand)
        : a_(std::move(rational_part)), b_(std::move(surd_part)), n_(std::move(radicand)) {
        // mpq_class's two-argument constructor does not canonicalize; keep
        // the lowest-terms invariant here so equality stays structural.
        a_.canonicalize();
        b_.canonicalize();
    }

    static QuadExt from_rational(const Rational& value, const Integer& radicand) {
        return QuadExt(value, Rational(0), radicand);
    }

    const Rational& rational_part() const { return a_; }
    const Rational& surd_part() const { return b_; }
    const Integer& radicand() const { return n_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    // Galois conjugate a - b*sqrt(n) (the nontrivial automorphism).
    QuadExt conj() const { return QuadExt(a_, -b_, n_); }

    // Field norm a^2 - b^2 n; multiplicative.
    Rational norm() const { return a_ * a_ - b_ * b_ * Rational(n_); }

    QuadExt inverse() const;
    QuadExt pow(long e) const;

    // Sign of the real embedding with sqrt(n) > 0; exact.
    int sgn() const;

    Real to_real(long prec) const;

    std::string str() const;

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        check_same_field(x, y);
        return QuadExt(x.a_ + y.a_, x.b_ + y.b_, x.n_);
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
        check_same_field(x, y);
        return QuadExt(x.a_ - y.a_, x.b_ - y.b_, x.n_);
    }
    friend QuadExt operator-(const QuadExt& x) { return QuadExt(-x.a_, -x.b_, x.n_); }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        check_same_field(x, y);
        return QuadExt(x.a_ * y.a_ + x.b_ * y.b_ * Rational(x.n_),
                       x.a_ * y.b_ + x.b_ * y.a_, x.n_);
    }
    friend QuadExt operator*(const QuadExt& x, const Rational& c) {
        return QuadExt(x.a_ * c, x.b_ * c, x.n_);
    }
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y) { return x * y.inverse(); }
    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.n_ == y.n_ && x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

private:
    static void check_same_field(const QuadExt& x, const QuadExt& y);

    Rational a_, b_;
    Integer n_;
};

struct RealWithError {
    Real value;
    Real error; // absolute bound on |value - true|
};

// Rounds x to `prec` bits; the bound covers the sqrt plus final rounding
// (within 2 ulp of the true value).
RealWithError quad_to_real(const QuadExt& x, long prec);

} // namespace lucaszeta
