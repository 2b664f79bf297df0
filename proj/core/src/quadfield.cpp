#include "lucaszeta/quadfield.hpp"

#include "lucaszeta/errors.hpp"

namespace lucaszeta {

void QuadExt::check_same_field(const QuadExt& x, const QuadExt& y) {
    if (x.n_ != y.n_)
        fail(ErrorCode::MixedDiscriminants,
             "cannot combine elements of Q(sqrt(" + x.n_.get_str() + ")) and Q(sqrt(" +
                 y.n_.get_str() + "))");
}

QuadExt QuadExt::inverse() const {
    Rational nm = norm();
    if (nm == 0)
        fail(ErrorCode::SingularPoint, "division by " + str() + " (zero norm)");
    return QuadExt(a_ / nm, -b_ / nm, n_);
}

QuadExt QuadExt::pow(long e) const {
    QuadExt base = e < 0 ? inverse() : *this;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    QuadExt acc = from_rational(Rational(1), n_);
    while (n) {
        if (n & 1UL) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

int QuadExt::sgn() const {
    int sa = ::sgn(a_);
    int sb = ::sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 against b^2 n.
    Rational lhs = a_ * a_;
    Rational rhs = b_ * b_ * Rational(n_);
    int c = cmp(lhs, rhs);
    if (c == 0) return 0; // only possible when n is a perfect square
    return (c > 0) ? sa : sb;
}

Real QuadExt::to_real(long prec) const {
    long wp = prec + 32;
    Real s = sqrt(Real::of(n_, wp));
    Real v = Real::of(a_, wp) + Real::of(b_, wp) * s;
    return v.round_to(prec);
}

std::string QuadExt::str() const {
    return rational_str(a_) + " + " + rational_str(b_) + "*sqrt(" + n_.get_str() + ")";
}

RealWithError quad_to_real(const QuadExt& x, long prec) {
    if (prec < 8) fail(ErrorCode::BadInput, "precision below 8 bits");
    Real v = x.to_real(prec);
    Real err = Real::of(0L, 32);
    if (x.surd_part() != 0 && !v.is_zero()) {
        // One correctly rounded sqrt, one multiply, one add at prec+32 guard
        // bits, then a final rounding to prec: comfortably within 2 ulp.
        err = ldexp(abs(v), 1 - static_cast<long>(prec));
    }
    return {v, err};
}

} // namespace lucaszeta
