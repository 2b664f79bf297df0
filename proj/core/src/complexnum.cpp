#include "lucaszeta/complexnum.hpp"

namespace lucaszeta {

Complex pow_si(const Complex& a, long e) {
    long prec = a.prec();
    if (e == 0) return Complex::of(1, prec);
    bool invert = e < 0;
    unsigned long n = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Complex base = a;
    Complex acc = Complex::of(1, prec);
    while (n) {
        if (n & 1UL) acc *= base;
        base *= base;
        n >>= 1;
    }
    if (invert) acc = Complex::of(1, prec) / acc;
    return acc;
}

Complex real_pow(const Real& base, const Complex& z) {
    Real lg = log(base);
    return exp(Complex{z.re * lg, z.im * lg});
}

} // namespace lucaszeta
