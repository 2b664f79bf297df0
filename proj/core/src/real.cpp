#include "lucaszeta/real.hpp"

#include "lucaszeta/errors.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>

namespace lucaszeta {

Real Real::parse(const std::string& text, long prec) {
    Real r(prec);
    if (mpfr_set_str(r.raw(), text.c_str(), 10, MPFR_RNDN) != 0 && !text.empty()) {
        // mpfr_set_str returns nonzero on failure only; re-check by probing.
        if (mpfr_nan_p(r.raw()))
            fail(ErrorCode::BadInput, "malformed real literal: " + text);
    }
    return r;
}

std::string Real::str(std::size_t digits) const {
    if (is_nan()) return "nan";
    if (mpfr_inf_p(v_)) return sgn() < 0 ? "-inf" : "inf";
    if (is_zero()) return mpfr_signbit(v_) ? "-0" : "0";
    std::size_t nd = digits;
    if (nd == 0) {
        // Enough decimal digits to reconstruct the binary value exactly.
        nd = static_cast<std::size_t>(std::ceil(prec() * 0.30102999566398119522)) + 2;
    }
    mpfr_exp_t e = 0;
    char* s = mpfr_get_str(nullptr, &e, 10, nd, v_, MPFR_RNDN);
    std::string mant(s);
    mpfr_free_str(s);
    bool neg = !mant.empty() && mant[0] == '-';
    std::string body = neg ? mant.substr(1) : mant;
    // mpfr exponent is relative to a leading radix point: 0.mmm * 10^e
    std::string out = (neg ? "-" : "");
    out += body.substr(0, 1);
    if (body.size() > 1) {
        std::string frac = body.substr(1);
        while (frac.size() > 1 && frac.back() == '0') frac.pop_back();
        if (!(frac.size() == 1 && frac[0] == '0')) out += "." + frac;
    }
    out += "e" + std::to_string(static_cast<long>(e) - 1);
    return out;
}

namespace bounds {

namespace {
long join(const Real& a, const Real& b) {
    return a.prec() > b.prec() ? a.prec() : b.prec();
}
} // namespace

Real add_up(const Real& a, const Real& b) {
    Real r(join(a, b));
    mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDU);
    return r;
}

Real sub_down(const Real& a, const Real& b) {
    Real r(join(a, b));
    mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDD);
    return r;
}

Real mul_up(const Real& a, const Real& b) {
    Real r(join(a, b));
    mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDU);
    return r;
}

Real div_up(const Real& a, const Real& b) {
    Real r(join(a, b));
    mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDU);
    return r;
}

Real div_down(const Real& a, const Real& b) {
    Real r(join(a, b));
    mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDD);
    return r;
}

Real sqrt_up(const Real& a) {
    Real r(a.prec());
    mpfr_sqrt(r.raw(), a.raw(), MPFR_RNDU);
    return r;
}

Real sqrt_down(const Real& a) {
    Real r(a.prec());
    mpfr_sqrt(r.raw(), a.raw(), MPFR_RNDD);
    return r;
}

Real pow_up(const Real& base, long e) {
    Real r(base.prec());
    if (e >= 0) {
        mpfr_pow_ui(r.raw(), base.raw(), static_cast<unsigned long>(e), MPFR_RNDU);
    } else {
        Real p(base.prec());
        mpfr_pow_ui(p.raw(), base.raw(), static_cast<unsigned long>(-e), MPFR_RNDD);
        mpfr_ui_div(r.raw(), 1, p.raw(), MPFR_RNDU);
    }
    return r;
}

Real pow_down(const Real& base, long e) {
    Real r(base.prec());
    if (e >= 0) {
        mpfr_pow_ui(r.raw(), base.raw(), static_cast<unsigned long>(e), MPFR_RNDD);
    } else {
        Real p(base.prec());
        mpfr_pow_ui(p.raw(), base.raw(), static_cast<unsigned long>(-e), MPFR_RNDU);
        mpfr_ui_div(r.raw(), 1, p.raw(), MPFR_RNDD);
    }
    return r;
}

Real exp_up(const Real& a) {
    Real r(a.prec());
    mpfr_exp(r.raw(), a.raw(), MPFR_RNDU);
    return r;
}

Real log_up(const Real& a) {
    Real r(a.prec());
    mpfr_log(r.raw(), a.raw(), MPFR_RNDU);
    return r;
}

Real log_down(const Real& a) {
    Real r(a.prec());
    mpfr_log(r.raw(), a.raw(), MPFR_RNDD);
    return r;
}

Real rpow_up(const Real& base_lo, const Real& base_hi, const Real& t) {
    // base^t is monotone in the base for fixed sign of t; pick the endpoint
    // and round every step upward.
    long p = t.prec() > base_hi.prec() ? t.prec() : base_hi.prec();
    Real lg(p);
    if (t.sgn() >= 0)
        mpfr_log(lg.raw(), base_hi.raw(), MPFR_RNDU);
    else
        mpfr_log(lg.raw(), base_lo.raw(), MPFR_RNDD);
    Real prod(p);
    mpfr_mul(prod.raw(), lg.raw(), t.raw(), MPFR_RNDU);
    Real r(p);
    mpfr_exp(r.raw(), prod.raw(), MPFR_RNDU);
    return r;
}

} // namespace bounds

} // namespace lucaszeta
