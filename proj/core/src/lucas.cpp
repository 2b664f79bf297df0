#include "lucaszeta/lucas.hpp"

#include "lucaszeta/errors.hpp"

#include <sstream>

namespace lucaszeta {

namespace {

bool rational_is_square(const Rational& x) {
    if (x < 0) return false;
    return mpz_perfect_square_p(x.get_num().get_mpz_t()) &&
           mpz_perfect_square_p(x.get_den().get_mpz_t());
}

} // namespace

LucasParams LucasParams::validate(const Rational& p, const Rational& q) {
    if (q == 0) fail(ErrorCode::QZero, "Q must be nonzero");
    if (p <= 0) fail(ErrorCode::NonPositiveP, "P must be positive");
    if (p <= 2) {
        if (!(q < p - 1))
            fail(ErrorCode::ConstraintViolated,
                 "need Q < P - 1 for 0 < P <= 2 (got P=" + rational_str(p) +
                     ", Q=" + rational_str(q) + ")");
    } else {
        if (!(q <= p - 1))
            fail(ErrorCode::ConstraintViolated,
                 "need Q <= P - 1 for P > 2 (got P=" + rational_str(p) +
                     ", Q=" + rational_str(q) + ")");
    }

    LucasParams out;
    out.p_ = p;
    out.q_ = q;
    out.d_ = p * p - 4 * q;
    if (out.d_ <= 0)
        fail(ErrorCode::ConstraintViolated, "derived D = P^2 - 4Q is not positive");

    // Field radicand: sqrt(D) = sqrt(num*den)/den for D = num/den in lowest
    // terms, so all exact arithmetic lives in Q(sqrt(num*den)).
    out.radicand_ = out.d_.get_num() * out.d_.get_den();
    out.d_is_square_ = rational_is_square(out.d_);

    Rational half(1, 2);
    if (out.d_is_square_) {
        // Q[x]/(x^2 - n) has zero divisors when n is a square; collapse to
        // purely rational alpha, beta so inverses stay well defined.
        Integer rn, rd;
        mpz_sqrt(rn.get_mpz_t(), out.d_.get_num().get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), out.d_.get_den().get_mpz_t());
        Rational sqrt_d(rn, rd);
        sqrt_d.canonicalize();
        out.alpha_ = QuadExt((p + sqrt_d) * half, Rational(0), out.radicand_);
        out.beta_ = QuadExt((p - sqrt_d) * half, Rational(0), out.radicand_);
    } else {
        Rational surd_coeff = Rational(1, 2) / Rational(out.d_.get_den());
        out.alpha_ = QuadExt(p * half, surd_coeff, out.radicand_);
        out.beta_ = QuadExt(p * half, -surd_coeff, out.radicand_);
    }

    // Exact re-checks of the derived facts.
    QuadExt one = out.quad(Rational(1));
    if (!((out.alpha_ - one).sgn() > 0))
        fail(ErrorCode::ConstraintViolated, "alpha <= 1; hypotheses violated");
    Rational abs_q = abs(q);
    QuadExt alpha_sq = out.alpha_ * out.alpha_;
    if (!((alpha_sq - out.quad(abs_q)).sgn() > 0))
        fail(ErrorCode::ConstraintViolated, "|Q| >= alpha^2; hypotheses violated");
    if (out.alpha_ * out.beta_ != out.quad(q) || out.alpha_ + out.beta_ != out.quad(p))
        fail(ErrorCode::ConstraintViolated, "root identities failed");
    return out;
}

Real LucasParams::log_alpha(long prec) const {
    return log(alpha_.to_real(prec + 16)).round_to(prec);
}

Real LucasParams::log_abs_q(long prec) const {
    return log(abs(Real::of(q_, prec + 16))).round_to(prec);
}

GrowthEnvelope LucasParams::envelope(long prec) const {
    long wp = prec + 16;
    GrowthEnvelope e{Real(wp), Real(wp), Real(wp), Real(wp), Real(wp)};

    Real dn = Real::of(d_.get_num(), wp);
    Real dd = Real::of(d_.get_den(), wp);
    Real sqrt_d_lo = bounds::div_down(bounds::sqrt_down(dn), bounds::sqrt_up(dd));
    Real sqrt_d_hi = bounds::div_up(bounds::sqrt_up(dn), bounds::sqrt_down(dd));

    Real p_half = Real::of(p_ / 2, wp);
    mpfr_add(e.alpha_lo.raw(), p_half.raw(), (sqrt_d_lo / 2).raw(), MPFR_RNDD);
    mpfr_add(e.alpha_hi.raw(), p_half.raw(), (sqrt_d_hi / 2).raw(), MPFR_RNDU);

    Real abs_q = abs(Real::of(q_, wp));
    Real alpha_lo_sq(wp);
    mpfr_mul(alpha_lo_sq.raw(), e.alpha_lo.raw(), e.alpha_lo.raw(), MPFR_RNDD);
    e.rho_hi = bounds::div_up(abs_q, alpha_lo_sq);
    // |beta|/alpha = |Q|/alpha^2 < 1 is guaranteed by validation; the rounded
    // value can only fail that with absurdly low precision.
    if (!(e.rho_hi < 1))
        fail(ErrorCode::AccuracyUnreachable, "growth-envelope precision too low");

    Real one = Real::of(1L, wp);
    e.env_lo = bounds::div_down(bounds::sub_down(one, e.rho_hi), sqrt_d_hi);
    e.env_hi = bounds::div_up(bounds::add_up(one, e.rho_hi), sqrt_d_lo);
    if (!(e.env_lo > 0))
        fail(ErrorCode::AccuracyUnreachable, "growth-envelope precision too low");
    return e;
}

std::string LucasParams::str() const {
    std::ostringstream os;
    os << "LucasParams(P=" << rational_str(p_) << ", Q=" << rational_str(q_)
       << ", D=" << rational_str(d_) << ")";
    return os.str();
}

LucasSequenceCache::LucasSequenceCache(LucasParams params)
    : params_(std::move(params)),
      values_(std::make_shared<const std::vector<Rational>>(
          std::vector<Rational>{Rational(0), Rational(1)})) {}

void LucasSequenceCache::ensure(std::size_t n) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto cur = values_;
    if (n < cur->size()) return;
    std::vector<Rational> next(*cur);
    next.reserve(n + 1);
    while (next.size() <= n) {
        std::size_t k = next.size();
        Rational u = params_.p() * next[k - 1] - params_.q_param() * next[k - 2];
        // The standing hypotheses make (U_n) positive and nondecreasing from
        // n = 1 on; a violation would mean the validation step is broken.
        if (k >= 2 && !(u >= next[k - 1] && u > 0))
            fail(ErrorCode::ConstraintViolated,
                 "Lucas sequence lost monotone positivity at n=" + std::to_string(k));
        next.push_back(std::move(u));
    }
    values_ = std::make_shared<const std::vector<Rational>>(std::move(next));
}

Rational LucasSequenceCache::u(std::size_t n) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        if (n < values_->size()) return (*values_)[n];
    }
    ensure(n);
    std::lock_guard<std::mutex> lock(mu_);
    return (*values_)[n];
}

Real LucasSequenceCache::log_u(std::size_t n, long prec) const {
    Rational v = u(n);
    if (v <= 0) fail(ErrorCode::BadInput, "log of U_n requires n >= 1");
    long wp = prec + 16;
    Real num = log(Real::of(v.get_num(), wp));
    Real den = log(Real::of(v.get_den(), wp));
    return (num - den).round_to(prec);
}

QuadExt alpha_power(const LucasParams& params, long exponent) {
    return params.alpha_power(exponent);
}

QuadExt galois_conjugate(const QuadExt& x) { return x.conj(); }

} // namespace lucaszeta
