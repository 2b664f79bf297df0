#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "lucaszeta/complexnum.hpp"
#include "lucaszeta/quadfield.hpp"
#include "lucaszeta/rational.hpp"
#include "lucaszeta/real.hpp"

namespace lucaszeta {

// Certified enclosures of the quantities every tail bound leans on:
//   alpha_lo <= alpha <= alpha_hi,   rho = |Q|/alpha^2 <= rho_hi < 1,
//   U_n >= env_lo * alpha_lo^n  and  U_n <= env_hi * alpha_hi^n  for n >= 1
// (from the Binet form U_n = alpha^n (1 - (beta/alpha)^n) / sqrt(D)).
struct GrowthEnvelope {
    Real alpha_lo, alpha_hi;
    Real rho_hi;
    Real env_lo, env_hi;
};

// Validated (P, Q) pair with the standing hypotheses: P > 0, Q != 0 and
// Q < P-1 for 0 < P <= 2, Q <= P-1 for P > 2. These force D = P^2 - 4Q > 0,
// alpha > 1 and |beta| < alpha, all of which are re-checked exactly.
class LucasParams {
public:
    static LucasParams validate(const Rational& p, const Rational& q);

    const Rational& p() const { return p_; }
    const Rational& q_param() const { return q_; }
    const Rational& d() const { return d_; }
    const Integer& radicand() const { return radicand_; }
    const QuadExt& alpha() const { return alpha_; }
    const QuadExt& beta() const { return beta_; }
    bool d_is_square() const { return d_is_square_; }

    QuadExt quad(const Rational& rational_part, const Rational& surd_part = Rational(0)) const {
        return QuadExt(rational_part, surd_part, radicand_);
    }

    // alpha^e exactly in Q(sqrt(D)); negative exponents use alpha^{-1} = beta/Q.
    QuadExt alpha_power(long e) const { return alpha_.pow(e); }

    // log(alpha) computed at the consumer's precision, never cached.
    Real log_alpha(long prec) const;
    Real alpha_real(long prec) const { return alpha_.to_real(prec); }
    Real log_abs_q(long prec) const;
    Real d_real(long prec) const { return Real::of(d_, prec); }

    GrowthEnvelope envelope(long prec) const;

    std::string str() const;

private:
    LucasParams() = default;

    Rational p_, q_, d_;
    Integer radicand_;
    QuadExt alpha_, beta_;
    bool d_is_square_ = false;
};

// Memoized U_0, U_1, ... as exact rationals; append is internally
// synchronized, reads are lock-free once a prefix is built.
class LucasSequenceCache {
public:
    explicit LucasSequenceCache(LucasParams params);

    const LucasParams& params() const { return params_; }

    // Exact U_n; extends the cache as needed.
    Rational u(std::size_t n) const;

    // log(U_n) at the given precision (n >= 1).
    Real log_u(std::size_t n, long prec) const;

private:
    void ensure(std::size_t n) const;

    LucasParams params_;
    mutable std::mutex mu_;
    mutable std::shared_ptr<const std::vector<Rational>> values_;
};

inline Rational lucas_u(const LucasSequenceCache& cache, std::size_t n) { return cache.u(n); }

QuadExt alpha_power(const LucasParams& params, long exponent);
QuadExt galois_conjugate(const QuadExt& x);

} // namespace lucaszeta
