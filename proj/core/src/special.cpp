#include "lucaszeta/special.hpp"

#include "lucaszeta/errors.hpp"

#include <map>
#include <optional>

namespace lucaszeta {

namespace {

Rational rational_pow(const Rational& x, long e) {
    if (e == 0) return Rational(1);
    Rational base = e < 0 ? Rational(1) / x : x;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Rational acc(1);
    while (n) {
        if (n & 1UL) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

Rational binom_mm(long m, long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(k));
    return Rational(b);
}

// gamma_j factor of the finite sum at s = -m:
//   (-1)^{v_j} Q^{r_j V_j} alpha^{-r_j(-m_d(j)+2V_j)}
//   / (1 - Q^{q V_j} alpha^{-q(-m_d(j)+2V_j)})
// where V_j = v_j + ... + v_d is the (possibly barred) suffix k-sum.
// Returns nullopt when the denominator vanishes exactly.
std::optional<QuadExt> gamma_factor(const LucasParams& params, long q, long r_j, long m_suffix,
                                    long v_j, long v_suffix) {
    QuadExt num = params.alpha_power(-r_j * (-m_suffix + 2 * v_suffix)) *
                  rational_pow(params.q_param(), r_j * v_suffix);
    if (v_j % 2 != 0) num = -num;
    QuadExt den = params.quad(Rational(1)) -
                  params.alpha_power(-q * (-m_suffix + 2 * v_suffix)) *
                      rational_pow(params.q_param(), q * v_suffix);
    if (den.is_zero()) return std::nullopt;
    return num / den;
}

// D^{-m_d(1)/2} absorption: even m stays rational, odd m contributes one
// sqrt(D) = sqrt(radicand)/den(D) factor so everything lives in Q(sqrt(D)).
QuadExt absorb_prefactor(const LucasParams& params, const QuadExt& t, long m_total) {
    if (m_total % 2 == 0) {
        Rational scale = rational_pow(params.d(), -(m_total / 2));
        return t * scale;
    }
    Rational scale = rational_pow(params.d(), -((m_total + 1) / 2));
    scale /= Rational(params.d().get_den());
    QuadExt sqrt_rad = params.quad(Rational(0), Rational(1));
    return t * sqrt_rad * scale;
}

struct KIter {
    std::vector<long> k;
    const std::vector<long>& m;
    bool done = false;

    explicit KIter(const std::vector<long>& mm) : k(mm.size(), 0), m(mm) {}
    void next() {
        std::size_t i = 0;
        for (; i < k.size(); ++i) {
            if (++k[i] <= m[i]) break;
            k[i] = 0;
        }
        if (i == k.size()) done = true;
    }
};

} // namespace

NegIntPoint::NegIntPoint(std::vector<long> mm) : m(std::move(mm)) {
    if (m.empty()) fail(ErrorCode::BadInput, "depth must be >= 1");
    for (long mi : m)
        if (mi < 1) fail(ErrorCode::BadInput, "all m_i must be >= 1");
}

long NegIntPoint::suffix(std::size_t j) const {
    long acc = 0;
    for (std::size_t i = j; i <= m.size(); ++i) acc += m[i - 1];
    return acc;
}

bool holomorphic_at_neg(const LucasParams& params, long q, const NegIntPoint& m) {
    if (params.d_is_square()) return !singular_by_exact_scan(params, q, m);
    if (params.q_param() == 1) {
        for (std::size_t j = 1; j <= m.depth(); ++j)
            if (m.suffix(j) % 2 == 0) return false;
        return true;
    }
    if (params.q_param() == -1) {
        for (std::size_t j = 1; j <= m.depth(); ++j)
            if ((q * m.suffix(j)) % 4 == 0) return false;
        return true;
    }
    return true; // Q != +-1 and sqrt(D) irrational
}

bool singular_by_exact_scan(const LucasParams& params, long q, const NegIntPoint& m) {
    for (std::size_t j = 1; j <= m.depth(); ++j) {
        long ms = m.suffix(j);
        for (long K = 0; K <= ms; ++K) {
            QuadExt den = params.quad(Rational(1)) -
                          params.alpha_power(-q * (-ms + 2 * K)) *
                              rational_pow(params.q_param(), q * K);
            if (den.is_zero()) return true;
        }
    }
    return false;
}

SpecialValueResult special_zeta_exact(const LucasParams& params, const ShiftSpec& shift,
                                      const NegIntPoint& m) {
    shift.validate();
    if (shift.depth() != m.depth()) fail(ErrorCode::BadInput, "shift depth != point depth");
    const std::size_t d = m.depth();

    SpecialValueResult out;
    out.requires_validation = params.d_is_square();
    if (!holomorphic_at_neg(params, shift.q, m)) {
        out.singular = true;
        return out;
    }

    QuadExt total = params.quad(Rational(0));
    for (KIter it(m.m); !it.done; it.next()) {
        QuadExt term = params.quad(Rational(1));
        long v_suffix = 0;
        for (std::size_t t = 0; t < d; ++t) v_suffix += it.k[t];
        for (std::size_t j = 1; j <= d; ++j) {
            auto g = gamma_factor(params, shift.q, shift.r[j - 1], m.suffix(j), it.k[j - 1],
                                  v_suffix);
            if (!g) {
                // A vanishing denominator at a point the parity predicate
                // declared holomorphic: report as singular, never silently.
                out.singular = true;
                return out;
            }
            term = term * *g * binom_mm(m.m[j - 1], it.k[j - 1]);
            v_suffix -= it.k[j - 1];
        }
        total = total + term;
    }
    out.value = absorb_prefactor(params, total, m.suffix(1));
    out.is_rational = out.value.is_rational();
    return out;
}

SymmetrizedValue symmetrized_special_zeta(const LucasParams& params, const ShiftSpec& shift,
                                          const NegIntPoint& m) {
    shift.validate();
    if (shift.depth() != m.depth()) fail(ErrorCode::BadInput, "shift depth != point depth");
    const std::size_t d = m.depth();

    SymmetrizedValue out;
    out.result.requires_validation = params.d_is_square();
    if (!holomorphic_at_neg(params, shift.q, m)) {
        out.result.singular = true;
        return out;
    }

    QuadExt total = params.quad(Rational(0));
    for (KIter it(m.m); !it.done; it.next()) {
        Rational binom_prod(1);
        for (std::size_t t = 0; t < d; ++t) binom_prod *= binom_mm(m.m[t], it.k[t]);

        QuadExt class_sum = params.quad(Rational(0));
        for (unsigned mask = 0; mask < (1u << d); ++mask) {
            std::vector<long> v(d);
            for (std::size_t t = 0; t < d; ++t)
                v[t] = (mask >> t) & 1u ? m.m[t] - it.k[t] : it.k[t];
            QuadExt sigma = params.quad(Rational(1));
            long v_suffix = 0;
            for (std::size_t t = 0; t < d; ++t) v_suffix += v[t];
            bool dead = false;
            for (std::size_t j = 1; j <= d; ++j) {
                auto g = gamma_factor(params, shift.q, shift.r[j - 1], m.suffix(j), v[j - 1],
                                      v_suffix);
                if (!g) {
                    dead = true;
                    break;
                }
                sigma = sigma * *g;
                v_suffix -= v[j - 1];
            }
            if (dead) {
                out.result.singular = true;
                return out;
            }
            out.terms.push_back({it.k, mask, sigma});
            class_sum = class_sum + sigma;
        }
        total = total + class_sum * binom_prod;
    }
    Rational half_pow = rational_pow(Rational(2), static_cast<long>(d));
    total = total * (Rational(1) / half_pow);
    out.result.value = absorb_prefactor(params, total, m.suffix(1));
    out.result.is_rational = out.result.value.is_rational();
    return out;
}

bool galois_audit(const std::vector<SymmetrizedTerm>& terms, const NegIntPoint& m) {
    const std::size_t d = m.depth();
    const unsigned full = (1u << d) - 1u;
    bool flip = m.suffix(1) % 2 != 0;

    // Index sigma values by (k, mask).
    std::map<std::pair<std::vector<long>, unsigned>, const QuadExt*> index;
    for (const auto& t : terms) index[{t.k, t.mask}] = &t.sigma;

    for (const auto& t : terms) {
        auto it = index.find({t.k, full ^ t.mask});
        if (it == index.end()) return false;
        QuadExt lhs = t.sigma.conj();
        QuadExt rhs = flip ? -*it->second : *it->second;
        if (lhs != rhs) return false;
    }
    return true;
}

Rational assert_rational(const SpecialValueResult& result, const LucasParams& params) {
    if (result.singular) fail(ErrorCode::SingularPoint, "special value is singular");
    if (params.d_is_square())
        fail(ErrorCode::SquareDiscriminant, "rationality claims need sqrt(D) irrational");
    if (result.value.surd_part() != 0)
        fail(ErrorCode::NotRational,
             "surd part " + rational_str(result.value.surd_part()) + " is nonzero");
    return result.value.rational_part();
}

Rational special_L_quadratic(const LucasParams& params,
                             const std::vector<DirichletCharacter>& chars, const NegIntPoint& m) {
    if (chars.empty() || chars.size() != m.depth())
        fail(ErrorCode::BadInput, "need one character per depth");
    long q = chars[0].modulus();
    for (const auto& c : chars) {
        if (c.modulus() != q) fail(ErrorCode::MixedModuli, "characters must share one modulus");
        if (!c.is_quadratic())
            fail(ErrorCode::NonQuadraticCharacter, "characters must be real-valued");
    }
    if (params.d_is_square())
        fail(ErrorCode::SquareDiscriminant, "rationality claims need sqrt(D) irrational");
    if (!holomorphic_at_neg(params, q, m))
        fail(ErrorCode::SingularPoint, "point is singular by the parity criterion");

    const std::size_t d = m.depth();
    QuadExt total = params.quad(Rational(0));
    std::vector<long> r(d, 1);
    while (true) {
        long cum = 0;
        long weight = 1;
        for (std::size_t t = 0; t < d && weight != 0; ++t) {
            cum += r[t];
            auto e = chars[t].value_exponent(cum);
            if (!e)
                weight = 0;
            else if (*e != 0)
                weight = -weight; // real values are +-1
        }
        if (weight != 0) {
            SpecialValueResult part = special_zeta_exact(params, ShiftSpec(q, r), m);
            if (part.singular)
                fail(ErrorCode::SingularPoint, "constituent shifted value is singular");
            total = total + part.value * Rational(weight);
        }
        std::size_t i = 0;
        for (; i < d; ++i) {
            if (++r[i] <= q) break;
            r[i] = 1;
        }
        if (i == d) break;
    }
    if (total.surd_part() != 0)
        fail(ErrorCode::NotRational, "surd part survived the character combination");
    return total.rational_part();
}

bool additive_singular_by_exact_scan(const LucasParams& params, const AdditiveTuple& chars,
                                     const NegIntPoint& m) {
    for (std::size_t j = 1; j <= m.depth(); ++j) {
        const auto& [gr, gi] = chars.g(j);
        if (gi != 0) continue; // a real power of alpha cannot hit a non-real g
        long ms = m.suffix(j);
        for (long K = 0; K <= ms; ++K) {
            QuadExt den = params.alpha_power(-ms + 2 * K) -
                          params.quad(gr * rational_pow(params.q_param(), K));
            if (den.is_zero()) return true;
        }
    }
    return false;
}

Rational special_additive(const LucasParams& params, const AdditiveTuple& chars,
                          const NegIntPoint& m) {
    if (chars.depth() != m.depth()) fail(ErrorCode::BadInput, "tuple depth != point depth");
    const std::size_t d = m.depth();
    for (std::size_t i = 1; i <= d; ++i)
        if (!chars.f(i).is_real())
            fail(ErrorCode::NonRationalCharacter, "f_i(1) must be rational");
    chars.require_bounded();
    if (params.d_is_square())
        fail(ErrorCode::SquareDiscriminant, "rationality claims need sqrt(D) irrational");
    if (additive_singular_by_exact_scan(params, chars, m))
        fail(ErrorCode::SingularPoint, "an additive denominator vanishes at -m");

    QuadExt total = params.quad(Rational(0));
    for (KIter it(m.m); !it.done; it.next()) {
        QuadExt term = params.quad(Rational(1));
        long v_suffix = 0;
        for (std::size_t t = 0; t < d; ++t) v_suffix += it.k[t];
        for (std::size_t j = 1; j <= d; ++j) {
            long ms = m.suffix(j);
            Rational g = chars.g(j).first;
            Rational qk = rational_pow(params.q_param(), v_suffix);
            QuadExt den = params.alpha_power(-ms + 2 * v_suffix) - params.quad(g * qk);
            if (den.is_zero())
                fail(ErrorCode::SingularPoint, "an additive denominator vanishes at -m");
            QuadExt fac = params.quad(g * qk) / den;
            Rational b = binom_mm(m.m[j - 1], it.k[j - 1]);
            if (it.k[j - 1] % 2 != 0) b = -b;
            term = term * fac * b;
            v_suffix -= it.k[j - 1];
        }
        total = total + term;
    }
    QuadExt value = absorb_prefactor(params, total, m.suffix(1));
    if (value.surd_part() != 0)
        fail(ErrorCode::NotRational, "surd part survived the additive evaluation");
    return value.rational_part();
}

} // namespace lucaszeta
