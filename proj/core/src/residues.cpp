#include "lucaszeta/residues.hpp"

#include "lucaszeta/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace lucaszeta {

namespace {

Complex binom_signed(const Complex& s, long k) {
    Complex b = binom_complex(s, k);
    return (k % 2 == 0) ? b : -b;
}

Real tiny_floor(long wp) { return Real::of(1e-30, wp); }

ResidueValue finish(const Complex& closed, const Complex& numeric, long wp) {
    Real denom = abs(closed);
    Real floor = tiny_floor(wp);
    if (denom < floor) denom = floor;
    Real rel = abs(closed - numeric) / denom;
    return {closed, numeric, rel};
}

// Distance from `a` to the nearest slice pole other than `a` itself. The
// slice runs in the suffix coordinate u = s_d(j); every level t <= j
// contributes poles at u = loc - (s_t + ... + s_{j-1}).
struct SliceGeometry {
    const LucasParams& params;
    long q = 1;                      // zeta/dirichlet family
    const AdditiveTuple* ftuple = nullptr; // additive family
    std::vector<Complex> s_before_j; // s_1 .. s_{j-1}
    long j = 1;
};

Real nearest_other_pole(const SliceGeometry& geo, const Complex& a, long prec) {
    long wp = prec + 16;
    Real best = Real::of(1e300, wp);
    Real self_radius = Real::of(1e-9, wp);
    for (long t = 1; t <= geo.j; ++t) {
        Complex shift(wp);
        for (long i = t; i <= geo.j - 1; ++i)
            shift += geo.s_before_j[static_cast<std::size_t>(i - 1)].round_to(wp);
        Complex z{a.re + shift.re, a.im + shift.im};
        // Enumerate hyperplanes near z and measure in the u coordinate.
        double zre = z.re.to_double(), zim = z.im.to_double();
        PoleWindow win{zre - 3, zre + 3, zim - 3, zim + 3};
        double la = geo.params.log_alpha(64).to_double();
        double lq = geo.params.log_abs_q(64).to_double();
        double slope = -2.0 + lq / la;
        long k_bound = static_cast<long>(std::ceil((std::abs(zre) + 6) / -slope)) + 1;
        long n_bound;
        std::vector<PoleHyperplane> hs;
        if (geo.ftuple) {
            n_bound = static_cast<long>(std::ceil((std::abs(zim) + 6) * la / (2 * M_PI))) + 2;
            hs = enumerate_poles_additive(geo.params, *geo.ftuple, t, k_bound, n_bound, win, wp);
        } else {
            n_bound = static_cast<long>(std::ceil((std::abs(zim) + 6) * la * geo.q / (2 * M_PI))) + 2;
            hs = enumerate_poles_zeta(geo.params, geo.q, t, k_bound, n_bound, win, wp);
        }
        for (const auto& h : hs) {
            Real dist = abs(Complex{z.re - h.location.re, z.im - h.location.im});
            if (dist < self_radius) continue; // the hyperplane under study
            if (dist < best) best = dist;
        }
    }
    return best;
}

double pick_radius(const SliceGeometry& geo, const Complex& a, const ResidueOptions& opt) {
    Real gap = nearest_other_pole(geo, a, opt.prec);
    double g = gap.to_double();
    if (g < 4 * opt.policy.pole_guard_radius)
        fail(ErrorCode::NonIsolatedPole, "another enumerated pole within " + std::to_string(g));
    return std::min(opt.contour_radius, g / 2);
}

TruncationPolicy node_policy(const ResidueOptions& opt, double radius) {
    TruncationPolicy p = opt.policy;
    p.pole_guard_radius = std::min(p.pole_guard_radius, radius / 10);
    return p;
}

} // namespace

Complex numeric_residue(const std::function<Complex(const Complex&)>& f, const Complex& a,
                        double rho, long prec, double tol, long max_nodes) {
    long wp = prec + 32;
    Real radius = Real::of(rho, wp);
    Real two_pi = Real::pi(wp) * 2;

    // Running node sum; doubling M reuses all previous nodes (they sit at
    // the even positions of the refined grid) only when we keep the same
    // phase, so we re-evaluate from scratch per M for simplicity and use the
    // Richardson-free stop |I_2M - I_M| <= tol.
    auto integrate = [&](long m) {
        Complex acc(wp);
        for (long i = 0; i < m; ++i) {
            Real theta = two_pi * i / m;
            Real sn(wp), cs(wp);
            sin_cos(sn, cs, theta);
            Complex dir{cs, sn};
            Complex z{a.re + radius * cs, a.im + radius * sn};
            acc += f(z) * dir;
        }
        return acc * (radius / m);
    };

    long m = 16;
    Complex prev = integrate(m);
    while (2 * m <= max_nodes) {
        m *= 2;
        Complex cur = integrate(m);
        Real delta = abs(cur - prev);
        Real scale = abs(cur);
        if (scale < 1) scale = Real::of(1L, wp);
        if (delta <= scale * Real::of(tol, wp)) return cur.round_to(prec);
        prev = cur;
    }
    fail(ErrorCode::NoConvergence, "contour quadrature did not stabilize at " +
                                       std::to_string(max_nodes) + " nodes");
}

ResidueValue residue_dirichlet_last(const LucasParams& params,
                                    const std::vector<DirichletCharacter>& chars,
                                    const std::vector<Complex>& partial, long k_prime, long n,
                                    const ResidueOptions& opt) {
    const long d = static_cast<long>(chars.size());
    if (d < 1 || partial.size() + 1 != chars.size())
        fail(ErrorCode::BadInput, "partial point must fix s_1..s_{d-1}");
    long q = chars[0].modulus();
    for (const auto& c : chars)
        if (c.modulus() != q) fail(ErrorCode::MixedModuli, "characters must share one modulus");
    long wp = opt.prec + 64;
    long m = chars[0].value_order();

    Complex a_d = zeta_pole_location(params, q, k_prime, n, wp);

    // Closed form: sum over residue tuples of the chi weights times the
    // depth-(d-1) shifted zeta at the partial point, times the scalar
    // D^{a_d/2} C(-a_d, k') (-1)^{k'} zeta_q^{-n r_d(1)} / (q log alpha).
    MultiPoint partial_point{partial};
    std::map<std::vector<long>, Complex> prefix_cache;
    Complex weighted(wp);
    std::vector<long> r(static_cast<std::size_t>(d), 1);
    while (true) {
        long cum = 0, expo = 0;
        bool zero = false;
        for (long t = 0; t < d; ++t) {
            cum += r[static_cast<std::size_t>(t)];
            auto e = chars[static_cast<std::size_t>(t)].value_exponent(cum);
            if (!e) {
                zero = true;
                break;
            }
            expo = (expo + *e) % m;
        }
        if (!zero) {
            Complex prefix = Complex::of(1, wp);
            if (d > 1) {
                std::vector<long> rp(r.begin(), r.end() - 1);
                auto it = prefix_cache.find(rp);
                if (it == prefix_cache.end()) {
                    try {
                        EvalResult pre = shifted_zeta_cont(params, ShiftSpec(q, rp),
                                                           partial_point, opt.policy, opt.prec);
                        it = prefix_cache.emplace(rp, pre.value.round_to(wp)).first;
                    } catch (const Error& e) {
                        if (e.code() == ErrorCode::PoleProximity)
                            fail(ErrorCode::InnerPole,
                                 "depth-(d-1) factor singular at the partial point");
                        throw;
                    }
                }
                prefix = it->second;
            }
            long rd1 = 0;
            for (long t = 0; t < d; ++t) rd1 += r[static_cast<std::size_t>(t)];
            Complex weight = Cyclotomic::monomial(Rational(1), expo, m).embed(wp);
            long zq_expo = ((-n * rd1) % q + q) % q;
            Complex zq = Cyclotomic::monomial(Rational(1), zq_expo, q).embed(wp);
            weighted += weight * zq * prefix;
        }
        std::size_t i = 0;
        for (; i < r.size(); ++i) {
            if (++r[i] <= q) break;
            r[i] = 1;
        }
        if (i == r.size()) break;
    }

    Real la = params.log_alpha(wp);
    Complex scalar = real_pow(params.d_real(wp), a_d / Real::of(2L, wp)) *
                     binom_signed(a_d, k_prime) / (la * Real::of(q, wp));
    Complex closed = weighted * scalar;

    // Numeric check: contour around a_d in the s_d slice.
    SliceGeometry geo{params, q, nullptr, partial, d};
    double rho = pick_radius(geo, a_d, opt);
    TruncationPolicy np = node_policy(opt, rho);
    auto slice = [&](const Complex& z) {
        std::vector<Complex> coords = partial;
        coords.push_back(z);
        return dirichlet_L_cont(params, chars, MultiPoint{coords}, np, opt.prec).value;
    };
    Complex numeric =
        numeric_residue(slice, a_d, rho, opt.prec, opt.contour_tol, opt.max_nodes);
    return finish(closed, numeric, wp);
}

namespace {

// Enumerates (k_j, ..., k_d) >= 0 with fixed sum and invokes fn(k_multi).
void for_each_composition(long parts, long total, std::vector<long>& buf,
                          const std::function<void(const std::vector<long>&)>& fn) {
    if (parts == 1) {
        buf.push_back(total);
        fn(buf);
        buf.pop_back();
        return;
    }
    for (long k = 0; k <= total; ++k) {
        buf.push_back(k);
        for_each_composition(parts - 1, total - k, buf, fn);
        buf.pop_back();
    }
}

} // namespace

ResidueValue residue_dirichlet_inner(const LucasParams& params,
                                     const std::vector<DirichletCharacter>& chars, long j,
                                     long k_prime_sum, long n, const std::vector<Complex>& others,
                                     const ResidueOptions& opt) {
    const long d = static_cast<long>(chars.size());
    if (j < 1 || j >= d) fail(ErrorCode::BadInput, "inner residue needs 1 <= j <= d-1");
    if (others.size() + 1 != chars.size())
        fail(ErrorCode::BadInput, "free variables must fix all but s_j");
    long q = chars[0].modulus();
    for (const auto& c : chars)
        if (c.modulus() != q) fail(ErrorCode::MixedModuli, "characters must share one modulus");
    long wp = opt.prec + 64;
    long m = chars[0].value_order();
    Real la = params.log_alpha(wp);

    Complex a = zeta_pole_location(params, q, k_prime_sum, n, wp);

    // Free coordinates: others = s_1..s_{j-1}, s_{j+1}..s_d.
    std::vector<Complex> before(others.begin(), others.begin() + (j - 1));
    std::vector<Complex> after(others.begin() + (j - 1), others.end());
    Complex after_sum(wp);
    for (const auto& z : after) after_sum += z.round_to(wp);
    Complex s_j = a - after_sum; // hyperplane-restricted

    // Suffix sums s_d(t) for t > j, from the free trailing block.
    std::vector<Complex> suffix_after(after.size() + 1, Complex(wp));
    for (std::size_t i = after.size(); i-- > 0;)
        suffix_after[i] = suffix_after[i + 1] + after[i].round_to(wp);

    Real a2 = params.alpha_real(wp) * params.alpha_real(wp);
    Real q_over_a2 = Real::of(params.q_param(), wp) / a2;

    MultiPoint prefix_point{before};
    std::map<std::vector<long>, Complex> prefix_cache;
    Complex total(wp);
    std::vector<long> r(static_cast<std::size_t>(d), 1);
    while (true) {
        long cum = 0, expo = 0;
        bool zero = false;
        for (long t = 0; t < d; ++t) {
            cum += r[static_cast<std::size_t>(t)];
            auto e = chars[static_cast<std::size_t>(t)].value_exponent(cum);
            if (!e) {
                zero = true;
                break;
            }
            expo = (expo + *e) % m;
        }
        if (!zero) {
            Complex prefix = Complex::of(1, wp);
            if (j > 1) {
                std::vector<long> rp(r.begin(), r.begin() + (j - 1));
                auto it = prefix_cache.find(rp);
                if (it == prefix_cache.end()) {
                    try {
                        EvalResult pre = shifted_zeta_cont(params, ShiftSpec(q, rp), prefix_point,
                                                           opt.policy, opt.prec);
                        it = prefix_cache.emplace(rp, pre.value.round_to(wp)).first;
                    } catch (const Error& e) {
                        if (e.code() == ErrorCode::PoleProximity)
                            fail(ErrorCode::InnerPole,
                                 "depth-(j-1) factor singular at the partial point");
                        throw;
                    }
                }
                prefix = it->second;
            }

            // Constrained k-sum over k_j + ... + k_d = k'.
            Complex ksum(wp);
            std::vector<long> buf;
            for_each_composition(d - j + 1, k_prime_sum, buf, [&](const std::vector<long>& kk) {
                Complex term = binom_signed(s_j, kk[0]);
                long suffix_k = k_prime_sum;
                for (long t = j + 1; t <= d; ++t) {
                    long kt = kk[static_cast<std::size_t>(t - j)];
                    suffix_k -= kk[static_cast<std::size_t>(t - j - 1)];
                    term = term * binom_signed(others[static_cast<std::size_t>(t - 2)]
                                                   .round_to(wp),
                                               kt);
                    // trailing factor at K_t = suffix_k
                    const Complex& sdt = suffix_after[static_cast<std::size_t>(t - j - 1)];
                    Complex w = exp(Complex{-(sdt.re * la), -(sdt.im * la)}) *
                                pow_si(Complex{q_over_a2, Real::of(0L, wp)}, suffix_k);
                    long rt = r[static_cast<std::size_t>(t - 1)];
                    Complex num = pow_si(w, rt);
                    Complex den = Complex::of(1, wp) - pow_si(w, q);
                    if (abs(den).is_zero())
                        fail(ErrorCode::InnerPole, "trailing factor singular at the free point");
                    term = term * (num / den);
                }
                ksum += term;
            });

            long rj1 = 0;
            for (long t = 0; t < j; ++t) rj1 += r[static_cast<std::size_t>(t)];
            Complex weight = Cyclotomic::monomial(Rational(1), expo, m).embed(wp);
            long zq_expo = ((-n * rj1) % q + q) % q;
            Complex zq = Cyclotomic::monomial(Rational(1), zq_expo, q).embed(wp);
            total += weight * zq * prefix * ksum;
        }
        std::size_t i = 0;
        for (; i < r.size(); ++i) {
            if (++r[i] <= q) break;
            r[i] = 1;
        }
        if (i == r.size()) break;
    }

    Complex closed = total * real_pow(params.d_real(wp), a / Real::of(2L, wp)) /
                     (la * Real::of(q, wp));

    SliceGeometry geo{params, q, nullptr, before, j};
    double rho = pick_radius(geo, a, opt);
    TruncationPolicy np = node_policy(opt, rho);
    auto slice = [&](const Complex& u) {
        std::vector<Complex> coords = before;
        coords.push_back(u - after_sum);
        for (const auto& z : after) coords.push_back(z);
        return dirichlet_L_cont(params, chars, MultiPoint{coords}, np, opt.prec).value;
    };
    Complex numeric = numeric_residue(slice, a, rho, opt.prec, opt.contour_tol, opt.max_nodes);
    return finish(closed, numeric, wp);
}

ResidueValue residue_additive_last(const LucasParams& params, const AdditiveTuple& chars,
                                   const std::vector<Complex>& partial, long k_prime, long n,
                                   const ResidueOptions& opt) {
    const long d = static_cast<long>(chars.depth());
    if (partial.size() + 1 != chars.depth())
        fail(ErrorCode::BadInput, "partial point must fix s_1..s_{d-1}");
    chars.require_bounded();
    long wp = opt.prec + 64;
    Real la = params.log_alpha(wp);

    Complex f_d = chars.g_value(static_cast<std::size_t>(d), wp); // g_d^d = f_d
    Complex b_d = additive_pole_location(params, f_d, k_prime, n, wp);

    Complex prefix = Complex::of(1, wp);
    if (d > 1) {
        try {
            EvalResult pre = additive_L_cont(params, chars.prefix(static_cast<std::size_t>(d - 1)),
                                             MultiPoint{partial}, opt.policy, opt.prec);
            prefix = pre.value.round_to(wp);
        } catch (const Error& e) {
            if (e.code() == ErrorCode::PoleProximity)
                fail(ErrorCode::InnerPole, "depth-(d-1) factor singular at the partial point");
            throw;
        }
    }
    Complex closed = prefix * real_pow(params.d_real(wp), b_d / Real::of(2L, wp)) *
                     binom_signed(b_d, k_prime) / la;

    SliceGeometry geo{params, 1, &chars, partial, d};
    double rho = pick_radius(geo, b_d, opt);
    TruncationPolicy np = node_policy(opt, rho);
    auto slice = [&](const Complex& z) {
        std::vector<Complex> coords = partial;
        coords.push_back(z);
        return additive_L_cont(params, chars, MultiPoint{coords}, np, opt.prec).value;
    };
    Complex numeric = numeric_residue(slice, b_d, rho, opt.prec, opt.contour_tol, opt.max_nodes);
    return finish(closed, numeric, wp);
}

ResidueValue residue_additive_inner(const LucasParams& params, const AdditiveTuple& chars, long j,
                                    long k_prime_sum, long n, const std::vector<Complex>& others,
                                    const ResidueOptions& opt) {
    const long d = static_cast<long>(chars.depth());
    if (j < 1 || j >= d) fail(ErrorCode::BadInput, "inner residue needs 1 <= j <= d-1");
    if (others.size() + 1 != chars.depth())
        fail(ErrorCode::BadInput, "free variables must fix all but s_j");
    chars.require_bounded();
    long wp = opt.prec + 64;
    Real la = params.log_alpha(wp);

    Complex g_j = chars.g_value(static_cast<std::size_t>(j), wp);
    Complex b = additive_pole_location(params, g_j, k_prime_sum, n, wp);

    std::vector<Complex> before(others.begin(), others.begin() + (j - 1));
    std::vector<Complex> after(others.begin() + (j - 1), others.end());
    Complex after_sum(wp);
    for (const auto& z : after) after_sum += z.round_to(wp);
    Complex s_j = b - after_sum;

    std::vector<Complex> suffix_after(after.size() + 1, Complex(wp));
    for (std::size_t i = after.size(); i-- > 0;)
        suffix_after[i] = suffix_after[i + 1] + after[i].round_to(wp);

    Real a2 = params.alpha_real(wp) * params.alpha_real(wp);
    Real q_over_a2 = Real::of(params.q_param(), wp) / a2;

    Complex prefix = Complex::of(1, wp);
    if (j > 1) {
        try {
            EvalResult pre = additive_L_cont(params, chars.prefix(static_cast<std::size_t>(j - 1)),
                                             MultiPoint{before}, opt.policy, opt.prec);
            prefix = pre.value.round_to(wp);
        } catch (const Error& e) {
            if (e.code() == ErrorCode::PoleProximity)
                fail(ErrorCode::InnerPole, "depth-(j-1) factor singular at the partial point");
            throw;
        }
    }

    Complex ksum(wp);
    std::vector<long> buf;
    for_each_composition(d - j + 1, k_prime_sum, buf, [&](const std::vector<long>& kk) {
        Complex term = binom_signed(s_j, kk[0]);
        long suffix_k = k_prime_sum;
        for (long t = j + 1; t <= d; ++t) {
            long kt = kk[static_cast<std::size_t>(t - j)];
            suffix_k -= kk[static_cast<std::size_t>(t - j - 1)];
            term = term *
                   binom_signed(others[static_cast<std::size_t>(t - 2)].round_to(wp), kt);
            const Complex& sdt = suffix_after[static_cast<std::size_t>(t - j - 1)];
            Complex w = exp(Complex{-(sdt.re * la), -(sdt.im * la)}) *
                        pow_si(Complex{q_over_a2, Real::of(0L, wp)}, suffix_k);
            Complex g_t = chars.g_value(static_cast<std::size_t>(t), wp);
            Complex num = g_t * w;
            Complex den = Complex::of(1, wp) - num;
            if (abs(den).is_zero())
                fail(ErrorCode::InnerPole, "trailing factor singular at the free point");
            term = term * (num / den);
        }
        ksum += term;
    });

    Complex closed =
        prefix * real_pow(params.d_real(wp), b / Real::of(2L, wp)) * ksum / la;

    SliceGeometry geo{params, 1, &chars, before, j};
    double rho = pick_radius(geo, b, opt);
    TruncationPolicy np = node_policy(opt, rho);
    auto slice = [&](const Complex& u) {
        std::vector<Complex> coords = before;
        coords.push_back(u - after_sum);
        for (const auto& z : after) coords.push_back(z);
        return additive_L_cont(params, chars, MultiPoint{coords}, np, opt.prec).value;
    };
    Complex numeric = numeric_residue(slice, b, rho, opt.prec, opt.contour_tol, opt.max_nodes);
    return finish(closed, numeric, wp);
}

RealAxisReport real_axis_holomorphy_report(const DirichletCharacter& chi_d,
                                           const LucasParams& params, double re_min,
                                           double re_max, long prec) {
    if (chi_d.is_principal())
        fail(ErrorCode::PrincipalCharacter, "holomorphy report needs a non-principal character");
    long q = chi_d.modulus();
    double la = params.log_alpha(64).to_double();
    double lq = params.log_abs_q(64).to_double();
    double slope = -2.0 + lq / la;
    long k_max = static_cast<long>(std::ceil(re_min / slope)) + 1;

    RealAxisReport report{{}, true};
    for (long k = 0; k <= k_max; ++k) {
        long ell = params.q_param() > 0 ? 0 : k;
        // Real axis needs 2n/q + ell = 0, i.e. n = -q*ell/2 integral.
        if ((q * ell) % 2 != 0) continue;
        long n = -(q * ell) / 2;
        Complex loc = zeta_pole_location(params, q, k, n, prec);
        double re = loc.re.to_double();
        if (re < re_min - 1e-12 || re > re_max + 1e-12) continue;

        RealAxisCandidate cand;
        cand.k_prime = k;
        cand.n = n;
        cand.location_re = loc.re;
        long nn = ((n % q) + q) % q;
        cand.gcd_with_q = nn == 0 ? q : gcd(Integer(nn), Integer(q)).get_si();
        cand.q_over_gcd = q / cand.gcd_with_q;
        cand.lemma_applies = !can_define_mod(chi_d, cand.q_over_gcd);
        cand.tau_vanishes = gauss_sum(chi_d, n).is_zero();
        if (!cand.tau_vanishes) report.all_certified = false;
        report.candidates.push_back(std::move(cand));
    }
    return report;
}

} // namespace lucaszeta
