#include "lucaszeta/characters.hpp"

#include "lucaszeta/errors.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>

namespace lucaszeta {

namespace {

long mod_norm(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

long mul_mod(long a, long b, long m) {
    return static_cast<long>((static_cast<unsigned long long>(a) * static_cast<unsigned long long>(b)) % static_cast<unsigned long long>(m));
}

long pow_mod(long base, long e, long m) {
    long acc = 1 % m;
    base = mod_norm(base, m);
    while (e > 0) {
        if (e & 1) acc = mul_mod(acc, base, m);
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    return acc;
}

long gcd_long(long a, long b) { return std::gcd(a, b); }

std::vector<std::pair<long, long>> factorize(long n) {
    std::vector<std::pair<long, long>> out;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            long e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<long> prime_divisors(long n) {
    std::vector<long> out;
    for (auto& [p, e] : factorize(n)) out.push_back(p);
    return out;
}

long euler_phi(long n) {
    long phi = n;
    for (long p : prime_divisors(n)) phi -= phi / p;
    return phi;
}

// Order of x mod m given that it divides `bound`.
long element_order(long x, long m, long bound) {
    long ord = bound;
    for (long p : prime_divisors(bound)) {
        while (ord % p == 0 && pow_mod(x, ord / p, m) == 1) ord /= p;
    }
    return ord;
}

// Polynomial helpers over the integers (dense, ascending degree).
using ZPoly = std::vector<Integer>;

ZPoly zpoly_xn_minus_1(long n) {
    ZPoly p(n + 1, Integer(0));
    p[0] = -1;
    p[n] = 1;
    return p;
}

// Exact division by a monic divisor.
ZPoly zpoly_div_exact(ZPoly num, const ZPoly& den) {
    long dn = static_cast<long>(num.size()) - 1;
    long dd = static_cast<long>(den.size()) - 1;
    ZPoly quot(dn - dd + 1, Integer(0));
    for (long k = dn - dd; k >= 0; --k) {
        Integer c = num[k + dd];
        quot[k] = c;
        if (c != 0)
            for (long i = 0; i <= dd; ++i) num[k + i] -= c * den[i];
    }
    return quot;
}

} // namespace

const std::vector<Integer>& cyclotomic_polynomial(long n) {
    static std::mutex mu;
    static std::map<long, ZPoly> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // x^n - 1 = prod_{d | n} Phi_d.
    ZPoly p = zpoly_xn_minus_1(n);
    for (long d = 1; d < n; ++d) {
        if (n % d == 0) {
            // Recursive without re-locking: compute iteratively in order, so
            // divisors are already cached.
            auto dit = cache.find(d);
            if (dit == cache.end()) {
                ZPoly pd = zpoly_xn_minus_1(d);
                for (long dd = 1; dd < d; ++dd)
                    if (d % dd == 0) pd = zpoly_div_exact(std::move(pd), cache.at(dd));
                dit = cache.emplace(d, std::move(pd)).first;
            }
            p = zpoly_div_exact(std::move(p), dit->second);
        }
    }
    return cache.emplace(n, std::move(p)).first->second;
}

Cyclotomic Cyclotomic::monomial(const Rational& c, long e, long order) {
    Cyclotomic z(order);
    z.coeffs_[mod_norm(e, order)] = c;
    return z;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    if (order_ != o.order_)
        fail(ErrorCode::MixedDiscriminants, "cyclotomic orders differ");
    for (long i = 0; i < order_; ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    if (order_ != o.order_)
        fail(ErrorCode::MixedDiscriminants, "cyclotomic orders differ");
    for (long i = 0; i < order_; ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order_ != b.order_)
        fail(ErrorCode::MixedDiscriminants, "cyclotomic orders differ");
    Cyclotomic z(a.order_);
    for (long i = 0; i < a.order_; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (long j = 0; j < b.order_; ++j) {
            if (b.coeffs_[j] == 0) continue;
            long k = i + j;
            if (k >= a.order_) k -= a.order_;
            z.coeffs_[k] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return z;
}

Cyclotomic operator*(const Cyclotomic& a, const Rational& c) {
    Cyclotomic z = a;
    for (auto& x : z.coeffs_) x *= c;
    return z;
}

Cyclotomic Cyclotomic::conj() const {
    Cyclotomic z(order_);
    for (long i = 0; i < order_; ++i) z.coeffs_[mod_norm(-i, order_)] = coeffs_[i];
    return z;
}

std::vector<Rational> Cyclotomic::canonical() const {
    const ZPoly& phi = cyclotomic_polynomial(order_);
    long deg = static_cast<long>(phi.size()) - 1;
    std::vector<Rational> rem(coeffs_.begin(), coeffs_.end());
    for (long k = order_ - 1; k >= deg; --k) {
        if (rem[k] == 0) continue;
        Rational c = rem[k]; // phi is monic
        for (long i = 0; i <= deg; ++i) rem[k - deg + i] -= c * Rational(phi[i]);
    }
    rem.resize(deg);
    return rem;
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : canonical())
        if (c != 0) return false;
    return true;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order_ == b.order_) return (a - b).is_zero();
    long n = lcm(Integer(a.order_), Integer(b.order_)).get_si();
    return (a.lift_to(n) - b.lift_to(n)).is_zero();
}

std::optional<Rational> Cyclotomic::as_rational() const {
    auto c = canonical();
    for (std::size_t i = 1; i < c.size(); ++i)
        if (c[i] != 0) return std::nullopt;
    return c.empty() ? Rational(0) : c[0];
}

Cyclotomic Cyclotomic::lift_to(long order) const {
    if (order == order_) return *this;
    if (order % order_ != 0)
        fail(ErrorCode::DivisibilityError, "cyclotomic order does not divide target");
    long stride = order / order_;
    Cyclotomic z(order);
    for (long i = 0; i < order_; ++i)
        if (coeffs_[i] != 0) z.coeffs_[i * stride] = coeffs_[i];
    return z;
}

Complex Cyclotomic::embed(long prec) const {
    // Rational elements embed exactly; this keeps real character values
    // (and hence real-valued series) exactly real.
    if (auto r = as_rational()) return Complex::of(*r, prec);
    long wp = prec + 16;
    Complex acc(wp);
    Real two_pi = Real::pi(wp) * 2;
    for (long i = 0; i < order_; ++i) {
        if (coeffs_[i] == 0) continue;
        Real angle = two_pi * i / order_;
        Real s(wp), c(wp);
        sin_cos(s, c, angle);
        Real w = Real::of(coeffs_[i], wp);
        acc.re += w * c;
        acc.im += w * s;
    }
    return acc.round_to(prec);
}

std::string Cyclotomic::str() const {
    auto c = canonical();
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        if (!first) os << " + ";
        os << rational_str(c[i]);
        if (i > 0) os << "*z^" << i;
        first = false;
    }
    if (first) os << "0";
    os << " (z = zeta_" << order_ << ")";
    return os.str();
}

std::shared_ptr<const UnitGroup> UnitGroup::build(long q) {
    if (q < 2) fail(ErrorCode::BadInput, "unit group needs q >= 2");
    auto g = std::make_shared<UnitGroup>(UnitGroup{});
    g->q_ = q;

    struct LocalFactor {
        long pk;   // prime power
        long gen;  // generator mod pk
        long ord;
    };
    std::vector<LocalFactor> locals;
    for (auto& [p, e] : factorize(q)) {
        long pk = 1;
        for (long i = 0; i < e; ++i) pk *= p;
        if (p == 2) {
            if (e == 1) continue; // trivial group
            if (e == 2) {
                locals.push_back({pk, 3, 2});
            } else {
                locals.push_back({pk, pk - 1, 2}); // -1
                locals.push_back({pk, 5, pk / 4}); // 5 has order 2^{e-2}
            }
        } else {
            long phi = pk / p * (p - 1);
            long gen = 0;
            for (long x = 2; x < pk; ++x) {
                if (gcd_long(x, pk) != 1) continue;
                if (element_order(x, pk, phi) == phi) {
                    gen = x;
                    break;
                }
            }
            locals.push_back({pk, gen, phi});
        }
    }

    // Lift each local generator to mod q: g mod pk, 1 mod q/pk (CRT).
    for (auto& lf : locals) {
        long rest = q / lf.pk;
        long lifted = lf.gen;
        if (rest > 1) {
            for (long x = 1; x < q; ++x) {
                if (x % lf.pk == lf.gen % lf.pk && x % rest == 1 % rest) {
                    lifted = x;
                    break;
                }
            }
        }
        g->factors_.push_back({lifted, lf.ord});
        g->phi_ *= lf.ord;
    }

    // Discrete-log table by full enumeration of exponent vectors.
    std::vector<long> vec(g->factors_.size(), 0);
    for (long count = 0;; ++count) {
        long unit = 1;
        for (std::size_t i = 0; i < vec.size(); ++i)
            unit = mul_mod(unit, pow_mod(g->factors_[i].generator, vec[i], q), q);
        g->dlog_.emplace(unit, vec);
        std::size_t i = 0;
        for (; i < vec.size(); ++i) {
            if (++vec[i] < g->factors_[i].order) break;
            vec[i] = 0;
        }
        if (i == vec.size()) break;
    }
    if (static_cast<long>(g->dlog_.size()) != g->phi_)
        fail(ErrorCode::BadInput, "unit group enumeration inconsistent");
    if (g->phi_ != euler_phi(q))
        fail(ErrorCode::BadInput, "unit group order mismatch");
    return g;
}

bool UnitGroup::is_unit(long n) const { return dlog_.count(mod_norm(n, q_)) != 0; }

const std::vector<long>& UnitGroup::dlog(long n) const {
    auto it = dlog_.find(mod_norm(n, q_));
    if (it == dlog_.end()) fail(ErrorCode::BadInput, "residue is not a unit");
    return it->second;
}

DirichletCharacter::DirichletCharacter(std::shared_ptr<const UnitGroup> group,
                                       std::vector<long> exponents)
    : group_(std::move(group)), exponents_(std::move(exponents)) {
    if (exponents_.size() != group_->factors().size())
        fail(ErrorCode::BadInput, "exponent vector length mismatch");
    value_order_ = group_->phi();
    long q = group_->modulus();
    table_.resize(q);
    for (long x = 0; x < q; ++x) {
        if (!group_->is_unit(x)) continue;
        const auto& v = group_->dlog(x);
        long e = 0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            long oi = group_->factors()[i].order;
            e = mod_norm(e + exponents_[i] * v[i] % value_order_ * (value_order_ / oi),
                         value_order_);
        }
        table_[x] = e;
    }
}

bool DirichletCharacter::is_principal() const {
    for (long e : exponents_)
        if (e != 0) return false;
    return true;
}

bool DirichletCharacter::is_quadratic() const {
    for (const auto& t : table_) {
        if (!t) continue;
        long e = *t;
        if (!(e == 0 || 2 * e == value_order_)) return false;
    }
    return true;
}

int DirichletCharacter::parity() const {
    auto e = value_exponent(modulus() - 1);
    // -1 is always a unit; its value is +-1.
    return (*e == 0) ? 1 : -1;
}

std::optional<long> DirichletCharacter::value_exponent(long n) const {
    return table_[mod_norm(n, modulus())];
}

Cyclotomic DirichletCharacter::operator()(long n) const {
    auto e = value_exponent(n);
    if (!e) return Cyclotomic::zero(value_order_);
    return Cyclotomic::monomial(Rational(1), *e, value_order_);
}

std::string DirichletCharacter::str() const {
    std::ostringstream os;
    os << "chi mod " << modulus() << " [";
    for (std::size_t i = 0; i < exponents_.size(); ++i)
        os << (i ? "," : "") << exponents_[i];
    os << "]";
    return os.str();
}

std::vector<DirichletCharacter> enumerate_characters(long q) {
    auto group = UnitGroup::build(q);
    std::vector<DirichletCharacter> out;
    std::vector<long> vec(group->factors().size(), 0);
    // Lexicographic over exponent vectors, all-zero (principal) first.
    while (true) {
        out.emplace_back(group, vec);
        long i = static_cast<long>(vec.size()) - 1;
        for (; i >= 0; --i) {
            if (++vec[i] < group->factors()[i].order) break;
            vec[i] = 0;
        }
        if (i < 0) break;
    }
    if (static_cast<long>(out.size()) != group->phi())
        fail(ErrorCode::BadInput, "character count mismatch");
    return out;
}

bool can_define_mod(const DirichletCharacter& chi, long q1) {
    long q = chi.modulus();
    if (q1 <= 0 || q % q1 != 0)
        fail(ErrorCode::DivisibilityError, "q' must divide q");
    for (long u = 0; u < q; ++u) {
        if (!chi.group().is_unit(u)) continue;
        if (mod_norm(u, q1) != mod_norm(1, q1)) continue;
        auto e = chi.value_exponent(u);
        if (*e != 0) return false;
    }
    return true;
}

Cyclotomic gauss_sum(const DirichletCharacter& chi, long n) {
    long q = chi.modulus();
    long m = chi.value_order();
    long big = lcm(Integer(q), Integer(m)).get_si();
    Cyclotomic acc(big);
    for (long x = 0; x < q; ++x) {
        auto e = chi.value_exponent(x);
        if (!e) continue;
        long expo = mod_norm(*e * (big / m) + mod_norm(n * x, q) * (big / q), big);
        acc += Cyclotomic::monomial(Rational(1), expo, big);
    }
    return acc;
}

GaussVanishing gauss_vanishing_check(const DirichletCharacter& chi, long a) {
    long q = chi.modulus();
    long d = gcd_long(mod_norm(a, q), q);
    if (d == 0) d = q; // a = 0 mod q
    bool predicted = !can_define_mod(chi, q / d);
    bool actual = gauss_sum(chi, a).is_zero();
    return {predicted, actual};
}

DirichletCharacter character_by_spec(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        fail(ErrorCode::BadInput, "character spec must be q:index or q:quadratic");
    long q = std::stol(spec.substr(0, colon));
    std::string sel = spec.substr(colon + 1);
    auto all = enumerate_characters(q);
    if (sel == "quadratic") {
        std::vector<std::size_t> hits;
        for (std::size_t i = 0; i < all.size(); ++i)
            if (!all[i].is_principal() && all[i].is_quadratic()) hits.push_back(i);
        if (hits.size() != 1)
            fail(ErrorCode::BadInput,
                 "no unique real non-principal character mod " + std::to_string(q));
        return all[hits[0]];
    }
    long idx = std::stol(sel);
    if (idx < 0 || idx >= static_cast<long>(all.size()))
        fail(ErrorCode::BadInput, "character index out of range");
    return all[idx];
}

AdditiveCharacter::AdditiveCharacter(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {
    if (re == 0 && im == 0)
        fail(ErrorCode::ZeroCharacterValue, "additive character needs f(1) != 0");
}

std::pair<Rational, Rational> AdditiveCharacter::eval(long n) const {
    Rational a(1), b(0);
    bool invert = n < 0;
    unsigned long k = invert ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    Rational br = re, bi = im;
    while (k) {
        if (k & 1UL) {
            Rational na = a * br - b * bi;
            Rational nb = a * bi + b * br;
            a = na;
            b = nb;
        }
        Rational nr = br * br - bi * bi;
        Rational ni = 2 * br * bi;
        br = nr;
        bi = ni;
        k >>= 1;
    }
    if (invert) {
        Rational d = a * a + b * b;
        a = a / d;
        b = -b / d;
    }
    return {a, b};
}

Complex AdditiveCharacter::eval(long n, long prec) const {
    auto [a, b] = eval(n);
    return Complex::of(a, b, prec);
}

AdditiveTuple::AdditiveTuple(std::vector<AdditiveCharacter> chars) : chars_(std::move(chars)) {
    if (chars_.empty()) fail(ErrorCode::BadInput, "additive tuple needs depth >= 1");
    g_.resize(chars_.size());
    Rational gr(1), gi(0);
    for (std::size_t j = chars_.size(); j-- > 0;) {
        Rational nr = gr * chars_[j].re - gi * chars_[j].im;
        Rational ni = gr * chars_[j].im + gi * chars_[j].re;
        gr = nr;
        gi = ni;
        g_[j] = {gr, gi};
    }
}

bool AdditiveTuple::partial_products_bounded() const {
    for (const auto& [a, b] : g_)
        if (a * a + b * b > 1) return false;
    return true;
}

void AdditiveTuple::require_bounded() const {
    if (!partial_products_bounded())
        fail(ErrorCode::PartialProductBound, "some partial product |g_j| exceeds 1");
}

AdditiveTuple AdditiveTuple::prefix(std::size_t depth) const {
    std::vector<AdditiveCharacter> sub(chars_.begin(), chars_.begin() + depth);
    return AdditiveTuple(std::move(sub));
}

Complex additive_eval(const AdditiveCharacter& f, long n, long prec) { return f.eval(n, prec); }

} // namespace lucaszeta
