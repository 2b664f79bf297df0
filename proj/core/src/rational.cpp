#include "lucaszeta/rational.hpp"

#include "lucaszeta/errors.hpp"

#include <cctype>

namespace lucaszeta {

namespace {

bool looks_like_integer(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) fail(ErrorCode::BadInput, "empty rational literal");

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (!looks_like_integer(num) || !looks_like_integer(den))
            fail(ErrorCode::BadInput, "malformed rational literal: " + text);
        Integer n(num), d(den);
        Rational r(n, d);
        if (r.get_den() == 0) fail(ErrorCode::BadInput, "zero denominator: " + text);
        r.canonicalize();
        return r;
    }

    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string head = s.substr(0, dot);
        std::string frac = s.substr(dot + 1);
        if (head.empty() || head == "+" || head == "-") head += "0";
        if (!looks_like_integer(head) || (!frac.empty() && !looks_like_integer(frac)))
            fail(ErrorCode::BadInput, "malformed decimal literal: " + text);
        Integer scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        Integer whole(head);
        Integer part = frac.empty() ? Integer(0) : Integer(frac);
        if (whole < 0 || head[0] == '-') part = -part;
        Rational r(whole * scale + part, scale);
        r.canonicalize();
        return r;
    }

    if (!looks_like_integer(s))
        fail(ErrorCode::BadInput, "malformed rational literal: " + text);
    return Rational(Integer(s));
}

std::string rational_str(const Rational& value) {
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

long rational_log2_floor(const Rational& value) {
    Rational a = abs(value);
    if (a == 0) fail(ErrorCode::BadInput, "log2 of zero");
    long nbits = static_cast<long>(mpz_sizeinbase(a.get_num().get_mpz_t(), 2));
    long dbits = static_cast<long>(mpz_sizeinbase(a.get_den().get_mpz_t(), 2));
    // sizeinbase gives floor(log2)+1; the difference is within 1 of the truth,
    // callers only use this for sizing.
    return nbits - dbits;
}

} // namespace lucaszeta
