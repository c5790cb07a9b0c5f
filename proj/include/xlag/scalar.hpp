#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace xlag {

// Exact rational. mpq_class keeps gcd(num, den) = 1 and den > 0 once canonicalized.
using Scalar = mpq_class;
using Integer = mpz_class;

inline Scalar make_scalar(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Scalar q(num, den);
    q.canonicalize();
    return q;
}

inline Scalar make_scalar(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Scalar q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "p", "p/q", "-p/q". No decimals: exact paths take exact input.
inline Scalar parse_scalar(const std::string& text) {
    auto bad = [&] { return std::invalid_argument("not a rational 'p/q': '" + text + "'"); };
    if (text.empty()) throw bad();
    auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    auto digits = [](const std::string& s, bool sign_ok) {
        size_t i = 0;
        if (sign_ok && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    if (!digits(num, true) || !digits(den, false)) throw bad();
    if (num[0] == '+') num = num.substr(1);
    Integer n(num), d(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return make_scalar(n, d);
}

inline std::string to_string(const Scalar& q) { return q.get_str(); }

inline bool is_integer(const Scalar& q) { return q.get_den() == 1; }

inline long to_long(const Scalar& q) {
    if (!is_integer(q) || !q.get_num().fits_slong_p())
        throw std::domain_error("not a machine integer: " + q.get_str());
    return q.get_num().get_si();
}

inline int sign(const Scalar& q) { return sgn(q); }

inline Scalar spow(const Scalar& q, unsigned e) {
    Scalar r = 1;
    for (unsigned k = 0; k < e; ++k) r *= q;
    return r;
}

}  // namespace xlag
