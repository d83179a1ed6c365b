// Exact arithmetic base types: arbitrary-precision integers and rationals,
// backed by GMP. mpq_class keeps values canonical (gcd-reduced, positive
// denominator), which is exactly the invariant we need everywhere.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace tenrank {

using BigInt = mpz_class;
using Rational = mpq_class;

// Thrown on malformed user input (files, polynomial text, shapes).
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown on contract violations between modules.
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Parses "p", "-p" or "p/q". Denominator must be nonzero.
inline Rational parse_rational(const std::string& text) {
    try {
        Rational q(text);
        if (q.get_den() == 0) throw input_error("zero denominator in '" + text + "'");
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw input_error("not a rational number: '" + text + "'");
    }
}

inline std::string to_string(const Rational& q) {
    return q.get_str();
}

inline int sign(const Rational& q) { return sgn(q); }

// Decimal rendering with `digits` significant digits, for reports only.
inline std::string decimal_string(const Rational& q, int digits = 12) {
    if (q == 0) return "0";
    mpf_class f(q, 64 + digits * 4);
    mp_exp_t exp;
    std::string mant = f.get_str(exp, 10, static_cast<size_t>(digits));
    bool neg = !mant.empty() && mant[0] == '-';
    if (neg) mant = mant.substr(1);
    std::string s;
    if (exp >= 1 && exp <= digits + 3) {
        while (static_cast<mp_exp_t>(mant.size()) < exp) mant += '0';
        s = mant.substr(0, static_cast<size_t>(exp));
        std::string frac = mant.substr(static_cast<size_t>(exp));
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
        if (!frac.empty()) s += "." + frac;
    } else if (exp <= 0 && exp > -4) {
        std::string frac = std::string(static_cast<size_t>(-exp), '0') + mant;
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
        s = "0." + (frac.empty() ? std::string("0") : frac);
    } else {
        s = mant.substr(0, 1);
        std::string frac = mant.substr(1);
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
        if (!frac.empty()) s += "." + frac;
        s += "e" + std::to_string(exp - 1);
    }
    return neg ? "-" + s : s;
}

}  // namespace tenrank
