#pragma once

#include <gmpxx.h>

#include <string>

#include "kundt/errors.hpp"

namespace kundt {

/// Exact rational scalar. mpq_class keeps the canonical invariants we rely
/// on everywhere: gcd-reduced and denominator > 0.
using Rational = mpq_class;

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

/// Serialized form is a decimal-free string "p" or "p/q". No floats anywhere.
inline std::string rational_str(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Accepts an optional leading '-', digits, and an optional "/digits" tail.
/// Anything else (whitespace, decimals, exponents) is rejected.
inline Rational parse_rational(const std::string& s, const std::string& where = "scalar") {
    auto fail = [&]() -> Rational {
        throw SchemaError(where, "not a valid p/q rational: '" + s + "'");
    };
    if (s.empty()) return fail();
    std::size_t i = 0;
    if (s[i] == '-') ++i;
    if (i == s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) return fail();
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i != s.size()) {
        if (s[i] != '/') return fail();
        ++i;
        if (i == s.size()) return fail();
        std::size_t den_start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i != s.size() || den_start == s.size()) return fail();
        if (s.substr(den_start) == std::string(s.size() - den_start, '0')) {
            throw SchemaError(where, "zero denominator in '" + s + "'");
        }
    }
    Rational r(s);
    r.canonicalize();
    return r;
}

/// True iff r is the square of a rational; if so *root is the nonnegative root.
inline bool rational_is_square(const Rational& r, Rational* root = nullptr) {
    if (sgn(r) < 0) return false;
    if (sgn(r) == 0) {
        if (root) *root = 0;
        return true;
    }
    const mpz_class& num = r.get_num();
    const mpz_class& den = r.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return false;
    if (root) {
        mpz_class rn, rd;
        mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
        *root = Rational(rn, rd);
    }
    return true;
}

} // namespace kundt
