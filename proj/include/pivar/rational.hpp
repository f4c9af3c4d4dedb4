#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace pivar {

// Exact field of coefficients. mpq_class keeps values canonical after arithmetic;
// make_rational canonicalizes explicit fractions.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(const Integer& num, const Integer& den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
    return make_rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
}

// "p/q" or "p"
inline std::string to_string(const Rational& q) { return q.get_str(); }

} // namespace pivar
