#ifndef DLPCERT_RATIONAL_HPP
#define DLPCERT_RATIONAL_HPP

#include <gmpxx.h>

#include <cmath>
#include <string>

#include "errors.hpp"

namespace dlpcert {

// All certificate data is exact.  GMP does the heavy lifting; these aliases
// are the only spelling the rest of the library uses.
using BigInt   = mpz_class;
using Rational = mpq_class;

inline BigInt big_pow(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline BigInt big_pow(long base, unsigned long e) { return big_pow(BigInt(base), e); }

inline Rational rat_pow(const Rational& base, unsigned long e) {
    Rational r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), e);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), e);
    return r; // base canonical => powers canonical
}

// lg of a positive rational, accurate for magnitudes far outside double range.
inline double lg(const Rational& x) {
    if (sgn(x) <= 0) throw PreconditionError("lg: argument must be positive");
    long ep = 0, eq = 0;
    double dp = mpz_get_d_2exp(&ep, mpq_numref(x.get_mpq_t()));
    double dq = mpz_get_d_2exp(&eq, mpq_denref(x.get_mpq_t()));
    return (std::log2(dp) + double(ep)) - (std::log2(dq) + double(eq));
}

// Serialized form is GMP's canonical "p" or "p/q".
inline std::string rat_to_string(const Rational& x) { return x.get_str(); }

inline Rational rat_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw ParseError("bad rational: '" + s + "'");
    r.canonicalize();
    return r;
}

// Exact dyadic rational equal to the given double.  Used to freeze float
// parameters (e.g. tau) into the exact pipeline deterministically.
inline Rational rat_from_double(double d) {
    Rational r;
    mpq_set_d(r.get_mpq_t(), d);
    return r;
}

// num/den in canonical form.  The two-argument mpq_class constructor does
// not reduce, and GMP comparisons require canonical operands.
inline Rational rat(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

} // namespace dlpcert

#endif
