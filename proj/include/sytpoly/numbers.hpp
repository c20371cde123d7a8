#ifndef SYTPOLY_NUMBERS_HPP
#define SYTPOLY_NUMBERS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sytpoly {

// Counts grow super-exponentially and the identities checked downstream
// carry factorial denominators, so all arithmetic is exact GMP.
using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return BigInt(0);
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

/// C_n = binom(2n, n) / (n+1); counts plane binary trees on n nodes.
inline BigInt catalan(int n) {
    return binomial(2 * n, n) / BigInt(n + 1);
}

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

} // namespace sytpoly

#endif
