#ifndef VOTOPES_ARITH_HPP
#define VOTOPES_ARITH_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace votopes {

// Exact scalars. BigRational is kept canonical (reduced, positive
// denominator) by GMP itself; make_rational enforces it for raw input.
using BigInteger = mpz_class;
using BigRational = mpq_class;

inline BigRational make_rational(const BigInteger& num, const BigInteger& den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

inline BigRational make_rational(long num, long den) {
    return make_rational(BigInteger(num), BigInteger(den));
}

// gmpxx has no long long constructor; long is 64-bit on this platform.
inline BigInteger to_mpz(long long v) {
    static_assert(sizeof(long) == sizeof(long long));
    return BigInteger(static_cast<long>(v));
}

inline BigInteger factorial(unsigned long n) {
    BigInteger r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline BigInteger binomial(const BigInteger& n, unsigned long k) {
    BigInteger r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

inline BigInteger pow_int(const BigInteger& b, unsigned long e) {
    BigInteger r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

// Thrown when an enumeration would exceed its configured budget; mapped to
// a dedicated exit code by the CLI.
struct budget_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rounds a positive rational to `digits` significant decimal digits,
// e.g. 1717/2048 -> "0.8384". Used for the probability report.
std::string to_decimal_string(const BigRational& q, int digits = 4);

// Checked 64-bit helpers for the machine-word fast paths. On overflow the
// caller falls back to GMP.
inline bool mul_ok(long long a, long long b, long long& out) {
    return !__builtin_mul_overflow(a, b, &out);
}
inline bool add_ok(long long a, long long b, long long& out) {
    return !__builtin_add_overflow(a, b, &out);
}

inline long long gcd_ll(long long a, long long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// gcd of absolute values of a vector; 0 for the zero vector.
long long content_ll(const std::vector<long long>& v);

}  // namespace votopes

#endif
