#ifndef MDTREES_BIGNUM_HPP
#define MDTREES_BIGNUM_HPP

#include <gmpxx.h>

namespace mdtrees {

// Every counting path works in exact arbitrary-precision arithmetic;
// values here are never negative.
using BigNat = mpz_class;

// m(m+1)...(m+k-1).  The empty product (k = 0) is 1, also for m = 0.
BigNat rising_factorial(unsigned long m, unsigned long k);

// (2n-1)(2n-3)...3*1, with the convention (-1)!! = 1 for n = 0.
BigNat double_factorial_odd(unsigned long n);

// Standard binomial coefficient; 0 when k < 0 or k > n.
BigNat binomial(unsigned long n, long k);

// n-th Catalan number.
BigNat catalan(unsigned long n);

BigNat factorial(unsigned long n);

}  // namespace mdtrees

#endif
