#include "mdtrees/bignum.hpp"

namespace mdtrees {

BigNat rising_factorial(unsigned long m, unsigned long k) {
    BigNat result = 1;
    for (unsigned long i = 0; i < k; ++i) {
        result *= m + i;
    }
    return result;
}

BigNat double_factorial_odd(unsigned long n) {
    if (n == 0) {
        return 1;
    }
    BigNat result;
    mpz_2fac_ui(result.get_mpz_t(), 2 * n - 1);
    return result;
}

BigNat binomial(unsigned long n, long k) {
    if (k < 0 || static_cast<unsigned long>(k) > n) {
        return 0;
    }
    BigNat result;
    mpz_bin_uiui(result.get_mpz_t(), n, static_cast<unsigned long>(k));
    return result;
}

BigNat catalan(unsigned long n) {
    BigNat result = binomial(2 * n, static_cast<long>(n));
    mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(), n + 1);
    return result;
}

BigNat factorial(unsigned long n) {
    BigNat result;
    mpz_fac_ui(result.get_mpz_t(), n);
    return result;
}

}  // namespace mdtrees
