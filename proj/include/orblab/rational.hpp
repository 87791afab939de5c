#ifndef ORBLAB_RATIONAL_HPP
#define ORBLAB_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace orblab {

using Int = mpz_class;
using Rat = mpq_class;

// Thrown when an enumeration would exceed the configured element budget.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown on malformed or inconsistent input data.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Int binomial(const Int& n, unsigned long k) {
    Int r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline bool is_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

// "p/q" or "p"; exact, no decimals.
std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

} // namespace orblab

#endif
