#ifndef THETA_NUMERIC_HPP
#define THETA_NUMERIC_HPP

#include <gmpxx.h>

#include <string>

namespace theta {

// Arbitrary-precision integer and canonical rational (gcd-reduced, positive
// denominator). GMP maintains both invariants through every operation.
using integer = mpz_class;
using rational = mpq_class;

// Canonicalized num/den, den != 0.
rational ratio(long num, long den);
rational ratio(const integer& num, const integer& den);

bool is_integral(const rational& q);

// The integer value of q; throws integrality_error when q has a nontrivial
// denominator. `what` names the quantity in the error message.
integer require_integral(const rational& q, const char* what);

integer factorial(unsigned n);
integer pow_integer(const integer& base, unsigned exp);
// Negative exponents allowed for nonzero base.
rational pow_rational(const rational& base, long exp);

std::string str(const integer& z);
std::string str(const rational& q);

}  // namespace theta

#endif
