#pragma once

#include <gmpxx.h>

#include <string>

namespace rost {

using Int = mpz_class;
using Rat = mpq_class;

/// p-adic valuation of a nonzero integer or rational.
int valuation(const Int& x, unsigned long p);
int valuation(const Rat& x, unsigned long p);

/// x with every factor of p removed; the unit part in Z_(p) (sign kept).
Int strip_p(const Int& x, unsigned long p);

/// True when the denominator is coprime to p, i.e. x lies in Z_(p).
bool is_p_integral(const Rat& x, unsigned long p);

bool is_prime(unsigned long n);

Int ipow(unsigned long base, unsigned long exp);
long long ipow_ll(long long base, int exp);

std::string to_string(const Rat& x);

}  // namespace rost
