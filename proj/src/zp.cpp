#include "rost/zp.hpp"

#include <stdexcept>

namespace rost {

int valuation(const Int& x, unsigned long p) {
  if (x == 0) throw std::domain_error("valuation of zero");
  Int f = p;
  Int rest;
  return static_cast<int>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), f.get_mpz_t()));
}

int valuation(const Rat& x, unsigned long p) {
  if (x == 0) throw std::domain_error("valuation of zero");
  return valuation(Int(x.get_num()), p) - valuation(Int(x.get_den()), p);
}

Int strip_p(const Int& x, unsigned long p) {
  if (x == 0) return 0;
  Int f = p;
  Int rest;
  mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), f.get_mpz_t());
  return rest;
}

bool is_p_integral(const Rat& x, unsigned long p) {
  return mpz_divisible_ui_p(x.get_den_mpz_t(), p) == 0;
}

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Int ipow(unsigned long base, unsigned long exp) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

long long ipow_ll(long long base, int exp) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

std::string to_string(const Rat& x) { return x.get_str(); }

}  // namespace rost
