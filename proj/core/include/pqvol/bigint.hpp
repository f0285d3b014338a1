#pragma once

#include <gmpxx.h>

#include <string>

namespace pqvol {

// Exact arbitrary-precision integers and rationals. Everything in this
// library that could overflow a machine word goes through these.
using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_decimal(const BigInt& v) { return v.get_str(); }

inline BigInt ipow(long base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), BigInt(base).get_mpz_t(), exp);
  return r;
}

}  // namespace pqvol
