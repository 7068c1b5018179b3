#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace dcenter {

using BigInt = mpz_class;
using Rational = mpq_class;

/// base^exp with the convention 0^0 = 1.
BigInt ipow(const BigInt& base, unsigned long exp);
BigInt ipow(long base, unsigned long exp);

BigInt binomial(unsigned long n, unsigned long k);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

/// Euler's totient. Throws Error{Domain} for m = 0.
std::uint64_t totient(std::uint64_t m);

/// Moebius function mu(m), m >= 1.
int moebius(std::uint64_t m);

inline std::string to_string(const BigInt& v) { return v.get_str(); }
inline std::string to_string(const Rational& v) { return v.get_str(); }

}  // namespace dcenter
