#include "dcenter/numeric.hpp"

#include "dcenter/error.hpp"

namespace dcenter {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::EmptyInput: return "empty-input";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::BoundedComputation: return "bounded-computation";
    case ErrorKind::Ambiguity: return "ambiguity";
    case ErrorKind::Boundary: return "boundary";
    case ErrorKind::SpecialCase: return "special-case";
    case ErrorKind::Size: return "size";
    case ErrorKind::Solver: return "solver";
    case ErrorKind::Census: return "census";
    case ErrorKind::Classification: return "classification";
    case ErrorKind::PortraitInvalid: return "portrait-invalid";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

BigInt ipow(const BigInt& base, unsigned long exp) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);  // GMP already gives 0^0 = 1
  return out;
}

BigInt ipow(long base, unsigned long exp) { return ipow(BigInt(base), exp); }

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt out;
  if (k > n) return out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    const std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t totient(std::uint64_t m) {
  if (m == 0) throw Error(ErrorKind::Domain, "totient: m must be positive");
  std::uint64_t result = m;
  std::uint64_t rest = m;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    result -= result / p;
  }
  if (rest > 1) result -= result / rest;
  return result;
}

int moebius(std::uint64_t m) {
  if (m == 0) throw Error(ErrorKind::Domain, "moebius: m must be positive");
  int sign = 1;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    m /= p;
    if (m % p == 0) return 0;
    sign = -sign;
  }
  if (m > 1) sign = -sign;
  return sign;
}

}  // namespace dcenter
