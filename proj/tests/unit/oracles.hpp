// Brute-force reference implementations used only by the tests. They share
// no code with the library.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

// Every ordered composition of n (2^{n-1} of them).
inline std::vector<std::vector<unsigned>> compositions(unsigned n) {
  std::vector<std::vector<unsigned>> out;
  if (n == 0) return out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    std::vector<unsigned> parts{1};
    for (unsigned i = 0; i + 1 < n; ++i) {
      if (mask >> i & 1) parts.push_back(1);
      else ++parts.back();
    }
    out.push_back(parts);
  }
  return out;
}

inline bool is_h(const std::vector<unsigned>& parts) {
  return !parts.empty() && *std::max_element(parts.begin(), parts.end()) == parts.front();
}

inline std::vector<std::vector<unsigned>> h_compositions(unsigned n) {
  std::vector<std::vector<unsigned>> out;
  for (auto& c : compositions(n))
    if (is_h(c)) out.push_back(c);
  return out;
}

inline unsigned totient(unsigned m) {
  unsigned count = 0;
  for (unsigned k = 1; k <= m; ++k) count += std::gcd(k, m) == 1;
  return count;
}

inline int moebius(unsigned m) {
  int sign = 1;
  for (unsigned p = 2; p <= m; ++p) {
    if (m % p) continue;
    m /= p;
    if (m % p == 0) return 0;
    sign = -sign;
  }
  return sign;
}

// b-tuples with entries in [1, s] summing to n, by direct enumeration.
inline unsigned long bounded_compositions(long n, unsigned b, unsigned s) {
  if (b == 0) return n == 0;
  unsigned long total = 0;
  for (unsigned first = 1; first <= s && first <= n; ++first) total += bounded_compositions(n - first, b - 1, s);
  return total;
}

// Product of two coefficient vectors by direct double loop.
inline std::vector<long long> convolve(const std::vector<long long>& a, const std::vector<long long>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<long long> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

}  // namespace oracle
