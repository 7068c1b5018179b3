#include "dcenter/hcomp.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "dcenter/error.hpp"

namespace dcenter {

HComposition::HComposition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw Error(ErrorKind::EmptyInput, "HComposition: no parts");
  for (unsigned a : parts_) {
    if (a == 0) throw Error(ErrorKind::Domain, "HComposition: parts must be positive");
    if (a > parts_.front())
      throw Error(ErrorKind::Domain, "HComposition: first part must be maximal");
    n_ += a;
  }
  omega_ = static_cast<unsigned>(
      std::count(parts_.begin() + 1, parts_.end(), parts_.front()));
}

namespace {

void extend(std::vector<unsigned>& prefix, unsigned remaining, unsigned cap,
            const std::function<void(const HComposition&)>& visit) {
  if (remaining == 0) {
    visit(HComposition(prefix));
    return;
  }
  for (unsigned a = std::min(cap, remaining); a >= 1; --a) {
    prefix.push_back(a);
    extend(prefix, remaining - a, cap, visit);
    prefix.pop_back();
  }
}

}  // namespace

void for_each_hcomposition(unsigned n, const std::function<void(const HComposition&)>& visit) {
  if (n == 0) throw Error(ErrorKind::EmptyInput, "enumerate_hcompositions: n must be >= 1");
  std::vector<unsigned> prefix;
  prefix.reserve(n);
  for (unsigned first = n; first >= 1; --first) {
    prefix.assign(1, first);
    extend(prefix, n - first, first, visit);
  }
}

std::vector<HComposition> enumerate_hcompositions(unsigned n) {
  std::vector<HComposition> out;
  for_each_hcomposition(n, [&](const HComposition& p) { out.push_back(p); });
  return out;
}

unsigned multiplicity(const HComposition& p) { return p.omega(); }

BigInt term_value(const HComposition& p, unsigned d) {
  if (d == 0) throw Error(ErrorKind::Domain, "term_value: d must be >= 1");
  return BigInt(static_cast<unsigned long>(totient(p.first()))) *
         ipow(static_cast<long>(d) - 1, p.r() - p.omega()) * ipow(static_cast<long>(d), p.omega());
}

IdentityCheck identity_check(unsigned n, unsigned d) {
  if (d == 0) throw Error(ErrorKind::Domain, "identity_check: d must be >= 1");
  IdentityCheck out;
  for_each_hcomposition(n, [&](const HComposition& p) { out.lhs += term_value(p, d); });
  out.rhs = ipow(static_cast<long>(d), n) - 1;
  out.equal = out.lhs == out.rhs;
  return out;
}

BigInt count_bounded_compositions(long n, unsigned b, unsigned s) {
  if (s == 0) throw Error(ErrorKind::Domain, "count_bounded_compositions: s must be >= 1");
  if (n < 0 || static_cast<unsigned long>(n) > static_cast<unsigned long>(b) * s) return 0;
  // ways[t] = number of ordered tuples (of the current length) summing to t.
  std::vector<BigInt> ways(static_cast<std::size_t>(n) + 1);
  ways[0] = 1;
  for (unsigned len = 0; len < b; ++len) {
    std::vector<BigInt> next(ways.size());
    for (std::size_t t = 0; t < ways.size(); ++t) {
      if (ways[t] == 0) continue;
      for (unsigned a = 1; a <= s && t + a < ways.size(); ++a) next[t + a] += ways[t];
    }
    ways = std::move(next);
  }
  return ways[static_cast<std::size_t>(n)];
}

BigInt count_hcomps_by(unsigned m, unsigned w, unsigned r, unsigned n) {
  if (m == 0) throw Error(ErrorKind::Domain, "count_hcomps_by: m must be >= 1");
  if (r < w + 1) throw Error(ErrorKind::Precondition, "count_hcomps_by: requires r >= w + 1");
  const long rest = static_cast<long>(n) - static_cast<long>(w + 1) * m;
  if (rest < 0) return 0;
  const unsigned others = r - w - 1;
  BigInt placements = binomial(r - 1, w);
  if (m == 1) {
    // Remaining parts would have to be 0; only the empty tail is possible.
    return (others == 0 && rest == 0) ? placements : BigInt(0);
  }
  return placements * count_bounded_compositions(rest, others, m - 1);
}

std::optional<RenormalizationData> renormalization_split(const HComposition& p) {
  const auto parts = p.parts();
  const unsigned r = p.r();
  for (unsigned block = 1; block < r; ++block) {
    if (r % block != 0) continue;
    bool repeats = true;
    for (unsigned j = block; j < r && repeats; ++j) repeats = parts[j] == parts[j - block];
    if (!repeats) continue;
    HComposition head(std::vector<unsigned>(parts.begin(), parts.begin() + block));
    return RenormalizationData{block, head.n(), head.omega()};
  }
  return std::nullopt;
}

}  // namespace dcenter
