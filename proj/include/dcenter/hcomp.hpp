#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "dcenter/numeric.hpp"

namespace dcenter {

/// An ordered composition a_1 + ... + a_r = n whose first part is maximal.
/// Construction validates the parts; instances are immutable.
class HComposition {
 public:
  explicit HComposition(std::vector<unsigned> parts);

  std::span<const unsigned> parts() const noexcept { return parts_; }
  unsigned first() const noexcept { return parts_.front(); }
  unsigned n() const noexcept { return n_; }
  unsigned r() const noexcept { return static_cast<unsigned>(parts_.size()); }
  /// Number of parts after the first that equal the first.
  unsigned omega() const noexcept { return omega_; }

  friend bool operator==(const HComposition&, const HComposition&) = default;

 private:
  std::vector<unsigned> parts_;
  unsigned n_ = 0;
  unsigned omega_ = 0;
};

/// Minimal repeating block of a renormalizable composition.
struct RenormalizationData {
  unsigned r_prime = 0;
  unsigned n_prime = 0;
  unsigned w_prime = 0;

  friend bool operator==(const RenormalizationData&, const RenormalizationData&) = default;
};

/// Streams H(n) in reverse-lexicographic order of the parts ([n] first,
/// [1,...,1] last). Throws Error{EmptyInput} when n = 0.
void for_each_hcomposition(unsigned n, const std::function<void(const HComposition&)>& visit);

std::vector<HComposition> enumerate_hcompositions(unsigned n);

unsigned multiplicity(const HComposition& p);

/// phi(a_1) * (d-1)^(r-omega) * d^omega, exact.
BigInt term_value(const HComposition& p, unsigned d);

struct IdentityCheck {
  BigInt lhs;
  BigInt rhs;
  bool equal = false;
};

/// Sum of term_value over H(n) against d^n - 1.
IdentityCheck identity_check(unsigned n, unsigned d);

/// Number of ordered b-tuples with entries in [1, s] summing to n.
BigInt count_bounded_compositions(long n, unsigned b, unsigned s);

/// Number of H-compositions of n with first part m, multiplicity w and r parts:
/// C(r-1, w) * C(n - (w+1)m, r-w-1, m-1).
BigInt count_hcomps_by(unsigned m, unsigned w, unsigned r, unsigned n);

std::optional<RenormalizationData> renormalization_split(const HComposition& p);

}  // namespace dcenter
