#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dcenter/error.hpp"
#include "dcenter/hcomp.hpp"
#include "dcenter/numeric.hpp"

namespace dcenter {

/// A point of R/Z stored as a reduced fraction in [0, 1).
class Angle {
 public:
  Angle() = default;
  explicit Angle(const Rational& value);
  Angle(long num, long den);

  /// Parses "a/b" or an integer; the value is reduced mod 1.
  static Angle parse(std::string_view text);

  const Rational& value() const noexcept { return value_; }
  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  /// theta -> d * theta (mod 1)
  Angle times(unsigned long d) const;

  std::string str() const { return value_.get_str(); }

  friend bool operator==(const Angle& a, const Angle& b) { return a.value_ == b.value_; }
  friend bool operator<(const Angle& a, const Angle& b) { return a.value_ < b.value_; }

 private:
  Rational value_{0};
};

/// Counterclockwise length from `from` to `to`, in [0, 1).
Rational ccw_distance(const Angle& from, const Angle& to);

struct OrbitInfo {
  std::vector<Angle> orbit;   ///< distinct points in visiting order
  std::optional<unsigned> period;  ///< set iff theta itself is periodic
  unsigned preperiod = 0;
};

/// Exact orbit of theta under theta -> d theta. Throws
/// Error{BoundedComputation} if no cycle closes within max_steps.
OrbitInfo dmap_orbit(const Angle& theta, unsigned d, unsigned max_steps = 1U << 20);

struct RotationSet {
  unsigned d = 0;
  unsigned p = 0;
  unsigned q = 0;
  std::vector<Angle> angles;  ///< increasing order in [0, 1)

  friend bool operator==(const RotationSet&, const RotationSet&) = default;
};

/// Returns a description of the first violated invariant, if any.
std::optional<std::string> check_rotation_set(const RotationSet& rs);

/// Rotation sets of rotation number p/q for theta -> d theta that can occur
/// as the ray set of the alpha fixed point of z^d + c: exact q-cycles whose
/// circular order advances by p and that have a single complementary arc
/// longer than 1/d. Found by exhaustive search over k/(d^q - 1).
std::vector<RotationSet> enumerate_rotation_sets(unsigned d, unsigned p, unsigned q);

/// Open counterclockwise arc from tau_minus to tau_plus.
struct GapArc {
  Angle tau_minus;
  Angle tau_plus;
  Rational length;

  bool contains_zero() const { return tau_plus < tau_minus; }
};

/// The strictly widest complementary arc. Throws Error{Ambiguity} on a tie.
GapArc widest_gap(const RotationSet& rs);

enum class ArcKind { Y, C, A, B };

/// Y_j and A_j use `j`; B_{k,j} uses both; C uses neither.
struct ArcLabel {
  ArcKind kind = ArcKind::Y;
  unsigned j = 0;
  unsigned k = 0;

  std::string str() const;
  friend bool operator==(const ArcLabel&, const ArcLabel&) = default;
};

struct Arc {
  Angle start;
  Angle end;
  ArcLabel label;
};

struct ArcModel {
  RotationSet rotation_set;
  GapArc gap;
  std::vector<Arc> level0;  ///< index j holds Y_j
  std::vector<Arc> level1;  ///< ordered by start angle
  std::vector<Angle> level1_cuts;  ///< sorted preimage of the rotation set
};

/// Combinatorial stand-in for the level-0 and level-1 puzzle pieces.
ArcModel build_arc_model(const RotationSet& rs);

/// Index into model.level1 of the open arc containing theta; throws
/// Error{Boundary} if theta is one of the cut points.
std::size_t locate_level1(const ArcModel& model, const Angle& theta);

struct Leg {
  unsigned a = 0;
  unsigned b = 0;
  friend bool operator==(const Leg&, const Leg&) = default;
};

struct Itinerary {
  unsigned d = 0;
  unsigned q = 0;
  std::vector<Leg> legs;

  HComposition composition() const;
  friend bool operator==(const Itinerary&, const Itinerary&) = default;
};

/// Reads the legs of the periodic orbit of theta through the level-1 arcs,
/// starting at its first visit to a C arc.
Itinerary arc_itinerary(const Angle& theta, const ArcModel& model);

/// All leg sequences compatible with P (b_k free in 1..d-1 when a_k < a_1).
/// Throws Error{SpecialCase} when a_1 = 1.
std::vector<Itinerary> enumerate_itineraries(const HComposition& p, unsigned d);

struct AnglePairChoice {
  Angle tau_minus;
  Angle tau_plus;
  std::vector<unsigned> kappa_minus;  ///< kappa_1 .. kappa_{n-2}
  std::vector<unsigned> kappa_plus;
  BigInt x_minus;
  BigInt x_plus;
  Angle eta_minus;
  Angle eta_plus;
};

/// The d^omega admissible (eta-, eta+) pairs for one itinerary and rotation set.
std::vector<AnglePairChoice> angle_pair_choices(const Itinerary& it, const RotationSet& rs, unsigned n);

/// Fixed points theta = X / (d^{n-1} - 1) of the two pull-back maps. Exposed
/// for experimentation only; their period divides n - 1.
std::pair<Angle, Angle> fixed_angles(const AnglePairChoice& choice, unsigned d, unsigned n);

struct Prop32Ledger {
  BigInt rotation_sets;   ///< sum over admissible p of the rotation-set count
  BigInt itineraries;
  BigInt angle_pairs;     ///< per (itinerary, rotation set); uniform
  BigInt total;           ///< all (rotation set, itinerary, pair) triples
};

/// Counts assembled by enumerating rotation sets, itineraries and angle pairs.
Prop32Ledger prop32_ledger(const HComposition& p, unsigned d);
BigInt prop32_count(const HComposition& p, unsigned d);

struct OrbitPortrait {
  std::vector<std::vector<Angle>> theta_sets;
};

enum class PortraitProperty { Finite, Bijective, Periodic, Unlinked };
const char* to_string(PortraitProperty property) noexcept;

class PortraitError : public Error {
 public:
  PortraitError(PortraitProperty property, std::size_t first, std::size_t second, const std::string& what)
      : Error(ErrorKind::PortraitInvalid, what), property_(property), pair_(first, second) {}

  PortraitProperty property() const noexcept { return property_; }
  std::pair<std::size_t, std::size_t> failing_pair() const noexcept { return pair_; }

 private:
  PortraitProperty property_;
  std::pair<std::size_t, std::size_t> pair_;
};

/// Theta_0 = {theta-, theta+}, Theta_j = d Theta_{j-1}; throws PortraitError
/// naming the violated property.
OrbitPortrait build_portrait(const Angle& theta_minus, const Angle& theta_plus, unsigned d, unsigned n);

/// True iff T lies in one complementary arc of S. Throws Error{Domain} if the
/// sets share a point.
bool unlinked(const std::vector<Angle>& s, const std::vector<Angle>& t);

}  // namespace dcenter
