#include "dcenter/circle.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>

namespace dcenter {

namespace {

Rational frac(Rational v) {
  v.canonicalize();
  BigInt fl;
  mpz_fdiv_q(fl.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  v -= fl;
  return v;
}

std::string describe(const std::vector<Angle>& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) out += (i ? ", " : "") + set[i].str();
  return out + "}";
}

}  // namespace

Angle::Angle(const Rational& value) : value_(frac(value)) {}

Angle::Angle(long num, long den) {
  if (den == 0) throw Error(ErrorKind::Domain, "Angle: zero denominator");
  value_ = frac(Rational(num, den));
}

Angle Angle::parse(std::string_view text) {
  Rational v;
  if (v.set_str(std::string(text), 10) != 0 || v.get_den() == 0)
    throw Error(ErrorKind::Domain, "Angle: cannot parse '" + std::string(text) + "'");
  return Angle(v);
}

Angle Angle::times(unsigned long d) const { return Angle(value_ * Rational(d)); }

Rational ccw_distance(const Angle& from, const Angle& to) { return frac(to.value() - from.value()); }

OrbitInfo dmap_orbit(const Angle& theta, unsigned d, unsigned max_steps) {
  if (d < 2) throw Error(ErrorKind::Domain, "dmap_orbit: d must be >= 2");
  OrbitInfo out;
  std::map<Rational, unsigned> seen;
  Angle x = theta;
  for (unsigned step = 0; step <= max_steps; ++step) {
    const auto [it, inserted] = seen.emplace(x.value(), step);
    if (!inserted) {
      out.preperiod = it->second;
      if (out.preperiod == 0) out.period = step;
      return out;
    }
    out.orbit.push_back(x);
    x = x.times(d);
  }
  throw Error(ErrorKind::BoundedComputation,
              "dmap_orbit: no cycle within " + std::to_string(max_steps) + " steps");
}

std::optional<std::string> check_rotation_set(const RotationSet& rs) {
  const auto& a = rs.angles;
  if (rs.d < 2) return "degree below 2";
  if (rs.q < 1 || a.size() != rs.q) return "angle count differs from q";
  if (!std::is_sorted(a.begin(), a.end()) || std::adjacent_find(a.begin(), a.end()) != a.end())
    return "angles not strictly increasing";
  const BigInt modulus = ipow(static_cast<long>(rs.d), rs.q) - 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (modulus % a[i].denominator() != 0) return "denominator of " + a[i].str() + " does not divide d^q-1";
    const Angle image = a[i].times(rs.d);
    const auto pos = std::lower_bound(a.begin(), a.end(), image);
    if (pos == a.end() || !(*pos == image)) return "image of " + a[i].str() + " leaves the set";
    const auto expected = (i + rs.p) % rs.q;
    if (static_cast<std::size_t>(pos - a.begin()) != expected)
      return "image of " + a[i].str() + " does not advance by p";
  }
  return std::nullopt;
}

std::vector<RotationSet> enumerate_rotation_sets(unsigned d, unsigned p, unsigned q) {
  if (d < 2) throw Error(ErrorKind::Domain, "enumerate_rotation_sets: d must be >= 2");
  if (q < 2 || p == 0 || p >= q || std::gcd(p, q) != 1)
    throw Error(ErrorKind::Domain, "enumerate_rotation_sets: need q >= 2, 0 < p < q, gcd(p,q) = 1");
  const BigInt big_modulus = ipow(static_cast<long>(d), q) - 1;
  constexpr std::uint64_t kSearchLimit = std::uint64_t{1} << 28;
  if (big_modulus > BigInt(static_cast<unsigned long>(kSearchLimit)))
    throw Error(ErrorKind::BoundedComputation, "enumerate_rotation_sets: d^q - 1 too large for exhaustive search");
  const std::uint64_t modulus = big_modulus.get_ui();

  std::vector<bool> visited(modulus, false);
  std::vector<std::uint64_t> cycle;
  std::vector<RotationSet> out;
  for (std::uint64_t start = 0; start < modulus; ++start) {
    if (visited[start]) continue;
    cycle.clear();
    std::uint64_t k = start;
    while (!visited[k]) {
      visited[k] = true;
      cycle.push_back(k);
      k = (k * d) % modulus;
    }
    // Every k/(d^q - 1) is periodic, so the walk closes on `start`.
    if (k != start || cycle.size() != q) continue;

    std::vector<std::uint64_t> sorted = cycle;
    std::sort(sorted.begin(), sorted.end());
    bool rotates = true;
    for (std::size_t i = 0; i < q && rotates; ++i) {
      const std::uint64_t image = (sorted[i] * d) % modulus;
      rotates = sorted[(i + p) % q] == image;
    }
    if (!rotates) continue;

    unsigned long_gaps = 0;
    for (std::size_t i = 0; i < q; ++i) {
      const std::uint64_t gap = (i + 1 < q) ? sorted[i + 1] - sorted[i] : sorted[0] + modulus - sorted[i];
      if (gap * d > modulus) ++long_gaps;
    }
    if (long_gaps != 1) continue;

    RotationSet rs{d, p, q, {}};
    for (auto v : sorted) rs.angles.emplace_back(Rational(BigInt(static_cast<unsigned long>(v)), big_modulus));
    out.push_back(std::move(rs));
  }
  return out;
}

GapArc widest_gap(const RotationSet& rs) {
  const auto& a = rs.angles;
  if (a.empty()) throw Error(ErrorKind::Domain, "widest_gap: empty rotation set");
  std::size_t best = 0;
  Rational best_len = -1;
  bool tie = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& next = a[(i + 1) % a.size()];
    Rational len = ccw_distance(a[i], next);
    if (a.size() == 1) len = 1;
    if (len > best_len) {
      best_len = len;
      best = i;
      tie = false;
    } else if (len == best_len) {
      tie = true;
    }
  }
  if (tie) throw Error(ErrorKind::Ambiguity, "widest_gap: tie for the widest gap in " + describe(a));
  return {a[best], a[(best + 1) % a.size()], best_len};
}

std::string ArcLabel::str() const {
  switch (kind) {
    case ArcKind::Y: return "Y" + std::to_string(j);
    case ArcKind::C: return "C";
    case ArcKind::A: return "A" + std::to_string(j);
    case ArcKind::B: return "B" + std::to_string(k) + "," + std::to_string(j);
  }
  return "?";
}

namespace {

// Index i of the open arc (cuts[i], cuts[i+1]) containing x; the last arc wraps.
// Returns nullopt if x is a cut point.
std::optional<std::size_t> arc_index(const std::vector<Angle>& cuts, const Angle& x) {
  const auto pos = std::lower_bound(cuts.begin(), cuts.end(), x);
  if (pos != cuts.end() && *pos == x) return std::nullopt;
  if (pos == cuts.begin()) return cuts.size() - 1;
  return static_cast<std::size_t>(pos - cuts.begin()) - 1;
}

Angle midpoint(const Angle& from, const Angle& to) {
  Rational len = ccw_distance(from, to);
  if (len == 0) len = 1;
  return Angle(from.value() + len / 2);
}

}  // namespace

ArcModel build_arc_model(const RotationSet& rs) {
  if (auto bad = check_rotation_set(rs)) throw Error(ErrorKind::Domain, "build_arc_model: " + *bad);
  const unsigned d = rs.d;
  const unsigned q = rs.q;
  const auto& a = rs.angles;

  ArcModel model;
  model.rotation_set = rs;
  model.gap = widest_gap(rs);

  // Gap i runs from a[i] to a[i+1]; the map sends gap i to gap i + p.
  const auto g0 = static_cast<std::size_t>(std::find(a.begin(), a.end(), model.gap.tau_minus) - a.begin());
  std::vector<unsigned> label_of_gap(q);
  model.level0.resize(q);
  for (unsigned j = 0; j < q; ++j) {
    const std::size_t gap = (g0 + std::size_t{j} * rs.p) % q;
    label_of_gap[gap] = j;
    model.level0[j] = Arc{a[gap], a[(gap + 1) % q], ArcLabel{ArcKind::Y, j, 0}};
  }

  for (const auto& x : a)
    for (unsigned t = 0; t < d; ++t) model.level1_cuts.emplace_back((x.value() + t) / Rational(d));
  std::sort(model.level1_cuts.begin(), model.level1_cuts.end());
  const auto& cuts = model.level1_cuts;

  // For each j, the preimage arcs of Y_{j+1} lying in Y_0, with their ccw offset from tau-.
  std::vector<std::vector<std::pair<Rational, std::size_t>>> b_arcs(q);
  model.level1.reserve(cuts.size());
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    Arc arc{cuts[i], cuts[(i + 1) % cuts.size()], {}};
    const Angle mid = midpoint(arc.start, arc.end);
    const unsigned home = label_of_gap[*arc_index(a, mid)];
    const unsigned image = label_of_gap[*arc_index(a, mid.times(d))];
    if (image == 1) {
      if (home != 0) throw Error(ErrorKind::Domain, "build_arc_model: preimage of Y1 outside Y0");
      arc.label = {ArcKind::C, 0, 0};
    } else {
      const unsigned j = (image + q - 1) % q;
      if (home != 0) {
        if (home != j) throw Error(ErrorKind::Domain, "build_arc_model: misplaced A arc");
        arc.label = {ArcKind::A, j, 0};
      } else {
        b_arcs[j].emplace_back(ccw_distance(model.gap.tau_minus, arc.start), model.level1.size());
        arc.label = {ArcKind::B, j, 0};
      }
    }
    model.level1.push_back(std::move(arc));
  }
  for (unsigned j = 1; j < q; ++j) {
    auto& group = b_arcs[j];
    if (group.size() != d - 1) throw Error(ErrorKind::Domain, "build_arc_model: wrong number of B arcs");
    std::sort(group.begin(), group.end());
    for (std::size_t k = 0; k < group.size(); ++k) model.level1[group[k].second].label.k = static_cast<unsigned>(k + 1);
  }
  return model;
}

std::size_t locate_level1(const ArcModel& model, const Angle& theta) {
  const auto idx = arc_index(model.level1_cuts, theta);
  if (!idx) throw Error(ErrorKind::Boundary, "angle " + theta.str() + " lies on an arc boundary");
  return *idx;
}

HComposition Itinerary::composition() const {
  std::vector<unsigned> parts;
  parts.reserve(legs.size());
  for (const auto& leg : legs) parts.push_back(leg.a);
  return HComposition(std::move(parts));
}

Itinerary arc_itinerary(const Angle& theta, const ArcModel& model) {
  const unsigned d = model.rotation_set.d;
  const unsigned q = model.rotation_set.q;
  const OrbitInfo info = dmap_orbit(theta, d);
  if (!info.period) throw Error(ErrorKind::Domain, "arc_itinerary: " + theta.str() + " is not periodic");
  const unsigned period = *info.period;

  std::vector<ArcLabel> labels;
  labels.reserve(period);
  for (const auto& x : info.orbit) labels.push_back(model.level1[locate_level1(model, x)].label);
  const auto in_y0 = [](const ArcLabel& l) { return l.kind == ArcKind::C || l.kind == ArcKind::B; };

  const auto first = std::find_if(labels.begin(), labels.end(), in_y0);
  if (first == labels.end()) throw Error(ErrorKind::Domain, "arc_itinerary: orbit never enters Y0");

  std::vector<Leg> legs;
  const auto start = static_cast<unsigned>(first - labels.begin());
  unsigned travelled = 0;
  while (travelled < period) {
    const ArcLabel& here = labels[(start + travelled) % period];
    const Leg leg = here.kind == ArcKind::C ? Leg{q, 0} : Leg{q - here.j, here.k};
    for (unsigned s = 1; s < leg.a; ++s)
      if (in_y0(labels[(start + travelled + s) % period]))
        throw Error(ErrorKind::Domain, "arc_itinerary: inconsistent arc model");
    travelled += leg.a;
    legs.push_back(leg);
  }
  if (travelled != period || !in_y0(labels[start]))
    throw Error(ErrorKind::Domain, "arc_itinerary: legs do not close up");

  const auto c_leg = std::find_if(legs.begin(), legs.end(), [q](const Leg& l) { return l.a == q; });
  if (c_leg == legs.end()) throw Error(ErrorKind::Domain, "arc_itinerary: orbit never visits a C arc");
  std::rotate(legs.begin(), c_leg, legs.end());
  return Itinerary{d, q, std::move(legs)};
}

std::vector<Itinerary> enumerate_itineraries(const HComposition& p, unsigned d) {
  if (d < 2) throw Error(ErrorKind::Domain, "enumerate_itineraries: d must be >= 2");
  if (p.first() == 1)
    throw Error(ErrorKind::SpecialCase, "enumerate_itineraries: a_1 = 1 is the single center c = 0");
  const auto parts = p.parts();
  const unsigned q = p.first();
  std::vector<std::size_t> free_slots;
  Itinerary base{d, q, {}};
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const bool forced = k == 0 || parts[k] == q;
    base.legs.push_back(Leg{parts[k], forced ? 0U : 1U});
    if (!forced) free_slots.push_back(k);
  }
  std::vector<Itinerary> out;
  while (true) {
    out.push_back(base);
    // Odometer over the free b-values, last slot fastest.
    auto slot = free_slots.rbegin();
    for (; slot != free_slots.rend(); ++slot) {
      auto& b = base.legs[*slot].b;
      if (b + 1 <= d - 1) {
        ++b;
        break;
      }
      b = 1;
    }
    if (slot == free_slots.rend()) break;
  }
  return out;
}

std::vector<AnglePairChoice> angle_pair_choices(const Itinerary& it, const RotationSet& rs, unsigned n) {
  if (it.d != rs.d || it.q != rs.q)
    throw Error(ErrorKind::Domain, "angle_pair_choices: itinerary and rotation set disagree on d or q");
  unsigned total = 0;
  for (const auto& leg : it.legs) total += leg.a;
  if (total != n || it.legs.empty() || it.legs.front().a != it.q)
    throw Error(ErrorKind::Domain, "angle_pair_choices: legs do not form an H-composition of n");
  const unsigned d = it.d;
  const GapArc gap = widest_gap(rs);
  const unsigned digits = n >= 2 ? n - 2 : 0;

  std::vector<unsigned> base(digits, 0);
  std::vector<std::size_t> free_digits;
  unsigned step = it.legs.front().a;
  for (std::size_t k = 1; k < it.legs.size(); ++k) {
    const std::size_t index = step - 1;  // kappa_{step-1}, stored at step - 2
    if (it.legs[k].a == it.q)
      free_digits.push_back(index - 1);
    else
      base[index - 1] = it.legs[k].b;
    step += it.legs[k].a;
  }

  const BigInt scale = ipow(static_cast<long>(d), n - 1);
  const auto read_base_d = [d](const std::vector<unsigned>& kappa) {
    BigInt x;
    for (std::size_t i = kappa.size(); i-- > 0;) x = (x + kappa[i]) * d;  // sum kappa_i d^i, i >= 1
    return x;
  };

  std::vector<AnglePairChoice> out;
  std::vector<unsigned> kappa = base;
  while (true) {
    AnglePairChoice choice;
    choice.tau_minus = gap.tau_minus;
    choice.tau_plus = gap.tau_plus;
    choice.kappa_minus = kappa;
    choice.kappa_plus = kappa;
    if (digits > 0) choice.kappa_plus[0] = (kappa[0] + 1) % d;
    choice.x_minus = read_base_d(choice.kappa_minus);
    choice.x_plus = read_base_d(choice.kappa_plus);
    choice.eta_minus = Angle((gap.tau_minus.value() + choice.x_minus) / scale);
    choice.eta_plus = Angle((gap.tau_plus.value() + choice.x_plus) / scale);
    out.push_back(std::move(choice));

    auto slot = free_digits.rbegin();
    for (; slot != free_digits.rend(); ++slot) {
      if (kappa[*slot] + 1 < d) {
        ++kappa[*slot];
        break;
      }
      kappa[*slot] = 0;
    }
    if (slot == free_digits.rend()) break;
  }
  return out;
}

std::pair<Angle, Angle> fixed_angles(const AnglePairChoice& choice, unsigned d, unsigned n) {
  if (d < 2 || n < 2) throw Error(ErrorKind::Domain, "fixed_angles: need d >= 2 and n >= 2");
  const BigInt denom = ipow(static_cast<long>(d), n - 1) - 1;
  return {Angle(Rational(choice.x_minus, denom)), Angle(Rational(choice.x_plus, denom))};
}

Prop32Ledger prop32_ledger(const HComposition& p, unsigned d) {
  if (d == 0) throw Error(ErrorKind::Domain, "prop32_count: d must be >= 1");
  if (p.first() == 1)
    throw Error(ErrorKind::SpecialCase, "prop32_count: a_1 = 1 is the single center c = 0");
  // z -> z + c has no periodic centers beyond the trivial one
  if (d == 1) return Prop32Ledger{};
  const unsigned q = p.first();
  std::vector<RotationSet> sets;
  for (unsigned rot = 1; rot < q; ++rot) {
    if (std::gcd(rot, q) != 1) continue;
    auto found = enumerate_rotation_sets(d, rot, q);
    sets.insert(sets.end(), std::make_move_iterator(found.begin()), std::make_move_iterator(found.end()));
  }
  const auto itineraries = enumerate_itineraries(p, d);

  Prop32Ledger ledger;
  ledger.rotation_sets = static_cast<unsigned long>(sets.size());
  ledger.itineraries = static_cast<unsigned long>(itineraries.size());
  std::optional<std::size_t> per_pair;
  for (const auto& rs : sets) {
    for (const auto& it : itineraries) {
      const std::size_t count = angle_pair_choices(it, rs, p.n()).size();
      if (per_pair && *per_pair != count)
        throw Error(ErrorKind::Domain, "prop32_count: angle-pair count depends on the itinerary");
      per_pair = count;
      ledger.total += static_cast<unsigned long>(count);
    }
  }
  ledger.angle_pairs = static_cast<unsigned long>(per_pair.value_or(0));
  return ledger;
}

BigInt prop32_count(const HComposition& p, unsigned d) { return prop32_ledger(p, d).total; }

const char* to_string(PortraitProperty property) noexcept {
  switch (property) {
    case PortraitProperty::Finite: return "a: finite";
    case PortraitProperty::Bijective: return "b: bijective cyclic images";
    case PortraitProperty::Periodic: return "c: common period";
    case PortraitProperty::Unlinked: return "d: pairwise unlinked";
  }
  return "?";
}

bool unlinked(const std::vector<Angle>& s, const std::vector<Angle>& t) {
  std::vector<Angle> cuts = s;
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  if (cuts.empty() || t.empty()) return true;
  std::optional<std::size_t> shared;
  for (const auto& x : t) {
    const auto idx = arc_index(cuts, x);
    if (!idx) throw Error(ErrorKind::Domain, "unlinked: sets share the angle " + x.str());
    if (shared && *shared != *idx) return false;
    shared = idx;
  }
  return true;
}

OrbitPortrait build_portrait(const Angle& theta_minus, const Angle& theta_plus, unsigned d, unsigned n) {
  if (n == 0) throw Error(ErrorKind::Domain, "build_portrait: n must be >= 1");
  if (theta_minus == theta_plus) throw Error(ErrorKind::Domain, "build_portrait: angles must differ");
  const auto om = dmap_orbit(theta_minus, d);
  const auto op = dmap_orbit(theta_plus, d);
  if (!om.period || !op.period) throw Error(ErrorKind::Domain, "build_portrait: angles must be periodic");

  OrbitPortrait portrait;
  std::vector<Angle> current{theta_minus, theta_plus};
  for (unsigned j = 0; j < n; ++j) {
    std::vector<Angle> sorted = current;
    std::sort(sorted.begin(), sorted.end());
    portrait.theta_sets.push_back(std::move(sorted));
    std::vector<Angle> next;
    for (const auto& x : current) next.push_back(x.times(d));
    current = std::move(next);
  }

  const auto& sets = portrait.theta_sets;
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t next = (j + 1) % n;
    std::vector<Angle> image;
    for (const auto& x : sets[j]) image.push_back(x.times(d));
    std::sort(image.begin(), image.end());
    if (std::adjacent_find(image.begin(), image.end()) != image.end() || image != sets[next])
      throw PortraitError(PortraitProperty::Bijective, j, next,
                          "portrait: d maps Theta_" + std::to_string(j) + " = " + describe(sets[j]) +
                              " to " + describe(image) + ", not bijectively onto Theta_" + std::to_string(next));
  }

  if (*om.period != *op.period || *om.period % n != 0)
    throw PortraitError(PortraitProperty::Periodic, 0, 0,
                        "portrait: periods " + std::to_string(*om.period) + " and " + std::to_string(*op.period) +
                            " are not a common multiple of n = " + std::to_string(n));

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      bool separated = false;
      try {
        separated = unlinked(sets[i], sets[j]);
      } catch (const Error&) {
        separated = false;  // shared angle
      }
      if (!separated)
        throw PortraitError(PortraitProperty::Unlinked, i, j,
                            "portrait: Theta_" + std::to_string(i) + " = " + describe(sets[i]) + " and Theta_" +
                                std::to_string(j) + " = " + describe(sets[j]) + " are linked");
    }
  }
  return portrait;
}

}  // namespace dcenter
