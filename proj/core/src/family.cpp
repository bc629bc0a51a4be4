// Copyright 2026 The nonauto Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nonauto/family.hpp"

#include <mutex>

namespace nonauto {

std::string point_str(const PointVar& p) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Rat>) {
          return x.str();
        } else {
          return x.str();
        }
      },
      p);
}

Family::Family(Kind kind) : kind_(std::move(kind)) {
  if (const auto* pl = std::get_if<FiniteCyclicPL>(&kind_)) {
    if (pl->maps.empty()) throw ValidationError("empty PL family");
  } else if (const auto* rot = std::get_if<FiniteCyclicRotation>(&kind_)) {
    if (rot->deltas.empty()) throw ValidationError("empty rotation family");
  } else if (const auto* sh = std::get_if<FiniteCyclicShift>(&kind_)) {
    if (sh->dirs.empty()) throw ValidationError("empty shift family");
  } else if (const auto* tw = std::get_if<FiniteCyclicTwist>(&kind_)) {
    if (tw->signs.empty()) throw ValidationError("empty twist family");
    for (int s : tw->signs) {
      if (s != 1 && s != -1) throw ValidationError("twist sign must be +-1");
    }
  } else if (const auto* rs = std::get_if<RotationSequence>(&kind_)) {
    if (rs->base < 2) throw ValidationError("rotation sequence base >= 2");
  }
}

SpaceKind Family::space() const {
  if (std::holds_alternative<FiniteCyclicPL>(kind_) ||
      std::holds_alternative<ConstantEnumeration>(kind_)) {
    return SpaceKind::interval;
  }
  if (std::holds_alternative<FiniteCyclicRotation>(kind_) ||
      std::holds_alternative<RotationSequence>(kind_)) {
    return SpaceKind::circle;
  }
  if (std::holds_alternative<FiniteCyclicShift>(kind_)) {
    return SpaceKind::shift;
  }
  return SpaceKind::cylinder;
}

std::optional<size_t> Family::cycle_length() const {
  if (const auto* pl = std::get_if<FiniteCyclicPL>(&kind_)) {
    return pl->maps.size();
  }
  if (const auto* rot = std::get_if<FiniteCyclicRotation>(&kind_)) {
    return rot->deltas.size();
  }
  if (const auto* sh = std::get_if<FiniteCyclicShift>(&kind_)) {
    return sh->dirs.size();
  }
  if (const auto* tw = std::get_if<FiniteCyclicTwist>(&kind_)) {
    return tw->signs.size();
  }
  return std::nullopt;
}

namespace {

size_t cyclic_index(uint64_t k, size_t n) {
  return static_cast<size_t>((k - 1) % n);
}

}  // namespace

PLMap Family::pl_member(uint64_t k) const {
  if (const auto* pl = std::get_if<FiniteCyclicPL>(&kind_)) {
    return pl->maps[cyclic_index(k, pl->maps.size())];
  }
  if (std::holds_alternative<ConstantEnumeration>(kind_)) {
    return PLMap::constant(enumeration_term(k));
  }
  throw UnsupportedComposition("family member " + std::to_string(k) +
                               " is not an interval map");
}

QAlpha Family::rotation_member(uint64_t k) const {
  if (const auto* rot = std::get_if<FiniteCyclicRotation>(&kind_)) {
    return rot->deltas[cyclic_index(k, rot->deltas.size())];
  }
  if (const auto* rs = std::get_if<RotationSequence>(&kind_)) {
    Rat scale(1);
    const Rat base(static_cast<long long>(rs->base));
    for (uint64_t i = 0; i < k; ++i) scale /= base;
    return scale * rs->theta;
  }
  throw UnsupportedComposition("family member " + std::to_string(k) +
                               " is not a rotation");
}

ShiftDirection Family::shift_member(uint64_t k) const {
  if (const auto* sh = std::get_if<FiniteCyclicShift>(&kind_)) {
    return sh->dirs[cyclic_index(k, sh->dirs.size())];
  }
  throw UnsupportedComposition("family member " + std::to_string(k) +
                               " is not a shift");
}

int Family::twist_member(uint64_t k) const {
  if (const auto* tw = std::get_if<FiniteCyclicTwist>(&kind_)) {
    return tw->signs[cyclic_index(k, tw->signs.size())];
  }
  throw UnsupportedComposition("family member " + std::to_string(k) +
                               " is not a twist");
}

PointVar Family::apply(uint64_t k, const PointVar& x) const {
  switch (space()) {
    case SpaceKind::interval:
      return pl_member(k).evaluate(std::get<Rat>(x));
    case SpaceKind::circle:
      return rotate(RotationMap{rotation_member(k)},
                    std::get<CirclePoint>(x));
    case SpaceKind::shift:
      return std::get<ShiftPoint>(x).shifted(shift_member(k));
    case SpaceKind::cylinder:
      return twist(TwistMap{twist_member(k)}, std::get<CylPoint>(x));
  }
  throw UnsupportedComposition("unknown space");
}

bool Family::is_commutative() const {
  const auto* pl = std::get_if<FiniteCyclicPL>(&kind_);
  if (!pl) {
    // Rotations, shifts and twists all commute.
    return true;
  }
  for (size_t i = 0; i < pl->maps.size(); ++i) {
    for (size_t j = i + 1; j < pl->maps.size(); ++j) {
      if (compose(pl->maps[i], pl->maps[j]) !=
          compose(pl->maps[j], pl->maps[i])) {
        return false;
      }
    }
  }
  return true;
}

Rat Family::enumeration_term(uint64_t k) {
  // 0, then the Calkin-Wilf walk over positive rationals filtered to (0,1].
  // The walk visits every positive rational exactly once, so the filtered
  // sequence enumerates Q intersected with [0,1] without repetition.
  static std::mutex mu;
  static std::vector<Rat> cache{Rat(0)};
  static Rat walk(1);

  std::lock_guard<std::mutex> lock(mu);
  while (cache.size() < k) {
    if (walk <= Rat(1)) cache.push_back(walk);
    // q -> 1 / (2 floor(q) + 1 - q)
    walk = Rat(1) / (Rat(2) * Rat(walk.floor()) + Rat(1) - walk);
  }
  return cache[static_cast<size_t>(k - 1)];
}

// ---------------------------------------------------------------------------

OmegaChain::OmegaChain(Family family, size_t breakpoint_budget)
    : family_(std::move(family)), budget_(breakpoint_budget) {}

const PLMap& OmegaChain::pl(size_t n) {
  if (family_.space() != SpaceKind::interval) {
    throw UnsupportedComposition("omega as PLMap needs an interval family");
  }
  if (pl_.empty()) {
    pl_.push_back(PLMap::identity());
    breakpoints_used_ += pl_.back().breakpoint_count();
  }
  while (pl_.size() <= n) {
    PLMap next = compose(family_.pl_member(pl_.size()), pl_.back());
    breakpoints_used_ += next.breakpoint_count();
    if (breakpoints_used_ > budget_) {
      throw ResourceBudgetExceeded(
          "omega chain exceeded breakpoint budget at n=" +
          std::to_string(pl_.size()));
    }
    pl_.push_back(std::move(next));
  }
  return pl_[n];
}

QAlpha OmegaChain::rotation(size_t n) {
  if (family_.space() != SpaceKind::circle) {
    throw UnsupportedComposition("cumulative rotation needs a circle family");
  }
  if (angles_.empty()) angles_.push_back(QAlpha(Rat(0)));
  while (angles_.size() <= n) {
    angles_.push_back(angles_.back() +
                      family_.rotation_member(angles_.size()));
  }
  return angles_[n];
}

bool OmegaChain::rotation_is_integral(size_t n) {
  if (const auto* rs = std::get_if<Family::RotationSequence>(&family_.kind())) {
    if (n == 0) return true;
    if (!rs->theta.is_rational()) {
      // b * sum(base^-i) is never zero for n >= 1, so never integral.
      return false;
    }
    // Cumulative angle = theta * (base^n - 1) / ((base-1) * base^n), tested
    // for integrality without reducing the fraction.
    if (powers_.empty()) powers_.push_back(BigInt(1));
    while (powers_.size() <= n) {
      powers_.push_back(powers_.back() *
                        BigInt(static_cast<long long>(rs->base)));
    }
    const BigInt& power = powers_[n];
    const BigInt num = rs->theta.a.numerator() * (power - 1);
    const BigInt den = rs->theta.a.denominator() *
                       BigInt(static_cast<long long>(rs->base) - 1) * power;
    return num % den == 0;
  }
  return rotation(n).is_integral_mod1();
}

long OmegaChain::displacement(size_t n) {
  if (family_.space() != SpaceKind::shift) {
    throw UnsupportedComposition("displacement needs a shift family");
  }
  if (displacements_.empty()) displacements_.push_back(0);
  while (displacements_.size() <= n) {
    const long step =
        family_.shift_member(displacements_.size()) == ShiftDirection::left
            ? 1
            : -1;
    displacements_.push_back(displacements_.back() + step);
  }
  return displacements_[n];
}

long OmegaChain::twist_coefficient(size_t n) {
  if (family_.space() != SpaceKind::cylinder) {
    throw UnsupportedComposition("twist coefficient needs a cylinder family");
  }
  if (coefficients_.empty()) coefficients_.push_back(0);
  while (coefficients_.size() <= n) {
    coefficients_.push_back(coefficients_.back() +
                            family_.twist_member(coefficients_.size()));
  }
  return coefficients_[n];
}

PointVar OmegaChain::state(size_t n, const PointVar& x) {
  PointVar y = x;
  for (size_t k = 1; k <= n; ++k) y = family_.apply(k, y);
  return y;
}

// ---------------------------------------------------------------------------

std::vector<PointVar> orbit(const Family& family, const PointVar& x,
                            size_t n) {
  if (n < 1) throw ValidationError("orbit horizon must be >= 1");
  std::vector<PointVar> out;
  out.reserve(n);
  PointVar y = x;
  for (size_t k = 1; k <= n; ++k) {
    y = family.apply(k, y);
    out.push_back(y);
  }
  return out;
}

AutonomousReduction reduce_to_autonomous(const Family& family) {
  const auto* pl = std::get_if<Family::FiniteCyclicPL>(&family.kind());
  if (!pl) {
    throw UnsupportedComposition(
        "reduce_to_autonomous needs a finite cyclic PL family");
  }
  AutonomousReduction red;
  red.family_size = pl->maps.size();
  red.g = PLMap::identity();
  for (const PLMap& f : pl->maps) red.g = compose(f, red.g);
  red.member_surjective.reserve(pl->maps.size());
  for (const PLMap& f : pl->maps) {
    red.member_surjective.push_back(f.is_surjective());
  }
  red.commutative = family.is_commutative();
  return red;
}

namespace {

bool point_known(const std::vector<PeriodicWitness>& ws, const PointVar& x) {
  for (const PeriodicWitness& w : ws) {
    if (w.point == x) return true;
    if (w.range && std::holds_alternative<Rat>(x) &&
        w.range->contains(std::get<Rat>(x))) {
      return true;
    }
  }
  return false;
}

}  // namespace

bool verify_periodic(const Family& family, const PointVar& x, size_t n,
                     size_t multiple_cap) {
  PointVar y = x;
  uint64_t step = 0;
  for (size_t k = 1; k <= multiple_cap; ++k) {
    for (size_t i = 0; i < n; ++i) y = family.apply(++step, y);
    if (!(y == x)) return false;
  }
  return true;
}

std::vector<PeriodicWitness> find_periodic_points(OmegaChain& chain,
                                                  size_t period_cap,
                                                  size_t multiple_cap) {
  if (period_cap < 1 || multiple_cap < 1) {
    throw ValidationError("period_cap and multiple_cap must be >= 1");
  }
  const Family& family = chain.family();
  const auto cycle = family.cycle_length();
  std::vector<PeriodicWitness> out;

  switch (family.space()) {
    case SpaceKind::interval: {
      for (size_t n = 1; n <= period_cap; ++n) {
        const PLMap& omega_n = chain.pl(n);
        const auto fixed = omega_n.fixed_points();
        const bool structural = cycle && n % *cycle == 0;
        for (const Rat& x : fixed.points) {
          if (point_known(out, PointVar(x))) continue;
          if (!verify_periodic(family, PointVar(x), n, multiple_cap)) {
            continue;
          }
          out.push_back({PointVar(x), std::nullopt, n, multiple_cap,
                         structural});
        }
        for (const Interval& range : fixed.ranges) {
          const Rat mid = (range.lo + range.hi) / Rat(2);
          if (point_known(out, PointVar(mid))) continue;
          if (!verify_periodic(family, PointVar(mid), n, multiple_cap)) {
            continue;
          }
          out.push_back({PointVar(mid), range, n, multiple_cap, structural});
        }
      }
      return out;
    }
    case SpaceKind::circle: {
      for (size_t n = 1; n <= period_cap; ++n) {
        if (!chain.rotation_is_integral(n)) continue;
        // Rotation periodicity is point-independent; witness with angle 0.
        const bool structural = cycle && n % *cycle == 0;
        bool ok = true;
        if (!structural) {
          for (size_t k = 2; k <= multiple_cap && ok; ++k) {
            ok = chain.rotation_is_integral(n * k);
          }
        }
        if (!ok) continue;
        out.push_back({PointVar(CirclePoint(QAlpha(Rat(0)))), std::nullopt, n,
                       multiple_cap, structural});
        break;  // least period found; all points share it
      }
      return out;
    }
    case SpaceKind::shift: {
      for (size_t n = 1; n <= period_cap; ++n) {
        const long d = chain.displacement(n);
        const bool structural = cycle && n % *cycle == 0;
        if (d == 0 && structural) {
          out.push_back({PointVar(ShiftPoint("01")), std::nullopt, n,
                         multiple_cap, true});
          break;  // omega_n is the identity: every point has period <= n
        }
        // Constant words are fixed by every shift.
        if (n == 1) {
          if (verify_periodic(family, PointVar(ShiftPoint("0")), 1,
                               multiple_cap)) {
            out.push_back({PointVar(ShiftPoint("0")), std::nullopt, 1,
                           multiple_cap, structural});
          }
        }
      }
      return out;
    }
    case SpaceKind::cylinder: {
      for (size_t n = 1; n <= period_cap; ++n) {
        const long c = chain.twist_coefficient(n);
        const bool structural = cycle && n % *cycle == 0;
        if (c == 0 && structural) {
          out.push_back(
              {PointVar(CylPoint(Rat(1, 2), QAlpha(Rat(0)))), std::nullopt,
               n, multiple_cap, true});
          break;  // omega_n is the identity on the cylinder
        }
        if (n == 1) {
          // r = 0 is fixed by every twist.
          if (verify_periodic(family,
                               PointVar(CylPoint(Rat(0), QAlpha(Rat(0)))), 1,
                               multiple_cap)) {
            out.push_back({PointVar(CylPoint(Rat(0), QAlpha(Rat(0)))),
                           std::nullopt, 1, multiple_cap, structural});
          }
        }
      }
      return out;
    }
  }
  return out;
}

PeriodicWitness transfer_periodic_witness(OmegaChain& chain, const Rat& point,
                                          size_t g_period,
                                          size_t multiple_cap) {
  const Family& family = chain.family();
  const auto cycle = family.cycle_length();
  if (!cycle) {
    throw UnsupportedComposition("witness transfer needs a cyclic family");
  }
  const size_t n = *cycle * g_period;
  if (!verify_periodic(family, PointVar(point), n, multiple_cap)) {
    throw TransferFailed("periodic witness " + point.str() +
                         " failed re-verification at family index " +
                         std::to_string(n));
  }
  return {PointVar(point), std::nullopt, n, multiple_cap, true};
}

TransitivityHit transfer_transitivity_hit(OmegaChain& chain,
                                          const TransitivityHit& g_hit) {
  const Family& family = chain.family();
  const auto cycle = family.cycle_length();
  if (!cycle) {
    throw UnsupportedComposition("witness transfer needs a cyclic family");
  }
  if (family.space() != SpaceKind::interval) {
    throw UnsupportedComposition("transitivity transfer needs PL maps");
  }
  const size_t index = *cycle * g_hit.index;
  IntervalSet s = g_hit.u;
  for (size_t k = 1; k <= index; ++k) {
    s = family.pl_member(k).image(s);
  }
  if (!s.intersects(g_hit.v)) {
    throw TransferFailed("transitivity hit failed re-verification at index " +
                         std::to_string(index));
  }
  return {g_hit.u, g_hit.v, index};
}

}  // namespace nonauto
