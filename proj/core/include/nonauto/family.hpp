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

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "nonauto/plmap.hpp"
#include "nonauto/spaces.hpp"

namespace nonauto {

/// A point in whichever phase space the family acts on.
using PointVar = std::variant<Rat, CirclePoint, ShiftPoint, CylPoint>;

std::string point_str(const PointVar& p);

/// Generator of the map sequence (f_k)_{k>=1}. Finite families are applied
/// cyclically: step k uses member 1 + ((k-1) mod n).
class Family {
 public:
  struct FiniteCyclicPL {
    std::vector<PLMap> maps;
  };
  struct FiniteCyclicRotation {
    std::vector<QAlpha> deltas;  // turns
  };
  struct FiniteCyclicShift {
    std::vector<ShiftDirection> dirs;
  };
  struct FiniteCyclicTwist {
    std::vector<int> signs;  // each +1 or -1
  };
  /// f_k(x) = q_k for all x, with (q_k) the fixed enumeration of Q in [0,1]:
  /// 0 followed by the Calkin-Wilf sequence filtered to (0,1].
  struct ConstantEnumeration {};
  /// Step k rotates by theta / base^k (in turns).
  struct RotationSequence {
    QAlpha theta;
    unsigned base = 3;
  };

  using Kind =
      std::variant<FiniteCyclicPL, FiniteCyclicRotation, FiniteCyclicShift,
                   FiniteCyclicTwist, ConstantEnumeration, RotationSequence>;

  explicit Family(Kind kind);

  const Kind& kind() const { return kind_; }
  SpaceKind space() const;

  /// Cycle length for finite cyclic families, nullopt for rule-generated.
  std::optional<size_t> cycle_length() const;
  bool is_finite_cyclic() const { return cycle_length().has_value(); }

  /// The PL map applied at step k (1-based). Also defined for the constant
  /// enumeration (constant maps are PL). Throws for non-interval families.
  PLMap pl_member(uint64_t k) const;
  /// Rotation applied at step k for circle families.
  QAlpha rotation_member(uint64_t k) const;
  ShiftDirection shift_member(uint64_t k) const;
  int twist_member(uint64_t k) const;

  /// Applies f_k to a point of the matching space.
  PointVar apply(uint64_t k, const PointVar& x) const;

  /// Exact pairwise commutativity check for finite cyclic PL families.
  bool is_commutative() const;

  /// The k-th term of the rational enumeration (1-based).
  static Rat enumeration_term(uint64_t k);

 private:
  Kind kind_;
};

/// Append-only cache of the composed state maps omega_n = f_n o ... o f_1.
/// For PL families the cache stores exact PLMaps and enforces a total
/// breakpoint budget, since compositions grow exponentially; exceeding the
/// budget raises ResourceBudgetExceeded rather than approximating.
class OmegaChain {
 public:
  static constexpr size_t kDefaultBreakpointBudget = 1'000'000;

  explicit OmegaChain(Family family,
                      size_t breakpoint_budget = kDefaultBreakpointBudget);

  const Family& family() const { return family_; }

  /// omega_n as a PLMap (interval families only). omega_0 is the identity.
  const PLMap& pl(size_t n);

  /// Cumulative rotation angle after n steps (circle families).
  QAlpha rotation(size_t n);

  /// Whether the cumulative rotation after n steps is an integer number of
  /// turns. Exact, and cheap even for n ~ 10^4: the divisibility test runs
  /// on unreduced numerator/denominator pairs.
  bool rotation_is_integral(size_t n);

  /// Net displacement after n steps (shift families): left = +1.
  long displacement(size_t n);

  /// Net twist coefficient after n steps: omega_n(r,theta) = (r,theta+c*r).
  long twist_coefficient(size_t n);

  /// Applies omega_n to a point (any space), by stepping members.
  PointVar state(size_t n, const PointVar& x);

  size_t breakpoints_used() const { return breakpoints_used_; }

 private:
  Family family_;
  size_t budget_;
  size_t breakpoints_used_ = 0;
  std::vector<PLMap> pl_;
  std::vector<QAlpha> angles_;
  // base^n cache for rotation sequences; the integrality test runs on
  // unreduced numerator/denominator pairs built from these.
  std::vector<BigInt> powers_;
  std::vector<long> displacements_;
  std::vector<long> coefficients_;
};

/// Exact orbit prefix omega_1(x), ..., omega_N(x).
std::vector<PointVar> orbit(const Family& family, const PointVar& x, size_t n);

/// g = f_n o ... o f_1 for a finite cyclic PL family, with per-member
/// surjectivity (Lemma-hypothesis bookkeeping: the equivalences need it)
/// and exact commutativity.
struct AutonomousReduction {
  PLMap g = PLMap::identity();
  size_t family_size = 0;
  std::vector<bool> member_surjective;
  bool commutative = false;
};
AutonomousReduction reduce_to_autonomous(const Family& family);

struct PeriodicWitness {
  PointVar point;
  /// When a whole interval is fixed (identity pieces), its extent.
  std::optional<Interval> range;
  size_t period;
  size_t multiples_verified;
  /// True when omega_{nk}(x) = x holds for all k by exact structure
  /// (cyclic family: omega_{nk} = g^k), not just up to multiples_verified.
  bool all_multiples_certified;
};

/// Verifies omega_{n k}(x) = x exactly for all k <= multiple_cap, stepping
/// family members.
bool verify_periodic(const Family& family, const PointVar& x, size_t n,
                     size_t multiple_cap);

/// Finds periodic witnesses: solves omega_n(x) = x for each n <= period_cap
/// and verifies omega_{nk}(x) = x for k <= multiple_cap.
std::vector<PeriodicWitness> find_periodic_points(OmegaChain& chain,
                                                  size_t period_cap,
                                                  size_t multiple_cap);

/// A transitivity hit: omega_index(U) meets V.
struct TransitivityHit {
  IntervalSet u;
  IntervalSet v;
  size_t index;
};

/// Lifts a fixed point of g^k (cyclic family of size n) to the family-level
/// witness at index n*k and re-verifies it exactly. Throws TransferFailed
/// if re-verification fails (that would be a composition bug, the lemma
/// guarantees success).
PeriodicWitness transfer_periodic_witness(OmegaChain& chain, const Rat& point,
                                          size_t g_period,
                                          size_t multiple_cap);

/// Lifts a hit g^k(U) ∩ V != {} to omega_{nk}(U) ∩ V != {}, re-verified.
TransitivityHit transfer_transitivity_hit(OmegaChain& chain,
                                          const TransitivityHit& g_hit);

}  // namespace nonauto
