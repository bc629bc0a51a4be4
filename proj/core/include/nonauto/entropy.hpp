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

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "nonauto/family.hpp"

namespace nonauto {

/// Open cover of [0,1] by rational open intervals; endpoints may lie
/// outside [0,1] so that 0 and 1 can be interior to elements.
struct Cover {
  std::vector<std::pair<Rat, Rat>> elements;

  /// Throws NotACover unless the union contains [0,1]; exact sweep.
  void validate() const;

  /// The overlapping ladder cover ((i-1)/m, (i+1)/m), i = 0..m.
  static Cover mesh(unsigned m);
};

/// Cover whose elements are finite unions of relatively open intervals in
/// [0,1] (joins and pullbacks leave the single-interval world).
struct JoinedCover {
  std::vector<IntervalSet> elements;

  static JoinedCover from_cover(const Cover& c);
  bool covers_unit() const;
};

struct SubcoverResult {
  size_t cardinality = 0;
  /// True when solved exactly (branch and bound); false for the greedy
  /// upper bound beyond the element cap.
  bool exact = true;
};

/// Minimum cardinality of a subcover: the endpoint partition reduces the
/// question to finite set cover over atoms, solved exactly by branch and
/// bound up to `branch_and_bound_cap` elements and by greedy (flagged as an
/// upper bound) beyond. Throws NotACover if the elements do not cover.
SubcoverResult min_subcover_cardinality(const JoinedCover& cover,
                                        size_t branch_and_bound_cap = 24);

/// All pairwise intersections, empties dropped, exact duplicates merged.
JoinedCover join(const JoinedCover& c1, const JoinedCover& c2);

/// Exact preimage cover omega_k^{-1}(C) for a PL family.
JoinedCover pullback(OmegaChain& chain, size_t k, const Cover& c);

struct EntropyEstimate {
  struct PerDepth {
    size_t k = 0;
    /// Exact integer: minimal subcover cardinality, or lap count.
    BigInt count;
    bool exact = true;
    double log_nat = 0.0;
    double per_step = 0.0;  // log_nat / k
  };
  std::vector<PerDepth> per_k;
  /// Tail estimates over the last ceil(K/2) depths. The paper's definition
  /// uses limsup while its entropy lemma works with liminf, so both are
  /// reported and neither is asserted as "the" value.
  double limsup_tail = 0.0;
  double liminf_tail = 0.0;
  std::string method;  // "cover" or "lap"
  bool any_upper_bound_only = false;

  void finalize_tail();
};

/// H(U v omega_1^{-1} U v ... v omega_{k-1}^{-1} U)/k for k <= depth,
/// with exact minimal-subcover integers.
EntropyEstimate cover_entropy(OmegaChain& chain, const Cover& cover,
                              size_t depth);

/// (1/k) log lap(omega_k): the lap-number estimator, used as the
/// independent desk oracle for PL systems.
EntropyEstimate lap_entropy(OmegaChain& chain, size_t depth);

struct EntropyComparison {
  double family_estimate = 0.0;       // h(F) tail estimate (lap method)
  double composition_estimate = 0.0;  // h(g) tail estimate
  size_t family_size = 0;
  size_t depth_family = 0;
  size_t depth_composition = 0;
  double gap = 0.0;  // family_estimate - composition_estimate / n
  bool inequality_holds = false;
  EntropyEstimate family_detail;
  EntropyEstimate composition_detail;
};

/// Tests h(F) >= (1/n) h(g) - tolerance at matched depths with exact lap
/// integers on both sides; depth adapts downward under the breakpoint
/// budget and the achieved depths are reported.
EntropyComparison compare_family_vs_composition(const Family& family,
                                                size_t depth,
                                                double tolerance = 0.05);

struct CoverLadderResult {
  struct Rung {
    unsigned mesh = 0;
    bool completed = false;
    EntropyEstimate estimate;
  };
  std::vector<Rung> rungs;
  double best_limsup = 0.0;
  double best_liminf = 0.0;
  /// Lap estimate at the same depth: the convergence oracle for the ladder.
  EntropyEstimate lap_oracle;
};

/// Mesh-cover ladder m = 2, 4, ..., max_mesh: monotone lower bounds toward
/// the sup over all covers, with the lap estimator as oracle.
CoverLadderResult cover_entropy_ladder(const Family& family, size_t depth,
                                       unsigned max_mesh = 8);

}  // namespace nonauto
