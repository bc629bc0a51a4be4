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

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "nonauto/family.hpp"

namespace nonauto {

/// Finite truncation of the definitions' quantifiers: open sets are
/// truncated to a mesh of width-1/m cells, n -> infinity to a horizon N,
/// limsup/liminf to a tail window. Verdicts always carry these parameters
/// so claims are never overstated.
struct MeshParams {
  unsigned mesh = 16;
  unsigned horizon = 64;
  Rat eps;        // Hausdorff tolerance; default 1/(4m)
  Rat eps_prime;  // proximality tolerance for scrambled pairs; 1/(64m)
  unsigned tail = 0;  // estimate window; default horizon/2
  size_t breakpoint_budget = OmegaChain::kDefaultBreakpointBudget;

  static MeshParams with(unsigned mesh, unsigned horizon);
  void fill_defaults();
  void validate() const;
};

enum class VerdictStatus {
  certified_true,     // exact machine-checkable witness, no truncation
  verified_at_scale,  // holds for every mesh cell within the horizon
  refuted_at_scale,   // fails for some mesh cell within the horizon
  certified_false,    // exact counter-certificate (trap, identity cycle)
};

std::string verdict_status_name(VerdictStatus s);

struct Verdict {
  VerdictStatus status;
  std::string property;
  MeshParams params;
  /// Structured evidence; deterministic serialization.
  nlohmann::json witness;
  /// Typed certificates, when the verdict is certified:
  std::optional<IntervalSet> trap;        // forward-invariant proper set
  std::optional<size_t> identity_period;  // omega_p = identity, p as stated
  std::optional<size_t> common_index;     // e.g. the simultaneous index r

  bool positive() const {
    return status == VerdictStatus::certified_true ||
           status == VerdictStatus::verified_at_scale;
  }
};

nlohmann::json interval_set_to_json(const IntervalSet& s);
nlohmann::json verdict_to_json(const Verdict& v);

/// The open mesh cells ((i/m, (i+1)/m)) used as stand-ins for arbitrary
/// open sets on the interval.
std::vector<IntervalSet> mesh_cells(unsigned m);
/// Closed variants, used for containment-style checks (dense periodicity).
std::vector<IntervalSet> mesh_cells_closed(unsigned m);
/// All binary cylinders over window [-w, w]; the shift-space mesh.
std::vector<Cylinder> mesh_cylinders(long w);

struct TrapSearchParams {
  unsigned max_denominator = 16;  // lattice refinement ladder 2,4,...,max
  unsigned iteration_cap = 256;
  unsigned component_cap = 512;
};

/// Searches for a proper closed forward-invariant set with nonempty
/// interior: seeds are atoms of the breakpoint lattice (refined by a dyadic
/// denominator ladder), expanded by A -> A ∪ g(A) to a fixed point. Returns
/// the first trap found in deterministic coarse-to-fine order, or nullopt
/// if none within budget. Traps are exact certificates of non-transitivity.
std::optional<IntervalSet> find_invariant_trap(
    const PLMap& g, const TrapSearchParams& params = {});

/// Common trap for every member of a finite cyclic PL family.
std::optional<IntervalSet> find_family_trap(
    const Family& family, const TrapSearchParams& params = {});

Verdict check_transitivity(const Family& family, const MeshParams& params);

/// Simultaneous Hausdorff criterion: one index r <= N with
/// d_H(omega_r(U_i), X) < eps for every given set at once. An empty list
/// means the full mesh; supplying m sets exercises the m-fold product
/// criterion directly.
Verdict check_weak_mixing(const Family& family,
                          const std::vector<IntervalSet>& sets,
                          const MeshParams& params);

Verdict check_topological_mixing(const Family& family,
                                 const MeshParams& params);

Verdict check_dense_periodicity(const Family& family, const MeshParams& params,
                                size_t period_cap, size_t multiple_cap);

/// Dense-orbit proxy for minimality (necessary, not sufficient; reports are
/// labeled accordingly). Empty sample list selects a default grid.
Verdict check_minimality(const Family& family,
                         const std::vector<PointVar>& samples,
                         const MeshParams& params);

Verdict check_sensitivity(const Family& family, const MeshParams& params,
                          const Rat& delta);

struct ScrambledPair {
  PointVar x;
  PointVar y;
  Rat limsup_est;
  Rat liminf_est;
  bool scrambled_at_scale;
};

struct ScrambledReport {
  std::vector<ScrambledPair> pairs;
  /// Exact period-3 orbit of the cyclic composition, when one exists: by
  /// the interval result "period three implies Li-Yorke chaos" lifted
  /// through the composition, this certifies the family chaotic.
  std::optional<std::vector<Rat>> period3_cycle;
  Verdict verdict;
};

/// Tail limsup/liminf estimates of pairwise orbit distances. Empty
/// candidate list selects the default denominator-bounded grid plus any
/// periodic points found at small periods.
ScrambledReport find_scrambled_pairs(const Family& family,
                                     const std::vector<PointVar>& candidates,
                                     const MeshParams& params);

}  // namespace nonauto
