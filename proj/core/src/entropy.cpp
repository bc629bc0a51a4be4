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

#include "nonauto/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace nonauto {

namespace {

constexpr size_t kJoinElementBudget = 60'000;

double log_of_bigint(const BigInt& n) {
  return std::log(n.convert_to<double>());
}

}  // namespace

void Cover::validate() const {
  if (elements.empty()) throw NotACover("cover has no elements");
  for (const auto& [lo, hi] : elements) {
    if (lo >= hi) throw NotACover("cover element (" + lo.str() + ", " +
                                  hi.str() + ") is empty");
  }
  // Greedy sweep: extend the covered prefix [0, reach) while the frontier
  // point is interior to some element.
  Rat reach(0);
  size_t guard = 0;
  while (reach <= Rat(1)) {
    Rat best = reach;
    bool found = false;
    for (const auto& [lo, hi] : elements) {
      if (lo < reach && hi > reach && hi > best) {
        best = hi;
        found = true;
      }
    }
    if (!found) {
      throw NotACover("point " + reach.str() + " is uncovered");
    }
    reach = best;
    if (++guard > elements.size() + 1) {
      throw NotACover("cover sweep failed to progress");
    }
  }
}

Cover Cover::mesh(unsigned m) {
  if (m < 2) throw ValidationError("mesh cover needs m >= 2");
  Cover c;
  const Rat denom(static_cast<long long>(m));
  for (unsigned i = 0; i <= m; ++i) {
    const long long ii = static_cast<long long>(i);
    c.elements.emplace_back(Rat(ii - 1) / denom, Rat(ii + 1) / denom);
  }
  return c;
}

JoinedCover JoinedCover::from_cover(const Cover& c) {
  c.validate();
  JoinedCover out;
  out.elements.reserve(c.elements.size());
  for (const auto& [lo, hi] : c.elements) {
    // Clip to [0,1]; an endpoint strictly outside makes the boundary point
    // interior relative to the space, hence closed in the clipped form.
    Rat l = lo;
    bool l_open = true;
    if (l < Rat(0)) {
      l = Rat(0);
      l_open = false;
    }
    Rat h = hi;
    bool h_open = true;
    if (h > Rat(1)) {
      h = Rat(1);
      h_open = false;
    }
    Interval iv(l, l_open, h, h_open);
    if (!iv.empty()) out.elements.push_back(IntervalSet(iv));
  }
  return out;
}

bool JoinedCover::covers_unit() const {
  IntervalSet u;
  for (const auto& e : elements) u = u.unioned(e);
  return u == IntervalSet::unit();
}

// ---------------------------------------------------------------------------
// Minimal subcover via the endpoint partition.

namespace {

struct AtomizedCover {
  // Atoms partition [0,1]: point atoms at the endpoint lattice and open
  // atoms between consecutive lattice points. Each element covers whole
  // atoms, recorded as contiguous ranges of atom indices.
  size_t atom_count = 0;
  std::vector<std::vector<std::pair<size_t, size_t>>> ranges;  // [begin,end)
};

AtomizedCover atomize(const JoinedCover& cover) {
  std::set<Rat> lattice{Rat(0), Rat(1)};
  for (const auto& e : cover.elements) {
    for (const Interval& iv : e.components()) {
      lattice.insert(iv.lo);
      lattice.insert(iv.hi);
    }
  }
  std::vector<Rat> pts(lattice.begin(), lattice.end());
  auto index_of = [&](const Rat& x) -> size_t {
    return static_cast<size_t>(
        std::lower_bound(pts.begin(), pts.end(), x) - pts.begin());
  };
  // Atom 2i is the point pts[i]; atom 2i+1 is the open gap to pts[i+1].
  // Every component endpoint is a lattice member, so a component covers a
  // contiguous run of atoms determined by its endpoint indices alone.
  AtomizedCover out;
  out.atom_count = 2 * pts.size() - 1;
  out.ranges.resize(cover.elements.size());
  for (size_t e = 0; e < cover.elements.size(); ++e) {
    for (const Interval& iv : cover.elements[e].components()) {
      const size_t i = index_of(iv.lo);
      const size_t j = index_of(iv.hi);
      const size_t begin = iv.lo_open ? 2 * i + 1 : 2 * i;
      const size_t end = iv.hi_open ? 2 * j : 2 * j + 1;
      if (begin < end) out.ranges[e].emplace_back(begin, end);
    }
  }
  return out;
}

SubcoverResult solve_greedy(const AtomizedCover& ac) {
  std::vector<char> covered(ac.atom_count, 0);
  size_t remaining = ac.atom_count;
  size_t chosen = 0;
  std::vector<size_t> prefix(ac.atom_count + 1, 0);
  while (remaining > 0) {
    prefix[0] = 0;
    for (size_t a = 0; a < ac.atom_count; ++a) {
      prefix[a + 1] = prefix[a] + (covered[a] ? 0 : 1);
    }
    size_t best_gain = 0;
    size_t best_e = ac.ranges.size();
    for (size_t e = 0; e < ac.ranges.size(); ++e) {
      size_t gain = 0;
      for (const auto& [b, f] : ac.ranges[e]) gain += prefix[f] - prefix[b];
      if (gain > best_gain) {
        best_gain = gain;
        best_e = e;
      }
    }
    if (best_e == ac.ranges.size()) {
      throw NotACover("elements do not cover [0,1]");
    }
    for (const auto& [b, f] : ac.ranges[best_e]) {
      for (size_t a = b; a < f; ++a) {
        if (!covered[a]) {
          covered[a] = 1;
          --remaining;
        }
      }
    }
    ++chosen;
  }
  return {chosen, /*exact=*/false};
}

SubcoverResult solve_branch_and_bound(const AtomizedCover& ac) {
  const size_t n = ac.ranges.size();
  // Atom -> bitmask of covering elements; keep only minimal masks (an atom
  // whose mask contains another's is covered automatically).
  std::vector<uint32_t> masks(ac.atom_count, 0);
  for (size_t e = 0; e < n; ++e) {
    for (const auto& [b, f] : ac.ranges[e]) {
      for (size_t a = b; a < f; ++a) masks[a] |= (1u << e);
    }
  }
  for (uint32_t m : masks) {
    if (m == 0) throw NotACover("elements do not cover [0,1]");
  }
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::vector<uint32_t> goals;
  for (uint32_t m : masks) {
    bool minimal = true;
    for (uint32_t other : masks) {
      if (other != m && (other & m) == other) {
        minimal = false;
        break;
      }
    }
    if (minimal) goals.push_back(m);
  }

  size_t best = solve_greedy(ac).cardinality;  // upper bound to prune from
  std::vector<uint32_t> pending = goals;
  // Depth-first: branch on the elements of the hardest pending goal.
  struct Frame {
    std::vector<uint32_t> pending;
    size_t used;
  };
  std::vector<Frame> stack{{std::move(pending), 0}};
  while (!stack.empty()) {
    Frame fr = std::move(stack.back());
    stack.pop_back();
    if (fr.pending.empty()) {
      best = std::min(best, fr.used);
      continue;
    }
    if (fr.used + 1 >= best) continue;  // even one more element cannot win
    // Hardest goal: fewest covering elements.
    size_t pick = 0;
    int pick_pop = 33;
    for (size_t i = 0; i < fr.pending.size(); ++i) {
      const int pop = __builtin_popcount(fr.pending[i]);
      if (pop < pick_pop) {
        pick_pop = pop;
        pick = i;
      }
    }
    const uint32_t goal = fr.pending[pick];
    for (size_t e = 0; e < n; ++e) {
      if (!(goal & (1u << e))) continue;
      std::vector<uint32_t> rest;
      rest.reserve(fr.pending.size());
      for (uint32_t g : fr.pending) {
        if (!(g & (1u << e))) rest.push_back(g);
      }
      stack.push_back({std::move(rest), fr.used + 1});
    }
  }
  return {best, /*exact=*/true};
}

}  // namespace

SubcoverResult min_subcover_cardinality(const JoinedCover& cover,
                                        size_t branch_and_bound_cap) {
  if (cover.elements.empty()) throw NotACover("cover has no elements");
  const AtomizedCover ac = atomize(cover);
  if (cover.elements.size() <= branch_and_bound_cap &&
      branch_and_bound_cap <= 32) {
    return solve_branch_and_bound(ac);
  }
  return solve_greedy(ac);
}

JoinedCover join(const JoinedCover& c1, const JoinedCover& c2) {
  JoinedCover out;
  out.elements.reserve(c1.elements.size());
  std::set<std::string> seen;
  for (const auto& a : c1.elements) {
    for (const auto& b : c2.elements) {
      IntervalSet meet = a.intersect(b);
      if (meet.empty()) continue;
      if (!seen.insert(meet.str()).second) continue;
      out.elements.push_back(std::move(meet));
      if (out.elements.size() > kJoinElementBudget) {
        throw ResourceBudgetExceeded("joined cover exceeded element budget");
      }
    }
  }
  return out;
}

JoinedCover pullback(OmegaChain& chain, size_t k, const Cover& c) {
  const JoinedCover base = JoinedCover::from_cover(c);
  if (k == 0) return base;
  const PLMap& omega = chain.pl(k);
  JoinedCover out;
  out.elements.reserve(base.elements.size());
  for (const auto& e : base.elements) {
    IntervalSet pre = omega.preimage(e);
    if (!pre.empty()) out.elements.push_back(std::move(pre));
  }
  return out;
}

void EntropyEstimate::finalize_tail() {
  if (per_k.empty()) return;
  const size_t window = (per_k.size() + 1) / 2;
  limsup_tail = per_k[per_k.size() - window].per_step;
  liminf_tail = limsup_tail;
  for (size_t i = per_k.size() - window; i < per_k.size(); ++i) {
    limsup_tail = std::max(limsup_tail, per_k[i].per_step);
    liminf_tail = std::min(liminf_tail, per_k[i].per_step);
  }
  any_upper_bound_only = false;
  for (const auto& p : per_k) {
    if (!p.exact) any_upper_bound_only = true;
  }
}

EntropyEstimate cover_entropy(OmegaChain& chain, const Cover& cover,
                              size_t depth) {
  if (depth < 2) throw ValidationError("cover entropy depth must be >= 2");
  EntropyEstimate est;
  est.method = "cover";
  JoinedCover joined = JoinedCover::from_cover(cover);
  for (size_t k = 1; k <= depth; ++k) {
    if (k > 1) {
      joined = join(joined, pullback(chain, k - 1, cover));
    }
    const SubcoverResult sub = min_subcover_cardinality(joined);
    EntropyEstimate::PerDepth row;
    row.k = k;
    row.count = BigInt(static_cast<long long>(sub.cardinality));
    row.exact = sub.exact;
    row.log_nat = log_of_bigint(row.count);
    row.per_step = row.log_nat / static_cast<double>(k);
    est.per_k.push_back(std::move(row));
  }
  est.finalize_tail();
  return est;
}

EntropyEstimate lap_entropy(OmegaChain& chain, size_t depth) {
  if (depth < 1) throw ValidationError("lap entropy depth must be >= 1");
  EntropyEstimate est;
  est.method = "lap";
  for (size_t k = 1; k <= depth; ++k) {
    EntropyEstimate::PerDepth row;
    row.k = k;
    row.count = BigInt(static_cast<long long>(chain.pl(k).lap_count()));
    row.exact = true;
    row.log_nat = log_of_bigint(row.count);
    row.per_step = row.log_nat / static_cast<double>(k);
    est.per_k.push_back(std::move(row));
  }
  est.finalize_tail();
  return est;
}

EntropyComparison compare_family_vs_composition(const Family& family,
                                                size_t depth,
                                                double tolerance) {
  const auto cycle = family.cycle_length();
  if (!cycle || family.space() != SpaceKind::interval) {
    throw UnsupportedComposition(
        "family/composition comparison needs a finite cyclic PL family");
  }
  const AutonomousReduction red = reduce_to_autonomous(family);
  const Family g_family(Family::FiniteCyclicPL{{red.g}});

  // Adapt the depth downward until both chains fit the breakpoint budget;
  // composition laps grow exponentially.
  size_t k = depth;
  EntropyEstimate family_est, comp_est;
  while (k >= 2) {
    try {
      OmegaChain family_chain(family);
      OmegaChain g_chain(g_family);
      comp_est = lap_entropy(g_chain, k);
      family_est = lap_entropy(family_chain, *cycle * k);
      break;
    } catch (const ResourceBudgetExceeded&) {
      if (k == 2) throw;
      k /= 2;
    }
  }

  EntropyComparison cmp;
  cmp.family_size = *cycle;
  cmp.depth_family = *cycle * k;
  cmp.depth_composition = k;
  cmp.family_estimate = family_est.limsup_tail;
  cmp.composition_estimate = comp_est.limsup_tail;
  cmp.gap = cmp.family_estimate -
            cmp.composition_estimate / static_cast<double>(*cycle);
  cmp.inequality_holds = cmp.gap >= -tolerance;
  cmp.family_detail = std::move(family_est);
  cmp.composition_detail = std::move(comp_est);
  return cmp;
}

CoverLadderResult cover_entropy_ladder(const Family& family, size_t depth,
                                       unsigned max_mesh) {
  if (family.space() != SpaceKind::interval) {
    throw UnsupportedComposition("cover entropy needs a PL family");
  }
  CoverLadderResult result;
  {
    OmegaChain chain(family);
    result.lap_oracle = lap_entropy(chain, depth);
  }
  bool first = true;
  for (unsigned m = 2; m <= max_mesh; m *= 2) {
    CoverLadderResult::Rung rung;
    rung.mesh = m;
    try {
      OmegaChain chain(family);
      rung.estimate = cover_entropy(chain, Cover::mesh(m), depth);
      rung.completed = true;
      if (first || rung.estimate.limsup_tail > result.best_limsup) {
        result.best_limsup = rung.estimate.limsup_tail;
      }
      if (first || rung.estimate.liminf_tail > result.best_liminf) {
        result.best_liminf = rung.estimate.liminf_tail;
      }
      first = false;
    } catch (const ResourceBudgetExceeded&) {
      rung.completed = false;
    }
    result.rungs.push_back(std::move(rung));
  }
  return result;
}

}  // namespace nonauto
