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

#include <string>
#include <vector>

#include "nonauto/rational.hpp"

namespace nonauto {

/// One interval with per-endpoint openness. A closed singleton is lo == hi
/// with both flags false; lo == hi with any open flag denotes the empty set.
struct Interval {
  Rat lo;
  bool lo_open = false;
  Rat hi;
  bool hi_open = false;

  Interval() = default;
  Interval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {}
  Interval(Rat l, bool lo_o, Rat h, bool hi_o)
      : lo(std::move(l)), lo_open(lo_o), hi(std::move(h)), hi_open(hi_o) {}

  static Interval closed(Rat l, Rat h) { return Interval(l, false, h, false); }
  static Interval open(Rat l, Rat h) { return Interval(l, true, h, true); }
  static Interval point(Rat x) { return Interval(x, false, x, false); }

  bool empty() const {
    return lo > hi || (lo == hi && (lo_open || hi_open));
  }
  bool contains(const Rat& x) const;
  bool is_point() const { return lo == hi && !lo_open && !hi_open; }

  friend bool operator==(const Interval& a, const Interval& b) = default;

  std::string str() const;
};

/// Normalized finite union of intervals in [0,1]: components are sorted,
/// pairwise disjoint, and non-adjacent (touching components whose union is
/// an interval are merged). Immutable value type.
class IntervalSet {
 public:
  IntervalSet() = default;
  explicit IntervalSet(Interval iv);
  explicit IntervalSet(std::vector<Interval> components);

  static IntervalSet empty_set() { return IntervalSet(); }
  static IntervalSet point(Rat x) { return IntervalSet(Interval::point(x)); }
  static IntervalSet closed(Rat lo, Rat hi) {
    return IntervalSet(Interval::closed(std::move(lo), std::move(hi)));
  }
  static IntervalSet open(Rat lo, Rat hi) {
    return IntervalSet(Interval::open(std::move(lo), std::move(hi)));
  }
  /// The whole phase space [0,1].
  static IntervalSet unit() { return closed(Rat(0), Rat(1)); }

  const std::vector<Interval>& components() const { return comps_; }
  bool empty() const { return comps_.empty(); }

  bool contains(const Rat& x) const;
  bool subset_of(const IntervalSet& other) const;
  bool intersects(const IntervalSet& other) const;

  IntervalSet unioned(const IntervalSet& other) const;
  IntervalSet intersect(const IntervalSet& other) const;
  IntervalSet closure() const;

  /// sup-extent of the set: hi of the last component minus lo of the first.
  /// Zero for empty sets.
  Rat diameter() const;
  /// Total Lebesgue length.
  Rat measure() const;

  friend bool operator==(const IntervalSet& a, const IntervalSet& b) = default;

  std::string str() const;

 private:
  std::vector<Interval> comps_;
  void normalize();
};

/// Exact two-sided Hausdorff distance with respect to |x - y|, computed on
/// closures (the thickening definition is closure-insensitive). Throws
/// SpaceMismatch when either set is empty.
Rat hausdorff_distance(const IntervalSet& a, const IntervalSet& b);

std::ostream& operator<<(std::ostream& os, const IntervalSet& s);

}  // namespace nonauto
