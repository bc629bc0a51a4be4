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

#include "nonauto/interval_set.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace nonauto {

bool Interval::contains(const Rat& x) const {
  if (x < lo || x > hi) return false;
  if (x == lo && lo_open) return false;
  if (x == hi && hi_open) return false;
  return true;
}

std::string Interval::str() const {
  std::ostringstream os;
  os << (lo_open ? '(' : '[') << lo.str() << ", " << hi.str()
     << (hi_open ? ')' : ']');
  return os.str();
}

IntervalSet::IntervalSet(Interval iv) : comps_{std::move(iv)} { normalize(); }

IntervalSet::IntervalSet(std::vector<Interval> components)
    : comps_(std::move(components)) {
  normalize();
}

void IntervalSet::normalize() {
  std::vector<Interval> in;
  in.reserve(comps_.size());
  for (auto& iv : comps_) {
    if (!iv.empty()) in.push_back(std::move(iv));
  }
  comps_.clear();
  if (in.empty()) return;

  std::sort(in.begin(), in.end(), [](const Interval& x, const Interval& y) {
    if (x.lo != y.lo) return x.lo < y.lo;
    return !x.lo_open && y.lo_open;  // closed endpoint first
  });

  Interval cur = in.front();
  for (size_t i = 1; i < in.size(); ++i) {
    const Interval& nxt = in[i];
    bool joins;
    if (nxt.lo < cur.hi) {
      joins = true;
    } else if (nxt.lo == cur.hi) {
      // Touching at one point: the union is an interval unless both sides
      // exclude the touch point.
      joins = !(cur.hi_open && nxt.lo_open);
    } else {
      joins = false;
    }
    if (!joins) {
      comps_.push_back(cur);
      cur = nxt;
      continue;
    }
    if (nxt.hi > cur.hi) {
      cur.hi = nxt.hi;
      cur.hi_open = nxt.hi_open;
    } else if (nxt.hi == cur.hi) {
      cur.hi_open = cur.hi_open && nxt.hi_open;
    }
  }
  comps_.push_back(cur);
}

bool IntervalSet::contains(const Rat& x) const {
  // Components are sorted; linear scan is fine at desk scale, but use the
  // usual binary search on lo.
  size_t lo = 0, hi = comps_.size();
  while (lo < hi) {
    const size_t mid = (lo + hi) / 2;
    if (comps_[mid].lo <= x) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo == 0) return false;
  return comps_[lo - 1].contains(x);
}

bool IntervalSet::subset_of(const IntervalSet& other) const {
  // After normalization a component fits inside the union iff it fits
  // inside a single component of `other` (gaps are nonempty).
  size_t j = 0;
  for (const Interval& a : comps_) {
    while (j < other.comps_.size() && other.comps_[j].hi < a.lo) ++j;
    bool ok = false;
    for (size_t k = j; k < other.comps_.size() && other.comps_[k].lo <= a.hi;
         ++k) {
      const Interval& b = other.comps_[k];
      const bool lo_ok = b.lo < a.lo || (b.lo == a.lo && (!b.lo_open || a.lo_open));
      const bool hi_ok = b.hi > a.hi || (b.hi == a.hi && (!b.hi_open || a.hi_open));
      if (lo_ok && hi_ok) {
        ok = true;
        break;
      }
    }
    if (!ok) return false;
  }
  return true;
}

namespace {

bool overlap(const Interval& a, const Interval& b, Interval* out) {
  Rat lo = a.lo;
  bool lo_open = a.lo_open;
  if (b.lo > lo || (b.lo == lo && b.lo_open)) {
    lo = b.lo;
    lo_open = (b.lo == a.lo) ? (a.lo_open || b.lo_open) : b.lo_open;
  }
  Rat hi = a.hi;
  bool hi_open = a.hi_open;
  if (b.hi < hi || (b.hi == hi && b.hi_open)) {
    hi = b.hi;
    hi_open = (b.hi == a.hi) ? (a.hi_open || b.hi_open) : b.hi_open;
  }
  Interval r(lo, lo_open, hi, hi_open);
  if (r.empty()) return false;
  if (out) *out = std::move(r);
  return true;
}

}  // namespace

bool IntervalSet::intersects(const IntervalSet& other) const {
  size_t i = 0, j = 0;
  while (i < comps_.size() && j < other.comps_.size()) {
    if (overlap(comps_[i], other.comps_[j], nullptr)) return true;
    if (comps_[i].hi < other.comps_[j].hi) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

IntervalSet IntervalSet::unioned(const IntervalSet& other) const {
  std::vector<Interval> all = comps_;
  all.insert(all.end(), other.comps_.begin(), other.comps_.end());
  return IntervalSet(std::move(all));
}

IntervalSet IntervalSet::intersect(const IntervalSet& other) const {
  std::vector<Interval> out;
  size_t i = 0, j = 0;
  while (i < comps_.size() && j < other.comps_.size()) {
    Interval r;
    if (overlap(comps_[i], other.comps_[j], &r)) out.push_back(std::move(r));
    if (comps_[i].hi < other.comps_[j].hi) {
      ++i;
    } else if (comps_[i].hi > other.comps_[j].hi) {
      ++j;
    } else {
      ++i;
      ++j;
    }
  }
  return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::closure() const {
  std::vector<Interval> out;
  out.reserve(comps_.size());
  for (const Interval& iv : comps_) {
    out.push_back(Interval::closed(iv.lo, iv.hi));
  }
  return IntervalSet(std::move(out));
}

Rat IntervalSet::diameter() const {
  if (comps_.empty()) return Rat(0);
  return comps_.back().hi - comps_.front().lo;
}

Rat IntervalSet::measure() const {
  Rat total(0);
  for (const Interval& iv : comps_) total += iv.hi - iv.lo;
  return total;
}

std::string IntervalSet::str() const {
  if (comps_.empty()) return "{}";
  std::string s;
  for (size_t i = 0; i < comps_.size(); ++i) {
    if (i) s += " u ";
    s += comps_[i].str();
  }
  return s;
}

namespace {

// Distance from a point to a closed nonempty interval union.
Rat point_set_distance(const Rat& x, const IntervalSet& closed_set) {
  const auto& comps = closed_set.components();
  Rat best = abs(x - comps.front().lo);
  for (const Interval& iv : comps) {
    if (x >= iv.lo && x <= iv.hi) return Rat(0);
    best = min(best, min(abs(x - iv.lo), abs(x - iv.hi)));
  }
  return best;
}

// sup_{a in A} d(a, B) for closed sets: the distance function is piecewise
// linear on A with candidate maxima at A's endpoints and at midpoints of
// B's gaps that lie inside A.
Rat directed_hausdorff(const IntervalSet& a, const IntervalSet& b) {
  Rat best(0);
  for (const Interval& iv : a.components()) {
    best = max(best, point_set_distance(iv.lo, b));
    best = max(best, point_set_distance(iv.hi, b));
  }
  const auto& bc = b.components();
  for (size_t i = 0; i + 1 < bc.size(); ++i) {
    const Rat mid = (bc[i].hi + bc[i + 1].lo) / Rat(2);
    if (a.contains(mid)) best = max(best, point_set_distance(mid, b));
  }
  return best;
}

}  // namespace

Rat hausdorff_distance(const IntervalSet& a, const IntervalSet& b) {
  if (a.empty() || b.empty()) {
    throw SpaceMismatch("hausdorff_distance: empty set");
  }
  const IntervalSet ca = a.closure();
  const IntervalSet cb = b.closure();
  return max(directed_hausdorff(ca, cb), directed_hausdorff(cb, ca));
}

std::ostream& operator<<(std::ostream& os, const IntervalSet& s) {
  return os << s.str();
}

}  // namespace nonauto
