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

#include "nonauto/spaces.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace nonauto {

std::string space_kind_name(SpaceKind k) {
  switch (k) {
    case SpaceKind::interval: return "interval";
    case SpaceKind::circle: return "circle";
    case SpaceKind::shift: return "shift";
    case SpaceKind::cylinder: return "cylinder";
  }
  return "?";
}

CirclePoint rotate(const RotationMap& m, const CirclePoint& p) {
  return CirclePoint(p.angle + m.delta);
}

Rat circle_distance(const CirclePoint& p, const CirclePoint& q) {
  const QAlpha diff = (p.angle - q.angle).reduced_mod1();
  if (!diff.is_rational()) {
    throw AlphaUndecidable(
        "circle distance with irrational angular difference " + diff.str());
  }
  const Rat d = diff.a;  // in [0,1)
  return min(d, Rat(1) - d);
}

// ---------------------------------------------------------------------------

namespace {

long mod_long(long value, long modulus) {
  long r = value % modulus;
  if (r < 0) r += modulus;
  return r;
}

// Smallest period of the bi-infinite repetition of `w`; divides |w|.
size_t primitive_period(const std::string& w) {
  for (size_t p = 1; p <= w.size(); ++p) {
    if (w.size() % p != 0) continue;
    bool ok = true;
    for (size_t i = p; i < w.size() && ok; ++i) ok = (w[i] == w[i - p]);
    if (ok) return p;
  }
  return w.size();
}

}  // namespace

ShiftPoint::ShiftPoint(const std::string& word, long offset) {
  if (word.empty()) throw ValidationError("shift point word must be nonempty");
  for (char c : word) {
    if (c != '0' && c != '1') {
      throw ValidationError("shift point word must be over {0,1}");
    }
  }
  const size_t p = primitive_period(word);
  word_.resize(p);
  for (size_t i = 0; i < p; ++i) {
    word_[i] = word[mod_long(static_cast<long>(i) + offset,
                             static_cast<long>(word.size()))];
  }
  // Canonical form: the primitive word aligned so position 0 is word_[0].
}

char ShiftPoint::at(long position) const {
  return word_[mod_long(position, static_cast<long>(word_.size()))];
}

ShiftPoint ShiftPoint::shifted(ShiftDirection dir) const {
  // Left shift moves the decimal point right: new(i) = old(i+1).
  const long delta = dir == ShiftDirection::left ? 1 : -1;
  return ShiftPoint(word_, delta);
}

ShiftPoint ShiftPoint::parse(const std::string& text) {
  const auto at = text.find('@');
  if (at == std::string::npos) return ShiftPoint(text, 0);
  const std::string word = text.substr(0, at);
  long offset = 0;
  try {
    offset = std::stol(text.substr(at + 1));
  } catch (const std::exception&) {
    throw ParseError("shift point \"" + text + "\"", "bad offset");
  }
  return ShiftPoint(word, offset);
}

Rat shift_distance(const ShiftPoint& x, const ShiftPoint& y) {
  if (x == y) return Rat(0);
  // The points are periodic with periods p, q; if they differ at all they
  // differ somewhere within |i| <= lcm(p, q).
  const long p = static_cast<long>(x.period());
  const long q = static_cast<long>(y.period());
  const long l = std::lcm(p, q);
  for (long k = 0; k <= l; ++k) {
    if (x.at(k) != y.at(k)) {
      Rat d(1);
      for (long i = 0; i < k; ++i) d /= Rat(2);
      return d;
    }
    if (x.at(-k) != y.at(-k)) {
      Rat d(1);
      for (long i = 0; i < k; ++i) d /= Rat(2);
      return d;
    }
  }
  // Equal on a full lcm window around 0 means equal everywhere.
  return Rat(0);
}

Cylinder::Cylinder(std::map<long, char> constraints)
    : constraints_(std::move(constraints)) {
  for (auto& [pos, sym] : constraints_) {
    if (sym != '0' && sym != '1') {
      throw ValidationError("cylinder symbols must be 0 or 1");
    }
  }
}

Cylinder Cylinder::translated(long by) const {
  std::map<long, char> moved;
  for (const auto& [pos, sym] : constraints_) moved.emplace(pos + by, sym);
  Cylinder c;
  c.constraints_ = std::move(moved);
  return c;
}

Cylinder Cylinder::shifted(ShiftDirection dir) const {
  // If x satisfies pos -> sym, the left-shifted point satisfies the
  // constraint at pos - 1.
  return translated(dir == ShiftDirection::left ? -1 : 1);
}

std::optional<Cylinder> Cylinder::intersect(const Cylinder& a,
                                            const Cylinder& b) {
  std::map<long, char> merged = a.constraints_;
  for (const auto& [pos, sym] : b.constraints_) {
    auto [it, inserted] = merged.emplace(pos, sym);
    if (!inserted && it->second != sym) return std::nullopt;
  }
  Cylinder c;
  c.constraints_ = std::move(merged);
  return c;
}

bool Cylinder::contains(const ShiftPoint& x) const {
  for (const auto& [pos, sym] : constraints_) {
    if (x.at(pos) != sym) return false;
  }
  return true;
}

ShiftPoint Cylinder::periodic_member() const {
  if (constraints_.empty()) return ShiftPoint("0", 0);
  const long lo = constraints_.begin()->first;
  const long hi = constraints_.rbegin()->first;
  std::string word;
  for (long i = lo; i <= hi; ++i) {
    auto it = constraints_.find(i);
    word += (it == constraints_.end()) ? '0' : it->second;
  }
  // Window [lo, hi] repeated with period hi-lo+1: position i reads
  // word[(i - lo) mod len], i.e. offset -lo in ShiftPoint's convention.
  return ShiftPoint(word, -lo);
}

std::optional<long> Cylinder::min_abs_constrained() const {
  if (constraints_.empty()) return std::nullopt;
  long best = 0;
  bool first = true;
  for (const auto& [pos, sym] : constraints_) {
    const long a = pos < 0 ? -pos : pos;
    if (first || a < best) {
      best = a;
      first = false;
    }
  }
  return best;
}

std::string Cylinder::str() const {
  if (constraints_.empty()) return "{*}";
  std::ostringstream os;
  os << '{';
  bool sep = false;
  for (const auto& [pos, sym] : constraints_) {
    if (sep) os << ", ";
    os << pos << ':' << sym;
    sep = true;
  }
  os << '}';
  return os.str();
}

Rat cylinder_distance_to_space(const Cylinder& c) {
  const auto k = c.min_abs_constrained();
  if (!k) return Rat(0);
  Rat d(1);
  for (long i = 0; i < *k; ++i) d /= Rat(2);
  // The worst point conflicts with the constraint nearest to the origin and
  // otherwise matches some member of the cylinder exactly.
  return d;
}

// ---------------------------------------------------------------------------

CylPoint twist(const TwistMap& m, const CylPoint& p) {
  const QAlpha moved =
      m.sign >= 0 ? p.theta + QAlpha(p.r) : p.theta - QAlpha(p.r);
  return CylPoint(p.r, moved);
}

Rat cylinder_point_distance(const CylPoint& p, const CylPoint& q) {
  const Rat dr = abs(p.r - q.r);
  const Rat dtheta =
      circle_distance(CirclePoint(p.theta), CirclePoint(q.theta));
  return max(dr, dtheta);
}

// ---------------------------------------------------------------------------

namespace {

template <typename Point, typename Dist>
Rat finite_hausdorff(const std::vector<Point>& a, const std::vector<Point>& b,
                     Dist dist) {
  if (a.empty() || b.empty()) {
    throw SpaceMismatch("hausdorff_distance: empty point set");
  }
  Rat worst(0);
  auto one_sided = [&](const std::vector<Point>& from,
                       const std::vector<Point>& to) {
    for (const Point& x : from) {
      Rat best = dist(x, to.front());
      for (size_t i = 1; i < to.size(); ++i) {
        best = min(best, dist(x, to[i]));
        if (best.is_zero()) break;
      }
      worst = max(worst, best);
    }
  };
  one_sided(a, b);
  one_sided(b, a);
  return worst;
}

}  // namespace

Rat hausdorff_distance(const HMetricSet& a, const HMetricSet& b) {
  if (a.index() != b.index()) {
    throw SpaceMismatch("hausdorff_distance: sets live in different spaces");
  }
  if (std::holds_alternative<IntervalSet>(a)) {
    return hausdorff_distance(std::get<IntervalSet>(a),
                              std::get<IntervalSet>(b));
  }
  if (std::holds_alternative<std::vector<CirclePoint>>(a)) {
    return finite_hausdorff(std::get<std::vector<CirclePoint>>(a),
                            std::get<std::vector<CirclePoint>>(b),
                            [](const CirclePoint& x, const CirclePoint& y) {
                              return circle_distance(x, y);
                            });
  }
  if (std::holds_alternative<std::vector<ShiftPoint>>(a)) {
    return finite_hausdorff(std::get<std::vector<ShiftPoint>>(a),
                            std::get<std::vector<ShiftPoint>>(b),
                            [](const ShiftPoint& x, const ShiftPoint& y) {
                              return shift_distance(x, y);
                            });
  }
  return finite_hausdorff(std::get<std::vector<CylPoint>>(a),
                          std::get<std::vector<CylPoint>>(b),
                          [](const CylPoint& x, const CylPoint& y) {
                            return cylinder_point_distance(x, y);
                          });
}

}  // namespace nonauto
