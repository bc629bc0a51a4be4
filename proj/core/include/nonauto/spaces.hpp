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

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nonauto/interval_set.hpp"
#include "nonauto/qalpha.hpp"

namespace nonauto {

enum class SpaceKind { interval, circle, shift, cylinder };

std::string space_kind_name(SpaceKind k);

// ---------------------------------------------------------------------------
// Circle S^1, angles measured in turns (full circle = 1) so that all
// arithmetic stays inside Q + Q*alpha.

struct CirclePoint {
  QAlpha angle;  // canonical: rational part in [0,1)

  CirclePoint() = default;
  explicit CirclePoint(const QAlpha& raw) : angle(raw.reduced_mod1()) {}

  friend bool operator==(const CirclePoint& p, const CirclePoint& q) = default;
  std::string str() const { return angle.str(); }
};

struct RotationMap {
  QAlpha delta;  // rotation amount in turns
};

CirclePoint rotate(const RotationMap& m, const CirclePoint& p);

/// Exact arc-length distance in turns, in [0, 1/2]. Only decidable when the
/// angular difference is rational (equal alpha coefficients); otherwise
/// throws AlphaUndecidable — alpha is a formal symbol with no numeric value.
Rat circle_distance(const CirclePoint& p, const CirclePoint& q);

// ---------------------------------------------------------------------------
// Two-sided full shift on {0,1}: desk-scale model containing exactly the
// periodic bi-infinite sequences. A point is stored as its primitive word
// rotated so that position 0 reads word[0].

enum class ShiftDirection { left, right };

class ShiftPoint {
 public:
  /// `word` over {'0','1'}; the point is ...www.www... read from `offset`,
  /// i.e. position i carries word[(i + offset) mod |word|].
  explicit ShiftPoint(const std::string& word, long offset = 0);

  char at(long position) const;
  size_t period() const { return word_.size(); }
  const std::string& word() const { return word_; }

  ShiftPoint shifted(ShiftDirection dir) const;

  friend bool operator==(const ShiftPoint& x, const ShiftPoint& y) = default;

  /// "word@0" after canonicalization.
  std::string str() const { return word_ + "@0"; }
  static ShiftPoint parse(const std::string& text);

 private:
  std::string word_;  // primitive period, aligned to offset 0
};

/// 2^{-k} where k = min{|i| : x_i != y_i}; 0 when the points coincide.
Rat shift_distance(const ShiftPoint& x, const ShiftPoint& y);

/// Basic open (and closed) set of the product topology: finitely many
/// constrained coordinates. Empty support means the whole space.
class Cylinder {
 public:
  Cylinder() = default;
  explicit Cylinder(std::map<long, char> constraints);

  const std::map<long, char>& constraints() const { return constraints_; }
  bool whole_space() const { return constraints_.empty(); }

  Cylinder shifted(ShiftDirection dir) const;
  /// Translate all constrained positions by `by`.
  Cylinder translated(long by) const;

  /// Merged constraints; nullopt when two constraints conflict (empty set).
  static std::optional<Cylinder> intersect(const Cylinder& a,
                                           const Cylinder& b);

  bool contains(const ShiftPoint& x) const;
  /// A periodic point inside the cylinder: constraints extended to a
  /// contiguous window, unconstrained slots filled with '0', repeated.
  ShiftPoint periodic_member() const;

  /// min{|i| : i constrained}; nullopt for the whole space.
  std::optional<long> min_abs_constrained() const;

  friend bool operator==(const Cylinder& a, const Cylinder& b) = default;
  std::string str() const;

 private:
  std::map<long, char> constraints_;
};

/// Exact Hausdorff distance from a cylinder to the whole shift space:
/// 2^{-min|i| constrained}, and 0 for the whole space.
Rat cylinder_distance_to_space(const Cylinder& c);

// ---------------------------------------------------------------------------
// Cylinder phase space I x S^1 with the max metric, and the twist maps
// (r, theta) -> (r, theta +- r).

struct CylPoint {
  Rat r;
  QAlpha theta;  // canonical mod 1

  CylPoint() = default;
  CylPoint(Rat radius, const QAlpha& angle)
      : r(std::move(radius)), theta(angle.reduced_mod1()) {
    if (r < Rat(0) || r > Rat(1)) {
      throw ValidationError("cylinder point radius outside [0,1]");
    }
  }

  friend bool operator==(const CylPoint& p, const CylPoint& q) = default;
  std::string str() const { return "(" + r.str() + ", " + theta.str() + ")"; }
};

struct TwistMap {
  int sign = 1;  // +1: theta + r, -1: theta - r
};

CylPoint twist(const TwistMap& m, const CylPoint& p);

/// max(|r1 - r2|, arc(theta1 - theta2)); same decidability caveat as
/// circle_distance.
Rat cylinder_point_distance(const CylPoint& p, const CylPoint& q);

// ---------------------------------------------------------------------------
// Hausdorff metric over desk-scale set representations: an interval set or
// a finite point list in one of the point spaces.

using HMetricSet = std::variant<IntervalSet, std::vector<CirclePoint>,
                                std::vector<ShiftPoint>, std::vector<CylPoint>>;

/// Exact two-sided Hausdorff distance. Throws SpaceMismatch when the two
/// sets live in different spaces or either is empty.
Rat hausdorff_distance(const HMetricSet& a, const HMetricSet& b);

}  // namespace nonauto
