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

#include "nonauto/interval_set.hpp"
#include "nonauto/rational.hpp"

namespace nonauto {

/// Continuous piecewise-linear self-map of [0,1] with rational breakpoints.
///
/// Stored as the graph (x_i, y_i) over strictly increasing breakpoints with
/// x_0 = 0 and x_last = 1; values interpolate linearly in between, so
/// continuity holds by construction. Canonical form removes interior
/// breakpoints where the two adjacent pieces are collinear, which makes
/// equality of maps plain vector equality.
class PLMap {
 public:
  /// Builds from graph points. Validates: breakpoints strictly increasing,
  /// first 0 and last 1, all values within [0,1] (affine pieces attain
  /// their extrema at endpoints, so checking values suffices).
  static PLMap from_points(std::vector<std::pair<Rat, Rat>> points);

  /// Builds from per-piece (slope, intercept) over given breakpoints and
  /// additionally validates exact continuity at interior breakpoints.
  static PLMap from_pieces(const std::vector<Rat>& breakpoints,
                           const std::vector<std::pair<Rat, Rat>>& pieces);

  static PLMap identity();
  static PLMap constant(const Rat& value);
  /// The full tent map min(2x, 2-2x).
  static PLMap tent();

  const std::vector<Rat>& breakpoints() const { return xs_; }
  const std::vector<Rat>& values() const { return ys_; }
  size_t piece_count() const { return xs_.size() - 1; }
  size_t breakpoint_count() const { return xs_.size(); }

  Rat slope(size_t piece) const;
  Rat intercept(size_t piece) const;

  Rat evaluate(const Rat& x) const;
  Rat operator()(const Rat& x) const { return evaluate(x); }

  IntervalSet image(const IntervalSet& a) const;
  IntervalSet preimage(const IntervalSet& a) const;

  /// Number of maximal monotone pieces; zero-slope runs count as laps.
  size_t lap_count() const;

  bool is_identity() const;
  bool is_surjective() const;

  /// Exact solution set of f(x) = x: isolated rational points plus whole
  /// intervals for identity pieces.
  struct FixedPoints {
    std::vector<Rat> points;        // isolated solutions, sorted
    std::vector<Interval> ranges;   // identity pieces (slope 1, intercept 0)
  };
  FixedPoints fixed_points() const;

  friend bool operator==(const PLMap& f, const PLMap& g) = default;

  std::string str() const;

 private:
  PLMap() = default;
  std::vector<Rat> xs_;
  std::vector<Rat> ys_;
  void canonicalize();
  size_t piece_index(const Rat& x) const;
  void emit_segment_image(std::vector<Interval>& out, const Rat& a,
                          bool a_open, const Rat& b, bool b_open) const;
};

/// Exact composition g(f(x)). Breakpoints of the result are f's breakpoints
/// together with f-preimages of g's interior breakpoints.
PLMap compose(const PLMap& g, const PLMap& f);

/// k-fold self-composition; iterate(f, 0) is the identity.
PLMap iterate(const PLMap& f, size_t k);

std::ostream& operator<<(std::ostream& os, const PLMap& f);

}  // namespace nonauto
