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

#include "nonauto/plmap.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace nonauto {

namespace {

const Rat kZero(0);
const Rat kOne(1);

}  // namespace

PLMap PLMap::from_points(std::vector<std::pair<Rat, Rat>> points) {
  if (points.size() < 2) {
    throw ValidationError("PLMap needs at least two graph points");
  }
  PLMap f;
  f.xs_.reserve(points.size());
  f.ys_.reserve(points.size());
  for (auto& [x, y] : points) {
    if (!f.xs_.empty() && x <= f.xs_.back()) {
      throw ValidationError("PLMap breakpoints must be strictly increasing");
    }
    if (y < kZero || y > kOne) {
      throw ValidationError("range: PLMap value " + y.str() +
                            " outside [0,1]");
    }
    f.xs_.push_back(std::move(x));
    f.ys_.push_back(std::move(y));
  }
  if (f.xs_.front() != kZero || f.xs_.back() != kOne) {
    throw ValidationError("PLMap domain must be exactly [0,1]");
  }
  f.canonicalize();
  return f;
}

PLMap PLMap::from_pieces(const std::vector<Rat>& breakpoints,
                         const std::vector<std::pair<Rat, Rat>>& pieces) {
  if (breakpoints.size() < 2 || pieces.size() + 1 != breakpoints.size()) {
    throw ValidationError("PLMap pieces/breakpoints size mismatch");
  }
  std::vector<std::pair<Rat, Rat>> points;
  points.reserve(breakpoints.size());
  for (size_t i = 0; i < breakpoints.size(); ++i) {
    // Value at breakpoint i from the piece on its right (left for the last).
    const size_t pi = (i == breakpoints.size() - 1) ? i - 1 : i;
    const auto& [slope, intercept] = pieces[pi];
    points.emplace_back(breakpoints[i], slope * breakpoints[i] + intercept);
    if (i > 0 && i < breakpoints.size() - 1) {
      const auto& [ls, lc] = pieces[i - 1];
      if (ls * breakpoints[i] + lc != points.back().second) {
        throw ValidationError("PLMap discontinuous at breakpoint " +
                              breakpoints[i].str());
      }
    }
  }
  return from_points(std::move(points));
}

PLMap PLMap::identity() {
  return from_points({{kZero, kZero}, {kOne, kOne}});
}

PLMap PLMap::constant(const Rat& value) {
  return from_points({{kZero, value}, {kOne, value}});
}

PLMap PLMap::tent() {
  return from_points({{kZero, kZero}, {Rat(1, 2), kOne}, {kOne, kZero}});
}

void PLMap::canonicalize() {
  std::vector<Rat> xs, ys;
  xs.push_back(xs_.front());
  ys.push_back(ys_.front());
  for (size_t i = 1; i + 1 < xs_.size(); ++i) {
    // Interior point is redundant iff (x_{i-1},y_{i-1}), (x_i,y_i),
    // (x_{i+1},y_{i+1}) are collinear: cross-multiplied slope equality.
    const Rat& x0 = xs.back();
    const Rat& y0 = ys.back();
    const Rat lhs = (ys_[i] - y0) * (xs_[i + 1] - xs_[i]);
    const Rat rhs = (ys_[i + 1] - ys_[i]) * (xs_[i] - x0);
    if (lhs == rhs) continue;
    xs.push_back(xs_[i]);
    ys.push_back(ys_[i]);
  }
  xs.push_back(xs_.back());
  ys.push_back(ys_.back());
  xs_ = std::move(xs);
  ys_ = std::move(ys);
}

Rat PLMap::slope(size_t piece) const {
  return (ys_[piece + 1] - ys_[piece]) / (xs_[piece + 1] - xs_[piece]);
}

Rat PLMap::intercept(size_t piece) const {
  return ys_[piece] - slope(piece) * xs_[piece];
}

size_t PLMap::piece_index(const Rat& x) const {
  // Largest i with xs_[i] <= x, clamped to a valid piece.
  size_t lo = 0, hi = xs_.size();
  while (lo < hi) {
    const size_t mid = (lo + hi) / 2;
    if (xs_[mid] <= x) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  const size_t i = lo == 0 ? 0 : lo - 1;
  return i >= piece_count() ? piece_count() - 1 : i;
}

Rat PLMap::evaluate(const Rat& x) const {
  if (x < kZero || x > kOne) {
    throw OutOfDomain("PLMap evaluated at " + x.str() + " outside [0,1]");
  }
  const size_t i = piece_index(x);
  if (x == xs_[i]) return ys_[i];
  if (x == xs_[i + 1]) return ys_[i + 1];
  return ys_[i] + slope(i) * (x - xs_[i]);
}

IntervalSet PLMap::image(const IntervalSet& a) const {
  std::vector<Interval> out;
  for (const Interval& comp : a.components()) {
    // Split the component at interior breakpoints; junction points belong
    // to the component, so both sides of a cut carry a closed endpoint.
    // That is exactly what makes folds attain their extrema.
    Rat cur_lo = comp.lo;
    bool cur_lo_open = comp.lo_open;
    for (size_t i = 1; i + 1 < xs_.size(); ++i) {
      if (xs_[i] <= cur_lo || xs_[i] >= comp.hi) continue;
      emit_segment_image(out, cur_lo, cur_lo_open, xs_[i], false);
      cur_lo = xs_[i];
      cur_lo_open = false;
    }
    emit_segment_image(out, cur_lo, cur_lo_open, comp.hi, comp.hi_open);
  }
  return IntervalSet(std::move(out));
}

void PLMap::emit_segment_image(std::vector<Interval>& out, const Rat& a,
                               bool a_open, const Rat& b, bool b_open) const {
  const Rat fa = evaluate(a);
  const Rat fb = evaluate(b);
  if (fa < fb) {
    out.emplace_back(fa, a_open, fb, b_open);
  } else if (fb < fa) {
    out.emplace_back(fb, b_open, fa, a_open);
  } else {
    out.push_back(Interval::point(fa));
  }
}

IntervalSet PLMap::preimage(const IntervalSet& a) const {
  std::vector<Interval> out;
  for (size_t i = 0; i < piece_count(); ++i) {
    const Rat s = slope(i);
    const Rat c = intercept(i);
    for (const Interval& comp : a.components()) {
      if (s.is_zero()) {
        if (comp.contains(ys_[i])) {
          out.push_back(Interval::closed(xs_[i], xs_[i + 1]));
        }
        continue;
      }
      // Solve comp.lo <= s x + c <= comp.hi for x, preserving strictness,
      // then clip to the closed piece domain.
      Rat lo = (comp.lo - c) / s;
      bool lo_open = comp.lo_open;
      Rat hi = (comp.hi - c) / s;
      bool hi_open = comp.hi_open;
      if (s.is_negative()) {
        std::swap(lo, hi);
        std::swap(lo_open, hi_open);
      }
      if (lo < xs_[i]) {
        lo = xs_[i];
        lo_open = false;
      }
      if (hi > xs_[i + 1]) {
        hi = xs_[i + 1];
        hi_open = false;
      }
      Interval r(lo, lo_open, hi, hi_open);
      if (!r.empty()) out.push_back(std::move(r));
    }
  }
  return IntervalSet(std::move(out));
}

size_t PLMap::lap_count() const {
  size_t laps = 0;
  int prev_sign = 2;  // sentinel
  for (size_t i = 0; i < piece_count(); ++i) {
    const int s = (ys_[i + 1] > ys_[i]) ? 1 : (ys_[i + 1] < ys_[i] ? -1 : 0);
    if (s != prev_sign) {
      ++laps;
      prev_sign = s;
    }
  }
  return laps;
}

bool PLMap::is_identity() const {
  return xs_.size() == 2 && ys_.front() == kZero && ys_.back() == kOne;
}

bool PLMap::is_surjective() const {
  return image(IntervalSet::unit()) == IntervalSet::unit();
}

PLMap::FixedPoints PLMap::fixed_points() const {
  FixedPoints result;
  for (size_t i = 0; i < piece_count(); ++i) {
    const Rat s = slope(i);
    const Rat c = intercept(i);
    if (s == kOne) {
      if (c.is_zero()) {
        result.ranges.push_back(Interval::closed(xs_[i], xs_[i + 1]));
      }
      continue;
    }
    const Rat x = c / (kOne - s);
    if (x >= xs_[i] && x <= xs_[i + 1]) {
      if (result.points.empty() || result.points.back() != x) {
        result.points.push_back(x);
      }
    }
  }
  // Points swallowed by identity ranges are reported once, in the ranges.
  if (!result.ranges.empty()) {
    IntervalSet ranges{std::vector<Interval>(result.ranges)};
    std::erase_if(result.points,
                  [&](const Rat& x) { return ranges.contains(x); });
  }
  return result;
}

std::string PLMap::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < xs_.size(); ++i) {
    if (i) os << ' ';
    os << '(' << xs_[i].str() << ',' << ys_[i].str() << ')';
  }
  return os.str();
}

PLMap compose(const PLMap& g, const PLMap& f) {
  std::vector<Rat> cuts = f.breakpoints();
  // Preimages under f of g's interior breakpoints refine the partition.
  const auto& gx = g.breakpoints();
  for (size_t j = 1; j + 1 < gx.size(); ++j) {
    for (size_t i = 0; i < f.piece_count(); ++i) {
      const Rat s = f.slope(i);
      if (s.is_zero()) continue;
      const Rat x = (gx[j] - f.intercept(i)) / s;
      if (x >= f.breakpoints()[i] && x <= f.breakpoints()[i + 1]) {
        cuts.push_back(x);
      }
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<std::pair<Rat, Rat>> points;
  points.reserve(cuts.size());
  for (Rat& x : cuts) {
    Rat y = g.evaluate(f.evaluate(x));
    points.emplace_back(std::move(x), std::move(y));
  }
  return PLMap::from_points(std::move(points));
}

PLMap iterate(const PLMap& f, size_t k) {
  PLMap r = PLMap::identity();
  for (size_t i = 0; i < k; ++i) r = compose(f, r);
  return r;
}

std::ostream& operator<<(std::ostream& os, const PLMap& f) {
  return os << f.str();
}

}  // namespace nonauto
