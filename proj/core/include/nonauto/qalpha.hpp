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
#include <string_view>

#include "nonauto/rational.hpp"

namespace nonauto {

/// Scalar of the form a + b*alpha, where alpha is a single global formal
/// irrational in (0,1). The type is a 2-dimensional Q-module: addition,
/// subtraction and rational scaling are componentwise; there is no product
/// of two QAlpha values (rotation dynamics only ever adds angles).
///
/// Key decidable facts used throughout:
///   - equality is componentwise equality,
///   - x is an integer iff b == 0 and a is an integer (alpha is irrational),
///   - reduction mod 1 only touches the rational part (b*alpha stays
///     symbolic): reduced(x) = (a - floor(a)) + b*alpha.
struct QAlpha {
  Rat a;  // rational part
  Rat b;  // coefficient of alpha

  QAlpha() = default;
  QAlpha(Rat a_part) : a(std::move(a_part)) {}  // NOLINT
  QAlpha(Rat a_part, Rat b_part) : a(std::move(a_part)), b(std::move(b_part)) {}

  bool is_rational() const { return b.is_zero(); }
  bool is_zero() const { return a.is_zero() && b.is_zero(); }

  /// True iff the value is congruent to 0 mod 1, i.e. b == 0 and a integer.
  /// This is the exact periodicity test for rotation orbits.
  bool is_integral_mod1() const { return b.is_zero() && a.is_integer(); }

  /// Canonical representative with rational part in [0,1).
  QAlpha reduced_mod1() const { return QAlpha(a - Rat(a.floor()), b); }

  QAlpha operator-() const { return QAlpha(-a, -b); }
  QAlpha& operator+=(const QAlpha& o) { a += o.a; b += o.b; return *this; }
  QAlpha& operator-=(const QAlpha& o) { a -= o.a; b -= o.b; return *this; }

  friend QAlpha operator+(QAlpha x, const QAlpha& y) { return x += y; }
  friend QAlpha operator-(QAlpha x, const QAlpha& y) { return x -= y; }
  friend QAlpha operator*(const Rat& c, const QAlpha& x) {
    return QAlpha(c * x.a, c * x.b);
  }

  friend bool operator==(const QAlpha& x, const QAlpha& y) {
    return x.a == y.a && x.b == y.b;
  }

  /// Serializes as "<a> + <b> a", e.g. "1/2 + -1/3 a"; bit-exact round trip.
  std::string str() const;
  static QAlpha parse(std::string_view text);
};

std::ostream& operator<<(std::ostream& os, const QAlpha& x);

}  // namespace nonauto
