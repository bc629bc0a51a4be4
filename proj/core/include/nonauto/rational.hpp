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

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "nonauto/errors.hpp"

namespace nonauto {

using BigInt = boost::multiprecision::cpp_int;

/// Exact arbitrary-precision rational scalar.
///
/// Always stored in lowest terms with a positive denominator (the backing
/// boost rational adaptor maintains that invariant on every operation).
/// There is deliberately no construction from floating point: every value
/// in the library is exact.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(int n) : v_(n) {}            // NOLINT(google-explicit-constructor)
  Rat(long long n) : v_(n) {}      // NOLINT(google-explicit-constructor)
  Rat(const BigInt& n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rat(const BigInt& num, const BigInt& den);
  Rat(long long num, long long den);
  Rat(double) = delete;

  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const {
    return boost::multiprecision::denominator(v_);
  }

  bool is_zero() const { return v_.is_zero(); }
  bool is_integer() const { return denominator() == 1; }
  bool is_negative() const { return v_ < 0; }
  int sign() const { return v_.sign(); }

  /// Largest integer <= *this.
  BigInt floor() const;

  Rat operator-() const;
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (a.v_ > b.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// Serializes as "p/q", or "p" when the denominator is 1.
  std::string str() const;

  /// Parses the `str()` format. Accepts an optional leading '-'.
  static Rat parse(std::string_view text);

  /// Approximation for report output only; never fed back into computation.
  double to_double() const;

 private:
  boost::multiprecision::cpp_rational v_;
};

Rat abs(const Rat& x);
Rat min(const Rat& a, const Rat& b);
Rat max(const Rat& a, const Rat& b);

std::ostream& operator<<(std::ostream& os, const Rat& x);

}  // namespace nonauto
