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

#include "nonauto/rational.hpp"

#include <ostream>

namespace nonauto {

Rat::Rat(const BigInt& num, const BigInt& den) {
  if (den.is_zero()) throw DivisionByZero();
  v_ = boost::multiprecision::cpp_rational(num, den);
}

Rat::Rat(long long num, long long den) : Rat(BigInt(num), BigInt(den)) {}

BigInt Rat::floor() const {
  BigInt q = numerator() / denominator();
  if (v_ < 0 && q * denominator() != numerator()) --q;
  return q;
}

Rat Rat::operator-() const {
  Rat r;
  r.v_ = -v_;
  return r;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw DivisionByZero();
  v_ /= o.v_;
  return *this;
}

std::string Rat::str() const {
  std::string s = numerator().str();
  if (!is_integer()) {
    s += '/';
    s += denominator().str();
  }
  return s;
}

Rat Rat::parse(std::string_view text) {
  auto fail = [&](const std::string& msg) -> ParseError {
    return ParseError("rational \"" + std::string(text) + "\"", msg);
  };
  if (text.empty()) throw fail("empty string");
  const auto slash = text.find('/');
  const std::string_view num_part = text.substr(0, slash);
  auto parse_int = [&](std::string_view part, bool allow_sign) -> BigInt {
    if (part.empty()) throw fail("missing digits");
    size_t i = 0;
    if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) throw fail("missing digits");
    for (size_t j = i; j < part.size(); ++j) {
      if (part[j] < '0' || part[j] > '9') throw fail("unexpected character");
    }
    return BigInt(std::string(part));
  };
  const BigInt num = parse_int(num_part, /*allow_sign=*/true);
  if (slash == std::string_view::npos) return Rat(num);
  const BigInt den = parse_int(text.substr(slash + 1), /*allow_sign=*/false);
  if (den.is_zero()) throw fail("zero denominator");
  return Rat(num, den);
}

double Rat::to_double() const { return v_.convert_to<double>(); }

Rat abs(const Rat& x) { return x.is_negative() ? -x : x; }
Rat min(const Rat& a, const Rat& b) { return a < b ? a : b; }
Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const Rat& x) {
  return os << x.str();
}

}  // namespace nonauto
