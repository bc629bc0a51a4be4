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

#include "nonauto/qalpha.hpp"

#include <ostream>

namespace nonauto {

std::string QAlpha::str() const {
  return a.str() + " + " + b.str() + " a";
}

QAlpha QAlpha::parse(std::string_view text) {
  const std::string_view sep = " + ";
  const auto pos = text.find(sep);
  if (pos == std::string_view::npos) {
    // Plain rational shorthand.
    return QAlpha(Rat::parse(text));
  }
  std::string_view rest = text.substr(pos + sep.size());
  if (rest.size() < 2 || rest.substr(rest.size() - 2) != " a") {
    throw ParseError("qalpha \"" + std::string(text) + "\"",
                     "expected trailing \" a\"");
  }
  return QAlpha(Rat::parse(text.substr(0, pos)),
                Rat::parse(rest.substr(0, rest.size() - 2)));
}

std::ostream& operator<<(std::ostream& os, const QAlpha& x) {
  return os << x.str();
}

}  // namespace nonauto
