/* Copyright 2026 The refsyn Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "refsyn/objective/extended_real.hpp"

#include <charconv>

namespace refsyn {

std::string ExtendedReal::render() const {
  if (is_infinite()) return "inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v_);
  return ec == std::errc{} ? std::string(buf, end) : std::to_string(v_);
}

ExtendedReal gap(ExtendedReal a, ExtendedReal b) {
  if (a.is_infinite()) return b.is_infinite() ? ExtendedReal(0.0) : ExtendedReal::infinity();
  return ExtendedReal(a.value() - b.value());
}

}  // namespace refsyn
