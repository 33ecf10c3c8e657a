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

#include "refsyn/dsl/value.hpp"

#include <string>

namespace refsyn {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string render_value(const Value& v) {
  if (is_bottom(v)) return "⊥";
  if (is_int(v)) return std::to_string(as_int(v));
  return quote(as_string(v));
}

std::string value_text(const Value& v) {
  if (is_int(v)) return std::to_string(as_int(v));
  if (is_string(v)) return as_string(v);
  return {};
}

std::size_t ValueHash::operator()(const Value& v) const noexcept {
  switch (v.index()) {
    case 0:
      return 0x9e3779b97f4a7c15ull;
    case 1:
      return std::hash<std::int64_t>{}(std::get<1>(v)) * 31 + 1;
    default:
      return std::hash<std::string>{}(std::get<2>(v)) * 31 + 2;
  }
}

}  // namespace refsyn
