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

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <variant>

namespace refsyn {

// Result of a run-time domain error (e.g. substring index out of range).
struct Bottom {
  friend bool operator==(Bottom, Bottom) { return true; }
  friend auto operator<=>(Bottom, Bottom) = default;
};

// A concrete DSL value. Positions, tokens, occurrence counts and booleans are
// all carried as integers; their meaning comes from the grammar symbol.
using Value = std::variant<Bottom, std::int64_t, std::string>;

enum class ValueKind { String, Position, Token, Integer, Boolean };

inline bool is_bottom(const Value& v) { return std::holds_alternative<Bottom>(v); }
inline bool is_string(const Value& v) { return std::holds_alternative<std::string>(v); }
inline bool is_int(const Value& v) { return std::holds_alternative<std::int64_t>(v); }

inline const std::string& as_string(const Value& v) { return std::get<std::string>(v); }
inline std::int64_t as_int(const Value& v) { return std::get<std::int64_t>(v); }

// Debug rendering: strings quoted, integers in decimal, bottom as `⊥`.
std::string render_value(const Value& v);

// Plain text of a value, as compared against dataset outputs: strings verbatim,
// integers in decimal. Bottom has no text.
std::string value_text(const Value& v);

struct ValueHash {
  std::size_t operator()(const Value& v) const noexcept;
};

}  // namespace refsyn
