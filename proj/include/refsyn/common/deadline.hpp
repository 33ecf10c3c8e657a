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

#include <chrono>
#include <optional>

#include "refsyn/common/error.hpp"

namespace refsyn {

// Cooperative wall-clock deadline. A default-constructed deadline never expires.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  Deadline() = default;
  explicit Deadline(Clock::time_point at) : at_(at) {}

  static Deadline after(std::chrono::milliseconds budget) {
    return Deadline(Clock::now() + budget);
  }
  static Deadline never() { return Deadline(); }

  bool expired() const { return at_ && Clock::now() >= *at_; }

  void check(const char* where) const {
    if (expired()) throw TimeoutError(std::string("deadline exceeded during ") + where);
  }

 private:
  std::optional<Clock::time_point> at_;
};

}  // namespace refsyn
