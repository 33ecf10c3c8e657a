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

#include <compare>
#include <limits>
#include <string>

namespace refsyn {

// Non-negative reals plus infinity.
class ExtendedReal {
 public:
  constexpr ExtendedReal() = default;
  constexpr ExtendedReal(double v) : v_(v) {}  // NOLINT: implicit by design

  static constexpr ExtendedReal infinity() { return ExtendedReal(std::numeric_limits<double>::infinity()); }

  constexpr bool is_infinite() const { return v_ == std::numeric_limits<double>::infinity(); }
  constexpr double value() const { return v_; }

  friend constexpr ExtendedReal operator+(ExtendedReal a, ExtendedReal b) { return ExtendedReal(a.v_ + b.v_); }
  ExtendedReal& operator+=(ExtendedReal o) {
    v_ += o.v_;
    return *this;
  }
  friend constexpr bool operator==(ExtendedReal a, ExtendedReal b) { return a.v_ == b.v_; }
  friend constexpr std::partial_ordering operator<=>(ExtendedReal a, ExtendedReal b) { return a.v_ <=> b.v_; }

  // `inf` or the shortest decimal that round-trips.
  std::string render() const;

 private:
  double v_ = 0.0;
};

// a - b with inf - inf = 0 and inf - finite = inf; requires a >= b otherwise.
ExtendedReal gap(ExtendedReal a, ExtendedReal b);

}  // namespace refsyn
