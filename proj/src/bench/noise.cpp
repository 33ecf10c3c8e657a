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

#include "refsyn/bench/noise.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <random>

#include "refsyn/common/error.hpp"

namespace refsyn {

std::vector<std::string> apply_cyclic_deletion_noise(const std::vector<std::string>& outputs, std::size_t n) {
  if (n > outputs.size()) throw StructuralError("cannot corrupt more outputs than there are examples");
  std::vector<std::string> out = outputs;
  const std::size_t first = outputs.size() - n;
  for (std::size_t j = 0; j < n; ++j) {
    auto& s = out[first + j];
    if (s.empty()) throw StructuralError("output " + std::to_string(first + j) + " is empty and cannot lose a character");
    s.erase(j % s.size(), 1);
  }
  return out;
}

std::size_t corruption_count(double fraction, std::size_t count) {
  if (!(fraction >= 0.0 && fraction <= 1.0)) throw StructuralError("fraction must lie in [0, 1]");
  const double raw = std::ceil(fraction * static_cast<double>(count) - 1e-9);
  return std::min(count, static_cast<std::size_t>(std::max(0.0, raw)));
}

std::vector<std::size_t> select_corrupted(std::size_t count, double fraction, std::uint64_t seed) {
  const std::size_t k = corruption_count(fraction, count);
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), 0);
  // Fisher-Yates on raw engine output so the choice is identical on every platform.
  std::mt19937_64 rng(seed);
  for (std::size_t i = count; i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(order[i - 1], order[j]);
  }
  order.resize(k);
  std::sort(order.begin(), order.end());
  return order;
}

std::vector<std::string> apply_digit_substitution_noise(const std::vector<std::string>& outputs, double fraction,
                                                        std::uint64_t seed) {
  std::vector<std::string> out = outputs;
  std::size_t counter = 0;
  for (std::size_t idx : select_corrupted(outputs.size(), fraction, seed)) {
    auto& s = out[idx];
    std::vector<std::size_t> digits;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (std::isdigit(static_cast<unsigned char>(s[i]))) digits.push_back(i);
    }
    if (digits.empty()) throw StructuralError("output " + std::to_string(idx) + " has no digit to substitute");
    char& c = s[digits[counter % digits.size()]];
    c = c == '9' ? '0' : static_cast<char>(c + 1);
    ++counter;
  }
  return out;
}

}  // namespace refsyn
