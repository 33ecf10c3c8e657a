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
#include <string>
#include <vector>

namespace refsyn {

// Deletes one character from each of the last n outputs; the j-th corrupted
// output loses the character at j mod its length.
std::vector<std::string> apply_cyclic_deletion_noise(const std::vector<std::string>& outputs, std::size_t n);

// Number of outputs digit substitution corrupts: ceil(fraction * count).
std::size_t corruption_count(double fraction, std::size_t count);

// Indices of the outputs digit substitution corrupts, ascending.
std::vector<std::size_t> select_corrupted(std::size_t count, double fraction, std::uint64_t seed);

// Bumps one digit (9 wraps to 0) in each selected output. A counter advancing
// once per corrupted output picks the digit, wrapping over that output's digits.
std::vector<std::string> apply_digit_substitution_noise(const std::vector<std::string>& outputs, double fraction,
                                                        std::uint64_t seed);

}  // namespace refsyn
