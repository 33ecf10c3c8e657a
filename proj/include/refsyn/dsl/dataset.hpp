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
#include <vector>

#include "refsyn/dsl/value.hpp"

namespace refsyn {

// Input/output examples D = (x, y). Inputs and outputs are strings for the
// string family and integers for the arithmetic one.
struct Dataset {
  std::vector<Value> inputs;
  std::vector<Value> outputs;

  std::size_t size() const { return inputs.size(); }
};

// Throws StructuralError on empty or ragged datasets.
void check_dataset(const Dataset& dataset);

}  // namespace refsyn
