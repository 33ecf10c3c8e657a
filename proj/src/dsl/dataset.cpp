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

#include "refsyn/dsl/dataset.hpp"

#include "refsyn/common/error.hpp"

namespace refsyn {

void check_dataset(const Dataset& dataset) {
  if (dataset.inputs.empty()) throw StructuralError("dataset has no examples");
  if (dataset.inputs.size() != dataset.outputs.size()) throw StructuralError("dataset inputs and outputs differ in length");
  for (const auto& v : dataset.inputs) {
    if (is_bottom(v)) throw StructuralError("dataset input is bottom");
  }
  for (const auto& v : dataset.outputs) {
    if (is_bottom(v)) throw StructuralError("dataset output is bottom");
  }
}

}  // namespace refsyn
