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

namespace refsyn {

// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,  // no solution or another run-time failure
  kExitUsage = 2,
  kExitFile = 3,
  kExitTimeout = 4,
  kExitInvariant = 5,
};

// Entry point of the `refsyn` tool: solve | bench | oracle | noise.
int run_cli(int argc, char** argv);

}  // namespace refsyn
