// Copyright 2026 The zne-pqe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace zpqe {

struct ValidationCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Quick invariant checks on the installed build and, when given, a Hamiltonian file.
std::vector<ValidationCheck> run_validation(const std::filesystem::path& hamiltonian);

}  // namespace zpqe
