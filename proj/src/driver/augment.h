// Copyright 2026 The Infectest Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef INFECTEST_DRIVER_AUGMENT_H_
#define INFECTEST_DRIVER_AUGMENT_H_

#include <span>
#include <string>

#include "driver/equivalence.h"
#include "suite/suite.h"

namespace infectest::driver {

// `suite` followed by one test per killable verdict whose model is a new
// argument vector, named mut<ID>-<mode>. Models repeating an existing call
// are dropped.
suite::TestSuite AugmentSuite(const lang::CheckedProgram& program,
                              const mutgen::MutantTable& table,
                              const suite::TestSuite& suite,
                              std::span<const EquivalenceVerdict> verdicts,
                              std::string name, const interp::RunOptions& options = {});

}  // namespace infectest::driver

#endif  // INFECTEST_DRIVER_AUGMENT_H_
