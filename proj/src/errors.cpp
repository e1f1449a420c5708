// Copyright 2026 The Blockade Authors
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

#include "blockade/errors.hpp"

namespace blockade {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid_argument";
    case ErrorKind::Degeneracy: return "degeneracy";
    case ErrorKind::Numerical: return "numerical";
    case ErrorKind::StepSize: return "step_size";
    case ErrorKind::UndefinedCorrelation: return "undefined_correlation";
    case ErrorKind::Fit: return "fit";
    case ErrorKind::InvalidConfig: return "invalid_config";
    case ErrorKind::Sweep: return "sweep";
  }
  return "unknown";
}

}  // namespace blockade
