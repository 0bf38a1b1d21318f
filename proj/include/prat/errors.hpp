// Copyright 2026 the prat authors
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

#ifndef PRAT_ERRORS_HPP
#define PRAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace prat {

// Library error taxonomy. Every condition a caller might sensibly branch on
// gets its own type; plain std::logic_error is reserved for internal bugs.
#define PRAT_DEFINE_ERROR(Name)                                   \
  struct Name : std::runtime_error {                              \
    explicit Name(const std::string& what) : std::runtime_error(std::string(#Name) + ": " + what) {} \
  }

PRAT_DEFINE_ERROR(NotCoprime);
PRAT_DEFINE_ERROR(NoRepresentation);
PRAT_DEFINE_ERROR(NoReconstruction);
PRAT_DEFINE_ERROR(RamifiedPrime);
PRAT_DEFINE_ERROR(InvalidConductor);
PRAT_DEFINE_ERROR(NotInFamily);
PRAT_DEFINE_ERROR(LiftFailure);
PRAT_DEFINE_ERROR(IndexDivisor);
PRAT_DEFINE_ERROR(NoGeneratorFound);
PRAT_DEFINE_ERROR(BadPrime);
PRAT_DEFINE_ERROR(BadSupport);
PRAT_DEFINE_ERROR(CheckpointCorrupt);
PRAT_DEFINE_ERROR(OracleUnavailable);
PRAT_DEFINE_ERROR(OracleTimeout);
PRAT_DEFINE_ERROR(OracleParseError);
PRAT_DEFINE_ERROR(DependentGenerators);
PRAT_DEFINE_ERROR(CapExceeded);

#undef PRAT_DEFINE_ERROR

}  // namespace prat

#endif  // PRAT_ERRORS_HPP
