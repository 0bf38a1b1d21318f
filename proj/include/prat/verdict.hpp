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

#ifndef PRAT_VERDICT_HPP
#define PRAT_VERDICT_HPP

#include <string>

namespace prat {

// Three-valued verdict. Yes/No always carry a human-readable certificate
// naming the criterion that fired; Unknown carries the reason the criteria
// stayed silent.
enum class Verdict { Yes, No, Unknown };

struct Tri {
  Verdict verdict;
  std::string certificate;

  static Tri yes(std::string cert) { return {Verdict::Yes, std::move(cert)}; }
  static Tri no(std::string cert) { return {Verdict::No, std::move(cert)}; }
  static Tri unknown(std::string why) { return {Verdict::Unknown, std::move(why)}; }
  bool is_yes() const { return verdict == Verdict::Yes; }
  bool is_no() const { return verdict == Verdict::No; }
  bool is_unknown() const { return verdict == Verdict::Unknown; }
};

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "Yes";
    case Verdict::No: return "No";
    default: return "Unknown";
  }
}

}  // namespace prat

#endif  // PRAT_VERDICT_HPP
