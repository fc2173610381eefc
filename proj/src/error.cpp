// Copyright 2026 The Majority Authors
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

#include "majority/error.hpp"

namespace majority {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::VertexOutOfRange: return "VertexOutOfRange";
    case Errc::ParseError: return "ParseError";
    case Errc::MissingVertex: return "MissingVertex";
    case Errc::KTooSmall: return "KTooSmall";
    case Errc::NotStronglyConnected: return "NotStronglyConnected";
    case Errc::SingletonComponent: return "SingletonComponent";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::UncolouredNeighbour: return "UncolouredNeighbour";
    case Errc::ColourNotInList: return "ColourNotInList";
    case Errc::StepCapExceeded: return "StepCapExceeded";
    case Errc::PartialColouring: return "PartialColouring";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::NNotOdd: return "NNotOdd";
    case Errc::PaletteTooSmall: return "PaletteTooSmall";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

ParseError::ParseError(std::size_t line, const std::string& reason)
    : Error(Errc::ParseError,
            (line == 0 ? std::string("end of input") : "line " + std::to_string(line)) + ": " +
                reason),
      line_(line) {}

void fail(Errc code, const std::string& message) { throw Error(code, message); }

}  // namespace majority
