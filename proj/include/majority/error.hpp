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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace majority {

enum class Errc {
  SelfLoop,
  DuplicateEdge,
  VertexOutOfRange,
  ParseError,
  MissingVertex,
  KTooSmall,
  NotStronglyConnected,
  SingletonComponent,
  NoConvergence,
  UncolouredNeighbour,
  ColourNotInList,
  StepCapExceeded,
  PartialColouring,
  BudgetExceeded,
  NNotOdd,
  PaletteTooSmall,
  InvalidArgument,
};

std::string_view errc_name(Errc code) noexcept;

/// Every recoverable failure in the library is reported as an Error carrying
/// one of the codes above; the message is a one-line human diagnostic.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Raised by the text-format parsers. line() is 1-based; 0 means end of input.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& reason);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

[[noreturn]] void fail(Errc code, const std::string& message);

}  // namespace majority
