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

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace majority {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical "p/q" form: lowest terms, q > 0, and the denominator is always
/// written (so 1 is "1/1" and 0 is "0/1").
std::string to_pq(const Rational& value);

/// Accepts "p/q" or a bare integer "p", optionally signed. Anything else
/// (decimals, exponents, whitespace, q = 0) throws Error(InvalidArgument).
Rational parse_rational(std::string_view text);

/// num/den in canonical form (gmpxx does not canonicalize on construction).
inline Rational ratio(unsigned long num, unsigned long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace majority
