//
// shadowgraph - shadowing verification for edge shift spaces of
// finitely presented infinite graphs.
//
// Copyright 2026 the shadowgraph authors
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
//

// Shared fundamental types: arbitrary-precision naturals and the error type
// thrown across the library.

#ifndef SHADOW_BASE_HPP_
#define SHADOW_BASE_HPP_

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace shadow {

// Arbitrary-precision natural number. Enumeration ranks grow exponentially
// with the block index, so fixed-width integers are not an option.
using Nat = boost::multiprecision::cpp_int;

// Machine-sized index for edges, vertices and family parameters. Edge indices
// beyond this range are not representable in a presentation anyway (the DSL
// parses 64-bit integers).
using Index = long long;

// Library-wide exception. Every precondition violation or malformed input
// surfaces as an Error; verdict-valued operations never throw for "No".
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace shadow

#endif  // SHADOW_BASE_HPP_
