// Copyright 2026 The Authors.
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

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace duality {

using Rational = boost::multiprecision::cpp_rational;
using Vector = std::vector<Rational>;
using RationalMatrix = std::vector<Vector>;  // row-major

/// Parses "3", "-1/2", "0.25" style scalars. Throws ParseError.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& q);

/// Scalars separated by whitespace or commas, "c0 c1/q1 ...".
Vector parse_vector(std::string_view text);
std::string format_vector(const Vector& v);

Rational dot(const Vector& a, const Vector& b);

/// Exact determinant by fraction-carrying Gaussian elimination.
Rational determinant(RationalMatrix m);

/// Gram determinant det(<a_i, a_j>).
Rational gram_determinant(std::span<const Vector> vectors);

}  // namespace duality
