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

#include "duality/rational.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "duality/error.hpp"

namespace duality {
namespace {

using boost::multiprecision::cpp_int;

cpp_int ParseInteger(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
  if (i == text.size()) {
    throw Error(ErrorKind::ParseError, "bad number '" + std::string(whole) + "'");
  }
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw Error(ErrorKind::ParseError, "bad number '" + std::string(whole) + "'");
    }
  }
  cpp_int value(std::string(text.substr(i)));
  return (!text.empty() && text[0] == '-') ? cpp_int(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    cpp_int num = ParseInteger(text.substr(0, slash), text);
    cpp_int den = ParseInteger(text.substr(slash + 1), text);
    if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string digits(text.substr(0, dot));
    std::string_view frac = text.substr(dot + 1);
    digits += frac;
    if (digits.empty() || digits == "-" || digits == "+") {
      throw Error(ErrorKind::ParseError, "bad number '" + std::string(text) + "'");
    }
    cpp_int den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    return Rational(ParseInteger(digits, text), den);
  }
  return Rational(ParseInteger(text, text));
}

std::string format_rational(const Rational& q) {
  std::ostringstream out;
  out << boost::multiprecision::numerator(q);
  if (boost::multiprecision::denominator(q) != 1) {
    out << '/' << boost::multiprecision::denominator(q);
  }
  return out.str();
}

Vector parse_vector(std::string_view text) {
  Vector v;
  std::string spaced(text);
  std::replace(spaced.begin(), spaced.end(), ',', ' ');
  std::istringstream in{spaced};
  std::string token;
  while (in >> token) v.push_back(parse_rational(token));
  return v;
}

std::string format_vector(const Vector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += format_rational(v[i]);
  }
  return out;
}

Rational dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::DimMismatch, "dot product of different lengths");
  }
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  }
  return s;
}

Rational determinant(RationalMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw Error(ErrorKind::DimMismatch, "determinant of a non-square matrix");
  }
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m[pivot][c] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

Rational gram_determinant(std::span<const Vector> vectors) {
  const std::size_t r = vectors.size();
  RationalMatrix gram(r, Vector(r));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i; j < r; ++j) gram[i][j] = gram[j][i] = dot(vectors[i], vectors[j]);
  }
  return determinant(std::move(gram));
}

}  // namespace duality
