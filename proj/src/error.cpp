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

#include "duality/error.hpp"

namespace duality {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyBases: return "EmptyBases";
    case ErrorKind::ContainmentViolation: return "ContainmentViolation";
    case ErrorKind::ExchangeFailure: return "ExchangeFailure";
    case ErrorKind::ElementNotInGround: return "ElementNotInGround";
    case ErrorKind::OverlappingSets: return "OverlappingSets";
    case ErrorKind::DependentContraction: return "DependentContraction";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::GroundTooLarge: return "GroundTooLarge";
    case ErrorKind::EndpointOutOfRange: return "EndpointOutOfRange";
    case ErrorKind::InvalidEmbedding: return "InvalidEmbedding";
    case ErrorKind::NonCellular: return "NonCellular";
    case ErrorKind::NonPlanarEmbedding: return "NonPlanarEmbedding";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::TooManyBases: return "TooManyBases";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::NotASurface: return "NotASurface";
    case ErrorKind::LevelTooLarge: return "LevelTooLarge";
    case ErrorKind::DimMismatch: return "DimMismatch";
    case ErrorKind::CaseArityMismatch: return "CaseArityMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::BadDims: return "BadDims";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace duality
