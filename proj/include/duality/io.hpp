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

// Text and JSON readers/writers for matroids, graphs, embeddings and
// simplicial complexes.
//
//   matroid:  ground: 1 2 3 / basis: 1 2 ...      {"ground":[..],"bases":[[..],..]}
//   graph:    v: 4 / e: 0 1 ... / rot 0: +0 -2    {"vertices":4,"edges":[[0,1],..],
//                                                   "rotation":[["+0","-2"],..]}
//   complex:  one simplex per line, "s:" optional  {"simplices":[[0,1,2],..]}
//
// '#' starts a comment in every text format.

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "duality/complex.hpp"
#include "duality/graph.hpp"
#include "duality/matroid.hpp"

namespace duality {

using Json = nlohmann::json;

/// Text or JSON (detected by a leading '{'). Throws ParseError plus the
/// axiom errors of Matroid::make.
Matroid parse_matroid(std::string_view text, std::size_t bound = Matroid::kDefaultBound);
Matroid matroid_from_json(const Json& j, std::size_t bound = Matroid::kDefaultBound);
Json matroid_to_json(const Matroid& m);
std::string format_matroid(const Matroid& m);

struct GraphInput {
  Multigraph graph;
  std::optional<Embedding> embedding;  // present when rot lines were given
};

GraphInput parse_graph(std::string_view text);
GraphInput graph_from_json(const Json& j);
Json graph_to_json(const Multigraph& g);
Json embedding_to_json(const Embedding& emb);
std::string format_graph(const Multigraph& g);
std::string format_embedding(const Embedding& emb);
/// "+e" / "-e".
std::string format_dart(int dart);

SimplicialComplex parse_complex(std::string_view text);
SimplicialComplex complex_from_json(const Json& j);
Json complex_to_json(const SimplicialComplex& k);
std::string format_complex(const SimplicialComplex& k);

}  // namespace duality
