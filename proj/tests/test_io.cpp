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

#include <doctest.h>

#include "duality/complex.hpp"
#include "duality/error.hpp"
#include "duality/generators.hpp"
#include "duality/graph.hpp"
#include "duality/io.hpp"
#include "duality/matroid.hpp"

using namespace duality;

namespace {

ErrorKind KindOf(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no exception");
  return ErrorKind::ParseError;
}

}  // namespace

TEST_CASE("matroid text and JSON round trips") {
  for (const char* name : {"fano", "fano_dual", "uniform:2,4", "mk4", "uniform:0,3"}) {
    const Matroid m = named_matroid(name);
    CHECK(parse_matroid(format_matroid(m)) == m);
    CHECK(matroid_from_json(matroid_to_json(m)) == m);
    CHECK(parse_matroid(matroid_to_json(m).dump()) == m);
  }
  const Matroid m = parse_matroid("# U_{1,2}\nground: 1 2\nbasis: 1\n\nbasis: 2  # trailing\n");
  CHECK(m == uniform_matroid(1, 2));
  CHECK(parse_matroid("ground: 1, 2, 3\nbasis: 1,2\nbasis: 1,3\nbasis: 2,3") == uniform_matroid(2, 3));
}

TEST_CASE("matroid parse errors") {
  CHECK(KindOf([] { parse_matroid("basis: 1"); }) == ErrorKind::ParseError);
  CHECK(KindOf([] { parse_matroid("ground: 1 x\nbasis: 1"); }) == ErrorKind::ParseError);
  CHECK(KindOf([] { parse_matroid("ground: 1\nground: 1\nbasis: 1"); }) == ErrorKind::ParseError);
  CHECK(KindOf([] { parse_matroid("ground: 1\nbase: 1"); }) == ErrorKind::ParseError);
  CHECK(KindOf([] { parse_matroid("{\"ground\": [1]"); }) == ErrorKind::ParseError);
  CHECK(KindOf([] { parse_matroid("{\"ground\": [1]}"); }) == ErrorKind::ParseError);
  CHECK(KindOf([] { parse_matroid("{\"ground\": [1], \"bases\": \"no\"}"); }) == ErrorKind::ParseError);
  // well formed input that violates the axioms is not a parse error
  CHECK(KindOf([] { parse_matroid("ground: 1 2 3 4\nbasis: 1 2\nbasis: 3 4"); }) != ErrorKind::ParseError);
  try {
    parse_matroid("ground: 1 2\n\nbasis: 1 q\n");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("graph and embedding round trips") {
  Rng rng(11);
  for (int t = 0; t < 30; ++t) {
    const Embedding emb = random_planar_embedding(rng, 7, 12);
    const GraphInput text = parse_graph(format_embedding(emb));
    REQUIRE(text.embedding);
    CHECK(text.graph == emb.graph());
    CHECK(text.embedding->rotation() == emb.rotation());
    const GraphInput json = graph_from_json(embedding_to_json(emb));
    REQUIRE(json.embedding);
    CHECK(json.embedding->rotation() == emb.rotation());
    CHECK(parse_graph(embedding_to_json(emb).dump()).embedding->rotation() == emb.rotation());

    const GraphInput plain = parse_graph(format_graph(emb.graph()));
    CHECK_FALSE(plain.embedding);
    CHECK(plain.graph == emb.graph());
    CHECK(graph_from_json(graph_to_json(emb.graph())).graph == emb.graph());
  }
}

TEST_CASE("dart notation") {
  CHECK(format_dart(make_dart(0, true)) == "+0");
  CHECK(format_dart(make_dart(0, false)) == "-0");
  CHECK(format_dart(make_dart(7, false)) == "-7");
  // a single edge 0 -> 1: "+0" leaves vertex 0 and "-0" leaves vertex 1
  const GraphInput in = parse_graph("v: 2\ne: 0 1\nrot 0: +0\nrot 1: -0\n");
  REQUIRE(in.embedding);
  CHECK(in.embedding->rotation()[1] == std::vector<int>{make_dart(0, false)});
  CHECK(parse_graph("v: 2\ne: 0 1\nrot 0: 0\nrot 1: -0\n").embedding->rotation() == in.embedding->rotation());
  const Json j = Json::parse(R"({"vertices": 2, "edges": [[0, 1]], "rotation": [["+0"], ["-0"]]})");
  CHECK(graph_from_json(j).embedding->rotation() == in.embedding->rotation());
}

TEST_CASE("graph parse errors") {
  CHECK(KindOf([] { parse_graph("e: 0 1"); }) == ErrorKind::ParseError);
  CHECK(KindOf([] { parse_graph("v: 2\ne: 0"); }) == ErrorKind::ParseError);
  CHECK(KindOf([] { parse_graph("v: 2\nedge: 0 1"); }) == ErrorKind::ParseError);
  CHECK(KindOf([] { parse_graph("v: 2\ne: 0 1\nrot 0: *0"); }) == ErrorKind::ParseError);
  CHECK(KindOf([] { parse_graph("v: 2\ne: 0 5"); }) == ErrorKind::EndpointOutOfRange);
  CHECK(KindOf([] { parse_graph("v: 2\ne: 0 1\nrot 0: +0\nrot 1: +0"); }) == ErrorKind::InvalidEmbedding);
  CHECK(KindOf([] { parse_graph("v: 2\ne: 0 1\nrot 0: +0\nrot 0: -0"); }) == ErrorKind::InvalidEmbedding);
  CHECK(KindOf([] { parse_graph(R"({"vertices": 2, "edges": [[0, 1, 2]]})"); }) == ErrorKind::ParseError);
}

TEST_CASE("complex round trips") {
  Rng rng(12);
  for (int t = 0; t < 30; ++t) {
    const SimplicialComplex k = random_complex(rng, 7);
    CHECK(parse_complex(format_complex(k)) == k);
    CHECK(complex_from_json(complex_to_json(k)) == k);
  }
  const SimplicialComplex a = parse_complex("0 1 2\ns: 2 3\n# comment\n");
  CHECK(a == SimplicialComplex::make({{0, 1, 2}, {2, 3}}));
  CHECK(parse_complex("{\"simplices\": [[2, 1, 0], [3, 2]]}") == a);
  CHECK(KindOf([] { parse_complex("0 0 1"); }) == ErrorKind::ParseError);
  CHECK(KindOf([] { parse_complex("t: 0 1"); }) == ErrorKind::ParseError);
  CHECK(KindOf([] { parse_complex("0 a"); }) == ErrorKind::ParseError);
  CHECK(KindOf([] { parse_complex("# nothing\n"); }) == ErrorKind::EmptyInput);
}
