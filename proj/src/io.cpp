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

#include "duality/io.hpp"

#include <charconv>
#include <sstream>

#include "duality/error.hpp"

namespace duality {
namespace {

[[noreturn]] void Fail(int line, const std::string& msg) {
  throw Error(ErrorKind::ParseError,
              line > 0 ? "line " + std::to_string(line) + ": " + msg : msg);
}

std::string_view Trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Non-empty lines with comments stripped, paired with their line numbers.
std::vector<std::pair<int, std::string_view>> Lines(std::string_view text) {
  std::vector<std::pair<int, std::string_view>> out;
  int number = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++number;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (!line.empty()) out.emplace_back(number, line);
  }
  return out;
}

std::vector<std::string_view> Tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == ',')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != ',') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

int ToInt(std::string_view tok, int line) {
  int v = 0;
  const char* b = tok.data();
  const char* e = b + tok.size();
  if (!tok.empty() && tok.front() == '+') ++b;
  auto [p, ec] = std::from_chars(b, e, v);
  if (ec != std::errc() || p != e || b == e) Fail(line, "expected an integer, got '" + std::string(tok) + "'");
  return v;
}

std::vector<int> Ints(std::string_view s, int line) {
  std::vector<int> out;
  for (auto t : Tokens(s)) out.push_back(ToInt(t, line));
  return out;
}

// Splits "key: rest"; returns false without a colon.
bool SplitKey(std::string_view line, std::string_view& key, std::string_view& rest) {
  const auto colon = line.find(':');
  if (colon == std::string_view::npos) return false;
  key = Trim(line.substr(0, colon));
  rest = Trim(line.substr(colon + 1));
  return true;
}

bool LooksLikeJson(std::string_view text) {
  const auto t = Trim(text);
  return !t.empty() && t.front() == '{';
}

Json ParseJson(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    Fail(0, std::string("invalid JSON: ") + e.what());
  }
}

template <typename T>
T Field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) Fail(0, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    Fail(0, std::string("field '") + key + "': " + e.what());
  }
}

// "+e", "-e" or a bare e. "-0" is only reachable through the text form.
int ParseDart(std::string_view tok, int line) {
  if (tok.empty()) Fail(line, "empty dart");
  const bool minus = tok.front() == '-';
  const std::string_view digits = (tok.front() == '-' || tok.front() == '+') ? tok.substr(1) : tok;
  const int e = ToInt(digits, line);
  if (e < 0) Fail(line, "bad dart '" + std::string(tok) + "'");
  return make_dart(e, !minus);
}


}  // namespace

// --- matroids -------------------------------------------------------------

Matroid matroid_from_json(const Json& j, std::size_t bound) {
  auto ground = Field<std::vector<int>>(j, "ground");
  auto bases = Field<std::vector<std::vector<int>>>(j, "bases");
  return Matroid::make(std::move(ground), bases, bound);
}

Matroid parse_matroid(std::string_view text, std::size_t bound) {
  if (LooksLikeJson(text)) return matroid_from_json(ParseJson(text), bound);
  std::optional<std::vector<int>> ground;
  std::vector<std::vector<int>> bases;
  for (auto [number, line] : Lines(text)) {
    std::string_view key, rest;
    if (!SplitKey(line, key, rest)) Fail(number, "expected 'ground:' or 'basis:'");
    if (key == "ground") {
      if (ground) Fail(number, "duplicate ground line");
      ground = Ints(rest, number);
    } else if (key == "basis") {
      bases.push_back(Ints(rest, number));
    } else {
      Fail(number, "unknown key '" + std::string(key) + "'");
    }
  }
  if (!ground) Fail(0, "missing 'ground:' line");
  return Matroid::make(std::move(*ground), bases, bound);
}

Json matroid_to_json(const Matroid& m) {
  return Json{{"ground", m.ground()}, {"bases", m.bases()}};
}

std::string format_matroid(const Matroid& m) {
  std::ostringstream os;
  os << "ground:";
  for (int x : m.ground()) os << ' ' << x;
  os << '\n';
  for (const auto& b : m.bases()) {
    os << "basis:";
    for (int x : b) os << ' ' << x;
    os << '\n';
  }
  return os.str();
}

// --- graphs ---------------------------------------------------------------

std::string format_dart(int dart) {
  return (dart & 1 ? "-" : "+") + std::to_string(dart_edge(dart));
}

GraphInput parse_graph(std::string_view text) {
  if (LooksLikeJson(text)) return graph_from_json(ParseJson(text));
  std::optional<int> vertices;
  std::vector<Edge> edges;
  std::vector<std::pair<int, std::vector<int>>> rot_lines;
  for (auto [number, line] : Lines(text)) {
    std::string_view key, rest;
    if (!SplitKey(line, key, rest)) Fail(number, "expected 'v:', 'e:' or 'rot <vertex>:'");
    if (key == "v") {
      if (vertices) Fail(number, "duplicate vertex count");
      const auto v = Ints(rest, number);
      if (v.size() != 1) Fail(number, "'v:' takes one count");
      vertices = v[0];
    } else if (key == "e") {
      const auto uv = Ints(rest, number);
      if (uv.size() != 2) Fail(number, "'e:' takes two endpoints");
      edges.push_back({uv[0], uv[1]});
    } else if (key.starts_with("rot")) {
      const auto vt = Tokens(key.substr(3));
      if (vt.size() != 1) Fail(number, "expected 'rot <vertex>:'");
      std::vector<int> darts;
      for (auto t : Tokens(rest)) darts.push_back(ParseDart(t, number));
      rot_lines.emplace_back(ToInt(vt[0], number), std::move(darts));
    } else {
      Fail(number, "unknown key '" + std::string(key) + "'");
    }
  }
  if (!vertices) Fail(0, "missing 'v:' line");
  GraphInput in{Multigraph(*vertices, std::move(edges)), std::nullopt};
  if (!rot_lines.empty()) {
    std::vector<std::vector<int>> rot(in.graph.vertex_count());
    std::vector<bool> seen(rot.size(), false);
    for (auto& [v, darts] : rot_lines) {
      if (v < 0 || v >= in.graph.vertex_count()) {
        throw Error(ErrorKind::InvalidEmbedding, "rotation for unknown vertex " + std::to_string(v));
      }
      if (seen[v]) throw Error(ErrorKind::InvalidEmbedding, "two rotations for vertex " + std::to_string(v));
      seen[v] = true;
      rot[v] = std::move(darts);
    }
    in.embedding = Embedding(in.graph, rot);
  }
  return in;
}

GraphInput graph_from_json(const Json& j) {
  const int vertices = Field<int>(j, "vertices");
  std::vector<Edge> edges;
  for (const auto& uv : Field<std::vector<std::vector<int>>>(j, "edges")) {
    if (uv.size() != 2) Fail(0, "each edge needs two endpoints");
    edges.push_back({uv[0], uv[1]});
  }
  GraphInput in{Multigraph(vertices, std::move(edges)), std::nullopt};
  if (j.contains("rotation")) {
    std::vector<std::vector<int>> rot;
    for (const auto& list : Field<std::vector<Json>>(j, "rotation")) {
      std::vector<int> darts;
      if (!list.is_array()) Fail(0, "rotation entries must be arrays");
      for (const auto& d : list) {
        if (d.is_string()) {
          darts.push_back(ParseDart(d.get<std::string>(), 0));
        } else if (d.is_number_integer()) {
          const int v = d.get<int>();
          darts.push_back(v < 0 ? make_dart(-v, false) : make_dart(v, true));
        } else {
          Fail(0, "darts are \"+e\"/\"-e\" strings");
        }
      }
      rot.push_back(std::move(darts));
    }
    in.embedding = Embedding(in.graph, rot);
  }
  return in;
}

Json graph_to_json(const Multigraph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return Json{{"vertices", g.vertex_count()}, {"edges", edges}};
}

Json embedding_to_json(const Embedding& emb) {
  Json j = graph_to_json(emb.graph());
  Json rot = Json::array();
  for (const auto& r : emb.rotation()) {
    Json list = Json::array();
    for (int d : r) list.push_back(format_dart(d));
    rot.push_back(list);
  }
  j["rotation"] = rot;
  return j;
}

std::string format_graph(const Multigraph& g) {
  std::ostringstream os;
  os << "v: " << g.vertex_count() << '\n';
  for (const Edge& e : g.edges()) os << "e: " << e.u << ' ' << e.v << '\n';
  return os.str();
}

std::string format_embedding(const Embedding& emb) {
  std::ostringstream os;
  os << format_graph(emb.graph());
  for (std::size_t v = 0; v < emb.rotation().size(); ++v) {
    os << "rot " << v << ':';
    for (int d : emb.rotation()[v]) os << ' ' << format_dart(d);
    os << '\n';
  }
  return os.str();
}

// --- complexes ------------------------------------------------------------

SimplicialComplex parse_complex(std::string_view text) {
  if (LooksLikeJson(text)) return complex_from_json(ParseJson(text));
  std::vector<Simplex> simplices;
  for (auto [number, line] : Lines(text)) {
    std::string_view body = line;
    std::string_view key, rest;
    if (SplitKey(line, key, rest)) {
      if (key != "s") Fail(number, "unknown key '" + std::string(key) + "'");
      body = rest;
    }
    simplices.push_back(Ints(body, number));
  }
  return complex_from_json(Json{{"simplices", simplices}});
}

SimplicialComplex complex_from_json(const Json& j) {
  auto simplices = Field<std::vector<Simplex>>(j, "simplices");
  for (auto& s : simplices) {
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) Fail(0, "repeated vertex in a simplex");
  }
  return SimplicialComplex::make(simplices);
}

Json complex_to_json(const SimplicialComplex& k) {
  return Json{{"simplices", k.maximal_simplices()}};
}

std::string format_complex(const SimplicialComplex& k) {
  std::ostringstream os;
  for (const auto& s : k.maximal_simplices()) {
    os << "s:";
    for (int v : s) os << ' ' << v;
    os << '\n';
  }
  return os.str();
}

}  // namespace duality
