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

#include "duality/complex.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <string>

#include "duality/error.hpp"
#include "duality/gf2.hpp"

namespace duality {

SimplicialComplex SimplicialComplex::make(const std::vector<Simplex>& maximal) {
  std::set<Simplex> all;
  for (Simplex s : maximal) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.empty()) continue;
    if (s.size() > 20) {
      throw Error(ErrorKind::TooLarge, "simplex with more than 20 vertices");
    }
    const std::uint32_t subsets = 1u << s.size();
    for (std::uint32_t mask = 1; mask < subsets; ++mask) {
      Simplex face;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (mask >> i & 1u) face.push_back(s[i]);
      }
      all.insert(std::move(face));
    }
  }
  if (all.empty()) throw Error(ErrorKind::EmptyInput, "no simplices given");
  SimplicialComplex k;
  for (const Simplex& s : all) {
    if (k.by_dim_.size() < s.size()) k.by_dim_.resize(s.size());
    k.by_dim_[s.size() - 1].push_back(s);
  }
  return k;
}

std::vector<std::int64_t> SimplicialComplex::alpha() const {
  std::vector<std::int64_t> a;
  for (const auto& level : by_dim_) a.push_back(static_cast<std::int64_t>(level.size()));
  return a;
}

std::size_t SimplicialComplex::total() const {
  std::size_t n = 0;
  for (const auto& level : by_dim_) n += level.size();
  return n;
}

long SimplicialComplex::index_of(const Simplex& s) const {
  if (s.empty() || s.size() > by_dim_.size()) return -1;
  const auto& level = by_dim_[s.size() - 1];
  auto it = std::lower_bound(level.begin(), level.end(), s);
  if (it == level.end() || *it != s) return -1;
  return static_cast<long>(it - level.begin());
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
  std::vector<Simplex> out;
  for (int d = 0; d <= dimension(); ++d) {
    for (const Simplex& s : by_dim_[d]) {
      bool is_face = false;
      if (d < dimension()) {
        for (const Simplex& t : by_dim_[d + 1]) {
          if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
            is_face = true;
            break;
          }
        }
      }
      if (!is_face) out.push_back(s);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t euler_characteristic(const SimplicialComplex& k) {
  std::int64_t chi = 0;
  auto a = k.alpha();
  for (std::size_t i = 0; i < a.size(); ++i) chi += (i % 2 == 0 ? 1 : -1) * a[i];
  return chi;
}

std::int64_t BettiVector::alternating_sum() const {
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < b.size(); ++i) sum += (i % 2 == 0 ? 1 : -1) * b[i];
  return sum;
}

BettiVector betti_numbers(const SimplicialComplex& k, std::size_t limit) {
  if (k.total() > limit) {
    throw Error(ErrorKind::TooLarge, std::to_string(k.total()) +
                                         " simplices exceed the limit " +
                                         std::to_string(limit));
  }
  const int n = k.dimension();
  // rank[i] = rank of the boundary map from i-chains to (i-1)-chains.
  std::vector<std::int64_t> rank(n + 2, 0);
  for (int i = 1; i <= n; ++i) {
    const auto& faces = k.simplices(i - 1);
    const auto& cells = k.simplices(i);
    // Rows are cells so each row holds one boundary.
    Gf2Matrix boundary(cells.size(), faces.size());
    for (std::size_t c = 0; c < cells.size(); ++c) {
      for (std::size_t drop = 0; drop < cells[c].size(); ++drop) {
        Simplex face = cells[c];
        face.erase(face.begin() + static_cast<long>(drop));
        boundary.set(c, static_cast<std::size_t>(k.index_of(face)));
      }
    }
    rank[i] = static_cast<std::int64_t>(boundary.rank());
  }
  BettiVector betti;
  auto alpha = k.alpha();
  for (int i = 0; i <= n; ++i) betti.b.push_back(alpha[i] - rank[i] - rank[i + 1]);
  return betti;
}

SimplicialComplex sphere(int n) {
  if (n < 0 || n > 5) throw Error(ErrorKind::BadParams, "sphere dimension must be 0..5");
  std::vector<Simplex> facets;
  for (int skip = 0; skip <= n + 1; ++skip) {
    Simplex s;
    for (int v = 0; v <= n + 1; ++v) {
      if (v != skip) s.push_back(v);
    }
    facets.push_back(s);
  }
  return SimplicialComplex::make(facets);
}

namespace {

// 3x3 grid torus on labels offset..offset+8, vertex (i, j) = offset + 3i + j.
std::vector<Simplex> GridTorus(int offset) {
  std::vector<Simplex> tris;
  auto v = [&](int i, int j) { return offset + 3 * ((i + 3) % 3) + (j + 3) % 3; };
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      tris.push_back({v(i, j), v(i + 1, j), v(i + 1, j + 1)});
      tris.push_back({v(i, j), v(i, j + 1), v(i + 1, j + 1)});
    }
  }
  for (auto& t : tris) std::sort(t.begin(), t.end());
  return tris;
}

int ParseParam(std::string_view text, std::string_view name) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorKind::BadParams, "bad parameter in '" + std::string(name) + "'");
  }
  return value;
}

}  // namespace

SimplicialComplex genus_surface(int g) {
  if (g < 0 || g > 4) throw Error(ErrorKind::BadParams, "genus must be 0..4");
  if (g == 0) return sphere(2);
  // In local labels each copy drops triangle {0,3,4} (glued onto the previous
  // copy's {5,6,8}, vertexwise in that order) and, unless it is the last
  // copy, its own {5,6,8}.
  std::vector<Simplex> tris;
  int next_label = 0;
  std::vector<std::vector<int>> label(g, std::vector<int>(9, -1));
  const Simplex left = {0, 3, 4};
  const Simplex right = {5, 6, 8};
  for (int c = 0; c < g; ++c) {
    for (int x = 0; x < 9; ++x) {
      if (c > 0) {
        auto it = std::find(left.begin(), left.end(), x);
        if (it != left.end()) {
          label[c][x] = label[c - 1][right[it - left.begin()]];
          continue;
        }
      }
      label[c][x] = next_label++;
    }
    for (const Simplex& t : GridTorus(0)) {
      if (c > 0 && t == left) continue;
      if (c + 1 < g && t == right) continue;
      Simplex mapped;
      for (int x : t) mapped.push_back(label[c][x]);
      tris.push_back(mapped);
    }
  }
  return SimplicialComplex::make(tris);
}

SimplicialComplex named_complex(std::string_view name) {
  std::string_view base = name, param;
  if (auto colon = name.find(':'); colon != std::string_view::npos) {
    base = name.substr(0, colon);
    param = name.substr(colon + 1);
  } else if (auto paren = name.find('('); paren != std::string_view::npos &&
                                          name.back() == ')') {
    base = name.substr(0, paren);
    param = name.substr(paren + 1, name.size() - paren - 2);
  }
  if (base == "torus" && param.empty()) return genus_surface(1);
  if (base == "sphere") return sphere(ParseParam(param, name));
  if (base == "genus" || base == "genus_surface") {
    return genus_surface(ParseParam(param, name));
  }
  throw Error(ErrorKind::UnknownName, "unknown complex '" + std::string(name) + "'");
}

IndexReport index_sum_canonical(const SimplicialComplex& k) {
  if (k.dimension() != 2) {
    throw Error(ErrorKind::NotASurface,
                "dimension " + std::to_string(k.dimension()) + ", expected 2");
  }
  std::vector<int> triangles_per_edge(k.simplices(1).size(), 0);
  for (const Simplex& t : k.simplices(2)) {
    for (std::size_t drop = 0; drop < 3; ++drop) {
      Simplex e = t;
      e.erase(e.begin() + static_cast<long>(drop));
      ++triangles_per_edge[k.index_of(e)];
    }
  }
  for (std::size_t i = 0; i < triangles_per_edge.size(); ++i) {
    if (triangles_per_edge[i] != 2) {
      const Simplex& e = k.simplices(1)[i];
      throw Error(ErrorKind::NotASurface,
                  "edge {" + std::to_string(e[0]) + "," + std::to_string(e[1]) +
                      "} lies in " + std::to_string(triangles_per_edge[i]) +
                      " triangles");
    }
  }
  IndexReport r;
  auto a = k.alpha();
  r.sources = a[0];
  r.saddles = a[1];
  r.sinks = a[2];
  r.index_sum = r.sources - r.saddles + r.sinks;
  return r;
}

GenusDualityReport genus_duality_check(const Embedding& emb) {
  const FaceTrace t = trace_faces(emb);
  if (t.components != 1) {
    throw Error(ErrorKind::NonCellular,
                "genus duality needs a connected embedding");
  }
  GenusDualityReport r;
  r.vertices = t.vertices;
  r.edges = t.edges;
  r.faces = t.face_count;
  r.genus = *t.genus;
  const int dual_edges = r.edges;  // E* = E
  r.virtual_vertices = r.vertices + r.genus;
  r.dual_virtual_vertices = r.faces + r.genus;
  r.aug_rank = r.virtual_vertices - 1;
  r.aug_nullity = r.edges - r.aug_rank;
  r.dual_aug_rank = r.dual_virtual_vertices - 1;
  r.dual_aug_nullity = dual_edges - r.dual_aug_rank;
  r.virtual_euler_ok =
      r.virtual_vertices - dual_edges + r.dual_virtual_vertices == 2;
  r.rank_duality_ok =
      r.dual_aug_rank == r.aug_nullity && r.dual_aug_nullity == r.aug_rank;
  r.genus_formula_ok = t.euler_char + 2 * r.genus == 2;
  return r;
}

}  // namespace duality
