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

// Acceptance run: one PASS/FAIL line per criterion, exact checks, each with
// a wall-clock limit.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "duality/algebra.hpp"
#include "duality/complex.hpp"
#include "duality/error.hpp"
#include "duality/generators.hpp"
#include "duality/graph.hpp"
#include "duality/matroid.hpp"

using namespace duality;

namespace {

// Collects failure messages; a criterion passes when none were recorded.
class Failures {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && messages_.size() < 5) messages_.push_back(what);
    if (!ok) ++count_;
  }
  int count() const { return count_; }
  std::string summary() const {
    std::string s;
    for (const auto& m : messages_) s += (s.empty() ? "" : "; ") + m;
    if (count_ > static_cast<int>(messages_.size())) s += "; ...";
    return s;
  }

 private:
  std::vector<std::string> messages_;
  int count_ = 0;
};

struct Criterion {
  int number;
  std::string title;
  double limit_seconds;
  std::function<void(Failures&)> body;
};

std::string RunCli(const std::string& args, int* status) {
  const std::string cmd = std::string("'") + DUALITY_CLI_PATH + "' " + args + " 2>&1";
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    *status = -1;
    return out;
  }
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int raw = pclose(pipe);
  *status = (raw >= 0 && (raw & 0x7f) == 0) ? (raw >> 8) & 0xff : -1;
  return out;
}

std::vector<int> VertexDegrees(const Multigraph& g) {
  std::vector<int> deg(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

void Platonic(Failures& f) {
  const int expected[5][5] = {{3, 3, 4, 6, 4}, {4, 3, 8, 12, 6}, {3, 4, 6, 12, 8},
                              {5, 3, 20, 30, 12}, {3, 5, 12, 30, 20}};
  const auto rows = platonic_solids();
  f.expect(rows.size() == 5, "library returned " + std::to_string(rows.size()) + " rows");
  for (std::size_t i = 0; i < rows.size() && i < 5; ++i) {
    const auto& r = rows[i];
    const int got[5] = {r.p, r.q, r.vertices, r.edges, r.faces};
    for (int k = 0; k < 5; ++k) f.expect(got[k] == expected[i][k], "row " + r.name + " differs");
    f.expect(r.p * r.faces == 2 * r.edges, r.name + ": pF != 2E");
    f.expect(r.q * r.vertices == 2 * r.edges, r.name + ": qV != 2E");
    // E (2p - qp + 2q) = 2pq
    f.expect(r.edges * (2 * r.p - r.q * r.p + 2 * r.q) == 2 * r.p * r.q, r.name + ": edge equation");
    f.expect((r.p - 2) * (r.q - 2) < 4, r.name + ": (p-2)(q-2) >= 4");
    // the embedded solid realizes the row
    const Embedding emb = named_embedding(r.name);
    const FaceTrace t = trace_faces(emb);
    f.expect(t.vertices == r.vertices && t.edges == r.edges && t.face_count == r.faces,
             r.name + ": embedding counts");
    for (const auto& face : t.faces) f.expect(static_cast<int>(face.size()) == r.p, r.name + ": face length");
    for (int d : VertexDegrees(emb.graph())) f.expect(d == r.q, r.name + ": vertex degree");
  }
  // closed under (p, q, V, F) -> (q, p, F, V)
  for (const auto& r : rows) {
    bool found = false;
    for (const auto& s : rows)
      found |= s.p == r.q && s.q == r.p && s.vertices == r.faces && s.faces == r.vertices && s.edges == r.edges;
    f.expect(found, r.name + " has no dual row");
  }
  int status = 0;
  const std::string out = RunCli("graph platonic", &status);
  f.expect(status == 0, "cli exit status " + std::to_string(status));
  std::istringstream in(out);
  std::string header, line;
  std::getline(in, header);
  int n = 0;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    int v[5];
    ls >> v[0] >> v[1] >> v[2] >> v[3] >> v[4];
    f.expect(n < 5 && static_cast<bool>(ls), "cli row '" + line + "'");
    if (n < 5 && ls)
      for (int k = 0; k < 5; ++k) f.expect(v[k] == expected[n][k], "cli row '" + line + "'");
    ++n;
  }
  f.expect(n == 5, "cli printed " + std::to_string(n) + " rows");
}

void EulerDuality(Failures& f) {
  Rng rng(20260101);
  for (int t = 0; t < 100; ++t) {
    const Embedding emb = random_planar_embedding(rng, 10, 20);
    const FaceTrace tr = trace_faces(emb);
    const auto inv = graph_invariants(emb.graph());
    f.expect(inv.components == 1, "embedding not connected");
    f.expect(tr.vertices - tr.edges + tr.face_count == 2, "V - E + F != 2 at trial " + std::to_string(t));
    const auto rep = rank_nullity_duality_report(emb);
    f.expect(rep.dual_rank == inv.nullity, "R* != N at trial " + std::to_string(t));
    f.expect(rep.dual_nullity == inv.rank, "N* != R at trial " + std::to_string(t));
    const auto dual_inv = graph_invariants(dual_embedding(emb).graph());
    f.expect(dual_inv.rank == inv.nullity && dual_inv.nullity == inv.rank,
             "dual graph invariants at trial " + std::to_string(t));
  }
  for (int t = 0; t < 20; ++t) {
    std::vector<Embedding> parts;
    const int k = random_int(rng, 2, 4);
    for (int i = 0; i < k; ++i) parts.push_back(random_planar_embedding(rng, 6, 10));
    const Embedding emb = disjoint_union(parts);
    const FaceTrace tr = trace_faces(emb);
    const int components = graph_invariants(emb.graph()).components;
    f.expect(components == k, "union has " + std::to_string(components) + " components");
    f.expect(tr.vertices - tr.edges + tr.face_count == 1 + components,
             "chi != 1 + k for a " + std::to_string(k) + "-component graph");
  }
}

void MatroidAxioms(Failures& f) {
  std::vector<std::pair<std::string, Matroid>> ms;
  for (const char* name : {"fano", "fano_dual", "mk4", "mk5", "mk33", "uniform:0,3", "uniform:1,4",
                           "uniform:2,4", "uniform:3,6", "uniform:4,4", "free:5"})
    ms.emplace_back(name, named_matroid(name));
  Rng rng(20260102);
  for (int t = 0; t < 50; ++t) {
    const Multigraph g = random_multigraph(rng, 6, 9);
    ms.emplace_back("random graphic " + std::to_string(t), cycle_matroid(g));
  }
  for (const auto& [name, m] : ms) {
    const auto rep = check_duality_axioms(m);
    f.expect(rep.involution_ok, name + ": D(D(M)) != M");
    f.expect(rep.ground_preserved_ok, name + ": ground changed");
    f.expect(rep.elements == m.ground(), name + ": not every element checked");
    for (std::size_t i = 0; i < rep.elements.size(); ++i) {
      f.expect(rep.delete_contract_ok[i], name + ": D(M\\e) != D(M)/e at " + std::to_string(rep.elements[i]));
      f.expect(rep.contract_delete_ok[i], name + ": D(M/e) != D(M)\\e at " + std::to_string(rep.elements[i]));
    }
  }
}

void FanoClassification(Failures& f) {
  const auto rep = classify(fano_matroid());
  auto check = [&](const char* flag, const FlagVerdict& v, bool holds) {
    f.expect(v.holds == holds, std::string(flag) + " verdict");
    f.expect(!v.detail.empty(), std::string(flag) + " has no witness");
  };
  check("binary", rep.binary, true);
  check("regular", rep.regular, false);
  check("graphic", rep.graphic, false);
  check("cographic", rep.cographic, false);
  check("transversal", rep.transversal, false);
  f.expect(rep.binary.kind == FlagVerdict::Kind::Exhaustion, "binary witness kind");
  f.expect(rep.regular.kind == FlagVerdict::Kind::ExcludedMinor, "regular witness kind");
  f.expect(rep.graphic.kind == FlagVerdict::Kind::ExcludedMinor, "graphic witness kind");
  f.expect(rep.cographic.kind == FlagVerdict::Kind::ExcludedMinor, "cographic witness kind");
  f.expect(rep.transversal.kind == FlagVerdict::Kind::Exhaustion, "transversal witness kind");
}

void Coherence(Failures& f) {
  Rng rng(20260103);
  for (int t = 0; t < 20; ++t) {
    const Embedding emb = random_planar_embedding(rng, 8, 12);
    const Matroid lhs = cycle_matroid(dual_embedding(emb).graph());
    const Matroid rhs = dual(cycle_matroid(emb.graph()));
    f.expect(find_isomorphism(lhs, rhs).has_value(), "no isomorphism at trial " + std::to_string(t));
  }
}

void Kuratowski(Failures& f) {
  for (const char* name : {"k5", "k33"}) {
    const Multigraph g = named_graph(name);
    const auto res = is_planar(g);
    f.expect(!res.planar, std::string(name) + " reported planar");
    f.expect(res.witness.has_value(), std::string(name) + " has no witness");
    if (res.witness) {
      const Multigraph minor = apply_graph_minor(g, res.witness->deletions, res.witness->contractions);
      const bool k5 = res.witness->target == "K5" && is_k5(minor);
      const bool k33 = res.witness->target == "K3,3" && is_k33(minor);
      f.expect(k5 || k33, std::string(name) + " witness does not give " + res.witness->target);
    }
    for (int e = 0; e < g.edge_count(); ++e) {
      std::vector<Edge> edges = g.edges();
      edges.erase(edges.begin() + e);
      const Multigraph h(g.vertex_count(), edges);
      const auto r = is_planar(h);
      f.expect(r.planar, std::string(name) + " minus edge " + std::to_string(e) + " nonplanar");
      if (r.embedding) {
        const FaceTrace tr = trace_faces(*r.embedding);
        f.expect(tr.genus == 0, std::string(name) + " minus edge " + std::to_string(e) + ": embedding genus");
      }
    }
  }
}

void EulerPoincare(Failures& f) {
  Rng rng(20260104);
  for (int t = 0; t < 50; ++t) {
    const SimplicialComplex k = random_complex(rng, 8);
    f.expect(euler_characteristic(k) == betti_numbers(k).alternating_sum(),
             "simplex and Betti sums differ at trial " + std::to_string(t));
  }
  for (int n = 0; n <= 5; ++n) {
    const SimplicialComplex s = sphere(n);
    const std::int64_t expect = n % 2 ? 0 : 2;
    f.expect(euler_characteristic(s) == expect, "sphere " + std::to_string(n));
    f.expect(betti_numbers(s).alternating_sum() == expect, "sphere " + std::to_string(n) + " Betti");
  }
  for (int g = 0; g <= 4; ++g) {
    const SimplicialComplex s = genus_surface(g);
    const std::int64_t expect = 2 - 2 * g;
    f.expect(euler_characteristic(s) == expect, "genus " + std::to_string(g));
    f.expect(betti_numbers(s).alternating_sum() == expect, "genus " + std::to_string(g) + " Betti");
    f.expect(index_sum_canonical(s).index_sum == expect, "genus " + std::to_string(g) + " index sum");
  }
  for (const char* name : {"torus", "sphere:2"}) {
    const SimplicialComplex s = named_complex(name);
    f.expect(index_sum_canonical(s).index_sum == euler_characteristic(s), std::string(name) + " index sum");
  }
}

void GenusDuality(Failures& f) {
  auto check = [&](const Embedding& emb, const std::string& what, int max_genus) {
    const auto rep = genus_duality_check(emb);
    f.expect(rep.genus <= max_genus, what + ": genus " + std::to_string(rep.genus));
    f.expect(rep.virtual_euler_ok, what + ": virtual Euler relation");
    f.expect(rep.rank_duality_ok, what + ": augmented rank duality");
    f.expect(rep.genus_formula_ok, what + ": chi != 2 - 2g");
    f.expect(rep.virtual_vertices - rep.edges + rep.dual_virtual_vertices == 2, what + ": recount");
  };
  check(named_embedding("torus"), "torus", 1);
  check(named_embedding("genus:2"), "genus 2", 2);
  f.expect(genus_duality_check(named_embedding("genus:2")).genus == 2, "genus:2 is not genus 2");
  Rng rng(20260105);
  for (int t = 0; t < 20; ++t) check(random_cellular_embedding(rng, 6, 3), "trial " + std::to_string(t), 3);
}

void DivisionAlgebras(Failures& f) {
  for (int level = 0; level <= 3; ++level) {
    const auto alg = cayley_dickson_algebra(level);
    const auto rep = division_algebra_report(alg, 1000, 20260106);
    const std::string name = alg.name();
    f.expect(rep.basis_pairs_checked >= static_cast<std::size_t>(alg.dim() * alg.dim()), name + ": basis pairs");
    f.expect(rep.samples == 1000, name + ": samples");
    f.expect(rep.norm_multiplicative, name + ": norm not multiplicative");
    f.expect(rep.alternative, name + ": not alternative");
    f.expect(!rep.zero_divisor, name + ": zero divisor found");
  }
  const auto s = cayley_dickson_algebra(4);
  const auto zd = find_zero_divisor(s);
  f.expect(zd.has_value(), "no sedenion zero divisor");
  if (zd) {
    f.expect(norm_sq(zd->x) != 0 && norm_sq(zd->y) != 0, "zero divisor has a zero factor");
    f.expect(multiply(s, zd->x, zd->y) == Vector(16), "product is not exactly zero");
  }
}

void CrossProducts(Failures& f) {
  std::vector<CrossProductCase> cases;
  for (int n : {2, 4, 6, 8}) cases.push_back(CrossProductCase::complex_structure(n));
  for (int n : {3, 4, 5}) cases.push_back(CrossProductCase::epsilon(n));
  cases.push_back(CrossProductCase::three());
  cases.push_back(CrossProductCase::seven());
  cases.push_back(CrossProductCase::triple8());
  for (const auto& c : cases) {
    const auto rep = cross_axioms_report(c, 200, 20260107);
    std::size_t tuples = 1;
    for (int i = 0; i < c.r; ++i) tuples *= c.n;
    f.expect(rep.basis_tuples == tuples, c.name() + ": basis tuples");
    f.expect(rep.random_tuples == 200, c.name() + ": random tuples");
    f.expect(rep.orthogonality_ok, c.name() + ": orthogonality");
    f.expect(rep.norm_identity_ok, c.name() + ": norm identity");
    f.expect(rep.multilinearity_ok, c.name() + ": multilinearity");
    f.expect(rep.alternating_ok, c.name() + ": alternating");
  }
}

void ChirotopeBridge(Failures& f) {
  Rng rng(20260108);
  for (int t = 0; t < 20; ++t) {
    const auto points = random_configuration(rng, 8, 3);
    try {
      const Chirotope chi = chirotope_of_configuration(points);
      const Matroid m = chirotope_support(chi);
      const std::string at = " at trial " + std::to_string(t);
      f.expect(chi.n() <= 8 && chi.r() <= 3, "configuration size" + at);
      f.expect(m.rank() == chi.r(), "support rank" + at);
      const auto nonzero = std::count_if(chi.signs().begin(), chi.signs().end(), [](int x) { return x != 0; });
      f.expect(m.basis_count() == static_cast<std::size_t>(nonzero), "support size" + at);
    } catch (const Error& e) {
      f.expect(false, "trial " + std::to_string(t) + ": " + e.what());
    }
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "platonic enumeration (library and cli)", 0.1, Platonic},
      {2, "euler and rank/nullity duality on plane graphs", 5, EulerDuality},
      {3, "matroid duality axioms", 30, MatroidAxioms},
      {4, "fano classification", 60, FanoClassification},
      {5, "geometric and matroid duals agree", 60, Coherence},
      {6, "kuratowski graphs", 10, Kuratowski},
      {7, "euler-poincare", 30, EulerPoincare},
      {8, "genus duality with virtual vertices", 10, GenusDuality},
      {9, "division algebras and the sedenion zero divisor", 10, DivisionAlgebras},
      {10, "cross-product axioms", 30, CrossProducts},
      {11, "chirotope supports are matroids", 10, ChirotopeBridge},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Failures f;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(f);
    } catch (const std::exception& e) {
      f.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.limit_seconds;
    const bool pass = f.count() == 0 && in_time;
    failed += pass ? 0 : 1;
    std::printf("%s criterion %2d: %s (%.3f s, limit %g s)", pass ? "PASS" : "FAIL", c.number,
                c.title.c_str(), seconds, c.limit_seconds);
    if (!in_time) std::printf(" over time limit");
    if (f.count() > 0) std::printf(" %d failed checks: %s", f.count(), f.summary().c_str());
    std::printf("\n");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
