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

// duality: command-line front end.
//
// Exit status: 0 success, 1 a checked property failed (or a search found
// nothing), 2 usage or input error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "duality/algebra.hpp"
#include "duality/complex.hpp"
#include "duality/error.hpp"
#include "duality/graph.hpp"
#include "duality/io.hpp"
#include "duality/matroid.hpp"

namespace {

using duality::Json;

struct Options {
  bool json = false;
  std::uint64_t seed = 1;
  std::size_t trials = 200;
  std::size_t bound = 0;  // 0: per-command default
  std::string algebra = "o";
  std::string cross_case = "three";
  std::vector<std::string> args;
  std::vector<std::string> points;
  std::vector<int> deletions;
  std::vector<int> contractions;
  int hodge_n = 3;
  int hodge_k = 1;
  std::string input;
  std::string input2;
};

std::string ReadSource(const std::string& src) {
  if (src == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(src);
  if (!in) throw duality::Error(duality::ErrorKind::ParseError, "cannot read '" + src + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

bool IsFile(const std::string& src) {
  std::error_code ec;
  return src == "-" || std::filesystem::is_regular_file(src, ec);
}

std::size_t BoundOr(const Options& o, std::size_t fallback) { return o.bound ? o.bound : fallback; }

duality::Matroid LoadMatroid(const std::string& src, const Options& o) {
  const std::size_t bound = BoundOr(o, duality::Matroid::kDefaultBound);
  if (IsFile(src)) return duality::parse_matroid(ReadSource(src), bound);
  return duality::named_matroid(src);
}

duality::GraphInput LoadGraph(const std::string& src) {
  if (IsFile(src)) return duality::parse_graph(ReadSource(src));
  try {
    duality::Embedding emb = duality::named_embedding(src);
    return {emb.graph(), emb};
  } catch (const duality::Error& e) {
    // Known graph without a planar rotation system: fall back to the bare graph.
    if (e.kind() != duality::ErrorKind::UnknownName &&
        e.kind() != duality::ErrorKind::NonPlanarEmbedding) {
      throw;
    }
  }
  return {duality::named_graph(src), std::nullopt};
}

duality::Embedding LoadEmbedding(const std::string& src) {
  auto in = LoadGraph(src);
  if (!in.embedding) {
    throw duality::Error(duality::ErrorKind::InvalidEmbedding,
                         "'" + src + "' has no rotation system (add 'rot <v>:' lines)");
  }
  return *in.embedding;
}

duality::SimplicialComplex LoadComplex(const std::string& src) {
  if (IsFile(src)) return duality::parse_complex(ReadSource(src));
  return duality::named_complex(src);
}

std::string Join(const std::vector<int>& v, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

std::string SetText(const std::vector<int>& v) { return "{" + Join(v, ",") + "}"; }

Json VectorJson(const duality::Vector& v) {
  Json a = Json::array();
  for (const auto& c : v) a.push_back(duality::format_rational(c));
  return a;
}

Json PairJson(const std::optional<duality::ElementPair>& p) {
  if (!p) return nullptr;
  return Json{{"x", VectorJson(p->x)}, {"y", VectorJson(p->y)}};
}

void Emit(const Options& o, const Json& j, const std::string& text) {
  if (o.json) {
    std::cout << j.dump() << '\n';
  } else {
    std::cout << text;
  }
}

// --- matroid ---------------------------------------------------------------

int MatroidValidate(const Options& o) {
  const std::size_t bound = BoundOr(o, duality::Matroid::kDefaultBound);
  try {
    const duality::Matroid m = LoadMatroid(o.input, o);
    Json j{{"valid", true}, {"size", m.size()}, {"rank", m.rank()}, {"bases", m.basis_count()}};
    std::ostringstream os;
    os << "valid matroid: |E| = " << m.size() << ", rank " << m.rank() << ", "
       << m.basis_count() << " bases\n";
    Emit(o, j, os.str());
    return 0;
  } catch (const duality::Error& e) {
    switch (e.kind()) {
      case duality::ErrorKind::EmptyBases:
      case duality::ErrorKind::ContainmentViolation:
      case duality::ErrorKind::ExchangeFailure: {
        Json j{{"valid", false}, {"error", std::string(duality::to_string(e.kind()))},
               {"message", e.what()}, {"bound", bound}};
        Emit(o, j, std::string("invalid: ") + e.what() + "\n");
        return 1;
      }
      default:
        throw;
    }
  }
}

int MatroidDual(const Options& o) {
  const auto d = duality::dual(LoadMatroid(o.input, o));
  Emit(o, duality::matroid_to_json(d), duality::format_matroid(d));
  return 0;
}

int MatroidMinor(const Options& o) {
  const auto m = duality::minor(LoadMatroid(o.input, o), o.deletions, o.contractions);
  Emit(o, duality::matroid_to_json(m), duality::format_matroid(m));
  return 0;
}

Json VerdictJson(const duality::FlagVerdict& v) {
  return Json{{"holds", v.holds}, {"kind", std::string(duality::to_string(v.kind))},
              {"detail", v.detail}};
}

int MatroidClassify(const Options& o) {
  const auto m = LoadMatroid(o.input, o);
  const auto r = duality::classify(m);
  const std::pair<const char*, const duality::FlagVerdict*> rows[] = {
      {"binary", &r.binary},     {"regular", &r.regular},         {"graphic", &r.graphic},
      {"cographic", &r.cographic}, {"transversal", &r.transversal}};
  Json j;
  std::ostringstream os;
  for (auto [name, v] : rows) {
    j[name] = VerdictJson(*v);
    os << name << ": " << (v->holds ? "yes" : "no") << " [" << duality::to_string(v->kind)
       << "] " << v->detail << '\n';
  }
  Emit(o, j, os.str());
  return 0;
}

Json BasesJson(const std::vector<std::vector<int>>& bases) { return Json(bases); }

int MatroidCheckDuality(const Options& o) {
  const auto m = LoadMatroid(o.input, o);
  const auto r = duality::check_duality_axioms(m);
  Json j{{"involution", r.involution_ok},
         {"ground_preserved", r.ground_preserved_ok},
         {"elements", r.elements},
         {"delete_contract", r.delete_contract_ok},
         {"contract_delete", r.contract_delete_ok},
         {"all_ok", r.all_ok()}};
  std::ostringstream os;
  os << "D(D(M)) = M: " << (r.involution_ok ? "ok" : "FAIL") << '\n';
  os << "E(D(M)) = E(M): " << (r.ground_preserved_ok ? "ok" : "FAIL") << '\n';
  for (std::size_t i = 0; i < r.elements.size(); ++i) {
    os << "element " << r.elements[i] << ": D(M\\e) = D(M)/e "
       << (r.delete_contract_ok[i] ? "ok" : "FAIL") << ", D(M/e) = D(M)\\e "
       << (r.contract_delete_ok[i] ? "ok" : "FAIL") << '\n';
  }
  if (r.counterexample) {
    const auto& c = *r.counterexample;
    j["counterexample"] = {{"element", c.element}, {"axiom", c.axiom},
                           {"lhs", BasesJson(c.lhs_bases)}, {"rhs", BasesJson(c.rhs_bases)}};
    os << "counterexample at " << c.element << " (" << c.axiom << ")\n";
  }
  os << (r.all_ok() ? "all axioms hold\n" : "axiom violation\n");
  Emit(o, j, os.str());
  return r.all_ok() ? 0 : 1;
}

int MatroidIsomorphic(const Options& o) {
  const auto a = LoadMatroid(o.input, o);
  const auto b = LoadMatroid(o.input2, o);
  const auto iso = duality::find_isomorphism(a, b);
  Json j{{"isomorphic", iso.has_value()}};
  std::ostringstream os;
  if (iso) {
    Json map = Json::object();
    os << "isomorphic:";
    for (std::size_t i = 0; i < a.ground().size(); ++i) {
      map[std::to_string(a.ground()[i])] = iso->mapping[i];
      os << ' ' << a.ground()[i] << "->" << iso->mapping[i];
    }
    os << '\n';
    j["mapping"] = map;
  } else {
    os << "not isomorphic\n";
  }
  Emit(o, j, os.str());
  return iso ? 0 : 1;
}

int MatroidHasMinor(const Options& o) {
  const auto m = LoadMatroid(o.input, o);
  const auto t = LoadMatroid(o.input2, o);
  const auto s = duality::find_minor(m, t);
  Json j{{"has_minor", s.witness.has_value()},
         {"pairs_enumerated", s.pairs_enumerated},
         {"candidates_examined", s.candidates_examined}};
  std::ostringstream os;
  if (s.witness) {
    j["deletions"] = s.witness->deletions;
    j["contractions"] = s.witness->contractions;
    os << "minor found: delete " << SetText(s.witness->deletions) << ", contract "
       << SetText(s.witness->contractions) << '\n';
  } else {
    os << "no such minor (exhaustive: " << s.pairs_enumerated << " deletion/contraction pairs, "
       << s.candidates_examined << " isomorphism tests)\n";
  }
  Emit(o, j, os.str());
  return s.witness ? 0 : 1;
}

// --- graph -----------------------------------------------------------------

int GraphInvariantsCmd(const Options& o) {
  const auto g = LoadGraph(o.input).graph;
  const auto inv = duality::graph_invariants(g);
  Json j{{"vertices", g.vertex_count()}, {"edges", g.edge_count()},
         {"components", inv.components}, {"rank", inv.rank}, {"nullity", inv.nullity}};
  std::ostringstream os;
  os << "V = " << g.vertex_count() << ", E = " << g.edge_count() << ", k = " << inv.components
     << ", R = " << inv.rank << ", N = " << inv.nullity << '\n';
  Emit(o, j, os.str());
  return 0;
}

int GraphEuler(const Options& o) {
  const auto emb = LoadEmbedding(o.input);
  const auto t = duality::trace_faces(emb);
  Json faces = Json::array();
  for (const auto& f : t.faces) {
    Json list = Json::array();
    for (int d : f) list.push_back(duality::format_dart(d));
    faces.push_back(list);
  }
  Json j{{"vertices", t.vertices}, {"edges", t.edges}, {"faces", t.face_count},
         {"euler_char", t.euler_char}, {"components", t.components},
         {"face_darts", faces}};
  j["genus"] = t.genus ? Json(*t.genus) : Json(nullptr);
  std::ostringstream os;
  os << "V = " << t.vertices << ", E = " << t.edges << ", F = " << t.face_count
     << ", V - E + F = " << t.euler_char << ", components = " << t.components;
  if (t.genus) os << ", genus = " << *t.genus;
  os << '\n';
  Emit(o, j, os.str());
  return 0;
}

int GraphDual(const Options& o) {
  const auto emb = LoadEmbedding(o.input);
  const auto d = duality::dual_embedding(emb);
  Json j{{"dual", duality::embedding_to_json(d)}};
  std::string text = duality::format_embedding(d);
  int status = 0;
  const auto t = duality::trace_faces(emb);
  if (t.genus && *t.genus == 0) {
    const auto r = duality::rank_nullity_duality_report(emb);
    j["report"] = {{"rank", r.rank}, {"nullity", r.nullity}, {"dual_rank", r.dual_rank},
                   {"dual_nullity", r.dual_nullity}, {"euler_char", r.euler_char},
                   {"reconstructed_char", r.reconstructed_char}, {"ok", r.ok()}};
    std::ostringstream os;
    os << "# R = " << r.rank << ", N = " << r.nullity << ", R* = " << r.dual_rank
       << ", N* = " << r.dual_nullity << ", V - E + F = " << r.euler_char
       << ", R - N* + 2 = " << r.reconstructed_char << (r.ok() ? " (ok)" : " (FAIL)") << '\n';
    text += os.str();
    status = r.ok() ? 0 : 1;
  }
  Emit(o, j, text);
  return status;
}

int GraphPlanar(const Options& o) {
  const auto g = LoadGraph(o.input).graph;
  const auto r = duality::is_planar(g, static_cast<int>(BoundOr(o, duality::kPlanarityEdgeBound)));
  Json j{{"planar", r.planar}};
  std::ostringstream os;
  if (r.planar) {
    j["embedding"] = duality::embedding_to_json(*r.embedding);
    os << "planar\n" << duality::format_embedding(*r.embedding);
  } else {
    const auto& w = *r.witness;
    j["witness"] = {{"target", w.target}, {"deletions", w.deletions},
                    {"contractions", w.contractions}};
    os << "nonplanar: " << w.target << " minor, delete edges " << SetText(w.deletions)
       << ", contract edges " << SetText(w.contractions) << '\n';
  }
  Emit(o, j, os.str());
  return 0;
}

int GraphPlatonic(const Options& o) {
  Json rows = Json::array();
  std::ostringstream os;
  os << "p q V E F name\n";
  for (const auto& r : duality::platonic_solids()) {
    rows.push_back({{"p", r.p}, {"q", r.q}, {"V", r.vertices}, {"E", r.edges},
                    {"F", r.faces}, {"name", r.name}});
    os << r.p << ' ' << r.q << ' ' << r.vertices << ' ' << r.edges << ' ' << r.faces << ' '
       << r.name << '\n';
  }
  Emit(o, Json{{"solids", rows}}, os.str());
  return 0;
}

int GraphBlocks(const Options& o) {
  const auto g = LoadGraph(o.input).graph;
  Json list = Json::array();
  std::ostringstream os;
  const auto bs = duality::blocks(g);
  for (const auto& b : bs) {
    list.push_back({{"vertices", b.vertex_ids}, {"edges", b.edge_ids}});
    os << "block: vertices " << SetText(b.vertex_ids) << ", edges " << SetText(b.edge_ids)
       << '\n';
  }
  Emit(o, Json{{"blocks", list}}, os.str());
  return 0;
}

int GraphCycleMatroid(const Options& o) {
  const auto g = LoadGraph(o.input).graph;
  const auto m = duality::cycle_matroid(g, BoundOr(o, duality::Matroid::kMaxBound));
  Emit(o, duality::matroid_to_json(m), duality::format_matroid(m));
  return 0;
}

// --- complex ---------------------------------------------------------------

int ComplexChi(const Options& o) {
  const auto k = LoadComplex(o.input);
  const auto alpha = k.alpha();
  Json j{{"alpha", alpha}, {"euler_char", duality::euler_characteristic(k)}};
  std::ostringstream os;
  os << "alpha =";
  for (auto a : alpha) os << ' ' << a;
  os << ", chi = " << duality::euler_characteristic(k) << '\n';
  Emit(o, j, os.str());
  return 0;
}

int ComplexBetti(const Options& o) {
  const auto k = LoadComplex(o.input);
  const auto b = duality::betti_numbers(k, BoundOr(o, duality::kBettiSimplexLimit));
  const auto chi = duality::euler_characteristic(k);
  const bool ok = b.alternating_sum() == chi;
  Json j{{"betti", b.b}, {"alternating_sum", b.alternating_sum()}, {"euler_char", chi},
         {"euler_poincare_ok", ok}};
  std::ostringstream os;
  os << "b =";
  for (auto x : b.b) os << ' ' << x;
  os << ", sum (-1)^i b_i = " << b.alternating_sum() << ", chi = " << chi
     << (ok ? " (ok)" : " (FAIL)") << '\n';
  Emit(o, j, os.str());
  return ok ? 0 : 1;
}

int ComplexNamed(const Options& o) {
  const auto k = duality::named_complex(o.input);
  Json j = duality::complex_to_json(k);
  j["alpha"] = k.alpha();
  j["euler_char"] = duality::euler_characteristic(k);
  std::ostringstream os;
  os << duality::format_complex(k) << "# chi = " << duality::euler_characteristic(k) << '\n';
  Emit(o, j, os.str());
  return 0;
}

int ComplexIndexSum(const Options& o) {
  const auto k = LoadComplex(o.input);
  const auto r = duality::index_sum_canonical(k);
  const auto chi = duality::euler_characteristic(k);
  const bool ok = r.index_sum == chi;
  Json j{{"sources", r.sources}, {"saddles", r.saddles}, {"sinks", r.sinks},
         {"index_sum", r.index_sum}, {"euler_char", chi}, {"ok", ok}};
  std::ostringstream os;
  os << "sources " << r.sources << ", saddles " << r.saddles << ", sinks " << r.sinks
     << ", index sum " << r.index_sum << ", chi " << chi << (ok ? " (ok)" : " (FAIL)") << '\n';
  Emit(o, j, os.str());
  return ok ? 0 : 1;
}

int ComplexGenusDuality(const Options& o) {
  const auto r = duality::genus_duality_check(LoadEmbedding(o.input));
  Json j{{"vertices", r.vertices}, {"edges", r.edges}, {"faces", r.faces}, {"genus", r.genus},
         {"virtual_vertices", r.virtual_vertices},
         {"dual_virtual_vertices", r.dual_virtual_vertices},
         {"aug_rank", r.aug_rank}, {"aug_nullity", r.aug_nullity},
         {"dual_aug_rank", r.dual_aug_rank}, {"dual_aug_nullity", r.dual_aug_nullity},
         {"virtual_euler_ok", r.virtual_euler_ok}, {"rank_duality_ok", r.rank_duality_ok},
         {"genus_formula_ok", r.genus_formula_ok}, {"ok", r.ok()}};
  std::ostringstream os;
  os << "V = " << r.vertices << ", E = " << r.edges << ", F = " << r.faces
     << ", g = " << r.genus << '\n'
     << "V + g = " << r.virtual_vertices << ", F + g = " << r.dual_virtual_vertices << '\n'
     << "R = " << r.aug_rank << ", N = " << r.aug_nullity << ", R* = " << r.dual_aug_rank
     << ", N* = " << r.dual_aug_nullity << '\n'
     << "virtual Euler: " << (r.virtual_euler_ok ? "ok" : "FAIL")
     << ", R* = N and N* = R: " << (r.rank_duality_ok ? "ok" : "FAIL")
     << ", chi + 2g = 2: " << (r.genus_formula_ok ? "ok" : "FAIL") << '\n';
  Emit(o, j, os.str());
  return r.ok() ? 0 : 1;
}

// --- algebra ---------------------------------------------------------------

int AlgebraTable(const Options& o) {
  const auto alg = duality::algebra_by_name(o.algebra);
  Json rows = Json::array();
  std::ostringstream os;
  os << alg.name() << " (dim " << alg.dim() << ")\n";
  for (int i = 0; i < alg.dim(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < alg.dim(); ++j) {
      const auto& p = alg.product(i, j);
      row.push_back(p.sign * (p.index + 1));
      os << (j ? " " : "") << (p.sign < 0 ? "-" : "+") << 'e' << p.index;
    }
    rows.push_back(row);
    os << '\n';
  }
  // JSON entries are sign * (index + 1) so that -e0 stays representable.
  Emit(o, Json{{"algebra", alg.name()}, {"dim", alg.dim()}, {"table", rows}}, os.str());
  return 0;
}

int AlgebraReport(const Options& o) {
  const auto alg = duality::algebra_by_name(o.algebra);
  const auto r = duality::division_algebra_report(alg, o.trials, o.seed);
  Json j{{"algebra", alg.name()}, {"dim", alg.dim()},
         {"norm_multiplicative", r.norm_multiplicative}, {"alternative", r.alternative},
         {"norm_counterexample", PairJson(r.norm_counterexample)},
         {"alternativity_counterexample", PairJson(r.alternativity_counterexample)},
         {"zero_divisor", PairJson(r.zero_divisor)},
         {"basis_pairs_checked", r.basis_pairs_checked}, {"samples", r.samples},
         {"seed", r.seed}, {"zero_divisor_candidates", r.zero_divisor_candidates}};
  std::ostringstream os;
  os << alg.name() << " (dim " << alg.dim() << "), " << r.basis_pairs_checked
     << " basis pairs, " << r.samples << " sampled pairs, seed " << r.seed << '\n';
  os << "norm multiplicative: " << (r.norm_multiplicative ? "yes" : "no") << '\n';
  if (r.norm_counterexample) {
    os << "  x = " << duality::format_vector(r.norm_counterexample->x)
       << ", y = " << duality::format_vector(r.norm_counterexample->y) << '\n';
  }
  os << "alternative: " << (r.alternative ? "yes" : "no") << '\n';
  if (r.alternativity_counterexample) {
    os << "  x = " << duality::format_vector(r.alternativity_counterexample->x)
       << ", y = " << duality::format_vector(r.alternativity_counterexample->y) << '\n';
  }
  os << "zero divisor (" << r.zero_divisor_candidates << " candidates, exhaustive): ";
  if (r.zero_divisor) {
    os << "x = " << duality::format_vector(r.zero_divisor->x)
       << ", y = " << duality::format_vector(r.zero_divisor->y) << '\n';
  } else {
    os << "none\n";
  }
  Emit(o, j, os.str());
  return 0;
}

int AlgebraZeroDivisors(const Options& o) {
  const auto alg = duality::algebra_by_name(o.algebra);
  std::size_t examined = 0;
  const auto zd = duality::find_zero_divisor(alg, &examined);
  Json j{{"algebra", alg.name()}, {"zero_divisor", PairJson(zd)}, {"examined", examined}};
  std::ostringstream os;
  if (zd) {
    os << "x = " << duality::format_vector(zd->x) << "\ny = " << duality::format_vector(zd->y)
       << "\nxy = " << duality::format_vector(duality::multiply(alg, zd->x, zd->y)) << '\n';
  } else {
    os << "no zero divisor among " << examined << " pairs (e_i +- e_j, e_k +- e_l)\n";
  }
  Emit(o, j, os.str());
  return 0;
}

int AlgebraCross(const Options& o) {
  const auto c = duality::CrossProductCase::parse(o.cross_case);
  std::vector<duality::Vector> args;
  for (const auto& a : o.args) args.push_back(duality::parse_vector(a));
  const auto x = duality::cross_product(c, args);
  Emit(o, Json{{"case", c.name()}, {"result", VectorJson(x)}}, duality::format_vector(x) + "\n");
  return 0;
}

int AlgebraCrossCheck(const Options& o) {
  const auto c = duality::CrossProductCase::parse(o.cross_case);
  const auto r = duality::cross_axioms_report(c, o.trials, o.seed);
  Json j{{"case", c.name()}, {"n", c.n}, {"r", c.r},
         {"orthogonality_ok", r.orthogonality_ok}, {"norm_identity_ok", r.norm_identity_ok},
         {"multilinearity_ok", r.multilinearity_ok}, {"alternating_ok", r.alternating_ok},
         {"basis_tuples", r.basis_tuples}, {"random_tuples", r.random_tuples},
         {"seed", r.seed}, {"first_failure", r.first_failure}, {"ok", r.ok()}};
  auto flag = [](bool b) { return b ? "ok" : "FAIL"; };
  std::ostringstream os;
  os << c.name() << " (n = " << c.n << ", r = " << c.r << "): " << r.basis_tuples
     << " basis tuples (exhaustive), " << r.random_tuples << " random tuples (seed " << r.seed
     << ")\n"
     << "orthogonality " << flag(r.orthogonality_ok) << ", norm identity "
     << flag(r.norm_identity_ok) << ", multilinearity " << flag(r.multilinearity_ok)
     << ", alternation " << flag(r.alternating_ok) << '\n';
  if (!r.first_failure.empty()) os << "first failure: " << r.first_failure << '\n';
  Emit(o, j, os.str());
  return r.ok() ? 0 : 1;
}

int AlgebraHodge(const Options& o) {
  duality::KVector w{o.hodge_n, o.hodge_k, duality::parse_vector(o.input)};
  const auto d = duality::hodge_dual(w);
  Json basis = Json::array();
  std::ostringstream os;
  const auto sets = duality::k_subsets(d.n, d.k);
  bool first = true;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    basis.push_back(sets[i]);
    if (d.coeffs[i] == 0) continue;
    os << (first ? "" : " + ") << duality::format_rational(d.coeffs[i]) << " e"
       << Join(sets[i], "^e");
    first = false;
  }
  if (first) os << "0";
  os << '\n';
  Emit(o, Json{{"n", d.n}, {"k", d.k}, {"coeffs", VectorJson(d.coeffs)}, {"basis", basis}},
       os.str());
  return 0;
}

int AlgebraChirotope(const Options& o) {
  std::vector<duality::Vector> pts;
  for (const auto& p : o.points) pts.push_back(duality::parse_vector(p));
  const auto chi = duality::chirotope_of_configuration(pts);
  const auto m = duality::chirotope_support(chi);
  const auto sets = duality::k_subsets(chi.n(), chi.r());
  Json signs = Json::array();
  std::ostringstream os;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    signs.push_back({{"subset", sets[i]}, {"sign", chi.signs()[i]}});
    os << SetText(sets[i]) << ' ' << (chi.signs()[i] > 0 ? "+" : chi.signs()[i] < 0 ? "-" : "0")
       << '\n';
  }
  os << "# support is a matroid of rank " << m.rank() << " with " << m.basis_count()
     << " bases\n";
  Emit(o, Json{{"n", chi.n()}, {"r", chi.r()}, {"signs", signs},
               {"support", duality::matroid_to_json(m)}},
       os.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for matroid, graph, complex and algebra duality"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Emit one JSON object");
  app.add_option("--seed", o.seed, "Seed for sampled checks");
  app.add_option("--trials", o.trials, "Random samples for sampled checks");
  app.add_option("--bound", o.bound, "Size bound (ground set, edges or simplices)");

  int (*action)(const Options&) = nullptr;
  auto leaf = [&](CLI::App* parent, const char* name, const char* help,
                  int (*fn)(const Options&)) {
    CLI::App* c = parent->add_subcommand(name, help);
    c->callback([&action, fn] { action = fn; });
    return c;
  };
  auto input = [&](CLI::App* c, const char* help = "Named object, file, or - for stdin") {
    c->add_option("input", o.input, help)->required();
  };

  CLI::App* mat = app.add_subcommand("matroid", "Matroids given by bases")->require_subcommand(1);
  input(leaf(mat, "validate", "Check the basis axioms", MatroidValidate));
  input(leaf(mat, "dual", "Print the dual matroid", MatroidDual));
  {
    CLI::App* c = leaf(mat, "minor", "Delete and contract elements", MatroidMinor);
    input(c);
    c->add_option("--delete", o.deletions, "Elements to delete")->delimiter(',');
    c->add_option("--contract", o.contractions, "Elements to contract")->delimiter(',');
  }
  input(leaf(mat, "classify", "Binary/regular/graphic/cographic/transversal", MatroidClassify));
  input(leaf(mat, "check-duality", "Verify the duality axioms per element", MatroidCheckDuality));
  {
    CLI::App* c = leaf(mat, "isomorphic", "Search for an isomorphism", MatroidIsomorphic);
    input(c);
    c->add_option("other", o.input2, "Second matroid")->required();
  }
  {
    CLI::App* c = leaf(mat, "has-minor", "Search for a minor isomorphic to a target", MatroidHasMinor);
    input(c);
    c->add_option("target", o.input2, "Target matroid")->required();
  }

  CLI::App* gr = app.add_subcommand("graph", "Multigraphs and embeddings")->require_subcommand(1);
  input(leaf(gr, "invariants", "V, E, components, rank, nullity", GraphInvariantsCmd));
  input(leaf(gr, "euler", "Face tracing and Euler characteristic", GraphEuler));
  input(leaf(gr, "dual", "Dual embedding and rank/nullity report", GraphDual));
  input(leaf(gr, "planar", "Planarity with certificate", GraphPlanar));
  leaf(gr, "platonic", "Regular polyhedra from (p-2)(q-2) < 4", GraphPlatonic);
  input(leaf(gr, "blocks", "Biconnected components", GraphBlocks));
  input(leaf(gr, "cycle-matroid", "Bases = spanning forests", GraphCycleMatroid));

  CLI::App* cx = app.add_subcommand("complex", "Simplicial complexes")->require_subcommand(1);
  input(leaf(cx, "chi", "Simplex counts and Euler characteristic", ComplexChi));
  input(leaf(cx, "betti", "GF(2) Betti numbers", ComplexBetti));
  input(leaf(cx, "named", "Print a named complex", ComplexNamed), "sphere:n, genus:g, torus");
  input(leaf(cx, "index-sum", "Index sum of the canonical vector field", ComplexIndexSum));
  input(leaf(cx, "genus-duality", "Virtual-vertex duality on a cellular embedding",
             ComplexGenusDuality));

  CLI::App* al = app.add_subcommand("algebra", "Hypercomplex algebras and cross products")
                     ->require_subcommand(1);
  auto algebra_opt = [&](CLI::App* c) {
    c->add_option("--algebra", o.algebra, "r|c|h|o|o-fano|sedenion")->capture_default_str();
  };
  auto case_opt = [&](CLI::App* c) {
    c->add_option("--case", o.cross_case, "three|seven|epsilon:<n>|j:<n>|triple8")
        ->capture_default_str();
  };
  algebra_opt(leaf(al, "table", "Basis multiplication table", AlgebraTable));
  algebra_opt(leaf(al, "report", "Norm, alternativity and zero divisors", AlgebraReport));
  algebra_opt(leaf(al, "zero-divisors", "Search e_i +- e_j pairs for xy = 0", AlgebraZeroDivisors));
  {
    CLI::App* c = leaf(al, "cross", "Evaluate a cross product", AlgebraCross);
    case_opt(c);
    c->add_option("--arg", o.args, "Argument vector \"c0 c1 ...\" (repeat)")->required();
  }
  case_opt(leaf(al, "cross-check", "Verify the cross-product axioms", AlgebraCrossCheck));
  {
    CLI::App* c = leaf(al, "hodge", "Hodge dual of a k-vector", AlgebraHodge);
    c->add_option("--n", o.hodge_n, "Dimension")->required();
    c->add_option("--k", o.hodge_k, "Degree")->required();
    input(c, "Coefficients over sorted k-subsets");
  }
  {
    CLI::App* c = leaf(al, "chirotope", "Signs of a point configuration", AlgebraChirotope);
    c->add_option("--point", o.points, "Point coordinates \"x y ...\" (repeat)")->required();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  if (!action) {
    std::cerr << "no action given\n";
    return 2;
  }
  try {
    return action(o);
  } catch (const duality::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
