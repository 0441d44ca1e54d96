#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "earlab/complex.hpp"
#include "earlab/ear.hpp"
#include "earlab/error.hpp"
#include "earlab/flag.hpp"
#include "earlab/labeling.hpp"
#include "earlab/lattice.hpp"
#include "earlab/matroid.hpp"
#include "earlab/poset.hpp"

namespace earlab {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// FNV-1a, 64 bit, as 16 hex digits.
inline std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline std::string digest(const Json& j) { return fnv1a_hex(j.dump()); }

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Schema, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Schema, path + ": " + e.what());
  }
}

inline void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Schema, "cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

namespace detail {

template <class T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::Schema, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Schema, std::string("field '") + key + "': " + e.what());
  }
}

inline std::vector<std::string> face_names(const SimplicialComplex& c, const Face& f) {
  std::vector<std::string> out;
  for (int v : f) out.push_back(c.vertices()[v]);
  return out;
}

inline Json chain_names(const Poset& p, const Face& chain) {
  Json a = Json::array();
  for (int x : chain) a.push_back(p.name(x));
  return a;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Posets and lattices

/// Elements in index order, covers sorted by (lo, hi) index; rebuilding from
/// the output reproduces the same indexing.
inline Json poset_to_json(const Poset& p, const EdgeLabeling* labels = nullptr) {
  auto covers = p.cover_pairs();
  std::sort(covers.begin(), covers.end());
  Json j;
  j["elements"] = p.names();
  Json c = Json::array();
  for (auto [lo, hi] : covers) c.push_back({p.name(lo), p.name(hi)});
  j["covers"] = c;
  j["graded"] = p.graded();
  if (labels) {
    Json l = Json::array();
    for (auto [lo, hi] : covers)
      if (labels->has(lo, hi)) l.push_back({p.name(lo), p.name(hi), (*labels)(lo, hi)});
    j["labels"] = l;
  }
  return j;
}

struct PosetInput {
  Poset poset;
  std::optional<EdgeLabeling> labels;
  std::optional<MChain> mchain;
};

inline PosetInput poset_from_json(const Json& j) {
  auto elements = detail::field<std::vector<std::string>>(j, "elements");
  auto raw = detail::field<std::vector<std::vector<std::string>>>(j, "covers");
  std::vector<std::pair<std::string, std::string>> covers;
  for (auto& c : raw) {
    if (c.size() != 2) throw Error(ErrorKind::Schema, "a cover is a pair [lo, hi]");
    covers.emplace_back(c[0], c[1]);
  }
  BuildOptions opts;
  opts.graded = j.value("graded", false);
  PosetInput out{build_poset(elements, covers, opts), std::nullopt, std::nullopt};
  if (j.contains("labels")) {
    EdgeLabeling l(out.poset.size());
    const Json& raw_labels = j.at("labels");
    if (!raw_labels.is_array()) throw Error(ErrorKind::Schema, "'labels' is a list of [lo, hi, label]");
    for (auto& t : raw_labels) {
      if (!t.is_array() || t.size() != 3 || !t[0].is_string() || !t[1].is_string() || !t[2].is_number_integer())
        throw Error(ErrorKind::Schema, "a label is [lo, hi, integer], got " + t.dump());
      int lo = out.poset.require_index(t[0].get<std::string>());
      int hi = out.poset.require_index(t[1].get<std::string>());
      if (!out.poset.covers(lo, hi)) throw Error(ErrorKind::Schema, "label on a non-cover " + t.dump());
      int value = t[2].get<int>();
      l.set(lo, hi, value);
    }
    out.labels = std::move(l);
  }
  if (j.contains("mchain")) {
    MChain m;
    for (auto& name : detail::field<std::vector<std::string>>(j, "mchain")) m.elements.push_back(out.poset.require_index(name));
    out.mchain = std::move(m);
  }
  return out;
}

inline Json lattice_to_json(const Lattice& l, const EdgeLabeling* labels = nullptr,
                            const MChain* mchain = nullptr) {
  Json j = poset_to_json(l.poset(), labels);
  j["lattice"] = true;
  if (mchain) {
    Json m = Json::array();
    for (int x : mchain->elements) m.push_back(l.poset().name(x));
    j["mchain"] = m;
  }
  return j;
}

// ---------------------------------------------------------------------------
// Matroids

inline Json matroid_to_json(const Matroid& m) {
  Json j;
  j["ground"] = m.ground();
  Json b = Json::array();
  for (AtomSet s : m.bases()) {
    Json one = Json::array();
    for (int a : atoms_of(s)) one.push_back(m.ground()[a]);
    b.push_back(one);
  }
  j["bases"] = b;
  return j;
}

inline Matroid matroid_from_json(const Json& j) {
  if (j.contains("graph")) {
    const Json& g = j.at("graph");
    int n = detail::field<int>(g, "vertices");
    auto edges = detail::field<std::vector<std::vector<int>>>(g, "edges");
    std::vector<std::pair<int, int>> e;
    for (auto& uv : edges) {
      if (uv.size() != 2) throw Error(ErrorKind::Schema, "an edge is a pair [u, v]");
      e.emplace_back(uv[0], uv[1]);
    }
    return Matroid::from_graph(n, e);
  }
  auto ground = detail::field<std::vector<std::string>>(j, "ground");
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < ground.size(); ++i) index[ground[i]] = static_cast<int>(i);
  auto sets = [&](const char* key) {
    std::vector<AtomSet> out;
    for (auto& s : detail::field<std::vector<std::vector<std::string>>>(j, key)) {
      AtomSet mask = 0;
      for (auto& a : s) {
        auto it = index.find(a);
        if (it == index.end()) throw Error(ErrorKind::Schema, "unknown ground element '" + a + "'");
        mask |= AtomSet{1} << it->second;
      }
      out.push_back(mask);
    }
    return out;
  };
  if (j.contains("bases")) return Matroid::from_bases(ground, sets("bases"));
  if (j.contains("circuits")) return Matroid::from_circuits(ground, sets("circuits"));
  throw Error(ErrorKind::Schema, "matroid needs 'bases', 'circuits' or 'graph'");
}

// ---------------------------------------------------------------------------
// Complexes

inline Json complex_to_json(const SimplicialComplex& c) {
  Json j;
  j["vertices"] = c.vertices();
  Json f = Json::array();
  for (auto& facet : c.facets()) f.push_back(detail::face_names(c, facet));
  j["facets"] = f;
  return j;
}

inline SimplicialComplex complex_from_json(const Json& j) {
  auto vertices = detail::field<std::vector<std::string>>(j, "vertices");
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<int>(i);
  std::vector<Face> facets;
  const Json& raw = j.contains("facets") ? j.at("facets") : Json();
  if (!raw.is_array()) throw Error(ErrorKind::Schema, "missing field 'facets'");
  for (auto& f : raw) {
    Face face;
    for (auto& v : f) {
      std::string name = v.is_string() ? v.get<std::string>() : v.dump();
      auto it = index.find(name);
      if (it == index.end()) throw Error(ErrorKind::Schema, "unknown vertex '" + name + "'");
      face.push_back(it->second);
    }
    std::sort(face.begin(), face.end());
    facets.push_back(face);
  }
  return SimplicialComplex(vertices, facets);
}

// ---------------------------------------------------------------------------
// Reports

inline Json certificate_to_json(const Certificate& c, const SimplicialComplex& k) {
  Json j;
  j["kind"] = to_string(c.kind);
  j["dim"] = c.dim;
  j["criteria"] = c.criteria;
  j["betti"] = c.homology.betti;
  if (c.shelling) {
    j["shelling"] = c.shelling->order;
    Json r = Json::array();
    for (auto& f : c.shelling->restrictions) r.push_back(detail::face_names(k, f));
    j["restrictions"] = r;
  }
  if (!c.assumptions.empty()) j["assumptions"] = c.assumptions;
  return j;
}

inline Json ced_report_to_json(const CedReport& r) {
  Json j;
  j["passed"] = r.passed();
  Json ax = Json::array();
  const char* names[4] = {"cover", "sphere-first-and-ambient", "ball", "boundary-intersection"};
  for (int i = 0; i < 4; ++i)
    ax.push_back({{"axiom", i + 1}, {"name", names[i]}, {"pass", r.axioms[i].pass}, {"witnesses", r.axioms[i].witnesses}});
  j["axioms"] = ax;
  return j;
}

inline Json decomposition_to_json(const EarDecomposition& d, const CedReport& rep) {
  Json j;
  j["construction"] = d.construction;
  j["frame_rank"] = d.r;
  j["ranks"] = std::vector<int>(d.ranks.begin(), d.ranks.end());
  auto fh = f_h_vectors(d.complex);
  j["f"] = fh.f;
  j["h"] = fh.h;
  j["ear_count"] = d.ears.size();
  Json frames = Json::array();
  for (auto& f : d.frames) frames.push_back({{"description", f.description}, {"positions", f.position_labels}});
  j["frames"] = frames;
  Json ears = Json::array();
  for (std::size_t i = 0; i < d.ears.size(); ++i) {
    const Ear& e = d.ears[i];
    Json ej;
    ej["index"] = i + 1;
    ej["frame"] = e.provenance.frame;
    ej["word_index"] = e.provenance.word_index;
    ej["sigma"] = e.provenance.sigma;
    Json chains = Json::array();
    for (std::size_t c = 0; c < e.chains.size(); ++c)
      chains.push_back({{"chain", detail::chain_names(d.poset, e.chains[c])}, {"word", e.words[c]}});
    ej["chains"] = chains;
    ej["shelling"] = e.shelling();
    try {
      auto sh = verify_shelling(e.complex, e.shelling());
      Json r = Json::array();
      for (auto& f : sh.restrictions) r.push_back(detail::face_names(e.complex, f));
      ej["restrictions"] = r;
    } catch (const Error& err) {
      ej["restrictions"] = nullptr;
      ej["shelling_error"] = err.what();
    }
    ej["ambient_facets"] = e.ambient.size();
    if (i < rep.ears.size()) {
      const auto& c = rep.ears[i];
      ej["certificate"] = c.certified ? Json{{"kind", c.kind}, {"criteria", c.criteria}}
                                      : Json{{"kind", nullptr}, {"failure", c.failure}};
    }
    ears.push_back(ej);
  }
  j["ears"] = ears;
  Json dropped = Json::array();
  for (auto& p : d.dropped) dropped.push_back({{"frame", p.frame}, {"word_index", p.word_index}, {"sigma", p.sigma}});
  j["empty_blocks"] = dropped;
  if (!d.notes.empty()) j["notes"] = d.notes;
  j["verification"] = ced_report_to_json(rep);
  return j;
}

inline Json flag_vector_to_json(const FlagVector& v) {
  Json j = Json::object();
  for (RankSet s = 0; s < static_cast<RankSet>(v.values.size()); ++s) j[set_string(s)] = v.values[s];
  return j;
}

inline Json inequality_report_to_json(const InequalityReport& r) {
  Json j;
  j["mode"] = to_string(r.mode);
  j["m"] = r.m;
  j["h"] = flag_vector_to_json(r.h);
  Json pairs = Json::array();
  for (auto& e : r.pairs) {
    Json inj = Json::array();
    for (auto& [a, b] : e.injection) inj.push_back({a.str(), b.str()});
    pairs.push_back({{"S", set_string(e.s)},
                     {"T", set_string(e.t)},
                     {"dominates", true},
                     {"h_S", e.h_s},
                     {"h_T", e.h_t},
                     {"margin", e.h_s - e.h_t},
                     {"holds", e.holds},
                     {"injection", inj}});
  }
  j["pairs"] = pairs;
  j["violations"] = r.violations;
  j["passed"] = r.passed();
  return j;
}

inline Json gm_check_to_json(const GMCheck& g) {
  Json j;
  j["g"] = g.g;
  j["m_vector"] = g.m_vector;
  if (g.witness) {
    int i = *g.witness;
    j["witness"] = {{"index", i}, {"value", g.g[i]}, {"bound", i > 0 ? macaulay_bound(g.g[i - 1], i - 1) : 1}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

inline Json reciprocity_to_json(const ReciprocityReport& r) {
  Json j;
  j["holds"] = r.holds;
  j["colors"] = r.colors;
  j["h"] = flag_vector_to_json(r.h);
  j["interior_f"] = flag_vector_to_json(r.interior_f);
  j["rhs"] = r.rhs;
  if (r.shelling_h) j["shelling_h"] = flag_vector_to_json(*r.shelling_h);
  j["witness"] = r.witness ? Json(set_string(*r.witness)) : Json(nullptr);
  return j;
}

}  // namespace earlab
