// earlab: generate families, build convex-ear decompositions, verify them.

#include <chrono>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "earlab/earlab.hpp"

using namespace earlab;

namespace {

enum Exit { kPass = 0, kPrecondition = 2, kFailure = 3, kIo = 4 };

struct Caps {
  int lattice = 200;
  int m = 8;
  std::size_t homology = 5000;
};

struct Options {
  std::string input, output, construction, what, format = "text";
  std::string ranks, atom_order, shelling, g;
  int rank = 0, n = 0;
  std::string edges, fixture, matroid;
  int vertices = 0;
  bool timing = false;
  Caps caps;
};

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw Error(ErrorKind::BadParams, "not an integer: '" + tok + "'");
    }
  }
  return out;
}

std::vector<long long> parse_longs(const std::string& s) {
  std::vector<long long> out;
  for (int v : parse_ints(s)) out.push_back(v);
  return out;
}

std::vector<std::string> parse_names(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(tok);
  return out;
}

std::set<int> parse_rank_set(const std::string& s) {
  auto v = parse_ints(s);
  return {v.begin(), v.end()};
}

// ---------------------------------------------------------------------------
// Fixtures

SimplicialComplex complex_fixture(const std::string& name) {
  auto numbered = [](int n) {
    std::vector<std::string> v;
    for (int i = 1; i <= n; ++i) v.push_back(std::to_string(i));
    return v;
  };
  auto cycle = [&](int n) {
    std::vector<Face> f;
    for (int i = 0; i < n; ++i) {
      Face e{i, (i + 1) % n};
      std::sort(e.begin(), e.end());
      f.push_back(e);
    }
    return SimplicialComplex(numbered(n), f);
  };
  auto simplex = [&](int n) {
    Face f;
    for (int i = 0; i < n; ++i) f.push_back(i);
    return SimplicialComplex(numbered(n), {f});
  };
  if (name == "triangle") return simplex(3);
  if (name == "simplex3") return simplex(4);
  if (name == "simplex4") return simplex(5);
  if (name == "two-triangles") return SimplicialComplex(numbered(4), {{0, 1, 2}, {1, 2, 3}});
  if (name == "bowtie") return SimplicialComplex(numbered(5), {{0, 1, 2}, {2, 3, 4}});
  if (name == "hexagon") return cycle(6);
  if (name == "square") return cycle(4);
  if (name == "path3") return SimplicialComplex(numbered(4), {{0, 1}, {1, 2}, {2, 3}});
  if (name == "tetra-boundary") return SimplicialComplex(numbered(4), {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  if (name == "fan") return SimplicialComplex(numbered(5), {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}});
  throw Error(ErrorKind::BadParams, "unknown complex fixture '" + name + "'");
}

// ---------------------------------------------------------------------------
// Loading

struct Loaded {
  Json raw;
  std::string path;
};

Loaded load(const Options& o, Json& inputs) {
  if (o.input.empty()) throw Error(ErrorKind::BadParams, "--input is required");
  Loaded l{read_json_file(o.input), o.input};
  inputs.push_back({{"path", o.input}, {"digest", digest(l.raw)}});
  return l;
}

bool is_matroid_json(const Json& j) { return j.contains("graph") || j.contains("ground"); }
bool is_complex_json(const Json& j) { return j.contains("facets"); }

void check_lattice_cap(const Poset& p, const Caps& caps) {
  if (p.size() > caps.lattice)
    throw Error(ErrorKind::SizeLimit,
                std::to_string(p.size()) + " elements exceed the lattice cap " + std::to_string(caps.lattice));
}

struct LatticeInput {
  Lattice lattice;
  std::optional<EdgeLabeling> labels;
  std::optional<MChain> mchain;
};

LatticeInput lattice_input(const Json& j, const Caps& caps) {
  if (is_matroid_json(j)) {
    Lattice l = lattice_of_flats(matroid_from_json(j));
    check_lattice_cap(l.poset(), caps);
    return {l, std::nullopt, std::nullopt};
  }
  auto in = poset_from_json(j);
  check_lattice_cap(in.poset, caps);
  return {Lattice::from_poset(std::move(in.poset)), std::move(in.labels), std::move(in.mchain)};
}

EdgeLabeling sn_labeling(const LatticeInput& in) {
  if (in.labels) return *in.labels;
  if (in.mchain) return derive_sn_labeling(in.lattice, *in.mchain);
  throw Error(ErrorKind::LabelingInvalid, "lattice carries neither labels nor an mchain");
}

std::vector<int> atom_order(const Lattice& l, const std::string& text) {
  if (text.empty()) return default_atom_order(l);
  std::vector<int> out;
  for (auto& name : parse_names(text)) out.push_back(l.poset().require_index(name));
  return out;
}

std::vector<int> shelling_for(const SimplicialComplex& k, const std::string& text) {
  if (!text.empty()) return parse_ints(text);
  auto found = search_shelling(k, 14);
  if (found) return *found;
  std::vector<int> id(k.facet_count());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
  return id;
}

EarDecomposition run_decomposition(const Options& o, Json& inputs, bool allow_top = false) {
  const std::string& c = o.construction;
  if (c == "rank-boolean") {
    if (o.rank < 1 || o.rank > 12) throw Error(ErrorKind::BadParams, "--rank in [1, 12] is required");
    return decompose_rank_selected_boolean(o.rank, parse_rank_set(o.ranks));
  }
  auto in = load(o, inputs);
  if (c == "face-poset") {
    SimplicialComplex k = complex_from_json(in.raw);
    FacePosetOptions fo;
    fo.allow_top_rank = allow_top;
    return decompose_face_poset(k, shelling_for(k, o.shelling), parse_rank_set(o.ranks), fo);
  }
  LatticeInput li = lattice_input(in.raw, o.caps);
  if (c == "supersolvable") return decompose_supersolvable(li.lattice, sn_labeling(li));
  if (c == "rank-supersolvable")
    return decompose_rank_selected_supersolvable(li.lattice, sn_labeling(li), parse_rank_set(o.ranks));
  if (c == "geometric") {
    std::optional<std::set<int>> s;
    if (!o.ranks.empty()) s = parse_rank_set(o.ranks);
    return decompose_geometric(li.lattice, atom_order(li.lattice, o.atom_order), s);
  }
  throw Error(ErrorKind::BadParams, "unknown construction '" + c + "'");
}

CertifyOptions certify_options(const Caps& caps) {
  CertifyOptions co;
  co.max_facets = caps.homology;
  return co;
}

/// The complex a verify command talks about: a complex file, or the order
/// complex of a poset's proper part.
SimplicialComplex complex_of_input(const Json& j, const Caps& caps) {
  if (is_complex_json(j)) return complex_from_json(j);
  if (is_matroid_json(j)) return order_complex(proper_part(lattice_of_flats(matroid_from_json(j)).poset()));
  auto in = poset_from_json(j);
  check_lattice_cap(in.poset, caps);
  return order_complex(in.poset.bottom() || in.poset.top() ? proper_part(in.poset) : in.poset);
}

// ---------------------------------------------------------------------------
// Commands

struct Outcome {
  Json result;
  bool passed = true;
  std::string summary;
};

Outcome cmd_gen(const std::string& family, const Options& o, Json& inputs) {
  Outcome out;
  if (family == "boolean") {
    if (o.rank < 1 || o.rank > 10) throw Error(ErrorKind::BadParams, "--rank in [1, 10] is required");
    Lattice b = boolean_lattice(o.rank);
    EdgeLabeling l = boolean_labeling(b);
    MChain m = boolean_mchain(b);
    out.result = lattice_to_json(b, &l, &m);
    out.summary = std::to_string(b.size()) + "-element lattice";
  } else if (family == "partition") {
    if (o.n < 2 || o.n > 6) throw Error(ErrorKind::BadParams, "--n in [2, 6] is required");
    Lattice p = partition_lattice(o.n);
    MChain m = partition_mchain(p, o.n);
    EdgeLabeling l = derive_sn_labeling(p, m);
    out.result = lattice_to_json(p, &l, &m);
    out.summary = std::to_string(p.size()) + "-element lattice";
  } else if (family == "uniform-matroid") {
    if (o.n < 1 || o.n > 12 || o.rank < 0 || o.rank > o.n)
      throw Error(ErrorKind::BadParams, "need 0 <= --rank <= --n <= 12");
    std::vector<std::string> ground;
    for (int i = 1; i <= o.n; ++i) ground.push_back(std::to_string(i));
    std::vector<AtomSet> bases;
    for (AtomSet s = 0; s < (AtomSet{1} << o.n); ++s)
      if (std::popcount(s) == o.rank) bases.push_back(s);
    Matroid m = Matroid::from_bases(ground, bases);
    out.result = matroid_to_json(m);
    out.summary = "U(" + std::to_string(o.rank) + "," + std::to_string(o.n) + "), " + std::to_string(bases.size()) + " bases";
  } else if (family == "graphic-matroid") {
    std::vector<std::pair<int, int>> edges;
    for (auto& e : parse_names(o.edges)) {
      auto dash = e.find('-');
      if (dash == std::string::npos) throw Error(ErrorKind::BadParams, "edge '" + e + "' is not u-v");
      edges.emplace_back(std::stoi(e.substr(0, dash)), std::stoi(e.substr(dash + 1)));
    }
    Matroid m = Matroid::from_graph(o.vertices, edges);
    Json g = Json::array();
    for (auto [u, v] : edges) g.push_back({u, v});
    out.result = {{"graph", {{"vertices", o.vertices}, {"edges", g}}}};
    out.summary = "graphic matroid of rank " + std::to_string(m.rank()) + " on " + std::to_string(edges.size()) + " edges";
  } else if (family == "flats") {
    Options mo = o;
    mo.input = o.matroid.empty() ? o.input : o.matroid;
    auto in = load(mo, inputs);
    Lattice l = lattice_of_flats(matroid_from_json(in.raw));
    check_lattice_cap(l.poset(), o.caps);
    EdgeLabeling lambda = minimal_labeling(l, default_atom_order(l));
    out.result = lattice_to_json(l, &lambda);
    out.summary = "rank-" + std::to_string(l.rank()) + " lattice, " + std::to_string(l.atoms().size()) + " atoms";
  } else if (family == "complex-fixture") {
    SimplicialComplex k = complex_fixture(o.fixture);
    out.result = complex_to_json(k);
    out.summary = std::to_string(k.facet_count()) + " facets";
  } else {
    throw Error(ErrorKind::BadParams, "unknown family '" + family + "'");
  }
  return out;
}

Outcome cmd_decompose(const Options& o, Json& inputs) {
  EarDecomposition d = run_decomposition(o, inputs);
  CedReport rep = verify_ced(d, certify_options(o.caps));
  Outcome out;
  out.result = decomposition_to_json(d, rep);
  out.passed = rep.passed();
  out.summary = std::to_string(d.ears.size()) + (d.ears.size() == 1 ? " ear" : " ears");
  if (!out.passed)
    for (int i = 0; i < 4; ++i)
      if (!rep.axioms[i].pass) {
        out.summary += ", axiom " + std::to_string(i + 1) + " failed";
        if (!rep.axioms[i].witnesses.empty()) out.summary += ": " + rep.axioms[i].witnesses.front();
        break;
      }
  return out;
}

Outcome cmd_verify(const Options& o, Json& inputs) {
  Outcome out;
  const std::string& what = o.what;
  if (what == "ced") return cmd_decompose(o, inputs);
  if (what == "m-vector") {
    auto g = parse_longs(o.g);
    if (g.empty()) throw Error(ErrorKind::BadParams, "--g is required");
    GMCheck c = m_vector_check(g);
    out.result = gm_check_to_json(c);
    out.passed = c.m_vector;
    out.summary = c.m_vector ? "M-vector" : "not an M-vector at index " + std::to_string(*c.witness);
    return out;
  }
  if (what == "h-inequalities") {
    std::vector<long long> h;
    if (!o.g.empty()) {
      h = parse_longs(o.g);
    } else {
      auto in = load(o, inputs);
      h = f_h_vectors(complex_of_input(in.raw, o.caps)).h;
    }
    auto failures = h_inequality_failures(h);
    GMCheck gm = g_and_m_check(h);
    out.result = {{"h", h}, {"failures", failures}, {"g_check", gm_check_to_json(gm)}};
    out.passed = failures.empty() && gm.m_vector;
    out.summary = out.passed ? "h-inequalities hold" : (failures.empty() ? "g is not an M-vector" : failures.front());
    return out;
  }
  if (what == "flag-inequalities") {
    auto in = load(o, inputs);
    InequalityReport rep;
    if (is_complex_json(in.raw)) {
      rep = verify_flag_inequalities(face_poset_below_facets(complex_from_json(in.raw)), InequalityMode::FacePoset, o.caps.m);
    } else {
      LatticeInput li = lattice_input(in.raw, o.caps);
      auto mode = is_geometric(li.lattice) ? InequalityMode::Geometric : InequalityMode::Audit;
      rep = verify_flag_inequalities(li.lattice.poset(), mode, o.caps.m);
    }
    out.result = inequality_report_to_json(rep);
    out.passed = rep.passed();
    out.summary = std::to_string(rep.pairs.size()) + " dominating pairs, " + std::to_string(rep.violations) + " violations";
    return out;
  }
  if (what == "cm" || what == "2cm") {
    auto in = load(o, inputs);
    CMReport r = is_cm_and_2cm(complex_of_input(in.raw, o.caps), o.caps.homology);
    out.result = {{"cm", r.cm}, {"two_cm", r.two_cm}, {"witness", r.witness}};
    out.passed = what == "cm" ? r.cm : r.two_cm;
    out.summary = std::string(out.passed ? "holds" : "fails") + (r.witness.empty() ? "" : " (" + r.witness + ")");
    return out;
  }
  if (what == "reciprocity") {
    EarDecomposition d = run_decomposition(o, inputs);
    auto colors = rank_colors(d);
    const int k = static_cast<int>(d.ranks.size());
    Json ears = Json::array();
    int bad = 0;
    for (std::size_t i = 0; i < d.ears.size(); ++i) {
      const Ear& e = d.ears[i];
      SimplicialComplex amb = e.ambient_complex();
      auto r = ball_flag_reciprocity(e.complex, colors, k, e.shelling(), i > 0 ? &amb : nullptr);
      if (!r.holds) ++bad;
      Json ej = reciprocity_to_json(r);
      ej["ear"] = i + 1;
      ears.push_back(ej);
    }
    out.result = {{"construction", d.construction}, {"ears", ears}, {"failures", bad}};
    out.passed = bad == 0;
    out.summary = std::to_string(d.ears.size() - bad) + "/" + std::to_string(d.ears.size()) + " ears satisfy reciprocity";
    return out;
  }
  throw Error(ErrorKind::BadParams, "unknown check '" + what + "'");
}

/// Runs the face-poset construction with the top rank allowed and records
/// what happens. Observations only: the exit code is 0 unless inputs are bad.
Outcome cmd_experiment_top_rank(const Options& o, Json& inputs) {
  Options fo = o;
  fo.construction = "face-poset";
  EarDecomposition d = run_decomposition(fo, inputs, true);
  CedReport rep = verify_ced(d, certify_options(o.caps));
  CMReport cm = is_cm_and_2cm(d.complex, o.caps.homology);
  Outcome out;
  out.result = {{"ranks", std::vector<int>(d.ranks.begin(), d.ranks.end())},
                {"ear_count", d.ears.size()},
                {"ced_axioms_pass", rep.passed()},
                {"verification", ced_report_to_json(rep)},
                {"cm", cm.cm},
                {"two_cm", cm.two_cm},
                {"cm_witness", cm.witness}};
  out.summary = std::string("observed: axioms ") + (rep.passed() ? "pass" : "fail") + ", CM " + (cm.cm ? "yes" : "no") +
                ", 2-CM " + (cm.two_cm ? "yes" : "no");
  return out;
}

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::Schema:
    case ErrorKind::UnknownElement:
      return kIo;
    default:
      return kPrecondition;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"earlab: build and check ear decompositions of order complexes"};
  app.require_subcommand(1);
  Options o;
  Caps defaults;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--input", o.input, "input JSON file");
    sub->add_option("--output", o.output, "write the report (or generated object) here");
    sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--timing", o.timing, "include wall-time in the report");
    sub->add_option("--cap-lattice", o.caps.lattice, "maximum lattice size");
    sub->add_option("--cap-m", o.caps.m, "maximum m for descent classes");
    sub->add_option("--cap-homology", o.caps.homology, "maximum facet count for homology");
  };
  auto decomposition = [&](CLI::App* sub) {
    sub->add_option("--construction", o.construction, "construction")
        ->check(CLI::IsMember({"supersolvable", "rank-boolean", "rank-supersolvable", "face-poset", "geometric"}));
    sub->add_option("--ranks", o.ranks, "selected ranks, comma separated");
    sub->add_option("--rank", o.rank, "rank of the Boolean lattice");
    sub->add_option("--atom-order", o.atom_order, "atom names, comma separated");
    sub->add_option("--shelling", o.shelling, "facet indices, comma separated");
  };

  std::string family;
  auto* gen = app.add_subcommand("gen", "generate a family member");
  common(gen);
  gen->add_option("family", family, "boolean | partition | uniform-matroid | graphic-matroid | flats | complex-fixture")
      ->required();
  gen->add_option("--rank", o.rank, "rank");
  gen->add_option("--n", o.n, "size parameter");
  gen->add_option("--vertices", o.vertices, "graph vertices");
  gen->add_option("--edges", o.edges, "graph edges u-v, comma separated");
  gen->add_option("--matroid", o.matroid, "matroid JSON file");
  gen->add_option("--name", o.fixture, "complex fixture name");

  auto* dec = app.add_subcommand("decompose", "build and verify a convex-ear decomposition");
  common(dec);
  decomposition(dec);
  dec->get_option("--construction")->required();

  auto* ver = app.add_subcommand("verify", "run a check");
  common(ver);
  decomposition(ver);
  ver->add_option("--what", o.what, "check")
      ->required()
      ->check(CLI::IsMember({"ced", "h-inequalities", "flag-inequalities", "m-vector", "cm", "2cm", "reciprocity"}));
  ver->add_option("--g", o.g, "vector, comma separated (m-vector: g; h-inequalities: h)");

  std::string experiment;
  auto* exp = app.add_subcommand("experiment", "observational runs outside the constructions' hypotheses");
  common(exp);
  decomposition(exp);
  exp->add_option("name", experiment, "top-rank")->required()->check(CLI::IsMember({"top-rank"}));

  CLI11_PARSE(app, argc, argv);

  if (o.caps.lattice != defaults.lattice || o.caps.m != defaults.m || o.caps.homology != defaults.homology)
    std::cerr << "warning: size caps overridden; runs may be slow\n";

  Json command = Json::array();
  for (int i = 1; i < argc; ++i) command.push_back(argv[i]);
  Json inputs = Json::array();
  auto start = std::chrono::steady_clock::now();
  Outcome out;
  std::string name;
  try {
    if (*gen) {
      name = "gen";
      out = cmd_gen(family, o, inputs);
      if (o.output.empty()) {
        std::cout << out.result.dump(2) << '\n';
      } else {
        write_json_file(o.output, out.result);
        std::cout << "wrote " << o.output << " (" << out.summary << ") digest " << digest(out.result) << '\n';
      }
      return kPass;
    }
    if (*dec) {
      name = "decompose";
      out = cmd_decompose(o, inputs);
    } else if (*ver) {
      name = "verify";
      out = cmd_verify(o, inputs);
    } else {
      name = "experiment";
      out = cmd_experiment_top_rank(o, inputs);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  }

  Json report;
  report["schema_version"] = kSchemaVersion;
  report["command"] = command;
  report["inputs"] = inputs;
  report["passed"] = out.passed;
  report["result"] = out.result;
  if (o.timing)
    report["wall_time_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  try {
    if (!o.output.empty()) write_json_file(o.output, report);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  }
  if (o.format == "json")
    std::cout << report.dump(2) << '\n';
  else
    std::cout << name << ": " << (out.passed ? "PASS" : "FAIL") << " - " << out.summary << " (digest "
              << digest(report) << ")\n";
  return out.passed ? kPass : kFailure;
}
