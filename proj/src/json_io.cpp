#include "rys/json_io.hpp"

#include <cstdlib>
#include <fstream>
#include <set>

#include "rys/rys.hpp"

namespace rys {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument(what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) bad(std::string("field \"") + key + "\" must be a string");
  return v.get<std::string>();
}

}  // namespace

std::filesystem::path resolve_reference(const std::string& name,
                                        const std::filesystem::path& base_dir) {
  namespace fs = std::filesystem;
  const fs::path p(name);
  if (p.is_absolute()) {
    if (fs::exists(p)) return p;
    bad("referenced file not found: " + name);
  }
  std::vector<fs::path> tried;
  for (const fs::path& root : {base_dir, fs::path()}) {
    const fs::path cand = root.empty() ? p : root / p;
    if (fs::exists(cand)) return cand;
    tried.push_back(cand);
  }
  if (const char* env = std::getenv("RYSW_DATA_DIR")) {
    const fs::path cand = fs::path(env) / p;
    if (fs::exists(cand)) return cand;
    tried.push_back(cand);
  }
  std::string msg = "referenced file not found: " + name + " (tried";
  for (const auto& t : tried) msg += " " + t.string();
  bad(msg + ")");
}

Json load_json_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) bad("cannot open " + file.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    bad("malformed JSON in " + file.string() + ": " + e.what());
  }
}

ApproximationSpace space_from_json(const Json& j) {
  const Json& names = field(j, "universe");
  if (!names.is_array() || names.empty()) bad("\"universe\" must be a nonempty array");
  std::vector<std::string> universe_names;
  std::set<std::string> seen;
  for (const Json& n : names) {
    if (!n.is_string()) bad("universe entries must be strings");
    const std::string s = n.get<std::string>();
    if (!seen.insert(s).second) bad("duplicate universe element " + s);
    universe_names.push_back(s);
  }
  auto u = Universe::make(universe_names);

  const Json& rel = field(j, "relation");
  const RelationKind kind = relation_kind_from_string(string_field(rel, "kind"));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  const Json& praw = field(rel, "pairs");
  if (!praw.is_array()) bad("\"pairs\" must be an array");
  for (const Json& pr : praw) {
    if (!pr.is_array() || pr.size() != 2 || !pr[0].is_string() || !pr[1].is_string())
      bad("each relation pair must be a two-element array of names");
    pairs.emplace_back(u->index_of(pr[0].get<std::string>()),
                       u->index_of(pr[1].get<std::string>()));
  }
  const bool closure = j.value("closure", true);
  if (closure) return {u, generate_relation(u, kind, pairs)};
  return {u, Relation(u, kind, pairs)};
}

ApproximationSpace load_space(const std::filesystem::path& file) {
  return space_from_json(load_json_file(file));
}

RysPtr rys_from_json(const Json& j, const std::filesystem::path& base_dir) {
  const Json& sp = field(j, "space");
  ApproximationSpace space =
      sp.is_string() ? load_space(resolve_reference(sp.get<std::string>(), base_dir))
                     : space_from_json(sp);

  AxiomCatalog catalog = AxiomCatalog::standard();
  if (j.contains("axioms")) {
    const Json& ax = j.at("axioms");
    if (!ax.is_array()) bad("\"axioms\" must be an array of names");
    std::set<std::string> wanted;
    for (const Json& a : ax) {
      if (!a.is_string()) bad("axiom names must be strings");
      const std::string name = a.get<std::string>();
      if (!catalog.find(name)) bad("unknown axiom " + name);
      wanted.insert(name);
    }
    for (auto& entry : catalog.entries) entry.enabled = wanted.count(entry.name) > 0;
  }

  const std::string approx = string_field(j, "approx");
  if (approx == "classical") return build_classical_rys(space, std::move(catalog));
  if (approx == "neighborhood")
    return build_tolerance_rys(space, GranulationStyle::SuccessorNeighborhood,
                               std::move(catalog));
  if (approx == "block")
    return build_tolerance_rys(space, GranulationStyle::Block, std::move(catalog));
  bad("unknown approx style " + approx);
}

RysPtr load_rys(const std::filesystem::path& file) {
  return rys_from_json(load_json_file(file), file.parent_path());
}

Correspondence map_from_json(const Json& j, const std::filesystem::path& base_dir) {
  auto side = [&](const char* key) {
    const Json& v = field(j, key);
    if (v.is_string()) return load_rys(resolve_reference(v.get<std::string>(), base_dir));
    return rys_from_json(v, base_dir);
  };
  RysPtr source = side("source");
  RysPtr target = side("target");
  const ExtensionPolicy policy = extension_policy_from_string(string_field(j, "extension"));

  std::vector<std::pair<Subset, Subset>> rows;
  const Json& table = field(j, "map");
  if (!table.is_array()) bad("\"map\" must be an array of rows");
  for (const Json& row : table) {
    if (!row.is_array() || row.size() != 2)
      bad("each map row must be [source names, target names]");
    rows.emplace_back(subset_from_json(row[0], source->universe),
                      subset_from_json(row[1], target->universe));
  }
  return make_correspondence(std::move(source), std::move(target), rows, policy,
                             j.value("name", std::string()));
}

Correspondence load_map(const std::filesystem::path& file) {
  return map_from_json(load_json_file(file), file.parent_path());
}

Subset subset_from_json(const Json& j, const UniversePtr& u) {
  if (!j.is_array()) bad("a subset must be an array of element names");
  std::vector<std::string> names;
  for (const Json& n : j) {
    if (!n.is_string()) bad("subset entries must be strings");
    names.push_back(n.get<std::string>());
  }
  return Subset::of_names(u, names);
}

Json subset_json(const Subset& s) {
  Json out = Json::array();
  for (std::size_t i = 0; i < s.universe()->size(); ++i)
    if (s.contains(i)) out.push_back(s.universe()->name(i));
  return out;
}

Json certificate_json(const ClassificationCertificate& c) {
  Json w = Json::object();
  for (const auto& [granule, term] : c.granule_witnesses) w[granule] = term;
  Json out{{"injective", c.injective},
           {"injective_on_granules", c.injective_on_granules},
           {"granule_images_term_representable", c.granule_images_term_representable},
           {"seeds_singleton_generated", c.seeds_singleton_generated},
           {"is_pon", c.is_pon},
           {"is_pnc", c.is_pnc},
           {"is_snc", c.is_snc},
           {"is_oplus_morphism", c.is_oplus_morphism},
           {"is_odot_morphism", c.is_odot_morphism},
           {"is_morphism", c.is_morphism},
           {"smooth", c.smooth},
           {"witnesses", std::move(w)}};
  out["partition_case"] = c.partition_case ? Json(*c.partition_case) : Json();
  out["block_case"] = c.block_case ? Json(*c.block_case) : Json();
  out["partition_case_all"] = c.partition_case_all;
  out["block_case_all"] = c.block_case_all;
  if (c.oplus_witness) out["oplus_failure"] = c.oplus_witness->detail;
  if (c.odot_witness) out["odot_failure"] = c.odot_witness->detail;
  return out;
}

Json verdict_json(const ComparisonVerdict& v) {
  Json out{{"kind", to_string(v.kind)}, {"holds", v.holds}};
  if (v.witness) {
    out["z0"] = subset_json(v.witness->z0);
    out["i"] = v.witness->i;
    if (v.witness->j) out["j"] = *v.witness->j;
  }
  if (v.symmetric) out["symmetric"] = *v.symmetric;
  if (!v.reason.empty()) out["reason"] = v.reason;
  return out;
}

Json bigness_report_json(const BignessAxiomReport& r) {
  Json cex = Json::array();
  for (const Subset& s : r.counterexample) cex.push_back(subset_json(s));
  Json out{{"axiom", to_string(r.axiom)}, {"holds", r.holds}, {"counterexample", cex}};
  if (!r.detail.empty()) out["detail"] = r.detail;
  return out;
}

Json evolution_json(const EvolutionReport& r) {
  return Json{{"label", to_string(r.label)},
              {"axiom_inclusion", r.axiom_inclusion},
              {"both_admissible", r.both_admissible},
              {"equi_representable", r.equi_representable},
              {"axioms_x", r.axioms_x},
              {"axioms_y", r.axioms_y}};
}

Json filter_json(const FilterRecord& r, const PreRoughAlgebra& q) {
  Json elems = Json::array();
  for (std::size_t e : r.elements) elems.push_back(q.labels[e]);
  Json out{{"elements", elems},          {"o_filter", r.o_filter},
           {"l_filter", r.l_filter},     {"prime", r.prime},
           {"lattice", r.lattice},       {"cofine", r.cofine},
           {"nontrivial", r.nontrivial}};
  out["supremal_of"] = r.supremal_of ? Json(*r.supremal_of) : Json();
  return out;
}

Json prerough_json(const PreRoughAlgebra& q) {
  Json carrier = Json::array();
  if (!q.objects.empty()) {
    for (const RoughObject& o : q.objects)
      carrier.push_back(Json{{"lower", subset_json(o.lower)},
                             {"upper", subset_json(o.upper)}});
  } else {
    for (const std::string& lab : q.labels) carrier.push_back(lab);
  }
  return Json{{"size", q.size()},
              {"carrier", carrier},
              {"zero", q.labels[q.zero]},
              {"one", q.labels[q.one]}};
}

Json space_json(const ApproximationSpace& space) {
  Json names = Json::array();
  for (std::size_t i = 0; i < space.universe->size(); ++i)
    names.push_back(space.universe->name(i));
  Json pairs = Json::array();
  for (const auto& [a, b] : space.relation.pairs())
    pairs.push_back(Json::array({space.universe->name(a), space.universe->name(b)}));
  return Json{{"universe", names},
              {"relation", Json{{"kind", to_string(space.relation.kind())}, {"pairs", pairs}}}};
}

std::string emit_report(Json payload) {
  payload["version"] = "0.1.0";
  return payload.dump(2) + "\n";
}

}  // namespace rys
