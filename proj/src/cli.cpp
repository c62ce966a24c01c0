#include "rys/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "rys/json_io.hpp"
#include "rys/verify.hpp"

namespace rys {

namespace {

namespace fs = std::filesystem;

// A file given on the command line may be a full system descriptor or a
// plain space file.  Space files get the natural reading of their relation:
// partitions carry the classical operators, tolerances the successor
// neighbourhoods (use a descriptor to pick blocks or trim the catalog).
RysPtr system_from_file(const std::string& name) {
  const fs::path file = resolve_reference(name, fs::current_path());
  Json j = load_json_file(file);
  if (j.is_object() && j.contains("universe")) {
    ApproximationSpace space = space_from_json(j);
    if (space.relation.kind() == RelationKind::Equivalence)
      return build_classical_rys(space);
    if (space.relation.kind() == RelationKind::Tolerance)
      return build_tolerance_rys(space, GranulationStyle::SuccessorNeighborhood);
    throw std::invalid_argument("general relations need a system descriptor with "
                                "an explicit \"approx\" style: " + name);
  }
  return rys_from_json(j, file.parent_path());
}

Json granulation_json(const Granulation& g) {
  Json granules = Json::array();
  for (const auto& gr : g.granules()) {
    Json e;
    e["name"] = gr.name;
    e["members"] = subset_json(gr.members);
    granules.push_back(e);
  }
  Json out;
  out["style"] = to_string(g.style());
  out["granules"] = granules;
  out["covers_universe"] = g.covers_universe();
  out["is_partition"] = g.is_partition();
  out["lower_definite"] = definite_elements(g, DefiniteKind::Lower).size();
  out["upper_definite"] = definite_elements(g, DefiniteKind::Upper).size();
  out["both_definite"] = definite_elements(g, DefiniteKind::Both).size();
  return out;
}

Json claim_json(const ClaimResult& r) {
  Json out;
  out["id"] = r.id;
  out["statement"] = r.statement;
  out["scope"] = r.scope;
  out["status"] = to_string(r.status);
  out["expected"] = to_string(r.expected);
  out["ok"] = r.ok;
  out["detail"] = r.detail;
  return out;
}

Json axiom_report_json(const PreRoughAxiomReport& rep) {
  Json axioms = Json::array();
  for (const auto& e : rep.axioms) {
    Json a;
    a["name"] = e.name;
    a["holds"] = e.holds;
    if (!e.detail.empty()) a["detail"] = e.detail;
    axioms.push_back(a);
  }
  Json out;
  out["axioms"] = axioms;
  out["all_pass"] = rep.all_pass;
  out["distributive"] = rep.distributivity.holds;
  if (!rep.distributivity.holds) out["distributivity_detail"] = rep.distributivity.detail;
  return out;
}

Json construction_json(const PreRoughConstruction& pc) {
  Json out;
  out["algebra"] = prerough_json(pc.algebra);
  out["axiom_report"] = axiom_report_json(pc.axioms);
  out["bounds_unique"] = pc.bounds_unique;
  out["has_nontrivial_lattice_l_filter"] = pc.has_nontrivial_lattice_l_filter;
  if (pc.has_nontrivial_lattice_l_filter) {
    Json w = Json::array();
    for (std::size_t e : pc.nontrivial_witness) w.push_back(pc.algebra.labels[e]);
    out["nontrivial_witness"] = w;
  }
  return out;
}

// Predicate specs look like "delta2:x0=x1,x2" or "upset:x0=x3"; the member
// list may be empty ("delta2:x0=").
BignessPredicate predicate_from_spec(RysPtr sys, const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  std::vector<std::string> names;
  if (colon != std::string::npos) {
    std::string rest = spec.substr(colon + 1);
    if (rest.rfind("x0=", 0) != 0)
      throw std::invalid_argument("predicate spec needs x0=<names>: " + spec);
    std::stringstream ss(rest.substr(3));
    std::string tok;
    while (std::getline(ss, tok, ','))
      if (!tok.empty()) names.push_back(tok);
  }
  Subset x0 = Subset::of_names(sys->universe, names);
  if (kind == "upset") return upset_predicate(std::move(sys), x0);
  return delta_predicate(std::move(sys), x0, delta_variant_from_string(kind));
}

void emit(std::ostream& out, bool text, const Json& payload,
          const std::function<void(std::ostream&)>& render_text) {
  if (text)
    render_text(out);
  else
    out << emit_report(payload);
}

// ---------------------------------------------------------------------------

int cmd_space(const std::string& input, bool text, std::ostream& out) {
  ApproximationSpace space = load_space(resolve_reference(input, fs::current_path()));
  Json payload;
  payload["space"] = space_json(space);
  Json grans = Json::array();
  grans.push_back(granulation_json(granulation_from_relation(space.relation)));
  if (space.relation.kind() == RelationKind::Tolerance)
    grans.push_back(granulation_json(block_granulation(space.relation)));
  payload["granulations"] = grans;
  emit(out, text, payload, [&](std::ostream& os) {
    os << "universe of " << space.universe->size() << ": ";
    for (const auto& n : space.universe->names()) os << n << " ";
    os << "\nrelation: " << to_string(space.relation.kind()) << "\n";
    for (const Json& g : payload["granulations"]) {
      os << g["style"].get<std::string>() << " granules:";
      for (const Json& gr : g["granules"]) os << " " << gr["name"].get<std::string>();
      os << "\n";
    }
  });
  return 0;
}

int cmd_classify(const std::string& map_file, const std::string& s1, const std::string& s2,
                 bool text, std::ostream& out) {
  const fs::path file = resolve_reference(map_file, fs::current_path());
  Json j = load_json_file(file);
  Correspondence c = [&] {
    if (s1.empty() && s2.empty()) return map_from_json(j, file.parent_path());
    if (s1.empty() || s2.empty())
      throw std::invalid_argument("-s1 and -s2 must be given together");
    RysPtr source = system_from_file(s1);
    RysPtr target = system_from_file(s2);
    const ExtensionPolicy policy =
        extension_policy_from_string(j.at("extension").get<std::string>());
    std::vector<std::pair<Subset, Subset>> rows;
    for (const Json& row : j.at("map"))
      rows.emplace_back(subset_from_json(row.at(0), source->universe),
                        subset_from_json(row.at(1), target->universe));
    return make_correspondence(std::move(source), std::move(target), rows, policy,
                               j.value("name", std::string()));
  }();
  ClassificationCertificate cert = classify(c);
  Json payload = certificate_json(cert);
  payload["map"] = c.name.empty() ? map_file : c.name;
  emit(out, text, payload, [&](std::ostream& os) {
    os << "map " << (c.name.empty() ? map_file : c.name) << "\n"
       << "  injective=" << cert.injective << " is_pon=" << cert.is_pon
       << " is_pnc=" << cert.is_pnc << " is_snc=" << cert.is_snc << "\n"
       << "  is_oplus_morphism=" << cert.is_oplus_morphism
       << " is_odot_morphism=" << cert.is_odot_morphism
       << " is_morphism=" << cert.is_morphism << " smooth=" << cert.smooth << "\n";
    if (cert.partition_case) os << "  partition case " << *cert.partition_case << "\n";
    if (cert.block_case) os << "  block case " << *cert.block_case << "\n";
  });
  return 0;
}

int cmd_compare(const std::string& kind_name, const std::string& f_file,
                const std::string& g_file, bool text, std::ostream& out) {
  const ComparisonKind kind = comparison_kind_from_string(kind_name);
  Correspondence f = load_map(resolve_reference(f_file, fs::current_path()));
  // Rebuild g's rows on f's systems so the two maps share carriers; the
  // comparison relations are only defined for a common source and target.
  const fs::path gpath = resolve_reference(g_file, fs::current_path());
  Json gj = load_json_file(gpath);
  std::vector<std::pair<Subset, Subset>> rows;
  for (const Json& row : gj.at("map"))
    rows.emplace_back(subset_from_json(row.at(0), f.source->universe),
                      subset_from_json(row.at(1), f.target->universe));
  Correspondence g = make_correspondence(
      f.source, f.target, rows,
      extension_policy_from_string(gj.at("extension").get<std::string>()),
      gj.value("name", std::string()));
  ComparisonVerdict v = related(f, g, kind);
  Json payload = verdict_json(v);
  payload["f"] = f.name.empty() ? f_file : f.name;
  payload["g"] = g.name.empty() ? g_file : g.name;
  emit(out, text, payload, [&](std::ostream& os) {
    os << to_string(kind) << "(" << payload["f"].get<std::string>() << ", "
       << payload["g"].get<std::string>() << ") holds=" << v.holds;
    if (v.witness) os << " z0=" << v.witness->z0.to_string() << " i=" << v.witness->i;
    if (!v.reason.empty()) os << " (" << v.reason << ")";
    os << "\n";
  });
  return 0;
}

int cmd_evolution(const std::string& x_file, const std::string& y_file, bool text,
                  std::ostream& out) {
  RysPtr x = system_from_file(x_file);
  RysPtr y = system_from_file(y_file);
  EvolutionReport rep = classify_evolution(*x, *y);
  Json payload = evolution_json(rep);
  emit(out, text, payload, [&](std::ostream& os) {
    os << "evolution " << x_file << " -> " << y_file << ": " << to_string(rep.label)
       << "\n  axiom_inclusion=" << rep.axiom_inclusion
       << " both_admissible=" << rep.both_admissible
       << " equi_representable=" << rep.equi_representable << "\n";
  });
  return 0;
}

int cmd_bigness(const std::string& input, const std::string& predicate_spec,
                const std::string& axiom_list, bool text, std::ostream& out) {
  RysPtr sys = system_from_file(input);
  BignessPredicate big = predicate_from_spec(sys, predicate_spec);
  std::vector<BignessAxiom> axioms;
  if (axiom_list.empty()) {
    for (auto ax : {BignessAxiom::B1, BignessAxiom::B2, BignessAxiom::B3,
                    BignessAxiom::BC1, BignessAxiom::BC2, BignessAxiom::BC3,
                    BignessAxiom::BC4, BignessAxiom::BC5, BignessAxiom::BC6})
      axioms.push_back(ax);
  } else {
    std::stringstream ss(axiom_list);
    std::string tok;
    while (std::getline(ss, tok, ','))
      if (!tok.empty()) axioms.push_back(bigness_axiom_from_string(tok));
  }
  Json payload;
  payload["predicate"] = Json::object();
  payload["predicate"]["spec"] = predicate_spec;
  Json members = Json::array();
  for (const Subset& m : big.members()) members.push_back(subset_json(m));
  payload["predicate"]["members"] = members;
  Json reports = Json::array();
  for (BignessAxiom ax : axioms) reports.push_back(bigness_report_json(check_bigness_axiom(big, ax)));
  payload["axioms"] = reports;
  emit(out, text, payload, [&](std::ostream& os) {
    os << "predicate " << predicate_spec << " with " << big.members().size()
       << " big elements\n";
    for (const Json& rep : payload["axioms"])
      os << "  " << rep["axiom"].get<std::string>() << " "
         << (rep["holds"].get<bool>() ? "holds" : "fails") << "\n";
  });
  return 0;
}

int cmd_prerough(const std::string& input, bool list_filters, bool supremal_report,
                 std::optional<std::size_t> ocpr_id, std::size_t paste_n,
                 const std::string& product_file, bool text, std::ostream& out) {
  ApproximationSpace space = load_space(resolve_reference(input, fs::current_path()));
  PreRoughAlgebra q = quotient_by_rough_equality(space);
  Json payload;
  payload["quotient"] = prerough_json(q);
  payload["axiom_report"] = axiom_report_json(check_prerough_axioms(q));

  std::vector<FilterRecord> filters;
  if (list_filters || supremal_report || ocpr_id) filters = enumerate_filters(q);
  if (list_filters) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < filters.size(); ++i) {
      Json f = filter_json(filters[i], q);
      f["id"] = i;
      arr.push_back(f);
    }
    payload["filters"] = arr;
  }
  if (supremal_report) {
    SupremalFamilyReport fam = supremal_family(q);
    Json rep;
    rep["lattice_l_filters"] = fam.lattice_l_filters.size();
    Json pluses = Json::array();
    for (std::size_t i = 0; i < fam.lattice_l_filters.size(); ++i) {
      Json e;
      Json k = Json::array(), kp = Json::array();
      for (std::size_t x : fam.lattice_l_filters[i].elements) k.push_back(q.labels[x]);
      for (std::size_t x : fam.kplus[i]) kp.push_back(q.labels[x]);
      e["filter"] = k;
      e["kplus"] = kp;
      pluses.push_back(e);
    }
    rep["companions"] = pluses;
    rep["inclusion_order_boolean"] = fam.inclusion_order_boolean;
    rep["dual_order_boolean"] = fam.dual_order_boolean;
    if (!fam.note.empty()) rep["note"] = fam.note;
    payload["supremal"] = rep;
  }
  if (ocpr_id) {
    if (*ocpr_id >= filters.size())
      throw std::invalid_argument("filter id " + std::to_string(*ocpr_id) +
                                  " out of range (have " + std::to_string(filters.size()) +
                                  ")");
    OcprSystem sys = ocpr_build(q, filters[*ocpr_id]);
    Json rep;
    Json k = Json::array();
    for (std::size_t x : sys.k) k.push_back(q.labels[x]);
    rep["filter"] = k;
    rep["partial_order"] = sys.partial_order;
    rep["lu_compatible"] = sys.lu_compatible;
    rep["k_restriction_matches"] = sys.k_restriction_matches;
    if (sys.absorption_failure) {
      rep["absorption_failure"] =
          Json::array({q.labels[sys.absorption_failure->first],
                       q.labels[sys.absorption_failure->second]});
    }
    payload["ocpr"] = rep;
  }
  if (paste_n > 0) {
    Json stages = Json::array();
    PreRoughAlgebra current = q;
    for (std::size_t i = 0; i < paste_n; ++i) {
      PreRoughConstruction pc = paste(current);
      stages.push_back(construction_json(pc));
      current = pc.algebra;
    }
    payload["paste"] = stages;
  }
  if (!product_file.empty()) {
    ApproximationSpace other = load_space(resolve_reference(product_file, fs::current_path()));
    payload["product"] = construction_json(product(q, quotient_by_rough_equality(other)));
  }
  emit(out, text, payload, [&](std::ostream& os) {
    os << "quotient of " << q.size() << " classes:";
    for (const auto& l : q.labels) os << " " << l;
    os << "\naxioms all_pass=" << payload["axiom_report"]["all_pass"].get<bool>()
       << " distributive=" << payload["axiom_report"]["distributive"].get<bool>() << "\n";
    if (payload.contains("filters"))
      os << payload["filters"].size() << " filters enumerated\n";
  });
  return 0;
}

int cmd_verify(const std::string& suite, const VerifyOptions& options, bool text,
               std::ostream& out) {
  std::vector<ClaimResult> results;
  if (suite == "all") {
    results = run_all_claims(options);
  } else {
    results.push_back(run_claim(suite, options));
  }
  bool all_ok = true;
  Json arr = Json::array();
  for (const auto& r : results) {
    all_ok = all_ok && r.ok;
    arr.push_back(claim_json(r));
  }
  Json payload;
  payload["options"] = {{"max_size", options.max_size},
                        {"algebra_bound", options.algebra_bound},
                        {"samples", options.samples},
                        {"seed", options.seed}};
  payload["claims"] = arr;
  payload["all_ok"] = all_ok;
  emit(out, text, payload, [&](std::ostream& os) {
    for (const auto& r : results) {
      os << (r.ok ? "[ ok ] " : "[FAIL] ") << r.id << ": " << to_string(r.status);
      if (r.status != r.expected) os << " (expected " << to_string(r.expected) << ")";
      os << "\n";
    }
    os << (all_ok ? "all claims match their recorded outcomes"
                  : "some claims deviate from their recorded outcomes")
       << "\n";
  });
  return all_ok ? 0 : 1;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite workbench for granular rough set structures", "rysw"};
  app.require_subcommand(1);
  app.fallthrough();

  bool text = false;
  bool json_flag = false;
  VerifyOptions options;
  app.add_flag("--text", text, "human-readable output");
  app.add_flag("--json", json_flag, "canonical JSON output (the default)");
  app.add_option("--max-size", options.max_size, "universe bound for sweeps");
  app.add_option("--seed", options.seed, "seed for sampled checks");
  app.add_option("--samples", options.samples, "sample count where exhaustion is infeasible");
  app.add_option("--algebra-bound", options.algebra_bound, "carrier bound for algebra sweeps");

  auto* space_cmd = app.add_subcommand("space", "inspect an approximation space");
  std::string space_input;
  space_cmd->add_option("-i,--input", space_input, "space file")->required();

  auto* classify_cmd = app.add_subcommand("classify", "classify a correspondence");
  std::string map_file, s1, s2;
  classify_cmd->add_option("-m,--map", map_file, "map file")->required();
  // Spelled -s1/-s2 on the command line; those names are rewritten to the
  // long forms before parsing (multi-character short names are not valid).
  classify_cmd->add_option("--source", s1, "source system or space file (-s1)");
  classify_cmd->add_option("--target", s2, "target system or space file (-s2)");

  auto* compare_cmd = app.add_subcommand("compare", "compare two maps over a shared system");
  std::string kind_name = "theta-lu", f_file, g_file;
  compare_cmd->add_option("--kind", kind_name,
                          "theta-lu|theta-uu|omega-l|omega-u|o-l|o-u");
  compare_cmd->add_option("-f", f_file, "first map file")->required();
  compare_cmd->add_option("-g", g_file, "second map file")->required();

  auto* evolution_cmd = app.add_subcommand("evolution", "classify a system evolution");
  std::string x_file, y_file;
  evolution_cmd->add_option("-x", x_file, "initial system")->required();
  evolution_cmd->add_option("-y", y_file, "evolved system")->required();

  auto* bigness_cmd = app.add_subcommand("bigness", "check bigness axioms for a predicate");
  std::string bigness_input, predicate_spec, axiom_list;
  bigness_cmd->add_option("-i,--input", bigness_input, "system or space file")->required();
  bigness_cmd->add_option("--predicate", predicate_spec,
                          "delta1..delta5:x0=<names> or upset:x0=<names>")
      ->required();
  bigness_cmd->add_option("--axioms", axiom_list, "comma list (default: all)");

  auto* prerough_cmd = app.add_subcommand("prerough", "quotient algebra toolbox");
  std::string prerough_input, product_file;
  bool list_filters = false, supremal_report = false;
  std::size_t paste_n = 0;
  std::optional<std::size_t> ocpr_id;
  std::size_t ocpr_raw = 0;
  prerough_cmd->add_option("-i,--input", prerough_input, "equivalence space file")->required();
  prerough_cmd->add_flag("--filters", list_filters, "enumerate filters");
  prerough_cmd->add_flag("--supremal", supremal_report, "supremal filter family");
  auto* ocpr_opt = prerough_cmd->add_option("--ocpr", ocpr_raw, "build the big-join system "
                                            "for the filter with this id");
  prerough_cmd->add_option("--paste", paste_n, "apply the paste construction N times");
  prerough_cmd->add_option("--product", product_file, "product with this space's quotient");

  auto* verify_cmd = app.add_subcommand("verify", "run the claim suite");
  std::string suite = "all";
  verify_cmd->add_option("--suite", suite, "all or a single claim id");

  std::vector<std::string> rewritten = args;
  for (std::string& a : rewritten) {
    if (a == "-s1" || a.rfind("-s1=", 0) == 0) a = "--source" + a.substr(3);
    if (a == "-s2" || a.rfind("-s2=", 0) == 0) a = "--target" + a.substr(3);
  }
  std::vector<std::string> reversed(rewritten.rbegin(), rewritten.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "argument error: " << e.what() << "\n";
    return 2;
  }
  if (*ocpr_opt) ocpr_id = ocpr_raw;

  try {
    if (*space_cmd) return cmd_space(space_input, text, out);
    if (*classify_cmd) return cmd_classify(map_file, s1, s2, text, out);
    if (*compare_cmd) return cmd_compare(kind_name, f_file, g_file, text, out);
    if (*evolution_cmd) return cmd_evolution(x_file, y_file, text, out);
    if (*bigness_cmd) return cmd_bigness(bigness_input, predicate_spec, axiom_list, text, out);
    if (*prerough_cmd)
      return cmd_prerough(prerough_input, list_filters, supremal_report, ocpr_id, paste_n,
                          product_file, text, out);
    if (*verify_cmd) return cmd_verify(suite, options, text, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "no subcommand selected\n";
  return 2;
}

}  // namespace rys
