// Python face of the workbench.  Everything crosses the boundary as JSON
// text: inputs are the same documents the CLI reads, outputs are the same
// canonical reports it prints.  That keeps the binding layer to a handful
// of functions and spares the Python side any mirrored class hierarchy.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "rys/cli.hpp"
#include "rys/json_io.hpp"
#include "rys/verify.hpp"

namespace py = pybind11;
using namespace rys;

namespace {

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

std::string classify_json(const std::string& map_text, const std::string& base_dir) {
  Correspondence c = map_from_json(parse(map_text), base_dir);
  return emit_report(certificate_json(classify(c)));
}

std::string space_report(const std::string& space_text) {
  ApproximationSpace sp = space_from_json(parse(space_text));
  return emit_report(space_json(sp));
}

std::string quotient_report(const std::string& space_text) {
  ApproximationSpace sp = space_from_json(parse(space_text));
  PreRoughAlgebra q = quotient_by_rough_equality(sp);
  PreRoughAxiomReport rep = check_prerough_axioms(q);
  Json payload;
  payload["quotient"] = prerough_json(q);
  payload["all_pass"] = rep.all_pass;
  payload["distributive"] = rep.distributivity.holds;
  return emit_report(payload);
}

std::string compare_json(const std::string& f_text, const std::string& g_text,
                         const std::string& kind_name, const std::string& base_dir) {
  Correspondence f = map_from_json(parse(f_text), base_dir);
  Json gj = parse(g_text);
  std::vector<std::pair<Subset, Subset>> rows;
  for (const Json& row : gj.at("map"))
    rows.emplace_back(subset_from_json(row.at(0), f.source->universe),
                      subset_from_json(row.at(1), f.target->universe));
  Correspondence g = make_correspondence(
      f.source, f.target, rows,
      extension_policy_from_string(gj.at("extension").get<std::string>()),
      gj.value("name", std::string()));
  return emit_report(verdict_json(related(f, g, comparison_kind_from_string(kind_name))));
}

std::string verify_claim_report(const std::string& id, std::size_t max_size,
                                std::size_t samples, std::uint64_t seed,
                                std::size_t algebra_bound) {
  VerifyOptions opt;
  opt.max_size = max_size;
  opt.samples = samples;
  opt.seed = seed;
  opt.algebra_bound = algebra_bound;
  ClaimResult r = run_claim(id, opt);
  Json out;
  out["id"] = r.id;
  out["statement"] = r.statement;
  out["scope"] = r.scope;
  out["status"] = to_string(r.status);
  out["expected"] = to_string(r.expected);
  out["ok"] = r.ok;
  out["detail"] = r.detail;
  return emit_report(out);
}

py::tuple run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_command(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_rysw, m) {
  m.doc() = "finite workbench for granular rough set structures (JSON bridge)";

  m.def("classify_json", &classify_json, py::arg("map_json"), py::arg("base_dir") = ".",
        "Classify a correspondence given as a map document; returns the "
        "certificate report.");
  m.def("space_report", &space_report, py::arg("space_json"),
        "Parse and echo an approximation space as a canonical report.");
  m.def("quotient_report", &quotient_report, py::arg("space_json"),
        "Quotient an equivalence space by rough equality and report carrier "
        "and axiom status.");
  m.def("compare_json", &compare_json, py::arg("f_json"), py::arg("g_json"),
        py::arg("kind") = "theta-lu", py::arg("base_dir") = ".",
        "Relate two maps (the second is rebuilt on the first map's systems).");
  m.def("verify_claim", &verify_claim_report, py::arg("claim_id"), py::arg("max_size") = 4,
        py::arg("samples") = 1000, py::arg("seed") = 42, py::arg("algebra_bound") = 12,
        "Run one registry claim and return its result report.");
  m.def("claim_ids", [] { return claim_ids(); }, "All claim ids, in execution order.");
  m.def("run_cli", &run_cli, py::arg("args"),
        "Run a CLI invocation in-process; returns (exit_code, stdout, stderr).");
  m.attr("__version__") = "0.1.0";
}
