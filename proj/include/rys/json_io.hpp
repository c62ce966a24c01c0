#pragma once

// JSON front door: loaders for the three on-disk formats (space files,
// system descriptors, map files) with relative references resolved against
// the referencing file and the RYSW_DATA_DIR override, serializers for the
// report structures the CLI prints, and the canonical report envelope.

#include <filesystem>
#include <string>

#include "json.hpp"
#include "rys/bigness.hpp"
#include "rys/comparison.hpp"
#include "rys/correspondence.hpp"
#include "rys/prerough.hpp"

namespace rys {

using Json = nlohmann::json;

// Lookup order for a relative reference: absolute as given, next to the
// referencing file, then $RYSW_DATA_DIR, then the working directory.
// Throws when none of them exists.
std::filesystem::path resolve_reference(const std::string& name,
                                        const std::filesystem::path& base_dir);

// Parses a file, converting parse failures and missing files into
// std::invalid_argument with the file name in the message.
Json load_json_file(const std::filesystem::path& file);

// {"universe": ["x1", ...], "relation": {"kind": ..., "pairs": [[a,b],...]},
//  "closure": true}.  closure=true (the default) closes the pairs under the
// declared kind; closure=false takes them as given and verifies.
ApproximationSpace space_from_json(const Json& j);
ApproximationSpace load_space(const std::filesystem::path& file);

// {"space": <file name or inline space object>, "approx": "classical" |
//  "neighborhood" | "block", "axioms": [names...]}.  The optional axiom list
// selects which catalog entries stay enabled.
RysPtr rys_from_json(const Json& j, const std::filesystem::path& base_dir);
RysPtr load_rys(const std::filesystem::path& file);

// {"source": <descriptor or file>, "target": <same>, "extension": policy,
//  "map": [[[names], [names]], ...], "name": optional}.
Correspondence map_from_json(const Json& j, const std::filesystem::path& base_dir);
Correspondence load_map(const std::filesystem::path& file);

Json subset_json(const Subset& s);
Subset subset_from_json(const Json& j, const UniversePtr& u);

Json certificate_json(const ClassificationCertificate& c);
Json verdict_json(const ComparisonVerdict& v);
Json bigness_report_json(const BignessAxiomReport& r);
Json evolution_json(const EvolutionReport& r);
Json filter_json(const FilterRecord& r, const PreRoughAlgebra& q);
Json prerough_json(const PreRoughAlgebra& q);
Json space_json(const ApproximationSpace& space);

// Canonical envelope: the payload plus a version stamp, keys sorted,
// two-space indent, trailing newline.  Identical inputs give identical
// bytes.
std::string emit_report(Json payload);

}  // namespace rys
