#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "coordlat/coord.hpp"
#include "coordlat/finmod.hpp"
#include "coordlat/finring.hpp"
#include "coordlat/latt.hpp"
#include "coordlat/regcheck.hpp"

namespace coordlat {

using Json = nlohmann::ordered_json;

enum class DocumentKind { Ring, Module, Lattice, Report };

inline constexpr std::string_view kFormatVersion = "1";

std::string_view to_string(DocumentKind kind);

/// One file = one document: {"kind", "version", "body"}.
struct Document {
  DocumentKind kind = DocumentKind::Report;
  std::string version{kFormatVersion};
  Json body;

  bool operator==(const Document&) const = default;
};

struct LoadOptions {
  // Directory against which file references inside module documents
  // (`"ring": "path.json"`) are resolved.
  std::filesystem::path base_dir;
  // Run the cubic ring axiom check even above Limits::max_exhaustive.
  bool force_validation = false;
};

/// Parses and schema-checks a document. Ring and module bodies also have
/// their axioms checked.
///   ParseError     malformed text (message carries the byte offset)
///   SchemaError    missing or ill-typed field, unknown kind or version
///   AxiomError     tables violate a ring or module axiom
Document load_document(std::string_view text, const LoadOptions& options = {});
Document load_document_file(const std::filesystem::path& path, LoadOptions options = {});

/// Canonical text: fixed key order, one key per line, scalar arrays inline,
/// newline-terminated.
std::string save_document(const Document& doc);
std::string canonical_json(const Json& value);

Document ring_document(const FiniteRing& ring);
RingPtr ring_from_document(const Document& doc);

Document module_document(const RightModule& module);
ModulePtr module_from_document(const Document& doc, const LoadOptions& options = {});

/// Body: size, keys, leq (0/1 rows), join, meet.
Document lattice_document(const FiniteLattice& lattice);
FiniteLattice lattice_from_document(const Document& doc);

/// Body: command, inputs, results, timings.
Document report_document(std::string command, Json inputs, Json results, Json timings = Json::object());

Json ring_body(const FiniteRing& ring);
Json module_body(const RightModule& module);
Json lattice_body(const FiniteLattice& lattice);

Json to_json(const RingValidation& v);
Json to_json(const RegularityReport& r, const FiniteRing& ring);
Json to_json(const ModuleRegularityReport& r, const RightModule& m);
Json to_json(const RelativeRegularityReport& r);
Json to_json(const SummandReport& r);
Json to_json(const PreimageReport& r);
Json to_json(const LatticeProperties& p);
Json to_json(const LatticeMap& map);
Json to_json(const MapVerification& v);
Json to_json(const CoordinatizationReport& r);
Json to_json(const DistributivityReport& r);

}  // namespace coordlat
