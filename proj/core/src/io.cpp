#include "coordlat/io.hpp"

#include <fstream>
#include <sstream>

#include "coordlat/error.hpp"

namespace coordlat {

namespace {

void write_value(const Json& v, std::size_t indent, std::string& out) {
  const std::string pad(indent, ' ');
  const std::string inner(indent + 2, ' ');
  if (v.is_object()) {
    if (v.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    std::size_t i = 0;
    for (auto it = v.begin(); it != v.end(); ++it, ++i) {
      out += inner + Json(it.key()).dump() + ": ";
      write_value(it.value(), indent + 2, out);
      out += i + 1 < v.size() ? ",\n" : "\n";
    }
    out += pad + "}";
  } else if (v.is_array()) {
    if (v.empty()) {
      out += "[]";
      return;
    }
    const bool flat = std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_primitive(); });
    if (flat) {
      out += "[";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].dump();
      }
      out += "]";
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < v.size(); ++i) {
      out += inner;
      write_value(v[i], indent + 2, out);
      out += i + 1 < v.size() ? ",\n" : "\n";
    }
    out += pad + "]";
  } else {
    out += v.dump();
  }
}

const Json& field(const Json& obj, const char* name) {
  if (!obj.is_object()) throw SchemaError(name, "parent is not an object");
  auto it = obj.find(name);
  if (it == obj.end()) throw SchemaError(name, "missing");
  return *it;
}

std::size_t uint_field(const Json& obj, const char* name) {
  const Json& v = field(obj, name);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    throw SchemaError(name, "expected a non-negative integer");
  }
  return v.get<std::size_t>();
}

Index index_field(const Json& obj, const char* name, std::size_t range) {
  const std::size_t v = uint_field(obj, name);
  if (v >= range) throw SchemaError(name, "index " + std::to_string(v) + " out of range");
  return static_cast<Index>(v);
}

std::vector<std::string> labels_field(const Json& obj, const char* name, std::size_t count) {
  const Json& v = field(obj, name);
  if (!v.is_array() || v.size() != count) {
    throw SchemaError(name, "expected " + std::to_string(count) + " strings");
  }
  std::vector<std::string> out;
  out.reserve(count);
  for (const auto& e : v) {
    if (!e.is_string()) throw SchemaError(name, "expected strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::vector<Index> table_field(const Json& obj, const char* name, std::size_t rows, std::size_t cols,
                               std::size_t range) {
  const Json& v = field(obj, name);
  if (!v.is_array() || v.size() != rows) {
    throw SchemaError(name, "expected " + std::to_string(rows) + " rows");
  }
  std::vector<Index> out;
  out.reserve(rows * cols);
  for (const auto& row : v) {
    if (!row.is_array() || row.size() != cols) {
      throw SchemaError(name, "expected rows of length " + std::to_string(cols));
    }
    for (const auto& e : row) {
      if (!e.is_number_integer() || e.get<long long>() < 0 || static_cast<std::size_t>(e.get<long long>()) >= range) {
        throw SchemaError(name, "entry out of range");
      }
      out.push_back(static_cast<Index>(e.get<long long>()));
    }
  }
  return out;
}

template <class T>
Json rows(std::span<const T> flat, std::size_t cols) {
  Json out = Json::array();
  for (std::size_t r = 0; cols && r < flat.size() / cols; ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < cols; ++c) row.push_back(flat[r * cols + c]);
    out.push_back(std::move(row));
  }
  return out;
}

std::string violation_text(const AxiomViolation& v) {
  std::string w;
  for (std::size_t i = 0; i < v.witness.size(); ++i) w += (i ? ", " : "") + std::to_string(v.witness[i]);
  return "`" + v.axiom + "` fails at (" + w + ")";
}

FiniteRing parse_ring_body(const Json& body) {
  const std::size_t n = uint_field(body, "order");
  if (n == 0) throw SchemaError("order", "must be positive");
  auto labels = labels_field(body, "labels", n);
  auto add = table_field(body, "add", n, n, n);
  auto mul = table_field(body, "mul", n, n, n);
  const Index zero = index_field(body, "zero", n);
  const Index one = index_field(body, "one", n);
  return FiniteRing(std::move(labels), std::move(add), std::move(mul), zero, one);
}

void check_ring_axioms(const FiniteRing& ring, const LoadOptions& options) {
  const RingValidation v = validate_ring(ring, options.force_validation);
  if (!v.valid()) throw AxiomError("ring axiom " + violation_text(v.violations.front()));
}

RingPtr resolve_ring(const Json& ring_field, const LoadOptions& options, bool check_axioms) {
  if (ring_field.is_string()) {
    const std::filesystem::path ref = options.base_dir / ring_field.get<std::string>();
    const Document doc = load_document_file(ref, options);
    if (doc.kind != DocumentKind::Ring) throw SchemaError("ring", "referenced file is not a ring document");
    return ring_from_document(doc);
  }
  if (!ring_field.is_object()) throw SchemaError("ring", "expected an inline ring or a file reference");
  auto ring = std::make_shared<const FiniteRing>(parse_ring_body(ring_field));
  if (check_axioms) check_ring_axioms(*ring, options);
  return ring;
}

ModulePtr parse_module_body(const Json& body, const LoadOptions& options, bool check_ring) {
  RingPtr ring = resolve_ring(field(body, "ring"), options, check_ring);
  const std::size_t n = uint_field(body, "order");
  if (n == 0) throw SchemaError("order", "must be positive");
  ModuleDescription d;
  d.ring = ring;
  d.labels = labels_field(body, "labels", n);
  d.add = table_field(body, "add", n, n, n);
  d.act = table_field(body, "act", n, ring->order(), n);
  d.zero = index_field(body, "zero", n);
  return make_module_from_tables(std::move(d));
}

FiniteLattice parse_lattice_body(const Json& body) {
  const std::size_t n = uint_field(body, "size");
  if (n == 0) throw SchemaError("size", "must be positive");
  auto keys = labels_field(body, "keys", n);
  const auto leq_raw = table_field(body, "leq", n, n, 2);
  std::vector<char> leq(leq_raw.begin(), leq_raw.end());
  auto join = table_field(body, "join", n, n, n);
  auto meet = table_field(body, "meet", n, n, n);
  try {
    return FiniteLattice::from_tables(std::move(keys), std::move(leq), std::move(join), std::move(meet));
  } catch (const StructuralError& e) {
    throw AxiomError(std::string("lattice: ") + e.what());
  }
}

void check_report_body(const Json& body) {
  if (!field(body, "command").is_string()) throw SchemaError("command", "expected a string");
  field(body, "inputs");
  if (!field(body, "results").is_array()) throw SchemaError("results", "expected an array");
  if (!field(body, "timings").is_object()) throw SchemaError("timings", "expected an object");
}

DocumentKind kind_from_string(const std::string& s) {
  if (s == "ring") return DocumentKind::Ring;
  if (s == "module") return DocumentKind::Module;
  if (s == "lattice") return DocumentKind::Lattice;
  if (s == "report") return DocumentKind::Report;
  throw SchemaError("kind", "unknown document kind `" + s + "`");
}

void require_kind(const Document& doc, DocumentKind kind) {
  if (doc.kind != kind) {
    throw SchemaError("kind", "expected a " + std::string(to_string(kind)) + " document, got " +
                                  std::string(to_string(doc.kind)));
  }
}

Json optional_index(const std::optional<Index>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

std::string_view to_string(DocumentKind kind) {
  switch (kind) {
    case DocumentKind::Ring:
      return "ring";
    case DocumentKind::Module:
      return "module";
    case DocumentKind::Lattice:
      return "lattice";
    case DocumentKind::Report:
      return "report";
  }
  return "report";
}

std::string canonical_json(const Json& value) {
  std::string out;
  write_value(value, 0, out);
  out += '\n';
  return out;
}

std::string save_document(const Document& doc) {
  Json root = Json::object();
  root["kind"] = to_string(doc.kind);
  root["version"] = doc.version;
  root["body"] = doc.body;
  return canonical_json(root);
}

Document load_document(std::string_view text, const LoadOptions& options) {
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) throw ParseError("empty input");
  Json root;
  try {
    root = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("malformed document at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!root.is_object()) throw SchemaError("document", "expected a JSON object");
  const Json& kind = field(root, "kind");
  if (!kind.is_string()) throw SchemaError("kind", "expected a string");
  const Json& version = field(root, "version");
  if (!version.is_string()) throw SchemaError("version", "expected a string");
  if (version.get<std::string>() != kFormatVersion) {
    throw SchemaError("version", "unsupported format version `" + version.get<std::string>() + "`");
  }
  Document doc{kind_from_string(kind.get<std::string>()), version.get<std::string>(), field(root, "body")};
  if (!doc.body.is_object()) throw SchemaError("body", "expected an object");

  switch (doc.kind) {
    case DocumentKind::Ring:
      check_ring_axioms(parse_ring_body(doc.body), options);
      break;
    case DocumentKind::Module:
      parse_module_body(doc.body, options, true);
      break;
    case DocumentKind::Lattice:
      parse_lattice_body(doc.body);
      break;
    case DocumentKind::Report:
      check_report_body(doc.body);
      break;
  }
  return doc;
}

Document load_document_file(const std::filesystem::path& path, LoadOptions options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  if (options.base_dir.empty()) options.base_dir = path.parent_path();
  return load_document(buffer.str(), options);
}

Json ring_body(const FiniteRing& ring) {
  Json body = Json::object();
  body["order"] = ring.order();
  body["labels"] = ring.labels();
  body["add"] = rows(ring.add_table(), ring.order());
  body["mul"] = rows(ring.mul_table(), ring.order());
  body["zero"] = ring.zero();
  body["one"] = ring.one();
  return body;
}

Json module_body(const RightModule& m) {
  Json body = Json::object();
  body["ring"] = ring_body(m.ring());
  body["order"] = m.order();
  body["labels"] = m.labels();
  body["add"] = rows(m.add_table(), m.order());
  body["act"] = rows(m.act_table(), m.ring().order());
  body["zero"] = m.zero();
  return body;
}

Json lattice_body(const FiniteLattice& l) {
  Json body = Json::object();
  body["size"] = l.size();
  body["keys"] = l.keys();
  std::vector<int> leq(l.leq_matrix().begin(), l.leq_matrix().end());
  body["leq"] = rows(std::span<const int>(leq), l.size());
  body["join"] = rows(std::span<const Index>(l.join_table()), l.size());
  body["meet"] = rows(std::span<const Index>(l.meet_table()), l.size());
  return body;
}

Document ring_document(const FiniteRing& ring) { return Document{DocumentKind::Ring, std::string(kFormatVersion), ring_body(ring)}; }

RingPtr ring_from_document(const Document& doc) {
  require_kind(doc, DocumentKind::Ring);
  return std::make_shared<const FiniteRing>(parse_ring_body(doc.body));
}

Document module_document(const RightModule& module) {
  return Document{DocumentKind::Module, std::string(kFormatVersion), module_body(module)};
}

ModulePtr module_from_document(const Document& doc, const LoadOptions& options) {
  require_kind(doc, DocumentKind::Module);
  return parse_module_body(doc.body, options, false);
}

Document lattice_document(const FiniteLattice& lattice) {
  return Document{DocumentKind::Lattice, std::string(kFormatVersion), lattice_body(lattice)};
}

FiniteLattice lattice_from_document(const Document& doc) {
  require_kind(doc, DocumentKind::Lattice);
  return parse_lattice_body(doc.body);
}

Document report_document(std::string command, Json inputs, Json results, Json timings) {
  Json body = Json::object();
  body["command"] = std::move(command);
  body["inputs"] = std::move(inputs);
  body["results"] = std::move(results);
  body["timings"] = std::move(timings);
  return Document{DocumentKind::Report, std::string(kFormatVersion), std::move(body)};
}

Json to_json(const RingValidation& v) {
  Json out = Json::object();
  out["valid"] = v.valid();
  out["total_failures"] = v.total_failures;
  Json list = Json::array();
  for (const auto& viol : v.violations) list.push_back(Json{{"axiom", viol.axiom}, {"witness", viol.witness}});
  out["violations"] = std::move(list);
  return out;
}

Json to_json(const RegularityReport& r, const FiniteRing& ring) {
  Json out = Json::object();
  out["order"] = ring.order();
  out["regular"] = r.regular;
  out["strongly_regular"] = r.strongly_regular;
  out["counterexample"] = optional_index(r.counterexample);
  out["witnesses"] = r.witnesses;
  out["idempotents"] = idempotents(ring);
  return out;
}

Json to_json(const ModuleRegularityReport& r, const RightModule& m) {
  Json out = Json::object();
  out["order"] = m.order();
  out["regular"] = r.regular;
  out["counterexample"] = optional_index(r.counterexample);
  out["hom_count"] = r.hom_count;
  out["witness"] = r.witness;
  return out;
}

Json to_json(const RelativeRegularityReport& r) {
  Json out = Json::object();
  out["holds"] = r.holds;
  out["counterexample"] = r.counterexample ? Json(*r.counterexample) : Json(nullptr);
  out["hom_count_um"] = r.hom_count_um;
  out["hom_count_mu"] = r.hom_count_mu;
  Json w = Json::array();
  for (const auto& g : r.witnesses) w.push_back(g ? Json(*g) : Json(nullptr));
  out["witnesses"] = std::move(w);
  return out;
}

Json to_json(const SummandReport& r) {
  Json out = Json::object();
  out["passed"] = r.passed;
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json item = Json::object();
    item["submodule"] = e.submodule.elements();
    item["complement"] = e.complement ? Json(e.complement->elements()) : Json(nullptr);
    entries.push_back(std::move(item));
  }
  out["entries"] = std::move(entries);
  return out;
}

Json to_json(const PreimageReport& r) {
  Json out = Json::object();
  out["passed"] = r.passed;
  out["note"] = r.note;
  out["hom_count"] = r.hom_count;
  out["submodule_count"] = r.submodule_count;
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json item = Json::object();
    item["hom"] = e.hom;
    item["submodule"] = e.submodule;
    item["preimage"] = e.preimage;
    item["is_submodule"] = e.is_submodule;
    item["complement"] = e.complement ? Json(*e.complement) : Json(nullptr);
    item["equals_kernel"] = e.equals_kernel;
    entries.push_back(std::move(item));
  }
  out["entries"] = std::move(entries);
  return out;
}

Json to_json(const LatticeProperties& p) {
  return Json{{"modular", p.modular}, {"complemented", p.complemented}, {"distributive", p.distributive}};
}

Json to_json(const LatticeMap& map) {
  Json out = Json::object();
  Json pairs = Json::array();
  for (std::size_t i = 0; i < map.image.size(); ++i) {
    pairs.push_back(Json::array({map.source ? Json(map.source->key(static_cast<Index>(i))) : Json(i),
                                 map.target ? Json(map.target->key(map.image[i])) : Json(map.image[i])}));
  }
  out["image"] = map.image;
  out["pairs"] = std::move(pairs);
  return out;
}

Json to_json(const MapVerification& v) {
  Json out = Json::object();
  out["passed"] = v.passed();
  Json items = Json::array();
  for (const auto& c : v.items) items.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  out["items"] = std::move(items);
  return out;
}

Json to_json(const CoordinatizationReport& r) {
  Json out = Json::object();
  out["module_regular"] = r.module_regular;
  out["s_regular"] = r.s_regular;
  out["end_ring_order"] = r.end_ring_order;
  out["idempotent_count"] = r.idempotent_count;
  out["module_lattice_size"] = r.module_lattice_size;
  out["ideal_lattice_size"] = r.ideal_lattice_size;
  out["phi_map"] = to_json(r.phi_map);
  out["psi_map"] = to_json(r.psi_map);
  out["phi_verification"] = to_json(r.phi_verification);
  out["mutually_inverse"] = r.mutually_inverse;
  out["phi_monotone"] = r.phi_monotone;
  out["psi_monotone"] = r.psi_monotone;
  out["phi_on_idempotents"] = r.phi_on_idempotents;
  out["psi_is_idempotent_ideal"] = r.psi_is_idempotent_ideal;
  out["iso_cross_check"] = r.iso_cross_check;
  out["lattice_props"] = to_json(r.lattice_props);
  out["strongly_regular"] = r.strongly_regular;
  out["distributivity_criterion"] = r.distributivity_criterion;
  out["coordinatizable"] = r.coordinatizable;
  out["failures"] = r.failures;
  return out;
}

Json to_json(const DistributivityReport& r) {
  Json out = Json::object();
  out["distributive"] = r.distributive;
  out["strongly_regular"] = r.strongly_regular;
  out["biconditional_holds"] = r.biconditional_holds;
  if (r.counterexample) {
    Json triple = Json::array();
    for (const auto& s : *r.counterexample) triple.push_back(s.elements());
    out["counterexample"] = std::move(triple);
  } else {
    out["counterexample"] = nullptr;
  }
  out["non_strong_element"] = optional_index(r.non_strong_element);
  return out;
}

}  // namespace coordlat
