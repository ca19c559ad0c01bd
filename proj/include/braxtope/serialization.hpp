#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "braxtope/face_lattice.hpp"
#include "braxtope/families.hpp"
#include "braxtope/geometry.hpp"
#include "braxtope/report.hpp"
#include "braxtope/triangulation.hpp"
#include "json.hpp"

namespace braxtope {

using json = nlohmann::ordered_json;

/// Malformed or inconsistent interchange documents.
class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline json to_json(const VertexSet& s) { return json(s.members()); }

inline json to_json(const FVector& f) { return json(f.values); }
inline json to_json(const HVector& h) { return json(h.values); }

/// Keys are the dimension sets joined by commas; "" is the empty flag.
inline json to_json(const FlagVector& fv) {
  json out = json::object();
  for (const auto& [k, v] : fv.entries) out[FlagVector::key_string(k)] = v;
  return out;
}

inline json to_json(const FaceLattice& lat) {
  json faces = json::array();
  std::vector<VertexSet> ordered;
  for (int k = -1; k <= lat.dim(); ++k) {
    for (const auto& f : lat.faces_of_dim(k)) {
      ordered.push_back(f);
      faces.push_back({{"vertices", to_json(f)}, {"dim", k}});
    }
  }
  json hasse = json::array();
  for (const auto& [lo, hi] : lat.hasse_edges()) {
    const auto a = std::find(ordered.begin(), ordered.end(), lo) - ordered.begin();
    const auto b = std::find(ordered.begin(), ordered.end(), hi) - ordered.begin();
    hasse.push_back({a, b});
  }
  std::sort(hasse.begin(), hasse.end());
  return {{"vertices", to_json(lat.vertices())}, {"dim", lat.dim()}, {"faces", faces}, {"hasse", hasse}};
}

inline json to_json(const Realization& real) {
  json pts = json::array();
  for (const auto& p : real.points) {
    json row = json::array();
    for (const auto& c : p.coords) row.push_back(to_string(c));
    pts.push_back(row);
  }
  return {{"d", real.d}, {"points", pts}};
}

inline json rational_rows(const Realization& real) { return to_json(real)["points"]; }

inline Realization realization_from_rows(const json& rows, int d) {
  if (!rows.is_array()) throw DocumentError("vertices must be an array of coordinate lists");
  Realization real{d, {}};
  for (const auto& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != d) {
      throw DocumentError("each vertex needs exactly d = " + std::to_string(d) + " coordinates");
    }
    RationalPoint p;
    for (const auto& c : row) {
      if (!c.is_string()) throw DocumentError("coordinates must be \"p/q\" strings");
      try {
        p.coords.push_back(parse_rational(c.get<std::string>()));
      } catch (const std::invalid_argument& e) {
        throw DocumentError(e.what());
      }
    }
    real.points.push_back(std::move(p));
  }
  return real;
}

inline json to_json(const CheckReport& rep) {
  json w = json::array();
  for (const auto& wit : rep.witnesses) {
    json sets = json::array();
    for (const auto& s : wit.sets) sets.push_back(to_json(s));
    w.push_back({{"what", wit.what}, {"sets", sets}});
  }
  json out = {{"check", rep.name}, {"d", rep.d}, {"n", rep.n}};
  out["r"] = rep.r ? json(*rep.r) : json(nullptr);
  out["verdict"] = to_string(rep.verdict);
  out["witnesses"] = w;
  out["notes"] = rep.notes;
  return out;
}

inline json to_json(const std::vector<CheckReport>& reports) {
  json arr = json::array();
  bool ok = true;
  for (const auto& r : reports) {
    arr.push_back(to_json(r));
    ok = ok && r.ok();
  }
  return {{"passed", ok}, {"reports", arr}};
}

inline json to_json(const ShellingCertificate& cert) {
  json steps = json::array();
  for (const auto& s : cert.steps) {
    json mins = json::array();
    for (const auto& m : s.minimal_new_faces) mins.push_back(to_json(m));
    steps.push_back({{"facet", to_json(s.facet)}, {"minimal_new_faces", mins}, {"valid", s.valid}});
  }
  json out = {{"valid", cert.valid}, {"steps", steps}};
  out["failed_step"] = cert.failed_step ? json(*cert.failed_step) : json(nullptr);
  return out;
}

inline json to_json(const ColexShellingReport& rep) {
  json steps = json::array();
  for (const auto& s : rep.steps) {
    json mins = json::array();
    for (const auto& m : s.minimal_new_faces) mins.push_back(to_json(m));
    steps.push_back({{"facet", to_json(s.facet)},
                     {"minimal_new_faces", mins},
                     {"unique_minimal", s.unique_minimal},
                     {"minimal_is_simplex", s.minimal_is_simplex},
                     {"quotient_is_simplex", s.quotient_is_simplex}});
  }
  json out = {{"valid", rep.ok}, {"steps", steps}};
  out["failed_step"] = rep.failed_step ? json(*rep.failed_step) : json(nullptr);
  out["failed_property"] = rep.failed_property;
  return out;
}

/// Interchange document for a (candidate) polytope.
struct PolytopeDocument {
  std::string kind = "custom";
  std::optional<int> r;
  int d = 0;
  int n = 0;
  FacetFamily family;
  std::optional<Realization> vertices;
  std::optional<json> invariants;
};

inline const std::set<std::string>& document_kinds() {
  static const std::set<std::string> kinds{"braxtope", "multiplex", "cyclic", "rd-braxtope", "custom"};
  return kinds;
}

inline json to_json(const PolytopeDocument& doc) {
  json params = {{"d", doc.d}, {"n", doc.n}};
  params["r"] = doc.r ? json(*doc.r) : json(nullptr);
  json facets = json::array();
  json labels = json::array();
  bool any_label = false;
  for (const auto& [f, names] : doc.family.entries()) {
    facets.push_back(to_json(f));
    labels.push_back(names);
    any_label = any_label || !names.empty();
  }
  json out = {{"kind", doc.kind}, {"parameters", params}, {"facets", facets}};
  if (any_label) out["labels"] = labels;
  if (doc.vertices) out["vertices"] = rational_rows(*doc.vertices);
  if (doc.invariants) out["invariants"] = *doc.invariants;
  return out;
}

/// Validates structure, index ranges, family invariants and, when vertices
/// are present, that they realize the facets exactly.
inline PolytopeDocument document_from_json(const json& j) {
  if (!j.is_object()) throw DocumentError("document must be a JSON object");
  PolytopeDocument doc;
  try {
    doc.kind = j.value("kind", std::string("custom"));
    if (!document_kinds().count(doc.kind)) throw DocumentError("unknown kind '" + doc.kind + "'");
    if (!j.contains("parameters") || !j["parameters"].is_object()) throw DocumentError("missing parameters object");
    const auto& p = j["parameters"];
    if (!p.contains("d") || !p["d"].is_number_integer() || !p.contains("n") || !p["n"].is_number_integer()) {
      throw DocumentError("parameters need integer d and n");
    }
    doc.d = p["d"].get<int>();
    doc.n = p["n"].get<int>();
    if (p.contains("r") && !p["r"].is_null()) {
      if (!p["r"].is_number_integer()) throw DocumentError("parameter r must be an integer");
      doc.r = p["r"].get<int>();
    }
    if (doc.d < 0 || doc.n < 0 || doc.n >= kMaxVertices) throw DocumentError("parameters out of range");
    if (!j.contains("facets") || !j["facets"].is_array()) throw DocumentError("missing facets array");
    doc.family = FacetFamily(doc.d, doc.n);
    const auto& facets = j["facets"];
    const json* labels = j.contains("labels") && j["labels"].is_array() ? &j["labels"] : nullptr;
    for (std::size_t i = 0; i < facets.size(); ++i) {
      const auto& f = facets[i];
      if (!f.is_array()) throw DocumentError("each facet must be a list of vertex indices");
      std::vector<VertexId> ids;
      for (const auto& v : f) {
        if (!v.is_number_integer()) throw DocumentError("vertex indices must be integers");
        const int id = v.get<int>();
        if (id < 0 || id > doc.n) throw DocumentError("vertex index " + std::to_string(id) + " outside 0..n");
        ids.push_back(id);
      }
      const VertexSet set(std::move(ids));
      if (doc.family.contains(set)) throw DocumentError("duplicate facet " + set.str());
      doc.family.add(set);
      if (labels && i < labels->size() && (*labels)[i].is_array()) {
        for (const auto& name : (*labels)[i]) {
          if (name.is_string()) doc.family.add(set, name.get<std::string>());
        }
      }
    }
    doc.family.validate();
    if (j.contains("vertices") && !j["vertices"].is_null()) {
      auto real = realization_from_rows(j["vertices"], doc.d);
      if (real.n() != doc.n) throw DocumentError("vertex count must be n+1");
      try {
        if (!hull_facets(real).same_facets(doc.family)) throw DocumentError("vertices do not realize the facets");
      } catch (const GeometryError& e) {
        throw DocumentError(std::string("vertices rejected: ") + e.what());
      }
      doc.vertices = std::move(real);
    }
    if (j.contains("invariants")) doc.invariants = j["invariants"];
  } catch (const json::exception& e) {
    throw DocumentError(std::string("malformed document: ") + e.what());
  } catch (const InvalidFamily& e) {
    throw DocumentError(std::string("invalid facet family: ") + e.what());
  }
  return doc;
}

inline PolytopeDocument parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DocumentError(std::string("malformed JSON: ") + e.what());
  }
  return document_from_json(j);
}

}  // namespace braxtope
