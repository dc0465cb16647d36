#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "boxhelly/clustering.hpp"
#include "boxhelly/piercing.hpp"

namespace boxhelly {

inline constexpr const char* kVersion = "0.1.0";

using Json = nlohmann::ordered_json;

// One file format for everything the CLI reads and writes. Rationals travel
// as "p/q" strings; canonical serialization round-trips byte-identically.
struct InstanceDocument {
  enum class Kind { family, color_system, cluster_instance };
  Kind kind = Kind::family;
  std::size_t dim = 0;
  std::optional<Family> family;
  std::optional<ColorSystem> system;
  std::optional<ClusterInstance> cluster;
  std::map<std::string, std::string> meta;

  static InstanceDocument of(Family f, std::map<std::string, std::string> meta = {}) {
    InstanceDocument doc;
    doc.kind = Kind::family;
    doc.dim = f.dim;
    doc.family = std::move(f);
    doc.meta = std::move(meta);
    return doc;
  }
  static InstanceDocument of(ColorSystem c, std::map<std::string, std::string> meta = {}) {
    InstanceDocument doc;
    doc.kind = Kind::color_system;
    doc.dim = c.dim;
    doc.system = std::move(c);
    doc.meta = std::move(meta);
    return doc;
  }
  static InstanceDocument of(ClusterInstance inst,
                             std::map<std::string, std::string> meta = {}) {
    InstanceDocument doc;
    doc.kind = Kind::cluster_instance;
    doc.dim = inst.dim();
    doc.cluster = std::move(inst);
    doc.meta = std::move(meta);
    return doc;
  }
  friend bool operator==(const InstanceDocument&, const InstanceDocument&) = default;
};

inline Json to_json(const Point& p) {
  Json arr = Json::array();
  for (const Rational& c : p.coords) arr.push_back(rat_to_string(c));
  return arr;
}

inline Json to_json(const std::vector<Point>& pts) {
  Json arr = Json::array();
  for (const Point& p : pts) arr.push_back(to_json(p));
  return arr;
}

inline Json to_json(const AxisBox& b) {
  Json arr = Json::array();
  for (const Interval& s : b.sides)
    arr.push_back(Json::array({rat_to_string(s.lo), rat_to_string(s.hi)}));
  return arr;
}

namespace detail {

inline Json boxes_json(const std::vector<AxisBox>& boxes) {
  Json arr = Json::array();
  for (const AxisBox& b : boxes) arr.push_back(to_json(b));
  return arr;
}

inline Rational parse_rat_at(const Json& j, const std::string& where) {
  if (!j.is_string())
    throw parse_error(where + ": rationals must be \"p/q\" or decimal strings");
  return parse_rational(j.get<std::string>());
}

inline AxisBox parse_box(const Json& j, std::size_t dim, const std::string& where) {
  if (!j.is_array() || j.size() != dim)
    throw parse_error(where + ": expected " + std::to_string(dim) + " sides");
  std::vector<Interval> sides;
  for (std::size_t a = 0; a < dim; ++a) {
    const Json& side = j[a];
    std::string at = where + ", axis " + std::to_string(a + 1);
    if (!side.is_array() || side.size() != 2)
      throw parse_error(at + ": expected [lo, hi]");
    Rational lo = parse_rat_at(side[0], at);
    Rational hi = parse_rat_at(side[1], at);
    if (lo > hi) throw parse_error(at + ": lo > hi");
    sides.push_back(Interval(std::move(lo), std::move(hi)));
  }
  return AxisBox(std::move(sides));
}

inline Point parse_point(const Json& j, std::size_t dim, const std::string& where) {
  if (!j.is_array() || j.size() != dim)
    throw parse_error(where + ": expected " + std::to_string(dim) + " coordinates");
  std::vector<Rational> coords;
  for (std::size_t a = 0; a < dim; ++a) coords.push_back(parse_rat_at(j[a], where));
  return Point(std::move(coords));
}

}  // namespace detail

inline Json document_to_json(const InstanceDocument& doc) {
  Json j;
  switch (doc.kind) {
    case InstanceDocument::Kind::family:
      j["kind"] = "family";
      j["dim"] = doc.dim;
      j["boxes"] = detail::boxes_json(doc.family->boxes);
      break;
    case InstanceDocument::Kind::color_system: {
      j["kind"] = "color-system";
      j["dim"] = doc.dim;
      Json classes = Json::array();
      for (const Family& cls : doc.system->classes)
        classes.push_back(detail::boxes_json(cls.boxes));
      j["classes"] = std::move(classes);
      break;
    }
    case InstanceDocument::Kind::cluster_instance: {
      const ClusterInstance& inst = *doc.cluster;
      j["kind"] = "cluster-instance";
      j["dim"] = doc.dim;
      j["points"] = to_json(inst.points);
      Json extents = Json::array();
      for (const Rational& e : inst.base.extents) extents.push_back(rat_to_string(e));
      j["extents"] = std::move(extents);
      j["n"] = inst.n;
      j["epsilon"] = rat_to_string(inst.epsilon);
      j["delta"] = rat_to_string(inst.delta);
      if (inst.gamma) j["gamma"] = rat_to_string(*inst.gamma);
      break;
    }
  }
  Json meta = Json::object();
  for (const auto& [k, v] : doc.meta) meta[k] = v;
  j["meta"] = std::move(meta);
  return j;
}

inline std::string serialize_document(const InstanceDocument& doc) {
  return document_to_json(doc).dump(2) + "\n";
}

inline InstanceDocument parse_document(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error(std::string("document is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw parse_error("document must be a JSON object");
  if (!j.contains("kind") || !j["kind"].is_string())
    throw parse_error("document needs a string \"kind\"");
  if (!j.contains("dim") || !j["dim"].is_number_unsigned() || j["dim"] == 0)
    throw parse_error("document needs a positive integer \"dim\"");
  const std::string kind = j["kind"].get<std::string>();
  const std::size_t dim = j["dim"].get<std::size_t>();

  InstanceDocument doc;
  doc.dim = dim;
  try {
    if (kind == "family") {
      doc.kind = InstanceDocument::Kind::family;
      if (!j.contains("boxes") || !j["boxes"].is_array())
        throw parse_error("family document needs a \"boxes\" array");
      std::vector<AxisBox> boxes;
      for (std::size_t i = 0; i < j["boxes"].size(); ++i)
        boxes.push_back(detail::parse_box(j["boxes"][i], dim,
                                          "box " + std::to_string(i + 1)));
      doc.family = Family(dim, std::move(boxes));
    } else if (kind == "color-system") {
      doc.kind = InstanceDocument::Kind::color_system;
      if (!j.contains("classes") || !j["classes"].is_array() || j["classes"].empty())
        throw parse_error("color-system document needs a non-empty \"classes\" array");
      std::vector<Family> classes;
      for (std::size_t c = 0; c < j["classes"].size(); ++c) {
        const Json& cls = j["classes"][c];
        std::string where = "class " + std::to_string(c + 1);
        if (!cls.is_array() || cls.empty())
          throw parse_error(where + ": classes must be non-empty box arrays");
        std::vector<AxisBox> boxes;
        for (std::size_t i = 0; i < cls.size(); ++i)
          boxes.push_back(
              detail::parse_box(cls[i], dim, where + ", box " + std::to_string(i + 1)));
        classes.push_back(Family(dim, std::move(boxes)));
      }
      doc.system = ColorSystem(dim, std::move(classes));
    } else if (kind == "cluster-instance") {
      doc.kind = InstanceDocument::Kind::cluster_instance;
      for (const char* field : {"points", "extents", "n", "epsilon", "delta"})
        if (!j.contains(field))
          throw parse_error(std::string("cluster-instance document needs \"") + field +
                            "\"");
      std::vector<Point> points;
      for (std::size_t i = 0; i < j["points"].size(); ++i)
        points.push_back(
            detail::parse_point(j["points"][i], dim, "point " + std::to_string(i + 1)));
      if (!j["extents"].is_array() || j["extents"].size() != dim)
        throw parse_error("\"extents\" must list one side length per axis");
      std::vector<Rational> extents;
      for (std::size_t a = 0; a < dim; ++a)
        extents.push_back(detail::parse_rat_at(j["extents"][a], "extents"));
      if (!j["n"].is_number_unsigned())
        throw parse_error("\"n\" must be a positive integer");
      std::optional<Rational> gamma;
      if (j.contains("gamma")) gamma = detail::parse_rat_at(j["gamma"], "gamma");
      doc.cluster = ClusterInstance(
          std::move(points), BaseBox(std::move(extents)), j["n"].get<std::size_t>(),
          detail::parse_rat_at(j["epsilon"], "epsilon"),
          detail::parse_rat_at(j["delta"], "delta"), std::move(gamma));
    } else {
      throw parse_error("unknown document kind '" + kind + "'");
    }
  } catch (const std::invalid_argument& e) {
    throw parse_error(std::string("invalid document: ") + e.what());
  }
  if (j.contains("meta")) {
    if (!j["meta"].is_object()) throw parse_error("\"meta\" must be an object");
    for (const auto& [k, v] : j["meta"].items()) {
      if (!v.is_string()) throw parse_error("meta values must be strings");
      doc.meta.emplace(k, v.get<std::string>());
    }
  }
  return doc;
}

}  // namespace boxhelly
