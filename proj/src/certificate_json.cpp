#include "lrw1/certificate_json.hpp"

#include <map>

#include "lrw1/error.hpp"

namespace lrw1 {

using nlohmann::json;

namespace {

json labels_of(const Graph& g, const std::vector<Vertex>& vs) {
  json out = json::array();
  for (Vertex v : vs) out.push_back(g.label(v));
  return out;
}

std::vector<Vertex> ids_of(const Graph& g, const json& labels) {
  std::map<int, Vertex> id;
  for (Vertex v = 0; v < g.order(); ++v) id[g.label(v)] = v;
  if (!labels.is_array()) throw Error(ErrorCode::Parse, "expected an array of vertex labels");
  std::vector<Vertex> out;
  for (const auto& x : labels) {
    if (!x.is_number_integer()) throw Error(ErrorCode::Parse, "vertex label is not an integer");
    auto it = id.find(x.get<int>());
    if (it == id.end()) throw Error(ErrorCode::Parse, "unknown vertex label " + x.dump());
    out.push_back(it->second);
  }
  return out;
}

ObstructionFamily family_from(const std::string& name) {
  for (auto f : {ObstructionFamily::House, ObstructionFamily::Gem, ObstructionFamily::Domino, ObstructionFamily::Hole,
                 ObstructionFamily::DhStar3}) {
    if (to_string(f) == name) return f;
  }
  throw Error(ErrorCode::Parse, "unknown obstruction family '" + name + "'");
}

}  // namespace

json to_json(const Graph& g, const Certificate& c) {
  if (const auto* o = std::get_if<OrderingCertificate>(&c)) {
    return {{"status", "lrw_le_1"}, {"ordering", labels_of(g, o->order)}};
  }
  const auto& o = std::get<ObstructionCertificate>(c);
  json obstruction = {{"vertices", labels_of(g, o.vertices)}, {"family", std::string(to_string(o.family))}};
  if (o.catalog_index) obstruction["catalog_index"] = *o.catalog_index;
  return {{"status", "lrw_ge_2"}, {"obstruction", obstruction}};
}

Certificate certificate_from_json(const Graph& g, const json& j) {
  try {
    const std::string status = j.at("status").get<std::string>();
    if (status == "lrw_le_1") return OrderingCertificate{ids_of(g, j.at("ordering"))};
    if (status != "lrw_ge_2") throw Error(ErrorCode::Parse, "unknown status '" + status + "'");
    const json& o = j.at("obstruction");
    ObstructionCertificate cert;
    cert.vertices = make_vertex_set(ids_of(g, o.at("vertices")));
    cert.family = family_from(o.at("family").get<std::string>());
    if (cert.family == ObstructionFamily::Hole) cert.hole_length = static_cast<int>(cert.vertices.size());
    if (o.contains("catalog_index")) cert.catalog_index = o.at("catalog_index").get<int>();
    return cert;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
}

}  // namespace lrw1
