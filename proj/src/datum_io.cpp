#include "bozec/datum_io.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>

namespace bozec {

using nlohmann::json;

static DatumFile from_json(const json& j) {
  if (!j.is_object()) throw DatumError("datum file must be a JSON object");
  if (!j.contains("indices") || !j["indices"].is_array() || j["indices"].empty())
    throw DatumError("datum file needs a nonempty 'indices' array");
  if (!j.contains("cartan") || !j["cartan"].is_array())
    throw DatumError("datum file needs a 'cartan' matrix");

  std::vector<IndexInfo> idx;
  for (const auto& e : j["indices"]) {
    if (!e.is_object()) throw DatumError("each index entry must be an object");
    IndexInfo info;
    if (e.contains("name")) {
      if (!e["name"].is_string()) throw DatumError("index 'name' must be a string");
      info.name = e["name"].get<std::string>();
    } else {
      info.name = std::to_string(idx.size());
    }
    if (!e.contains("parity") || !e["parity"].is_number_integer())
      throw DatumError("index '" + info.name + "' needs an integer 'parity'");
    info.parity = e["parity"].get<int>();
    if (!e.contains("d") || !e["d"].is_number_integer())
      throw DatumError("index '" + info.name + "' needs an integer 'd'");
    info.d = e["d"].get<long>();
    if (e.contains("bozec_bound")) {
      if (!e["bozec_bound"].is_number_integer())
        throw DatumError("index '" + info.name + "' has a non-integer 'bozec_bound'");
      info.bozec_bound = e["bozec_bound"].get<long>();
    }
    idx.push_back(std::move(info));
  }

  std::vector<std::vector<long>> a;
  for (const auto& row : j["cartan"]) {
    if (!row.is_array()) throw DatumError("'cartan' must be a matrix (array of arrays)");
    std::vector<long> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw DatumError("'cartan' entries must be integers");
      r.push_back(v.get<long>());
    }
    a.push_back(std::move(r));
  }

  DatumFile f{CartanDatum(std::move(idx), std::move(a)), std::nullopt};
  auto rep = f.datum.validate();
  if (!rep.ok) {
    std::string msg = "invalid datum";
    for (const auto& e : rep.errors) msg += "\n  " + e;
    throw DatumError(msg);
  }

  if (j.contains("anchor_weight")) {
    if (!j["anchor_weight"].is_array())
      throw DatumError("'anchor_weight' must be an array of coroot values");
    std::vector<long> w;
    for (const auto& v : j["anchor_weight"]) {
      if (!v.is_number_integer()) throw DatumError("'anchor_weight' entries must be integers");
      w.push_back(v.get<long>());
    }
    if (w.size() != f.datum.n())
      throw DatumError("'anchor_weight' length does not match the index count");
    f.anchor_weight = std::move(w);
  }
  return f;
}

DatumFile parse_datum_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DatumError(std::string("malformed JSON: ") + e.what());
  }
  return from_json(j);
}

DatumFile load_datum_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DatumError("cannot open datum file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_datum_json(buf.str());
}

} // namespace bozec
