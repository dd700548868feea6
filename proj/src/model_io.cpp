#include "rxch/model_io.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace rxch {

namespace {

using nlohmann::json;

json number_node(double v) {
  // Integral rates render as integers (canonical shortest form).
  if (std::floor(v) == v && std::abs(v) < 9.007199254740992e15)
    return json(static_cast<std::int64_t>(v));
  return json(v);
}

void expect_keys(const json& obj, const std::string& where,
                 const std::vector<std::string>& required,
                 const std::vector<std::string>& optional = {}) {
  for (const auto& [key, unused] : obj.items()) {
    bool known = false;
    for (const auto& k : required) known |= (k == key);
    for (const auto& k : optional) known |= (k == key);
    if (!known) throw ParseError("unknown_field", where + "." + key,
                                 "unknown field '" + key + "' in " + where);
  }
  for (const auto& k : required)
    if (!obj.contains(k))
      throw ParseError("missing_field", where + "." + k,
                       "missing field '" + k + "' in " + where);
}

double as_number(const json& j, const std::string& field) {
  if (!j.is_number())
    throw ParseError("bad_type", field, "field '" + field + "' must be a number");
  return j.get<double>();
}

int as_int(const json& j, const std::string& field) {
  if (!j.is_number_integer())
    throw ParseError("bad_type", field, "field '" + field + "' must be an integer");
  return j.get<int>();
}

}  // namespace

ReceptorModel parse_model(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("syntax_error", "", e.what());
  }
  if (!doc.is_object())
    throw ParseError("bad_type", "", "model document must be a JSON object");
  expect_keys(doc, "model", {"states", "edges", "input_range"},
              {"schema_version", "lump"});

  if (doc.contains("schema_version") &&
      (!doc["schema_version"].is_number_integer() || doc["schema_version"] != 1))
    throw ParseError("bad_schema_version", "schema_version",
                     "schema_version must be 1");

  ReceptorModel m;
  if (!doc["states"].is_array())
    throw ParseError("bad_type", "states", "'states' must be an array");
  for (const auto& s : doc["states"]) {
    if (!s.is_object()) throw ParseError("bad_type", "states", "state must be an object");
    expect_keys(s, "state", {"id", "property"});
    if (!s["property"].is_string())
      throw ParseError("bad_type", "states.property", "'property' must be a string");
    m.states.push_back({as_int(s["id"], "states.id"), s["property"].get<std::string>()});
  }

  if (!doc["edges"].is_array())
    throw ParseError("bad_type", "edges", "'edges' must be an array");
  for (const auto& e : doc["edges"]) {
    if (!e.is_object()) throw ParseError("bad_type", "edges", "edge must be an object");
    expect_keys(e, "edge", {"from", "to", "rate", "sensitive"});
    if (!e["sensitive"].is_boolean())
      throw ParseError("bad_type", "edges.sensitive", "'sensitive' must be a boolean");
    m.edges.push_back({as_int(e["from"], "edges.from"), as_int(e["to"], "edges.to"),
                       as_number(e["rate"], "edges.rate"), e["sensitive"].get<bool>()});
  }

  if (!doc["input_range"].is_array() || doc["input_range"].size() != 2)
    throw ParseError("bad_type", "input_range", "'input_range' must be [min, max]");
  m.x_min = as_number(doc["input_range"][0], "input_range[0]");
  m.x_max = as_number(doc["input_range"][1], "input_range[1]");

  if (doc.contains("lump")) {
    if (!doc["lump"].is_object())
      throw ParseError("bad_type", "lump", "'lump' must be an object");
    for (const auto& [key, value] : doc["lump"].items()) {
      if (!value.is_string())
        throw ParseError("bad_type", "lump", "lump tags must be strings");
      try {
        m.lump[std::stoi(key)] = value.get<std::string>();
      } catch (const std::exception&) {
        throw ParseError("bad_type", "lump", "lump keys must be state ids");
      }
    }
  }

  m.normalize();
  const ValidationReport report = validate(m);
  if (!report.valid()) {
    const ValidationIssue& first = report.errors.front();
    throw ParseError(first.code, "", first.detail);
  }
  return m;
}

std::string serialize_model(const ReceptorModel& model) {
  ReceptorModel m = model;
  m.normalize();
  json doc;  // nlohmann object keys are kept sorted
  doc["schema_version"] = 1;
  doc["states"] = json::array();
  for (const StateInfo& s : m.states)
    doc["states"].push_back({{"id", s.id}, {"property", s.property}});
  doc["edges"] = json::array();
  for (const Edge& e : m.edges)
    doc["edges"].push_back({{"from", e.from},
                            {"rate", number_node(e.base_rate)},
                            {"sensitive", e.sensitive},
                            {"to", e.to}});
  doc["input_range"] = {number_node(m.x_min), number_node(m.x_max)};
  if (!m.lump.empty()) {
    json lump = json::object();
    for (const auto& [id, tag] : m.lump) lump[std::to_string(id)] = tag;
    doc["lump"] = lump;
  }
  return doc.dump(2) + "\n";
}

ReceptorModel load_model(const std::string& name_or_path) {
  if (name_or_path == "chr2" || name_or_path == "ach" || name_or_path == "cam")
    return builtin(name_or_path);
  std::ifstream in(name_or_path);
  if (!in) throw ParseError("io_error", "", "cannot open model file " + name_or_path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_model(buf.str());
}

}  // namespace rxch
