#include <json.hpp>

#include "pbrp/io.hpp"

namespace pbrp {

namespace {

using Json = nlohmann::ordered_json;

std::string subset_key(std::uint32_t mask) {
  std::string key;
  for (int j = 0; mask; ++j, mask >>= 1) {
    if (mask & 1) {
      if (!key.empty()) key += ",";
      key += std::to_string(j);
    }
  }
  return key;
}

Json valuation_to_json(const Valuation& v) {
  Json out;
  if (const auto* add = std::get_if<AdditiveValuation>(&v)) {
    out["type"] = "additive";
    Json values = Json::array();
    for (const auto& x : add->values) values.push_back(format_rational(x));
    out["values"] = std::move(values);
  } else if (const auto* sm = std::get_if<SingleMindedValuation>(&v)) {
    out["type"] = "single_minded";
    out["demand"] = sm->demand;
    out["value"] = format_rational(sm->value);
  } else if (const auto* sym = std::get_if<SymmetricValuation>(&v)) {
    out["type"] = "symmetric";
    Json values = Json::array();
    for (const auto& x : sym->by_count) values.push_back(format_rational(x));
    out["by_count"] = std::move(values);
  } else {
    const auto& tab = std::get<TableValuation>(v);
    out["type"] = "table";
    Json entries = Json::object();
    for (std::uint32_t mask = 0; mask < tab.entries.size(); ++mask) {
      entries[subset_key(mask)] = format_rational(tab.entries[mask]);
    }
    out["entries"] = std::move(entries);
  }
  return out;
}

const Json& field(const Json& j, const std::string& name, const std::string& path) {
  const auto it = j.find(name);
  if (it == j.end()) {
    throw Error(ErrorCode::SchemaError, path + "." + name);
  }
  return *it;
}

Rational rational_field(const Json& j, const std::string& name, const std::string& path) {
  const Json& value = field(j, name, path);
  if (!value.is_string()) {
    throw Error(ErrorCode::SchemaError, path + "." + name + " must be a \"p/q\" string");
  }
  try {
    return parse_rational(value.get<std::string>());
  } catch (const Error&) {
    throw Error(ErrorCode::SchemaError, path + "." + name + " is not a valid rational");
  }
}

std::vector<Rational> rational_array(const Json& j, const std::string& path) {
  if (!j.is_array()) {
    throw Error(ErrorCode::SchemaError, path + " must be an array");
  }
  std::vector<Rational> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& entry = j[i];
    if (!entry.is_string()) {
      throw Error(ErrorCode::SchemaError, path + "[" + std::to_string(i) + "]");
    }
    try {
      out.push_back(parse_rational(entry.get<std::string>()));
    } catch (const Error&) {
      throw Error(ErrorCode::SchemaError, path + "[" + std::to_string(i) + "]");
    }
  }
  return out;
}

std::uint32_t parse_subset_key(const std::string& key, int m, const std::string& path) {
  std::uint32_t mask = 0;
  std::size_t pos = 0;
  while (pos < key.size()) {
    std::size_t end = key.find(',', pos);
    if (end == std::string::npos) end = key.size();
    const std::string token = key.substr(pos, end - pos);
    try {
      const int j = std::stoi(token);
      if (j < 0 || j >= m || (mask & (1u << j))) {
        throw Error(ErrorCode::SchemaError, path);
      }
      mask |= 1u << j;
    } catch (const std::exception&) {
      throw Error(ErrorCode::SchemaError, path + " has bad subset key '" + key + "'");
    }
    pos = end + 1;
  }
  return mask;
}

Valuation valuation_from_json(const Json& j, int m, const std::string& path) {
  if (!j.is_object()) {
    throw Error(ErrorCode::SchemaError, path);
  }
  const Json& type = field(j, "type", path);
  if (type == "additive") {
    return AdditiveValuation{rational_array(field(j, "values", path), path + ".values")};
  }
  if (type == "single_minded") {
    const Json& demand = field(j, "demand", path);
    if (!demand.is_array()) {
      throw Error(ErrorCode::SchemaError, path + ".demand must be an array");
    }
    SingleMindedValuation out;
    for (const auto& entry : demand) {
      if (!entry.is_number_integer()) {
        throw Error(ErrorCode::SchemaError, path + ".demand");
      }
      out.demand.push_back(entry.get<int>());
    }
    out.demand = canonical_set(std::move(out.demand));
    out.value = rational_field(j, "value", path);
    return out;
  }
  if (type == "symmetric") {
    return SymmetricValuation{rational_array(field(j, "by_count", path), path + ".by_count")};
  }
  if (type == "table") {
    if (m > kMaxTableProjects) {
      throw Error(ErrorCode::SchemaError, path + " table limited to 20 projects");
    }
    const Json& entries = field(j, "entries", path);
    if (!entries.is_object() || entries.size() != (std::size_t{1} << m)) {
      throw Error(ErrorCode::SchemaError, path + ".entries must list all 2^m subsets");
    }
    TableValuation out;
    out.entries.assign(std::size_t{1} << m, Rational(0));
    std::vector<bool> seen(out.entries.size(), false);
    for (const auto& [key, value] : entries.items()) {
      const std::uint32_t mask = parse_subset_key(key, m, path + ".entries");
      if (seen[mask] || !value.is_string()) {
        throw Error(ErrorCode::SchemaError, path + ".entries['" + key + "']");
      }
      seen[mask] = true;
      try {
        out.entries[mask] = parse_rational(value.get<std::string>());
      } catch (const Error&) {
        throw Error(ErrorCode::SchemaError, path + ".entries['" + key + "']");
      }
    }
    return out;
  }
  throw Error(ErrorCode::SchemaError, path + ".type '" + type.dump() + "' unknown");
}

}  // namespace

std::string save_instance(const Instance& inst) {
  Json doc;
  Json projects = Json::array();
  for (const auto& p : inst.projects) {
    Json entry;
    entry["name"] = p.name;
    entry["cost"] = format_rational(p.cost);
    projects.push_back(std::move(entry));
  }
  doc["projects"] = std::move(projects);
  Json agents = Json::array();
  for (const auto& a : inst.agents) {
    Json entry;
    entry["budget"] = format_rational(a.budget);
    entry["valuation"] = valuation_to_json(a.valuation);
    agents.push_back(std::move(entry));
  }
  doc["agents"] = std::move(agents);
  return doc.dump(2) + "\n";
}

Instance load_instance(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (!doc.is_object()) {
    throw Error(ErrorCode::SchemaError, "document must be an object");
  }

  Instance inst;
  const Json& projects = field(doc, "projects", "$");
  if (!projects.is_array()) {
    throw Error(ErrorCode::SchemaError, "projects must be an array");
  }
  for (std::size_t i = 0; i < projects.size(); ++i) {
    const std::string path = "projects[" + std::to_string(i) + "]";
    const auto& p = projects[i];
    if (!p.is_object()) throw Error(ErrorCode::SchemaError, path);
    Project project;
    project.cost = rational_field(p, "cost", path);
    if (const auto it = p.find("name"); it != p.end()) {
      if (!it->is_string()) throw Error(ErrorCode::SchemaError, path + ".name");
      project.name = it->get<std::string>();
    }
    inst.projects.push_back(std::move(project));
  }

  const Json& agents = field(doc, "agents", "$");
  if (!agents.is_array()) {
    throw Error(ErrorCode::SchemaError, "agents must be an array");
  }
  const int m = inst.project_count();
  for (std::size_t i = 0; i < agents.size(); ++i) {
    const std::string path = "agents[" + std::to_string(i) + "]";
    const auto& a = agents[i];
    if (!a.is_object()) throw Error(ErrorCode::SchemaError, path);
    Agent agent;
    agent.budget = rational_field(a, "budget", path);
    agent.valuation = valuation_from_json(field(a, "valuation", path), m, path + ".valuation");
    inst.agents.push_back(std::move(agent));
  }
  return inst;
}

}  // namespace pbrp
