#include "thermo/resource_file.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace thermo {

namespace {

using nlohmann::json;

class FieldError : public std::runtime_error {
 public:
  FieldError(std::string field, const std::string& what) : std::runtime_error(what), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

Vector read_rationals(const json& node, const std::string& field) {
  if (!node.is_array()) throw FieldError(field, "expected a list of rational strings");
  Vector out;
  for (std::size_t i = 0; i < node.size(); ++i) {
    const std::string where = field + "[" + std::to_string(i) + "]";
    const json& item = node[i];
    std::string text;
    if (item.is_string()) {
      text = item.get<std::string>();
    } else if (item.is_number_integer()) {
      text = item.dump();
    } else {
      throw FieldError(where, "expected a rational string such as \"1/3\"");
    }
    try {
      out.push_back(Rational::parse(text));
    } catch (const RationalError& e) {
      throw FieldError(where, e.what());
    }
  }
  return out;
}

Real read_real(const json& node, const std::string& field) {
  std::string text;
  if (node.is_string()) {
    text = node.get<std::string>();
  } else if (node.is_number()) {
    text = node.dump();
  } else {
    throw FieldError(field, "expected a real number");
  }
  try {
    return Real(text);
  } catch (const std::exception&) {
    throw FieldError(field, "invalid real '" + text + "'");
  }
}

ResourceEntry read_entry(const std::string& name, const json& node, int default_precision) {
  if (!node.is_object()) throw FieldError("", "expected an object");
  for (const auto& [key, _] : node.items()) {
    if (key != "p" && key != "g" && key != "levels" && key != "beta" && key != "precision") {
      throw FieldError(key, "unknown field");
    }
  }

  if (!node.contains("levels")) {
    for (const char* key : {"beta", "precision"})
      if (node.contains(key)) throw FieldError(key, "only valid together with 'levels'");
    if (!node.contains("p")) throw FieldError("p", "missing");
    if (!node.contains("g")) throw FieldError("g", "missing (or give 'levels' and 'beta')");
    Vector p = read_rationals(node["p"], "p");
    Vector g = read_rationals(node["g"], "g");
    try {
      return {make_resource(std::move(p), std::move(g), name), std::nullopt};
    } catch (const ResourceError& e) {
      throw FieldError("", e.what());
    }
  }

  if (node.contains("g")) throw FieldError("g", "give either 'g' or 'levels', not both");
  if (!node.contains("beta")) throw FieldError("beta", "missing (required with 'levels')");
  Hamiltonian h;
  const json& levels = node["levels"];
  if (!levels.is_array()) throw FieldError("levels", "expected a list of reals");
  for (std::size_t i = 0; i < levels.size(); ++i)
    h.levels.push_back(read_real(levels[i], "levels[" + std::to_string(i) + "]"));
  h.beta = read_real(node["beta"], "beta");
  h.precision = default_precision;
  if (node.contains("precision")) {
    if (!node["precision"].is_number_integer()) throw FieldError("precision", "expected an integer");
    h.precision = node["precision"].get<int>();
  }
  try {
    Vector g = gibbs_from_hamiltonian(h);
    Vector p = node.contains("p") ? read_rationals(node["p"], "p") : g;
    return {make_resource(std::move(p), std::move(g), name), h};
  } catch (const ResourceError& e) {
    throw FieldError("", e.what());
  }
}

}  // namespace

ResourceFile ResourceFile::parse(std::string_view json_text, int default_precision) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ResourceFileError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ResourceFileError("top level must be an object mapping names to states");

  ResourceFile file;
  for (const auto& [name, node] : doc.items()) {
    try {
      file.entries_.emplace(name, read_entry(name, node, default_precision));
    } catch (const FieldError& e) {
      std::string where = "state '" + name + "'";
      if (!e.field().empty()) where += " field '" + e.field() + "'";
      throw ResourceFileError(where + ": " + e.what());
    }
  }
  return file;
}

ResourceFile ResourceFile::load(const std::string& path, int default_precision) {
  std::ifstream in(path);
  if (!in) throw ResourceFileError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), default_precision);
}

const ResourceEntry& ResourceFile::entry(const std::string& name) const {
  const auto it = entries_.find(name);
  if (it == entries_.end()) throw ResourceFileError("unknown state '" + name + "'");
  return it->second;
}

}  // namespace thermo
