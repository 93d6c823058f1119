#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "thermo/resource.hpp"

namespace thermo {

class ResourceFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ResourceEntry {
  ResourceState state;
  /// Set when the Gibbs vector was generated from energy levels.
  std::optional<Hamiltonian> hamiltonian;
};

/// A JSON document whose top level maps state names to either
///
///   {"p": ["1/2", "1/2"], "g": ["2/3", "1/3"]}
///
/// or a Hamiltonian form whose Gibbs vector is computed and rationalized:
///
///   {"levels": [0, "0.693147"], "beta": 1, "p": ["1", "0"], "precision": 12}
///
/// Rationals are strings. In Hamiltonian form "p" defaults to the Gibbs
/// vector itself and "precision" to the loader's default.
class ResourceFile {
 public:
  static ResourceFile parse(std::string_view json_text, int default_precision = 12);
  static ResourceFile load(const std::string& path, int default_precision = 12);

  /// Throws ResourceFileError for unknown names.
  const ResourceEntry& entry(const std::string& name) const;
  const ResourceState& state(const std::string& name) const { return entry(name).state; }
  const std::map<std::string, ResourceEntry>& entries() const { return entries_; }

 private:
  std::map<std::string, ResourceEntry> entries_;
};

}  // namespace thermo
