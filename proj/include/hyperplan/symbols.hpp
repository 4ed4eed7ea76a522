#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hyperplan/error.hpp"

namespace hyperplan {

/// Interns names into dense ids in insertion order.
class SymbolTable {
 public:
  SymbolTable() = default;
  explicit SymbolTable(const std::vector<std::string>& names, const std::string& kind = "name") {
    for (const auto& n : names) {
      if (ids_.contains(n)) throw ValidationError("duplicate " + kind + " '" + n + "'");
      intern(n);
    }
  }

  std::uint32_t intern(const std::string& name) {
    auto [it, inserted] = ids_.emplace(name, static_cast<std::uint32_t>(names_.size()));
    if (inserted) names_.push_back(name);
    return it->second;
  }

  std::optional<std::uint32_t> find(const std::string& name) const {
    auto it = ids_.find(name);
    if (it == ids_.end()) return std::nullopt;
    return it->second;
  }

  std::uint32_t at(const std::string& name, const std::string& kind) const {
    auto id = find(name);
    if (!id) throw UnknownName(kind, name);
    return *id;
  }

  const std::string& name(std::uint32_t id) const { return names_.at(id); }
  const std::vector<std::string>& names() const { return names_; }
  std::size_t size() const { return names_.size(); }

  friend bool operator==(const SymbolTable& a, const SymbolTable& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::uint32_t> ids_;
};

}  // namespace hyperplan
