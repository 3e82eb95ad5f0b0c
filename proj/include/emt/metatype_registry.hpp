#pragma once

#include <map>
#include <set>
#include <string>

#include "emt/model.hpp"

namespace emt {

/// Alias and hierarchy tables for metatype resolution. Aliases map synonym
/// spellings ("archimate:BusinessActor", "Business Actor") onto a canonical
/// type name; the hierarchy maps a type onto additional implied types
/// ("BusinessActor" -> {Business, Active}).
///
/// Alias chains are flattened on insertion so that resolution is idempotent
/// after one application of the map; alias cycles are a configuration error.
class MetatypeRegistry {
 public:
  void add_alias(const std::string& from, const std::string& to);
  void add_implied(const std::string& type, const std::string& implied);

  /// Applies the alias map once. Unknown names pass through unchanged.
  std::string canonical(const std::string& name) const;

  /// Canonicalizes the declared types and unions in every implied type
  /// (transitively). The result is always a superset of the canonicalized
  /// declared set.
  TypeSet resolve(const TypeSet& declared) const;

  bool empty() const { return aliases_.empty() && hierarchy_.empty(); }

  const std::map<std::string, std::string>& aliases() const { return aliases_; }
  const std::map<std::string, std::set<std::string>>& hierarchy() const {
    return hierarchy_;
  }

  /// Parses the registry file format: {"aliases": {...}, "hierarchy": {...}}.
  static MetatypeRegistry from_json_text(const std::string& text);
  std::string to_json_text() const;

 private:
  std::map<std::string, std::string> aliases_;
  std::map<std::string, std::set<std::string>> hierarchy_;
};

/// Expands a declared type set through the registry; the free-function form
/// of MetatypeRegistry::resolve. A null registry is the identity.
TypeSet resolve_metatypes(const TypeSet& declared, const MetatypeRegistry* registry);

}  // namespace emt
