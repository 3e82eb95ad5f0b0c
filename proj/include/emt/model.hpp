#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace emt {

class MetatypeRegistry;

using TypeSet = std::set<std::string>;

/// A typed content object. Entities carry one or more metatypes (the direct
/// type plus any layer/aspect/synonym types assigned at load time).
struct Entity {
  std::string id;
  std::string name;
  TypeSet metatypes;
  std::map<std::string, std::string> attributes;
  std::set<std::string> tags;
  std::optional<std::string> ns;

  bool has_type(const std::string& type) const {
    return metatypes.count(type) != 0;
  }
  bool operator==(const Entity&) const = default;
};

/// An entity with source and target endpoints.
struct Relation : Entity {
  std::string source;
  std::string target;

  bool operator==(const Relation&) const = default;
};

/// Serialization-neutral model container. Entities and relations are kept
/// ordered by ascending id so every traversal is deterministic.
class ModelDocument {
 public:
  /// Throws Integrity on duplicate id or empty metatype set.
  void add_entity(Entity entity);
  void add_relation(Relation relation);

  /// Checks referential integrity: every relation endpoint must resolve to
  /// an entity of this document. Throws Integrity with the offending ids.
  void check_integrity() const;

  const std::vector<Entity>& entities() const { return entities_; }
  const std::vector<Relation>& relations() const { return relations_; }

  const Entity* find_entity(const std::string& id) const;
  const Relation* find_relation(const std::string& id) const;
  /// Finds either an entity or a relation (relations are entities too).
  const Entity* find_object(const std::string& id) const;

  bool empty() const { return entities_.empty() && relations_.empty(); }
  std::size_t size() const { return entities_.size() + relations_.size(); }

  std::map<std::string, std::string> metadata;

  bool operator==(const ModelDocument& other) const {
    return entities_ == other.entities_ && relations_ == other.relations_ &&
           metadata == other.metadata;
  }

 private:
  void reserve_id(const std::string& id);

  std::vector<Entity> entities_;    // sorted by id
  std::vector<Relation> relations_; // sorted by id
  std::set<std::string> ids_;
};

/// All entities whose (expanded) metatype set contains the canonicalized
/// type. The wildcard "*" returns every entity. Result is ordered by
/// ascending id; an unknown type yields an empty list.
std::vector<const Entity*> entities_of_type(const ModelDocument& model,
                                            const std::string& type,
                                            const MetatypeRegistry* registry = nullptr);

/// Same query over relations.
std::vector<const Relation*> relations_of_type(const ModelDocument& model,
                                               const std::string& type,
                                               const MetatypeRegistry* registry = nullptr);

}  // namespace emt
