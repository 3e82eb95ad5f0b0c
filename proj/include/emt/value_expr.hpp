#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "emt/model.hpp"

namespace emt {

enum class AccessorKind {
  Name,
  Id,
  Namespace,
  Attribute,  // key in Accessor::key
  Tag,        // read: tag(label) -> "true"/"false"; write: adds the value as a tag
};

struct Accessor {
  AccessorKind kind = AccessorKind::Name;
  std::string key;  // attribute key or tag label

  bool operator==(const Accessor&) const = default;
  std::string to_text() const;
};

/// Reads one accessor off an object. Returns absent when an attribute key
/// does not exist; tag accessors read as "true"/"false".
std::optional<std::string> get_value(const Entity& object, const Accessor& accessor);

/// A concatenation of literal segments and parameter accessors, e.g.
///   "Pool: " + A.name
struct ValueExpression {
  struct Segment {
    std::string literal;  // used when param is empty
    std::string param;
    Accessor accessor;

    bool is_literal() const { return param.empty(); }
    bool operator==(const Segment&) const = default;
  };

  std::vector<Segment> segments;

  std::set<std::string> referenced_params() const;
  std::string to_text() const;
  bool operator==(const ValueExpression&) const = default;

  static ValueExpression literal(std::string text);
  static ValueExpression access(std::string param, Accessor accessor);
};

/// Resolves a parameter name to an object, or nullptr when the parameter is
/// not bound in the current context.
using ObjectResolver = std::function<const Entity*(const std::string& param)>;

/// Evaluates the expression against bound objects. Absent accessor results
/// make the whole expression absent; an unbound parameter is an Evaluation
/// error naming the parameter.
std::optional<std::string> get_value(const ValueExpression& expr,
                                     const ObjectResolver& resolve);

/// An assignment statement in a target term: accessor <- expression.
/// Valid write accessors are name, attribute(key) and tag.
struct Assignment {
  Accessor target;
  ValueExpression value;

  bool operator==(const Assignment&) const = default;
  std::string to_text() const;
};

/// Applies a computed value to an object. Tag writes insert the value as a
/// label; name/attribute writes overwrite the addressed field.
void apply_set_value(Entity& object, const Accessor& accessor, const std::string& value);

/// Records writes per (object, accessor) so that a second write with a
/// different value can be reported as a conflict between the two writers.
class WriteLog {
 public:
  /// Applies the write and logs it. Re-writing the same value is idempotent;
  /// a different value throws Conflict naming both writers.
  void set_value(Entity& object, const Accessor& accessor, const std::string& value,
                 const std::string& writer);

 private:
  static std::string slot_key(const std::string& id, const Accessor& accessor);

  std::map<std::string, std::pair<std::string, std::string>> writes_;  // slot -> (value, writer)
};

}  // namespace emt
