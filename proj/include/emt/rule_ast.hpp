#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "emt/value_expr.hpp"

namespace emt {

struct SourceLoc {
  int line = 0;
  int column = 0;
  bool operator==(const SourceLoc&) const = default;
};

// --- source side -----------------------------------------------------------

enum class ConditionOp { Eq, Ne, Contains, MatchesGlob };

/// [ accessor op literal ] filter on a transformation item.
struct SearchCondition {
  Accessor accessor;
  ConditionOp op = ConditionOp::Eq;
  std::string literal;
  SourceLoc loc;

  bool operator==(const SearchCondition& o) const {
    return accessor == o.accessor && op == o.op && literal == o.literal;
  }
  std::string to_text() const;
};

enum class CountOp { Ge, Gt, Eq, Lt, Le };

/// {count op n} — turns per-item iteration into an aggregated existence check.
struct LoopConstraint {
  CountOp op = CountOp::Ge;
  long count = 0;
  SourceLoc loc;

  bool operator==(const LoopConstraint& o) const {
    return op == o.op && count == o.count;
  }
  std::string to_text() const;
};

struct SourceElement {
  std::string param;
  std::string type;  // type name or "*"
  std::vector<SearchCondition> conditions;
  std::vector<LoopConstraint> constraints;
  SourceLoc loc;

  bool aggregated() const { return !constraints.empty(); }
  bool operator==(const SourceElement& o) const {
    return param == o.param && type == o.type && conditions == o.conditions &&
           constraints == o.constraints;
  }
};

struct SourceRelationship {
  std::string param;
  std::string type;
  SourceElement source_end;
  SourceElement target_end;
  std::vector<SearchCondition> conditions;   // on the relation object
  std::vector<LoopConstraint> constraints;   // the R position
  SourceLoc loc;

  bool operator==(const SourceRelationship& o) const {
    return param == o.param && type == o.type && source_end == o.source_end &&
           target_end == o.target_end && conditions == o.conditions &&
           constraints == o.constraints;
  }
};

enum class LogicOp { And, Or, Xor };

struct SourceGroup;
using SourceTerm = std::variant<SourceElement, SourceRelationship, SourceGroup>;

struct SourceGroup {
  LogicOp op = LogicOp::And;
  std::vector<SourceTerm> children;  // always >= 2
  SourceLoc loc;

  bool operator==(const SourceGroup& o) const;
};

// --- target side -----------------------------------------------------------

/// ref(Rule, args... [-> output]) — a call into another rule's outputs.
struct RuleRef {
  std::string rule;
  std::vector<std::string> args;  // caller parameter names
  std::string output;             // selected callee target param; empty = callee default
  SourceLoc loc;

  bool operator==(const RuleRef& o) const {
    return rule == o.rule && args == o.args && output == o.output;
  }
  std::string to_text() const;
};

/// Creation of a target element, or — when refs is non-empty — a placeholder
/// element bound to the first non-empty reference result (type "*").
struct TargetElement {
  std::string param;
  std::string type;            // "*" for placeholders
  std::vector<RuleRef> refs;   // alternation, first non-empty result wins
  std::vector<Assignment> assignments;
  bool intermediate = false;
  SourceLoc loc;

  bool is_reference() const { return !refs.empty(); }
  bool operator==(const TargetElement& o) const {
    return param == o.param && type == o.type && refs == o.refs &&
           assignments == o.assignments && intermediate == o.intermediate;
  }
};

/// A relation endpoint: either a parameter (target item of the same rule or
/// source parameter pass-through) or a reference alternation.
struct EndRef {
  std::string param;          // used when refs is empty
  std::vector<RuleRef> refs;

  bool is_ref() const { return !refs.empty(); }
  bool operator==(const EndRef&) const = default;
  std::string to_text() const;
};

struct TargetRelation {
  std::string param;
  std::string type;
  EndRef source_end;
  EndRef target_end;
  std::vector<Assignment> assignments;
  bool intermediate = false;
  SourceLoc loc;

  bool operator==(const TargetRelation& o) const {
    return param == o.param && type == o.type && source_end == o.source_end &&
           target_end == o.target_end && assignments == o.assignments &&
           intermediate == o.intermediate;
  }
};

/// enrich(ref(...)) { assigns } — applies assignments to the referenced
/// rule's output objects.
struct Enrichment {
  RuleRef ref;
  std::vector<Assignment> assignments;
  SourceLoc loc;

  bool operator==(const Enrichment& o) const {
    return ref == o.ref && assignments == o.assignments;
  }
};

struct TargetGroup;
using TargetTerm = std::variant<TargetElement, TargetRelation, TargetGroup, Enrichment>;

/// Target groups are an AND of all statements; children execute in order.
struct TargetGroup {
  std::vector<TargetTerm> children;
  SourceLoc loc;

  bool operator==(const TargetGroup& o) const;
};

struct TransformationRule {
  std::string name;
  SourceTerm source;
  TargetTerm target;
  SourceLoc loc;

  bool operator==(const TransformationRule& o) const {
    return name == o.name && source == o.source && target == o.target;
  }
};

struct RuleSet {
  std::string name;
  std::vector<TransformationRule> rules;

  const TransformationRule* find_rule(const std::string& name) const;
  bool operator==(const RuleSet& o) const {
    return name == o.name && rules == o.rules;
  }
};

// --- helpers ---------------------------------------------------------------

const char* to_text(LogicOp op);
const char* to_text(CountOp op);
const char* to_text(ConditionOp op);

/// Canonical textual rendering; parse(pretty_print(rs)) == rs.
std::string pretty_print(const RuleSet& rs);
std::string pretty_print(const SourceTerm& term);
std::string pretty_print(const TargetTerm& term);

/// Preorder flattening of a source term tree; index 0 is the whole term.
std::vector<const SourceTerm*> flatten_source(const SourceTerm& term);

/// Collects every RuleRef appearing in a target term (reference elements,
/// relation endpoints, enrichments), in statement order.
std::vector<const RuleRef*> collect_refs(const TargetTerm& term);

/// Flattens the target term into executable statements, in order.
std::vector<const TargetTerm*> flatten_target(const TargetTerm& term);

}  // namespace emt
