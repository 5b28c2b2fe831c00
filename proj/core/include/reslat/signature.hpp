#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reslat/errors.hpp"

namespace reslat {

struct RelationSymbol {
  std::string name;
  int arity = 0;
  bool operator==(const RelationSymbol&) const = default;
};

/// A relational predicate language with object constants. Function symbols of
/// positive arity are unrepresentable by construction. The built-in equality
/// symbol is not part of the symbol lists.
class Signature {
 public:
  Signature() = default;
  Signature(std::vector<RelationSymbol> relations, std::vector<std::string> constants);

  const std::vector<RelationSymbol>& relations() const { return relations_; }
  const std::vector<std::string>& constants() const { return constants_; }

  std::optional<int> relation_id(std::string_view name) const;
  std::optional<int> constant_id(std::string_view name) const;
  const RelationSymbol& relation(int id) const { return relations_[static_cast<std::size_t>(id)]; }
  const std::string& constant(int id) const { return constants_[static_cast<std::size_t>(id)]; }

  /// True when `base` is a prefix of this signature in both symbol lists.
  /// Formulas built against `base` keep their symbol ids valid here, which is
  /// how standard expansions and pointed spheres stay evaluable.
  bool extends(const Signature& base) const;

  Signature with_constants(const std::vector<std::string>& names) const;
  Signature with_relations(const std::vector<RelationSymbol>& extra) const;

  bool operator==(const Signature&) const = default;

 private:
  void check_unique() const;
  std::vector<RelationSymbol> relations_;
  std::vector<std::string> constants_;
};

/// Identifier shape accepted by the parser for relation/constant/variable
/// names: [A-Za-z_][A-Za-z0-9_']*.
bool is_identifier(std::string_view s);

}  // namespace reslat
