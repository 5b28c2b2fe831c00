#include "reslat/signature.hpp"

#include <cctype>
#include <set>

namespace reslat {

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s.substr(1))
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '\'') return false;
  return true;
}

Signature::Signature(std::vector<RelationSymbol> relations, std::vector<std::string> constants)
    : relations_(std::move(relations)), constants_(std::move(constants)) {
  for (const auto& r : relations_) {
    if (r.arity < 0) throw Error(ErrorCode::BadDocument, "negative arity for " + r.name);
    // Leading '@' marks standard-expansion truth-constant symbols, which are
    // created internally and are not addressable from the concrete grammar.
    if (!is_identifier(r.name) && !(r.name.size() > 1 && r.name[0] == '@'))
      throw Error(ErrorCode::BadDocument, "bad relation name '" + r.name + "'");
  }
  for (const auto& c : constants_)
    if (!is_identifier(c)) throw Error(ErrorCode::BadDocument, "bad constant name '" + c + "'");
  check_unique();
}

void Signature::check_unique() const {
  std::set<std::string> seen;
  for (const auto& r : relations_)
    if (!seen.insert(r.name).second)
      throw Error(ErrorCode::BadDocument, "duplicate symbol '" + r.name + "'");
  for (const auto& c : constants_)
    if (!seen.insert(c).second) throw Error(ErrorCode::BadDocument, "duplicate symbol '" + c + "'");
}

std::optional<int> Signature::relation_id(std::string_view name) const {
  for (std::size_t i = 0; i < relations_.size(); ++i)
    if (relations_[i].name == name) return static_cast<int>(i);
  return std::nullopt;
}

std::optional<int> Signature::constant_id(std::string_view name) const {
  for (std::size_t i = 0; i < constants_.size(); ++i)
    if (constants_[i] == name) return static_cast<int>(i);
  return std::nullopt;
}

bool Signature::extends(const Signature& base) const {
  if (base.relations_.size() > relations_.size() || base.constants_.size() > constants_.size())
    return false;
  for (std::size_t i = 0; i < base.relations_.size(); ++i)
    if (!(relations_[i] == base.relations_[i])) return false;
  for (std::size_t i = 0; i < base.constants_.size(); ++i)
    if (constants_[i] != base.constants_[i]) return false;
  return true;
}

Signature Signature::with_constants(const std::vector<std::string>& names) const {
  std::vector<std::string> cs = constants_;
  cs.insert(cs.end(), names.begin(), names.end());
  return Signature(relations_, std::move(cs));
}

Signature Signature::with_relations(const std::vector<RelationSymbol>& extra) const {
  std::vector<RelationSymbol> rs = relations_;
  rs.insert(rs.end(), extra.begin(), extra.end());
  return Signature(std::move(rs), constants_);
}

}  // namespace reslat
