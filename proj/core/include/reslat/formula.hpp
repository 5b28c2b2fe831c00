#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "reslat/algebra.hpp"
#include "reslat/signature.hpp"

namespace reslat {

enum class TermKind : std::uint8_t { Var, Const };

struct Term {
  TermKind kind = TermKind::Var;
  int id = -1;  // Var: arena variable id; Const: signature constant id
  bool operator==(const Term&) const = default;
};

enum class NodeKind : std::uint8_t {
  Atom,
  Eq,
  One,
  TruthConst,
  Meet,
  Join,
  Fuse,
  LRes,  // l \ r
  RRes,  // l / r
  Forall,
  Exists,
};

struct Formula {
  std::uint32_t id = 0;
  bool operator==(const Formula&) const = default;
};

struct Node {
  NodeKind kind;
  int payload = -1;                // Atom: relation id; TruthConst: element; Forall/Exists: var id
  std::vector<Term> terms;         // Atom arguments; Eq: exactly two
  std::vector<Formula> children;   // Meet/Join: n >= 2; Fuse/LRes/RRes: 2; quantifiers: 1
  int qd = 0;                      // quantifier depth, classical recursion
  std::vector<int> free_vars;      // sorted var ids
  bool has_truth_const = false;    // marks P*-formulas (standard-expansion constants occur)
};

/// Hash-consed formula store for one signature/algebra pair. Structurally
/// equal formulas get the same id; Meet/Join children are kept flattened,
/// sorted by the structural order and deduplicated, with the empty meet
/// collapsing to One and singletons to their child. The empty join is
/// rejected. Append-only; safe for concurrent reads once built.
class Arena {
 public:
  Arena(Signature sig, AlgebraPtr algebra);

  const Signature& sig() const { return sig_; }
  const ResiduatedLattice& algebra() const { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const { return algebra_; }

  // variables
  int var(std::string_view name);
  std::optional<int> find_var(std::string_view name) const;
  const std::string& var_name(int var_id) const { return var_names_[static_cast<std::size_t>(var_id)]; }
  int var_count() const { return static_cast<int>(var_names_.size()); }
  /// A variable named `hint` or `hint<k>` that has never been interned before.
  int fresh_var(const std::string& hint);

  Term v(std::string_view name) { return Term{TermKind::Var, var(name)}; }
  Term c(std::string_view name);

  // constructors
  Formula atom(int relation_id, std::vector<Term> args);
  Formula atom(std::string_view relation, std::vector<Term> args);
  Formula eq(Term lhs, Term rhs);
  Formula one();
  Formula truth_const(Elem element);
  Formula meet(std::vector<Formula> children);
  Formula join(std::vector<Formula> children);
  Formula fuse(Formula l, Formula r);
  Formula lres(Formula l, Formula r);
  Formula rres(Formula l, Formula r);
  Formula forall(int var_id, Formula body);
  Formula exists(int var_id, Formula body);

  const Node& node(Formula f) const { return nodes_[f.id]; }
  std::size_t size() const { return nodes_.size(); }

  int qd(Formula f) const { return node(f).qd; }
  const std::vector<int>& free_vars(Formula f) const { return node(f).free_vars; }
  bool is_star_formula(Formula f) const { return node(f).has_truth_const; }

  /// Total structural order used to canonicalize Meet/Join children and to
  /// sort enumeration output. Variables compare by name, so the order does not
  /// depend on interning history.
  int compare(Formula a, Formula b) const;

  /// Capture-avoiding substitution of a term for every free occurrence of a
  /// variable; binders that would capture a substituted variable are renamed.
  Formula substitute(Formula f, int var_id, Term replacement);

  /// Number of distinct formula nodes reachable from f (DAG size).
  std::size_t dag_size(Formula f) const;

  std::string print(Formula f) const;

 private:
  Formula intern(Node n);
  int compare_terms(const Term& a, const Term& b) const;

  struct NodeKeyHash {
    const Arena* arena;
    std::size_t operator()(std::uint32_t id) const;
  };
  struct NodeKeyEq {
    const Arena* arena;
    bool operator()(std::uint32_t a, std::uint32_t b) const;
  };

  Signature sig_;
  AlgebraPtr algebra_;
  std::vector<std::string> var_names_;
  std::unordered_map<std::string, int> var_ids_;
  std::vector<Node> nodes_;
  std::unordered_map<std::uint32_t, std::uint32_t, NodeKeyHash, NodeKeyEq> dedup_;
  int fresh_counter_ = 0;
};

}  // namespace reslat
