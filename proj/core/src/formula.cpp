#include "reslat/formula.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace reslat {

namespace {

std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

std::size_t Arena::NodeKeyHash::operator()(std::uint32_t id) const {
  const Node& n = arena->nodes_[id];
  std::size_t h = static_cast<std::size_t>(n.kind);
  h = hash_combine(h, static_cast<std::size_t>(n.payload + 1));
  for (const Term& t : n.terms)
    h = hash_combine(h, (static_cast<std::size_t>(t.kind) << 24) ^ static_cast<std::size_t>(t.id));
  for (const Formula& c : n.children) h = hash_combine(h, c.id);
  return h;
}

bool Arena::NodeKeyEq::operator()(std::uint32_t a, std::uint32_t b) const {
  const Node& x = arena->nodes_[a];
  const Node& y = arena->nodes_[b];
  return x.kind == y.kind && x.payload == y.payload && x.terms == y.terms &&
         x.children == y.children;
}

Arena::Arena(Signature sig, AlgebraPtr algebra)
    : sig_(std::move(sig)),
      algebra_(std::move(algebra)),
      dedup_(16, NodeKeyHash{this}, NodeKeyEq{this}) {
  if (!algebra_) throw Error(ErrorCode::BadUsage, "arena needs an algebra");
}

int Arena::var(std::string_view name) {
  auto it = var_ids_.find(std::string(name));
  if (it != var_ids_.end()) return it->second;
  const int id = static_cast<int>(var_names_.size());
  var_names_.emplace_back(name);
  var_ids_.emplace(var_names_.back(), id);
  return id;
}

std::optional<int> Arena::find_var(std::string_view name) const {
  auto it = var_ids_.find(std::string(name));
  if (it == var_ids_.end()) return std::nullopt;
  return it->second;
}

int Arena::fresh_var(const std::string& hint) {
  if (!var_ids_.count(hint)) return var(hint);
  for (;;) {
    std::string candidate = hint + std::to_string(++fresh_counter_);
    if (!var_ids_.count(candidate)) return var(candidate);
  }
}

Term Arena::c(std::string_view name) {
  auto id = sig_.constant_id(name);
  if (!id) throw Error(ErrorCode::UnknownSymbol, "unknown constant '" + std::string(name) + "'");
  return Term{TermKind::Const, *id};
}

Formula Arena::intern(Node n) {
  nodes_.push_back(std::move(n));
  const std::uint32_t candidate = static_cast<std::uint32_t>(nodes_.size() - 1);
  auto [it, inserted] = dedup_.emplace(candidate, candidate);
  if (!inserted) {
    nodes_.pop_back();
    return Formula{it->second};
  }
  return Formula{candidate};
}

static void merge_term_vars(std::vector<int>& out, const std::vector<Term>& terms) {
  for (const Term& t : terms)
    if (t.kind == TermKind::Var) out.push_back(t.id);
}

Formula Arena::atom(int relation_id, std::vector<Term> args) {
  if (relation_id < 0 || static_cast<std::size_t>(relation_id) >= sig_.relations().size())
    throw Error(ErrorCode::UnknownSymbol, "relation id out of range");
  const RelationSymbol& r = sig_.relation(relation_id);
  if (static_cast<int>(args.size()) != r.arity)
    throw Error(ErrorCode::ArityMismatch, r.name + " expects " + std::to_string(r.arity) +
                                              " arguments, got " + std::to_string(args.size()));
  Node n;
  n.kind = NodeKind::Atom;
  n.payload = relation_id;
  n.terms = std::move(args);
  merge_term_vars(n.free_vars, n.terms);
  std::sort(n.free_vars.begin(), n.free_vars.end());
  n.free_vars.erase(std::unique(n.free_vars.begin(), n.free_vars.end()), n.free_vars.end());
  return intern(std::move(n));
}

Formula Arena::atom(std::string_view relation, std::vector<Term> args) {
  auto id = sig_.relation_id(relation);
  if (!id) throw Error(ErrorCode::UnknownSymbol, "unknown relation '" + std::string(relation) + "'");
  return atom(*id, std::move(args));
}

Formula Arena::eq(Term lhs, Term rhs) {
  Node n;
  n.kind = NodeKind::Eq;
  n.terms = {lhs, rhs};
  merge_term_vars(n.free_vars, n.terms);
  std::sort(n.free_vars.begin(), n.free_vars.end());
  n.free_vars.erase(std::unique(n.free_vars.begin(), n.free_vars.end()), n.free_vars.end());
  return intern(std::move(n));
}

Formula Arena::one() {
  Node n;
  n.kind = NodeKind::One;
  return intern(std::move(n));
}

Formula Arena::truth_const(Elem element) {
  if (element < 0 || element >= algebra_->size())
    throw Error(ErrorCode::UnknownSymbol, "truth constant out of range");
  Node n;
  n.kind = NodeKind::TruthConst;
  n.payload = element;
  n.has_truth_const = true;
  return intern(std::move(n));
}

static std::vector<int> union_free_vars(const Arena& a, const std::vector<Formula>& kids) {
  std::vector<int> out;
  for (Formula k : kids) {
    const auto& fv = a.free_vars(k);
    out.insert(out.end(), fv.begin(), fv.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Formula Arena::meet(std::vector<Formula> children) {
  std::vector<Formula> flat;
  for (Formula f : children) {
    if (node(f).kind == NodeKind::Meet) {
      const auto& ks = node(f).children;
      flat.insert(flat.end(), ks.begin(), ks.end());
    } else {
      flat.push_back(f);
    }
  }
  std::sort(flat.begin(), flat.end(), [this](Formula a, Formula b) { return compare(a, b) < 0; });
  flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
  if (flat.empty()) return one();
  if (flat.size() == 1) return flat[0];
  Node n;
  n.kind = NodeKind::Meet;
  n.children = std::move(flat);
  n.free_vars = union_free_vars(*this, n.children);
  for (Formula k : n.children) {
    n.qd = std::max(n.qd, qd(k));
    n.has_truth_const = n.has_truth_const || is_star_formula(k);
  }
  return intern(std::move(n));
}

Formula Arena::join(std::vector<Formula> children) {
  std::vector<Formula> flat;
  for (Formula f : children) {
    if (node(f).kind == NodeKind::Join) {
      const auto& ks = node(f).children;
      flat.insert(flat.end(), ks.begin(), ks.end());
    } else {
      flat.push_back(f);
    }
  }
  std::sort(flat.begin(), flat.end(), [this](Formula a, Formula b) { return compare(a, b) < 0; });
  flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
  if (flat.empty())
    throw Error(ErrorCode::BadUsage, "empty join has no meaning (no bottom constant in general)");
  if (flat.size() == 1) return flat[0];
  Node n;
  n.kind = NodeKind::Join;
  n.children = std::move(flat);
  n.free_vars = union_free_vars(*this, n.children);
  for (Formula k : n.children) {
    n.qd = std::max(n.qd, qd(k));
    n.has_truth_const = n.has_truth_const || is_star_formula(k);
  }
  return intern(std::move(n));
}

Formula Arena::fuse(Formula l, Formula r) {
  Node n;
  n.kind = NodeKind::Fuse;
  n.children = {l, r};
  n.free_vars = union_free_vars(*this, n.children);
  n.qd = std::max(qd(l), qd(r));
  n.has_truth_const = is_star_formula(l) || is_star_formula(r);
  return intern(std::move(n));
}

Formula Arena::lres(Formula l, Formula r) {
  Node n;
  n.kind = NodeKind::LRes;
  n.children = {l, r};
  n.free_vars = union_free_vars(*this, n.children);
  n.qd = std::max(qd(l), qd(r));
  n.has_truth_const = is_star_formula(l) || is_star_formula(r);
  return intern(std::move(n));
}

Formula Arena::rres(Formula l, Formula r) {
  Node n;
  n.kind = NodeKind::RRes;
  n.children = {l, r};
  n.free_vars = union_free_vars(*this, n.children);
  n.qd = std::max(qd(l), qd(r));
  n.has_truth_const = is_star_formula(l) || is_star_formula(r);
  return intern(std::move(n));
}

static Formula make_quant(Arena& a, NodeKind kind, int var_id, Formula body,
                          std::function<Formula(Node)> intern) {
  Node n;
  n.kind = kind;
  n.payload = var_id;
  n.children = {body};
  n.qd = a.qd(body) + 1;
  n.has_truth_const = a.is_star_formula(body);
  for (int v : a.free_vars(body))
    if (v != var_id) n.free_vars.push_back(v);
  return intern(std::move(n));
}

Formula Arena::forall(int var_id, Formula body) {
  return make_quant(*this, NodeKind::Forall, var_id, body,
                    [this](Node n) { return intern(std::move(n)); });
}

Formula Arena::exists(int var_id, Formula body) {
  return make_quant(*this, NodeKind::Exists, var_id, body,
                    [this](Node n) { return intern(std::move(n)); });
}

int Arena::compare_terms(const Term& a, const Term& b) const {
  if (a.kind != b.kind) return a.kind < b.kind ? -1 : 1;
  if (a.kind == TermKind::Var) {
    const std::string& an = var_name(a.id);
    const std::string& bn = var_name(b.id);
    return an.compare(bn);
  }
  return a.id - b.id;
}

int Arena::compare(Formula a, Formula b) const {
  if (a == b) return 0;
  const Node& x = node(a);
  const Node& y = node(b);
  if (x.kind != y.kind) return static_cast<int>(x.kind) < static_cast<int>(y.kind) ? -1 : 1;
  switch (x.kind) {
    case NodeKind::Atom:
      if (x.payload != y.payload) return x.payload - y.payload;
      break;
    case NodeKind::TruthConst:
      return x.payload - y.payload;
    case NodeKind::One:
      return 0;
    case NodeKind::Forall:
    case NodeKind::Exists: {
      const int c = var_name(x.payload).compare(var_name(y.payload));
      if (c != 0) return c;
      break;
    }
    default:
      break;
  }
  if (x.terms.size() != y.terms.size())
    return x.terms.size() < y.terms.size() ? -1 : 1;
  for (std::size_t i = 0; i < x.terms.size(); ++i) {
    const int c = compare_terms(x.terms[i], y.terms[i]);
    if (c != 0) return c;
  }
  if (x.children.size() != y.children.size())
    return x.children.size() < y.children.size() ? -1 : 1;
  for (std::size_t i = 0; i < x.children.size(); ++i) {
    const int c = compare(x.children[i], y.children[i]);
    if (c != 0) return c;
  }
  return 0;
}

Formula Arena::substitute(Formula f, int var_id, Term replacement) {
  const auto& fv = free_vars(f);
  if (!std::binary_search(fv.begin(), fv.end(), var_id)) return f;
  const Node n = node(f);  // copy: intern() may reallocate nodes_
  switch (n.kind) {
    case NodeKind::Atom:
    case NodeKind::Eq: {
      std::vector<Term> ts = n.terms;
      for (Term& t : ts)
        if (t.kind == TermKind::Var && t.id == var_id) t = replacement;
      if (n.kind == NodeKind::Eq) return eq(ts[0], ts[1]);
      return atom(n.payload, std::move(ts));
    }
    case NodeKind::One:
    case NodeKind::TruthConst:
      return f;
    case NodeKind::Forall:
    case NodeKind::Exists: {
      int bound = n.payload;
      Formula body = n.children[0];
      if (bound == var_id) return f;  // unreachable given the free_vars prune
      if (replacement.kind == TermKind::Var && replacement.id == bound) {
        const int renamed = fresh_var(var_name(bound));
        body = substitute(body, bound, Term{TermKind::Var, renamed});
        bound = renamed;
      }
      body = substitute(body, var_id, replacement);
      return n.kind == NodeKind::Forall ? forall(bound, body) : exists(bound, body);
    }
    case NodeKind::Meet:
    case NodeKind::Join:
    case NodeKind::Fuse:
    case NodeKind::LRes:
    case NodeKind::RRes: {
      std::vector<Formula> kids = n.children;
      for (Formula& k : kids) k = substitute(k, var_id, replacement);
      switch (n.kind) {
        case NodeKind::Meet: return meet(std::move(kids));
        case NodeKind::Join: return join(std::move(kids));
        case NodeKind::Fuse: return fuse(kids[0], kids[1]);
        case NodeKind::LRes: return lres(kids[0], kids[1]);
        default: return rres(kids[0], kids[1]);
      }
    }
  }
  return f;
}

std::size_t Arena::dag_size(Formula f) const {
  std::set<std::uint32_t> seen;
  std::vector<Formula> stack{f};
  while (!stack.empty()) {
    Formula cur = stack.back();
    stack.pop_back();
    if (!seen.insert(cur.id).second) continue;
    for (Formula k : node(cur).children) stack.push_back(k);
  }
  return seen.size();
}

namespace {

// Precedence levels for printing with minimal parentheses. Quantifiers bind
// loosest and extend maximally to the right; '*' binds tightest.
constexpr int kLevelQuant = 0;
constexpr int kLevelJoin = 1;
constexpr int kLevelMeet = 2;
constexpr int kLevelRes = 3;
constexpr int kLevelFuse = 4;
constexpr int kLevelPrimary = 5;

}  // namespace

std::string Arena::print(Formula f) const {
  std::function<std::string(Formula, int)> go = [&](Formula g, int min_level) -> std::string {
    const Node& n = node(g);
    auto wrap = [&](int level, const std::string& s) {
      return level < min_level ? "(" + s + ")" : s;
    };
    auto term_str = [&](const Term& t) {
      return t.kind == TermKind::Var ? var_name(t.id) : sig_.constant(t.id);
    };
    switch (n.kind) {
      case NodeKind::Atom: {
        const RelationSymbol& r = sig_.relation(n.payload);
        if (r.arity == 0) return r.name;
        std::string s = r.name + "(";
        for (std::size_t i = 0; i < n.terms.size(); ++i) {
          if (i) s += ",";
          s += term_str(n.terms[i]);
        }
        return s + ")";
      }
      case NodeKind::Eq:
        return wrap(kLevelPrimary, term_str(n.terms[0]) + " = " + term_str(n.terms[1]));
      case NodeKind::One:
        return std::string("1");
      case NodeKind::TruthConst:
        return "@" + algebra_->label(n.payload);
      case NodeKind::Meet: {
        std::string s;
        for (std::size_t i = 0; i < n.children.size(); ++i) {
          if (i) s += " & ";
          s += go(n.children[i], kLevelRes);
        }
        return wrap(kLevelMeet, s);
      }
      case NodeKind::Join: {
        std::string s;
        for (std::size_t i = 0; i < n.children.size(); ++i) {
          if (i) s += " | ";
          s += go(n.children[i], kLevelMeet);
        }
        return wrap(kLevelJoin, s);
      }
      case NodeKind::Fuse:
        return wrap(kLevelFuse,
                    go(n.children[0], kLevelFuse) + " * " + go(n.children[1], kLevelPrimary));
      case NodeKind::LRes:
        return wrap(kLevelRes,
                    go(n.children[0], kLevelRes) + " \\ " + go(n.children[1], kLevelFuse));
      case NodeKind::RRes:
        return wrap(kLevelRes,
                    go(n.children[0], kLevelRes) + " / " + go(n.children[1], kLevelFuse));
      case NodeKind::Forall:
        return wrap(kLevelQuant, "forall " + var_name(n.payload) + " " + go(n.children[0], kLevelQuant));
      case NodeKind::Exists:
        return wrap(kLevelQuant, "exists " + var_name(n.payload) + " " + go(n.children[0], kLevelQuant));
    }
    return "?";
  };
  return go(f, kLevelQuant);
}

}  // namespace reslat
