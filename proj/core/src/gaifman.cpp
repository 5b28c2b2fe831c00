#include "reslat/gaifman.hpp"

#include <algorithm>
#include <set>

namespace reslat {

Formula theta(Arena& arena, int r, Term x, Term y) {
  if (r < 0) throw Error(ErrorCode::BadUsage, "radius must be non-negative");
  if (r == 0) return arena.eq(x, y);
  if (r == 1) {
    std::vector<Formula> disjuncts;
    for (std::size_t ri = 0; ri < arena.sig().relations().size(); ++ri) {
      const int arity = arena.sig().relations()[ri].arity;
      if (arity == 0) continue;
      std::vector<Term> us;
      std::vector<int> uvars;
      for (int i = 0; i < arity; ++i) {
        const int v = arena.fresh_var("u");
        uvars.push_back(v);
        us.push_back(Term{TermKind::Var, v});
      }
      std::vector<Formula> hits;
      for (int i = 0; i < arity; ++i)
        for (int j = 0; j < arity; ++j)
          hits.push_back(arena.meet({arena.eq(us[static_cast<std::size_t>(i)], x),
                                     arena.eq(us[static_cast<std::size_t>(j)], y)}));
      Formula body = arena.meet({arena.atom(static_cast<int>(ri), us), arena.join(std::move(hits))});
      for (std::size_t i = uvars.size(); i-- > 0;) body = arena.exists(uvars[i], body);
      disjuncts.push_back(body);
    }
    if (disjuncts.empty())
      throw Error(ErrorCode::BadUsage,
                  "theta_1 needs a relation symbol of positive arity in the signature");
    return arena.join(std::move(disjuncts));
  }
  const int z = arena.fresh_var("z");
  const Term zt{TermKind::Var, z};
  return arena.exists(z, arena.meet({theta(arena, r - 1, x, zt), theta(arena, 1, zt, y)}));
}

DistanceEncoding::DistanceEncoding(const ResiduatedLattice& algebra, GaifmanMetric metric)
    : metric_(metric) {
  if (!algebra.flags().is_chain)
    throw Error(ErrorCode::NotAChain, "distance encodings need a residuated chain");
  if (!algebra.flags().co_atom)
    throw Error(ErrorCode::NoCoAtom, "distance encodings need a co-atom");
  co_atom_ = *algebra.flags().co_atom;
  if (metric_.kind != GaifmanMetric::Kind::Modelling &&
      (metric_.threshold < 0 || metric_.threshold >= algebra.size()))
    throw Error(ErrorCode::InvalidThreshold, "threshold outside the carrier");
}

Formula DistanceEncoding::negate(Arena& arena, Formula f) const {
  return arena.lres(f, arena.truth_const(co_atom_));
}

namespace {

// join of theta_1 .. theta_r (short paths); never includes theta_0.
Formula theta_upto(Arena& arena, int r, Term a, Term b) {
  std::vector<Formula> parts;
  for (int i = 1; i <= r; ++i) parts.push_back(theta(arena, i, a, b));
  return arena.join(std::move(parts));
}

}  // namespace

Formula DistanceEncoding::near(Arena& arena, int r, Term a, Term b) const {
  const Formula eq = arena.eq(a, b);
  switch (metric_.kind) {
    case GaifmanMetric::Kind::Modelling: {
      std::vector<Formula> parts{eq};
      for (int i = 1; i <= r; ++i) parts.push_back(theta(arena, i, a, b));
      return arena.join(std::move(parts));
    }
    case GaifmanMetric::Kind::ThresholdGe: {
      if (r == 0) return eq;
      return arena.join(
          {eq, arena.lres(arena.truth_const(metric_.threshold), theta_upto(arena, r, a, b))});
    }
    case GaifmanMetric::Kind::ThresholdGt:
      return negate(arena, far(arena, r, a, b));
  }
  throw Error(ErrorCode::BadUsage, "unreachable metric kind");
}

Formula DistanceEncoding::far(Arena& arena, int r, Term a, Term b) const {
  switch (metric_.kind) {
    case GaifmanMetric::Kind::Modelling:
    case GaifmanMetric::Kind::ThresholdGe:
      return negate(arena, near(arena, r, a, b));
    case GaifmanMetric::Kind::ThresholdGt: {
      const Formula apart = negate(arena, arena.eq(a, b));
      if (r == 0) return apart;
      return arena.meet(
          {apart, arena.lres(theta_upto(arena, r, a, b), arena.truth_const(metric_.threshold))});
    }
  }
  throw Error(ErrorCode::BadUsage, "unreachable metric kind");
}

Formula DistanceEncoding::near_tuple(Arena& arena, int r, std::span<const Term> anchors,
                                     Term z) const {
  std::vector<Formula> parts;
  for (const Term& a : anchors) parts.push_back(near(arena, r, a, z));
  for (std::size_t ci = 0; ci < arena.sig().constants().size(); ++ci)
    parts.push_back(near(arena, r, Term{TermKind::Const, static_cast<int>(ci)}, z));
  if (parts.empty())
    throw Error(ErrorCode::BadUsage, "relativization needs anchors or constants (empty sphere)");
  return arena.join(std::move(parts));
}

Formula DistanceEncoding::far_tuple(Arena& arena, int r, std::span<const Term> anchors,
                                    Term z) const {
  std::vector<Formula> parts;
  for (const Term& a : anchors) parts.push_back(far(arena, r, a, z));
  for (std::size_t ci = 0; ci < arena.sig().constants().size(); ++ci)
    parts.push_back(far(arena, r, Term{TermKind::Const, static_cast<int>(ci)}, z));
  if (parts.empty())
    throw Error(ErrorCode::BadUsage, "relativization needs anchors or constants (empty sphere)");
  return arena.meet(std::move(parts));
}

namespace {

struct PrefixEntry {
  bool universal;
  int var;
};

struct PrenexParts {
  std::vector<PrefixEntry> prefix;
  Formula matrix;
};

PrenexParts prenex_parts(Arena& arena, Formula f) {
  const Node& n0 = arena.node(f);
  switch (n0.kind) {
    case NodeKind::Atom:
    case NodeKind::Eq:
    case NodeKind::One:
    case NodeKind::TruthConst:
      return {{}, f};
    case NodeKind::Forall:
    case NodeKind::Exists: {
      const bool universal = n0.kind == NodeKind::Forall;
      const int bound = n0.payload;
      PrenexParts body = prenex_parts(arena, n0.children[0]);
      const int fresh = arena.fresh_var(arena.var_name(bound));
      body.matrix = arena.substitute(body.matrix, bound, Term{TermKind::Var, fresh});
      PrenexParts out;
      out.prefix.push_back({universal, fresh});
      out.prefix.insert(out.prefix.end(), body.prefix.begin(), body.prefix.end());
      out.matrix = body.matrix;
      return out;
    }
    default: {
      const Node n = n0;  // children list survives arena growth
      std::vector<PrenexParts> parts;
      parts.reserve(n.children.size());
      for (Formula k : n.children) parts.push_back(prenex_parts(arena, k));
      PrenexParts out;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        // antitone positions: the left of l\r, the right of l/r
        const bool antitone = (n.kind == NodeKind::LRes && i == 0) ||
                              (n.kind == NodeKind::RRes && i == 1);
        for (PrefixEntry e : parts[i].prefix) {
          if (antitone) e.universal = !e.universal;
          out.prefix.push_back(e);
        }
      }
      std::vector<Formula> kids;
      kids.reserve(parts.size());
      for (const auto& p : parts) kids.push_back(p.matrix);
      switch (n.kind) {
        case NodeKind::Meet: out.matrix = arena.meet(std::move(kids)); break;
        case NodeKind::Join: out.matrix = arena.join(std::move(kids)); break;
        case NodeKind::Fuse: out.matrix = arena.fuse(kids[0], kids[1]); break;
        case NodeKind::LRes: out.matrix = arena.lres(kids[0], kids[1]); break;
        default: out.matrix = arena.rres(kids[0], kids[1]); break;
      }
      return out;
    }
  }
}

Formula assemble(Arena& arena, const std::vector<PrefixEntry>& prefix, Formula matrix) {
  Formula out = matrix;
  for (std::size_t i = prefix.size(); i-- > 0;)
    out = prefix[i].universal ? arena.forall(prefix[i].var, out)
                              : arena.exists(prefix[i].var, out);
  return out;
}

}  // namespace

Formula prenex(Arena& arena, Formula f) {
  PrenexParts parts = prenex_parts(arena, f);
  return assemble(arena, parts.prefix, parts.matrix);
}

Formula relativize(Arena& arena, Formula f, int r, std::span<const Term> anchor_vars,
                   const DistanceEncoding& enc) {
  PrenexParts parts = prenex_parts(arena, f);
  Formula out = parts.matrix;
  for (std::size_t i = parts.prefix.size(); i-- > 0;) {
    const PrefixEntry& e = parts.prefix[i];
    const Term zt{TermKind::Var, e.var};
    if (e.universal)
      out = arena.forall(e.var, arena.join({enc.far_tuple(arena, r, anchor_vars, zt), out}));
    else
      out = arena.exists(e.var, arena.meet({enc.near_tuple(arena, r, anchor_vars, zt), out}));
  }
  return out;
}

Formula basic_local_sentence(Arena& arena, Formula psi, int r, int n_scatter,
                             const DistanceEncoding& enc) {
  const auto& fv = arena.free_vars(psi);
  if (fv.size() != 1)
    throw Error(ErrorCode::FreeVarMismatch, "local formula needs exactly one free variable");
  if (n_scatter < 1) throw Error(ErrorCode::BadUsage, "scatter count must be positive");
  const int hole = fv[0];

  std::vector<int> xs;
  std::vector<Term> xts;
  for (int i = 0; i < n_scatter; ++i) {
    const int v = arena.fresh_var("x");
    xs.push_back(v);
    xts.push_back(Term{TermKind::Var, v});
  }
  std::vector<Formula> conjuncts;
  for (int i = 0; i < n_scatter; ++i)
    for (int j = 0; j < n_scatter; ++j)
      if (i != j)
        conjuncts.push_back(enc.far(arena, 2 * r, xts[static_cast<std::size_t>(i)],
                                    xts[static_cast<std::size_t>(j)]));
  for (int i = 0; i < n_scatter; ++i) {
    const Formula at_x = arena.substitute(psi, hole, xts[static_cast<std::size_t>(i)]);
    const Term anchor[1] = {xts[static_cast<std::size_t>(i)]};
    conjuncts.push_back(relativize(arena, at_x, r, anchor, enc));
  }
  Formula body = arena.meet(std::move(conjuncts));
  for (std::size_t i = xs.size(); i-- > 0;) body = arena.exists(xs[i], body);
  return body;
}

DistinguishResult distinguish(Arena& arena, const Model& m, const Model& n,
                              const GaifmanMetric& metric, int r, int q, int scatter_max,
                              std::size_t node_cap) {
  if (m.sig() != n.sig())
    throw Error(ErrorCode::SignatureMismatch, "distinguish needs identical signatures");
  if (!m.algebra().same_structure(n.algebra()))
    throw Error(ErrorCode::AlgebraMismatch, "distinguish needs the same algebra");
  const DistanceEncoding enc(m.algebra(), metric);

  // One local formula per (model, element): the rank-q type of its r-sphere,
  // pointed by the type's anchor variable.
  struct Candidate {
    Formula psi;
    int source_model;
    int source_element;
  };
  std::vector<Candidate> candidates;
  const Model* sides[2] = {&m, &n};
  for (int side = 0; side < 2; ++side)
    for (int d = 0; d < sides[side]->domain_size(); ++d) {
      const Sphere s = sphere(*sides[side], metric, std::vector<int>{d}, r);
      const Isotype t =
          build_isotype(arena, s.model, std::vector<int>{s.local_centers[0]}, q, node_cap);
      candidates.push_back({t.formula, side, d});
    }

  Evaluator left(m, arena);
  Evaluator right(n, arena);
  std::set<std::uint32_t> tried;
  for (int s = 2; s <= scatter_max; ++s)
    for (const Candidate& c : candidates) {
      const Formula gamma = basic_local_sentence(arena, c.psi, r, s, enc);
      if (!tried.insert(gamma.id).second) continue;
      const bool lv = left.models_closed(gamma);
      const bool rv = right.models_closed(gamma);
      if (lv != rv) return {gamma, lv, rv, s, c.source_model, c.source_element};
    }
  return {};
}

}  // namespace reslat
