#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reslat/errors.hpp"

namespace reslat {

/// Index into the carrier of a finite residuated lattice.
using Elem = int;

/// Raw operation tables over a labelled carrier. Matrices are row-major
/// carrier_size x carrier_size arrays of element indices.
struct OperationTables {
  std::vector<std::string> labels;
  Elem unit = 0;
  std::vector<Elem> meet;
  std::vector<Elem> join;
  std::vector<Elem> fuse;
  std::vector<Elem> lres;  // a \ b
  std::vector<Elem> rres;  // a / b
};

/// Structural facts about a validated algebra, each recomputed exhaustively
/// from the tables. Note that a finite lattice always has a bottom and a top;
/// the optional types mirror the general (possibly unbounded) definitions the
/// document schema is written against.
struct AlgebraFlags {
  bool well_connected = false;
  bool is_chain = false;
  std::optional<Elem> bot;
  std::optional<Elem> top;
  std::optional<Elem> co_atom;
  std::optional<bool> has_zero_divisors;  // defined only when bot exists
  std::vector<Elem> up_set_of_unit;       // {a : a >= 1}, ascending indices
};

enum class BuiltinAlgebra { lukasiewicz_n, goedel_n, boolean2 };

/// A finite residuated lattice: <A, meet, join, fuse, \, /, 1> with all
/// lattice, monoid and residuation laws checked exhaustively at construction.
/// Immutable after validation.
class ResiduatedLattice {
 public:
  /// Checks every law over the full carrier; throws Error with the witnessing
  /// triple on the first violation found.
  static ResiduatedLattice validate(OperationTables tables);

  /// Closed-form chains: the n-element MV-chain, the n-element Goedel chain,
  /// and the 2-element Boolean algebra (boolean2 ignores n beyond requiring
  /// n == 2). Carrier {k/(n-1) : 0 <= k <= n-1}, labels as reduced fractions.
  static ResiduatedLattice builtin(BuiltinAlgebra which, int n);

  /// Same tables, different display labels. Labels are display-only.
  ResiduatedLattice relabeled(std::vector<std::string> labels) const;

  int size() const { return static_cast<int>(t_.labels.size()); }
  Elem unit() const { return t_.unit; }

  Elem meet(Elem a, Elem b) const { return t_.meet[idx(a, b)]; }
  Elem join(Elem a, Elem b) const { return t_.join[idx(a, b)]; }
  Elem fuse(Elem a, Elem b) const { return t_.fuse[idx(a, b)]; }
  Elem lres(Elem a, Elem b) const { return t_.lres[idx(a, b)]; }  // a \ b
  Elem rres(Elem a, Elem b) const { return t_.rres[idx(a, b)]; }  // a / b

  bool leq(Elem a, Elem b) const { return leq_[idx(a, b)] != 0; }
  bool lt(Elem a, Elem b) const { return a != b && leq(a, b); }
  /// a >= 1, the modelling test for truth values.
  bool designated(Elem a) const { return leq(t_.unit, a); }

  const std::string& label(Elem a) const { return t_.labels[static_cast<std::size_t>(a)]; }
  std::optional<Elem> element_of(std::string_view label) const;

  const AlgebraFlags& flags() const { return flags_; }
  const OperationTables& tables() const { return t_; }

  /// Mathematical identity: same tables and unit; labels are ignored.
  bool same_structure(const ResiduatedLattice& other) const;

 private:
  ResiduatedLattice() = default;
  std::size_t idx(Elem a, Elem b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(t_.labels.size()) +
           static_cast<std::size_t>(b);
  }

  OperationTables t_;
  std::vector<unsigned char> leq_;
  AlgebraFlags flags_;
};

using AlgebraPtr = std::shared_ptr<const ResiduatedLattice>;

/// Recomputes the flag block from scratch. validate() calls this once; the
/// idempotence property test calls it again and compares.
AlgebraFlags compute_flags(const ResiduatedLattice& algebra);

}  // namespace reslat
