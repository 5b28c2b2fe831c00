#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "reslat/algebra.hpp"
#include "reslat/signature.hpp"

namespace reslat {

/// Mutable description of a finite model; validated and frozen by Model.
/// Relation interpretations are flat row-major arrays over the domain
/// (an arity-0 relation is a single element).
struct ModelData {
  AlgebraPtr algebra;
  Signature sig;
  int domain_size = 0;
  std::optional<Elem> eq_gap;  // defaults to bottom, which always exists for a finite lattice
  std::map<std::string, std::vector<Elem>> relations;
  std::map<std::string, int> constants;
};

/// A finite model over a fixed residuated lattice. Every tuple of every
/// relation has a value; equality is crisp with failure value eq_gap != 1.
/// Immutable after construction; finite models are always safe.
class Model {
 public:
  explicit Model(ModelData data);

  const ResiduatedLattice& algebra() const { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const { return algebra_; }
  const Signature& sig() const { return sig_; }
  int domain_size() const { return domain_size_; }
  Elem eq_gap() const { return eq_gap_; }

  Elem value(int relation_id, std::span<const int> tuple) const;
  int constant(int constant_id) const { return constants_[static_cast<std::size_t>(constant_id)]; }

  /// Adds one nullary relation "@<label>" per algebra element, interpreted as
  /// itself. Evaluation of base-language formulas is unchanged.
  Model standard_expansion() const;
  /// Drops appended symbols again; `target` must be a prefix of this
  /// signature. standard_expansion followed by reduct is the identity.
  Model reduct(const Signature& target) const;
  /// Appends fresh object constants interpreted at `elements`.
  Model with_constants(std::span<const int> elements, const std::vector<std::string>& names) const;
  /// Induced strong substructure on a sorted element subset. Interpretations
  /// restrict; every constant must land inside the subset.
  Model induced_submodel(const std::vector<int>& elements) const;

  /// Raw relation storage, row-major (exposed for oracles and serialization).
  const std::vector<Elem>& relation_values(int relation_id) const {
    return relations_[static_cast<std::size_t>(relation_id)];
  }

  bool same_interpretation(const Model& other) const;

 private:
  AlgebraPtr algebra_;
  Signature sig_;
  int domain_size_ = 0;
  Elem eq_gap_ = 0;
  std::vector<std::vector<Elem>> relations_;  // by relation id
  std::vector<int> constants_;                // by constant id
};

/// Iterates all tuples of the given arity over {0..n-1} in lexicographic
/// order, starting from (0,..,0). Returns false when exhausted.
bool next_tuple(std::vector<int>& tuple, int n);

/// Row-major index of a tuple.
std::size_t tuple_index(std::span<const int> tuple, int n);

}  // namespace reslat
