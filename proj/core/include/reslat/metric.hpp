#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "reslat/isomorphism.hpp"
#include "reslat/model.hpp"

namespace reslat {

/// Distance notions on a model: adjacency from tuples whose relation value is
/// designated (Modelling), >= t, or > t. The strict bottom-threshold variant
/// is the metric of the Hanf theorem.
struct GaifmanMetric {
  enum class Kind { Modelling, ThresholdGe, ThresholdGt };
  Kind kind = Kind::Modelling;
  Elem threshold = -1;

  static GaifmanMetric modelling() { return {Kind::Modelling, -1}; }
  static GaifmanMetric ge(Elem t) { return {Kind::ThresholdGe, t}; }
  static GaifmanMetric gt(Elem t) { return {Kind::ThresholdGt, t}; }
  static GaifmanMetric strict_bot(const ResiduatedLattice& algebra);

  bool operator==(const GaifmanMetric&) const = default;
  bool passes(const ResiduatedLattice& algebra, Elem value) const;
  std::string describe(const ResiduatedLattice& algebra) const;
};

/// Symmetric adjacency with self-loops: x ~ y iff some relation tuple
/// containing both passes the metric's value test. Equality never induces
/// edges; the relation symbols alone do.
struct Adjacency {
  int n = 0;
  std::vector<unsigned char> at;
  bool adjacent(int x, int y) const {
    return at[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) +
              static_cast<std::size_t>(y)] != 0;
  }
};

Adjacency gaifman_graph(const Model& m, const GaifmanMetric& metric);

inline constexpr int kInfiniteDistance = -1;

/// BFS hop distance; d(x,x) = 0, kInfiniteDistance when disconnected.
int distance(const Adjacency& graph, int x, int y);
int distance(const Model& m, const GaifmanMetric& metric, int x, int y);
/// All distances from the sources outward.
std::vector<int> distances_from(const Adjacency& graph, std::span<const int> sources);

/// The radius-r neighborhood of a center tuple: its element set always
/// includes the common core around the interpreted constants. `model` is the
/// induced strong substructure on those elements over the parent signature;
/// `pointed_model()` adds one fresh constant per center.
struct Sphere {
  std::vector<int> centers;        // parent indices
  int radius = 0;
  GaifmanMetric metric;
  std::vector<int> elements;       // sorted parent indices
  Model model;                     // induced substructure, parent signature
  std::vector<int> local_centers;  // centers re-indexed into `model`

  Model pointed_model() const;
};

Sphere sphere(const Model& m, const GaifmanMetric& metric, std::span<const int> centers, int r);

/// Pointed-isomorphism test between spheres of equal radius, metric and
/// center arity (centers pinned).
bool same_sphere_type(const Sphere& a, const Sphere& b);

/// Partition of all arity-tuples of several models into pointed-isomorphism
/// classes of their r-spheres, with per-model counts.
struct SphereTypeIndex {
  int arity = 0;
  int radius = 0;
  GaifmanMetric metric;
  struct Class {
    int representative_model = 0;
    std::vector<int> representative_tuple;
    std::vector<long long> counts;  // per model
  };
  std::vector<Class> classes;
};

SphereTypeIndex sphere_type_index(std::span<const Model* const> models, const GaifmanMetric& metric,
                                  int r, int arity);

/// v[x][y] = join of all relation values on tuples containing both x and y;
/// absent when no tuple contains both (the join over nothing is undefined).
std::vector<std::optional<Elem>> gaifman_matrix(const Model& m);

}  // namespace reslat
