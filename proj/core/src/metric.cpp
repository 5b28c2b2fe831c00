#include "reslat/metric.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace reslat {

GaifmanMetric GaifmanMetric::strict_bot(const ResiduatedLattice& algebra) {
  if (!algebra.flags().bot)
    throw Error(ErrorCode::UnboundedAlgebra, "strict bottom metric needs a bounded algebra");
  return gt(*algebra.flags().bot);
}

bool GaifmanMetric::passes(const ResiduatedLattice& algebra, Elem value) const {
  switch (kind) {
    case Kind::Modelling: return algebra.designated(value);
    case Kind::ThresholdGe: return algebra.leq(threshold, value);
    case Kind::ThresholdGt: return algebra.lt(threshold, value);
  }
  return false;
}

std::string GaifmanMetric::describe(const ResiduatedLattice& algebra) const {
  switch (kind) {
    case Kind::Modelling: return "modelling";
    case Kind::ThresholdGe: return "ge:" + algebra.label(threshold);
    case Kind::ThresholdGt: return "gt:" + algebra.label(threshold);
  }
  return "?";
}

namespace {

void check_metric(const Model& m, const GaifmanMetric& metric) {
  if (metric.kind != GaifmanMetric::Kind::Modelling &&
      (metric.threshold < 0 || metric.threshold >= m.algebra().size()))
    throw Error(ErrorCode::InvalidThreshold, "threshold outside the carrier");
}

}  // namespace

Adjacency gaifman_graph(const Model& m, const GaifmanMetric& metric) {
  check_metric(m, metric);
  const int n = m.domain_size();
  Adjacency g;
  g.n = n;
  g.at.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (std::size_t ri = 0; ri < m.sig().relations().size(); ++ri) {
    const int arity = m.sig().relations()[ri].arity;
    if (arity == 0) continue;
    std::vector<int> tup(static_cast<std::size_t>(arity), 0);
    do {
      if (!metric.passes(m.algebra(), m.value(static_cast<int>(ri), tup))) continue;
      for (int i = 0; i < arity; ++i)
        for (int j = 0; j < arity; ++j)
          g.at[static_cast<std::size_t>(tup[static_cast<std::size_t>(i)]) * n +
               static_cast<std::size_t>(tup[static_cast<std::size_t>(j)])] = 1;
    } while (next_tuple(tup, n));
  }
  return g;
}

std::vector<int> distances_from(const Adjacency& graph, std::span<const int> sources) {
  std::vector<int> dist(static_cast<std::size_t>(graph.n), kInfiniteDistance);
  std::deque<int> queue;
  for (int s : sources)
    if (dist[static_cast<std::size_t>(s)] == kInfiniteDistance) {
      dist[static_cast<std::size_t>(s)] = 0;
      queue.push_back(s);
    }
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (int y = 0; y < graph.n; ++y) {
      if (y == x || !graph.adjacent(x, y)) continue;
      if (dist[static_cast<std::size_t>(y)] != kInfiniteDistance) continue;
      dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
      queue.push_back(y);
    }
  }
  return dist;
}

int distance(const Adjacency& graph, int x, int y) {
  const int s[1] = {x};
  return distances_from(graph, s)[static_cast<std::size_t>(y)];
}

int distance(const Model& m, const GaifmanMetric& metric, int x, int y) {
  return distance(gaifman_graph(m, metric), x, y);
}

Sphere sphere(const Model& m, const GaifmanMetric& metric, std::span<const int> centers, int r) {
  if (r < 0) throw Error(ErrorCode::BadUsage, "radius must be non-negative");
  for (int c : centers)
    if (c < 0 || c >= m.domain_size())
      throw Error(ErrorCode::AnchorOutOfRange, "center outside the domain");
  const Adjacency g = gaifman_graph(m, metric);

  std::vector<int> sources(centers.begin(), centers.end());
  for (std::size_t ci = 0; ci < m.sig().constants().size(); ++ci)
    sources.push_back(m.constant(static_cast<int>(ci)));
  if (sources.empty())
    throw Error(ErrorCode::BadUsage, "sphere needs a center or an interpreted constant");

  const std::vector<int> dist = distances_from(g, sources);
  std::vector<int> elements;
  for (int x = 0; x < m.domain_size(); ++x)
    if (dist[static_cast<std::size_t>(x)] != kInfiniteDistance &&
        dist[static_cast<std::size_t>(x)] <= r)
      elements.push_back(x);

  std::vector<int> local_centers;
  for (int c : centers) {
    const auto it = std::lower_bound(elements.begin(), elements.end(), c);
    local_centers.push_back(static_cast<int>(it - elements.begin()));
  }
  return Sphere{std::vector<int>(centers.begin(), centers.end()),
                r,
                metric,
                elements,
                m.induced_submodel(elements),
                std::move(local_centers)};
}

Model Sphere::pointed_model() const {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < local_centers.size(); ++i) {
    std::string name = "c" + std::to_string(i + 1);
    while (model.sig().constant_id(name) || model.sig().relation_id(name)) name += "'";
    names.push_back(name);
  }
  return model.with_constants(local_centers, names);
}

bool same_sphere_type(const Sphere& a, const Sphere& b) {
  if (a.radius != b.radius) throw Error(ErrorCode::RadiusMismatch, "spheres have different radii");
  if (!(a.metric == b.metric))
    throw Error(ErrorCode::RadiusMismatch, "spheres use different metrics");
  if (a.centers.size() != b.centers.size())
    throw Error(ErrorCode::RadiusMismatch, "spheres have different center arity");
  std::vector<std::pair<int, int>> pinned;
  for (std::size_t i = 0; i < a.local_centers.size(); ++i)
    pinned.emplace_back(a.local_centers[i], b.local_centers[i]);
  return find_isomorphism(a.model, b.model, pinned).has_value();
}

SphereTypeIndex sphere_type_index(std::span<const Model* const> models,
                                  const GaifmanMetric& metric, int r, int arity) {
  SphereTypeIndex index;
  index.arity = arity;
  index.radius = r;
  index.metric = metric;
  std::vector<Sphere> reps;

  for (std::size_t mi = 0; mi < models.size(); ++mi) {
    const Model& m = *models[mi];
    std::vector<int> tuple(static_cast<std::size_t>(arity), 0);
    do {
      Sphere s = sphere(m, metric, tuple, r);
      bool placed = false;
      for (std::size_t c = 0; c < reps.size(); ++c) {
        if (same_sphere_type(reps[c], s)) {
          ++index.classes[c].counts[mi];
          placed = true;
          break;
        }
      }
      if (!placed) {
        SphereTypeIndex::Class cls;
        cls.representative_model = static_cast<int>(mi);
        cls.representative_tuple = tuple;
        cls.counts.assign(models.size(), 0);
        cls.counts[mi] = 1;
        index.classes.push_back(std::move(cls));
        reps.push_back(std::move(s));
      }
    } while (next_tuple(tuple, m.domain_size()));
  }
  return index;
}

std::vector<std::optional<Elem>> gaifman_matrix(const Model& m) {
  const int n = m.domain_size();
  std::vector<std::optional<Elem>> v(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (std::size_t ri = 0; ri < m.sig().relations().size(); ++ri) {
    const int arity = m.sig().relations()[ri].arity;
    if (arity == 0) continue;
    std::vector<int> tup(static_cast<std::size_t>(arity), 0);
    do {
      const Elem val = m.value(static_cast<int>(ri), tup);
      for (int i = 0; i < arity; ++i)
        for (int j = 0; j < arity; ++j) {
          auto& cell = v[static_cast<std::size_t>(tup[static_cast<std::size_t>(i)]) * n +
                         static_cast<std::size_t>(tup[static_cast<std::size_t>(j)])];
          cell = cell ? m.algebra().join(*cell, val) : val;
        }
    } while (next_tuple(tup, n));
  }
  return v;
}

}  // namespace reslat
