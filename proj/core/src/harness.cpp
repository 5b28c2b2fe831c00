#include "reslat/harness.hpp"

#include <algorithm>
#include <numeric>

namespace reslat {

namespace {

Signature graph_sig() { return Signature({RelationSymbol{"E", 2}}, {}); }

std::mt19937_64 rng_for(std::uint64_t seed, int trial) {
  std::seed_seq seq{seed, static_cast<std::uint64_t>(trial)};
  return std::mt19937_64(seq);
}

Model graph_from_matrix(const AlgebraPtr& algebra, const std::vector<Elem>& e, int n) {
  ModelData d;
  d.algebra = algebra;
  d.sig = graph_sig();
  d.domain_size = n;
  d.relations["E"] = e;
  return Model(std::move(d));
}

Model permuted_graph(const Model& m, const std::vector<int>& perm) {
  const int n = m.domain_size();
  std::vector<Elem> e(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int t[2] = {i, j};
      e[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)]) * n +
        static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])] = m.value(0, t);
    }
  return graph_from_matrix(m.algebra_ptr(), e, n);
}

}  // namespace

int uniform_int(std::mt19937_64& rng, int n) {
  return static_cast<int>(std::uniform_int_distribution<int>(0, n - 1)(rng));
}

Model random_graph_model(const AlgebraPtr& algebra, std::uint64_t seed, int trial, int min_size,
                         int max_size) {
  auto rng = rng_for(seed, trial);
  const int n = min_size + uniform_int(rng, max_size - min_size + 1);
  std::vector<Elem> e(static_cast<std::size_t>(n) * n);
  for (auto& v : e) v = uniform_int(rng, algebra->size());
  return graph_from_matrix(algebra, e, n);
}

Model cycle_model(const AlgebraPtr& algebra, int length, Elem weight) {
  const Elem bot = *algebra->flags().bot;
  std::vector<Elem> e(static_cast<std::size_t>(length) * length, bot);
  for (int i = 0; i < length; ++i) {
    const int j = (i + 1) % length;
    e[static_cast<std::size_t>(i) * length + static_cast<std::size_t>(j)] = weight;
    e[static_cast<std::size_t>(j) * length + static_cast<std::size_t>(i)] = weight;
  }
  return graph_from_matrix(algebra, e, length);
}

Model two_cycles_model(const AlgebraPtr& algebra, int m, Elem weight) {
  const Elem bot = *algebra->flags().bot;
  const int n = 2 * m;
  std::vector<Elem> e(static_cast<std::size_t>(n) * n, bot);
  auto link = [&](int i, int j) {
    e[static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)] = weight;
    e[static_cast<std::size_t>(j) * n + static_cast<std::size_t>(i)] = weight;
  };
  for (int i = 0; i < m; ++i) link(i, (i + 1) % m);
  for (int i = 0; i < m; ++i) link(m + i, m + (i + 1) % m);
  return graph_from_matrix(algebra, e, n);
}

Model directed_chain_model(const AlgebraPtr& algebra, int length, Elem on_value, Elem off_value) {
  std::vector<Elem> e(static_cast<std::size_t>(length) * length, off_value);
  for (int i = 0; i + 1 < length; ++i)
    e[static_cast<std::size_t>(i) * length + static_cast<std::size_t>(i + 1)] = on_value;
  return graph_from_matrix(algebra, e, length);
}

PairSample block_shuffle_pair(const AlgebraPtr& algebra, std::uint64_t seed, int trial, int k) {
  auto rng = rng_for(seed, trial);
  const Elem bot = *algebra->flags().bot;

  struct Block {
    int size;
    std::vector<Elem> e;
  };
  const int type_count = 1 + uniform_int(rng, 2);
  const int max_block = 3;
  std::vector<Block> blocks;
  for (int t = 0; t < type_count; ++t) {
    Block b;
    b.size = 1 + uniform_int(rng, max_block);
    b.e.resize(static_cast<std::size_t>(b.size) * b.size);
    for (auto& v : b.e) v = uniform_int(rng, algebra->size());
    blocks.push_back(std::move(b));
  }

  // Sphere radii never leave a block, so e <= max_block and counts above
  // k * max_block force the both-large clause.
  const int large = k * max_block + 1;
  std::vector<int> count_left(blocks.size()), count_right(blocks.size());
  for (std::size_t t = 0; t < blocks.size(); ++t) {
    if (uniform_int(rng, 2) == 0) {
      const int c = 1 + uniform_int(rng, 2);
      count_left[t] = count_right[t] = c;
    } else {
      count_left[t] = large + uniform_int(rng, 3);
      count_right[t] = large + uniform_int(rng, 3);
    }
  }

  auto assemble = [&](const std::vector<int>& counts) {
    int n = 0;
    for (std::size_t t = 0; t < blocks.size(); ++t) n += counts[t] * blocks[t].size;
    std::vector<Elem> e(static_cast<std::size_t>(n) * n, bot);
    int base = 0;
    for (std::size_t t = 0; t < blocks.size(); ++t)
      for (int c = 0; c < counts[t]; ++c) {
        const Block& b = blocks[t];
        for (int i = 0; i < b.size; ++i)
          for (int j = 0; j < b.size; ++j)
            e[static_cast<std::size_t>(base + i) * n + static_cast<std::size_t>(base + j)] =
                b.e[static_cast<std::size_t>(i) * b.size + static_cast<std::size_t>(j)];
        base += b.size;
      }
    Model plain = graph_from_matrix(algebra, e, n);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return permuted_graph(plain, perm);
  };

  PairSample sample{assemble(count_left), assemble(count_right), {}, std::nullopt};
  return sample;
}

PairSample swap_pair(const AlgebraPtr& algebra, std::uint64_t seed, int trial, int k) {
  auto rng = rng_for(seed, trial);
  long long radius = 1;
  for (int j = 0; j < k; ++j) radius *= 3;

  if (trial % 2 == 0) {
    const int m = static_cast<int>(2 * radius + 2) + uniform_int(rng, 2);
    const Elem unit = algebra->unit();
    return PairSample{cycle_model(algebra, 2 * m, unit), two_cycles_model(algebra, m, unit),
                      {}, std::nullopt};
  }

  // anchored permuted copy
  Model left = random_graph_model(algebra, seed ^ 0x517cc1b727220a95ULL, trial, 3, 5);
  std::vector<int> perm(static_cast<std::size_t>(left.domain_size()));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  Model right = permuted_graph(left, perm);
  const int a = uniform_int(rng, left.domain_size());
  const int b = uniform_int(rng, left.domain_size());
  PairSample sample{std::move(left), std::move(right), {}, std::nullopt};
  sample.anchor = {{a, perm[static_cast<std::size_t>(a)]}, {b, perm[static_cast<std::size_t>(b)]}};
  return sample;
}

}  // namespace reslat
