#include "reslat/games.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>

namespace reslat {

namespace {

void check_compatible(const Model& m, const Model& n) {
  if (m.sig() != n.sig())
    throw Error(ErrorCode::SignatureMismatch, "games need identical signatures");
  if (!m.algebra().same_structure(n.algebra()))
    throw Error(ErrorCode::AlgebraMismatch, "games need the same algebra");
}

// Pair lists stay short (|anchor| + constants + k), so keys pack into a
// fixed-width buffer; models beyond 255 elements are out of desk scale.
struct PackedKey {
  std::uint8_t len = 0;
  int rounds = 0;
  std::array<std::uint8_t, 32> data{};
  bool operator==(const PackedKey&) const = default;
};

struct PackedKeyHash {
  std::size_t operator()(const PackedKey& k) const {
    std::size_t h = static_cast<std::size_t>(k.rounds) * 0x9e3779b97f4a7c15ULL + k.len;
    for (int i = 0; i < k.len * 2; ++i) h = h * 1099511628211ULL + k.data[static_cast<std::size_t>(i)];
    return h;
  }
};

class Game {
 public:
  Game(const Model& m, const Model& n) : m_(m), n_(n) {
    if (m.domain_size() > 255 || n.domain_size() > 255)
      throw Error(ErrorCode::BudgetExceeded, "game decision supports at most 255 elements");
  }

  bool verdict(std::vector<std::pair<int, int>>& pairs, int rounds) {
    if (!is_partial_iso(m_, n_, pairs)) return false;
    return verdict_assuming_piso(pairs, rounds);
  }

 private:
  // pairs already known to be a partial isomorphism.
  bool verdict_assuming_piso(std::vector<std::pair<int, int>>& pairs, int rounds) {
    if (rounds == 0) return true;
    if (pairs.size() * 2 > 32)
      throw Error(ErrorCode::BudgetExceeded, "game position too long to key");
    PackedKey key;
    key.len = static_cast<std::uint8_t>(pairs.size());
    key.rounds = rounds;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      key.data[2 * i] = static_cast<std::uint8_t>(pairs[i].first);
      key.data[2 * i + 1] = static_cast<std::uint8_t>(pairs[i].second);
    }
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    bool ok = true;
    for (int a = 0; a < m_.domain_size() && ok; ++a) {  // forth
      bool found = false;
      for (int b = 0; b < n_.domain_size() && !found; ++b) {
        pairs.emplace_back(a, b);
        if (extension_is_piso(pairs) && verdict_assuming_piso(pairs, rounds - 1)) found = true;
        pairs.pop_back();
      }
      ok = found;
    }
    for (int b = 0; b < n_.domain_size() && ok; ++b) {  // back
      bool found = false;
      for (int a = 0; a < m_.domain_size() && !found; ++a) {
        pairs.emplace_back(a, b);
        if (extension_is_piso(pairs) && verdict_assuming_piso(pairs, rounds - 1)) found = true;
        pairs.pop_back();
      }
      ok = found;
    }
    memo_.emplace(key, ok);
    return ok;
  }

  // The prefix is a partial isomorphism; only constraints touching the last
  // pair need checking.
  bool extension_is_piso(const std::vector<std::pair<int, int>>& pairs) {
    const auto [x, y] = pairs.back();
    for (std::size_t i = 0; i + 1 < pairs.size(); ++i) {
      const bool same_l = pairs[i].first == x;
      const bool same_r = pairs[i].second == y;
      if (same_l != same_r) return false;  // not a function / not injective
    }
    for (std::size_t ri = 0; ri < m_.sig().relations().size(); ++ri) {
      const int arity = m_.sig().relations()[ri].arity;
      if (arity == 0) continue;  // checked once by the root is_partial_iso
      std::vector<int> idx(static_cast<std::size_t>(arity), 0);
      std::vector<int> lhs(static_cast<std::size_t>(arity)), rhs(static_cast<std::size_t>(arity));
      const int k = static_cast<int>(pairs.size());
      for (;;) {
        bool touches = false;
        for (int p = 0; p < arity; ++p) {
          const auto& pr = pairs[static_cast<std::size_t>(idx[static_cast<std::size_t>(p)])];
          lhs[static_cast<std::size_t>(p)] = pr.first;
          rhs[static_cast<std::size_t>(p)] = pr.second;
          if (idx[static_cast<std::size_t>(p)] == k - 1) touches = true;
        }
        if (touches &&
            m_.value(static_cast<int>(ri), lhs) != n_.value(static_cast<int>(ri), rhs))
          return false;
        if (!next_tuple(idx, k)) break;
      }
    }
    return true;
  }

  const Model& m_;
  const Model& n_;
  std::unordered_map<PackedKey, bool, PackedKeyHash> memo_;
};

std::vector<std::pair<int, int>> with_constants(const Model& m, const Model& n,
                                                std::span<const std::pair<int, int>> anchor) {
  std::vector<std::pair<int, int>> pairs(anchor.begin(), anchor.end());
  for (std::size_t ci = 0; ci < m.sig().constants().size(); ++ci)
    pairs.emplace_back(m.constant(static_cast<int>(ci)), n.constant(static_cast<int>(ci)));
  return pairs;
}

}  // namespace

bool is_partial_iso(const Model& m, const Model& n,
                    std::span<const std::pair<int, int>> pairs) {
  check_compatible(m, n);
  for (const auto& [x, y] : pairs)
    if (x < 0 || x >= m.domain_size() || y < 0 || y >= n.domain_size())
      throw Error(ErrorCode::AnchorOutOfRange, "pair outside the domains");

  // well-defined and injective
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      const bool same_l = pairs[i].first == pairs[j].first;
      const bool same_r = pairs[i].second == pairs[j].second;
      if (same_l != same_r) return false;
    }

  // every constant paired
  for (std::size_t ci = 0; ci < m.sig().constants().size(); ++ci) {
    bool found = false;
    for (const auto& [x, y] : pairs)
      if (x == m.constant(static_cast<int>(ci))) {
        found = y == n.constant(static_cast<int>(ci));
        break;
      }
    if (!found) return false;
  }

  // exact value preservation on all tuples within the domain
  for (std::size_t ri = 0; ri < m.sig().relations().size(); ++ri) {
    const int arity = m.sig().relations()[ri].arity;
    if (arity == 0) {
      if (m.relation_values(static_cast<int>(ri))[0] != n.relation_values(static_cast<int>(ri))[0])
        return false;
      continue;
    }
    if (pairs.empty()) continue;
    std::vector<int> idx(static_cast<std::size_t>(arity), 0);
    std::vector<int> lhs(static_cast<std::size_t>(arity)), rhs(static_cast<std::size_t>(arity));
    const int k = static_cast<int>(pairs.size());
    for (;;) {
      for (int p = 0; p < arity; ++p) {
        const auto& pr = pairs[static_cast<std::size_t>(idx[static_cast<std::size_t>(p)])];
        lhs[static_cast<std::size_t>(p)] = pr.first;
        rhs[static_cast<std::size_t>(p)] = pr.second;
      }
      if (m.value(static_cast<int>(ri), lhs) != n.value(static_cast<int>(ri), rhs)) return false;
      if (!next_tuple(idx, k)) break;
    }
  }
  return true;
}

GameResult k_equivalent(const Model& m, const Model& n, int k,
                        std::span<const std::pair<int, int>> anchor, bool build_trace) {
  check_compatible(m, n);
  GameResult result;
  result.k = k;
  std::vector<std::pair<int, int>> pairs = with_constants(m, n, anchor);

  Game game(m, n);
  result.equivalent = game.verdict(pairs, k);

  if (build_trace && result.equivalent) {
    result.trace.resize(static_cast<std::size_t>(k) + 1);
    // Exhaustive fill: I_j = all anchor extensions (of any length up to
    // |anchor| + (k - j)) that survive j rounds. Nestedness I_{j+1} <= I_j
    // follows from verdict monotonicity in the round count.
    for (int j = 0; j <= k; ++j) {
      for (int extra = 0; extra <= k - j; ++extra) {
        std::vector<int> pick(static_cast<std::size_t>(extra) * 2, 0);
        for (;;) {
          std::vector<std::pair<int, int>> p = pairs;
          for (int i = 0; i < extra; ++i)
            p.emplace_back(pick[static_cast<std::size_t>(2 * i)],
                           pick[static_cast<std::size_t>(2 * i + 1)]);
          if (game.verdict(p, j)) result.trace[static_cast<std::size_t>(j)].push_back(p);
          bool more = false;
          for (std::size_t i = pick.size(); i-- > 0;) {
            const int limit = (i % 2 == 0) ? m.domain_size() : n.domain_size();
            if (++pick[i] < limit) {
              more = true;
              break;
            }
            pick[i] = 0;
          }
          if (!more) break;
        }
      }
    }
  }
  return result;
}

}  // namespace reslat
