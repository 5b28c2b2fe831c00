#include "reslat/isomorphism.hpp"

#include <algorithm>

namespace reslat {

namespace {

// For each element: per (relation, position), the sorted multiset of values
// of tuples holding the element at that position. Isomorphic images must
// agree on this profile.
std::vector<std::vector<Elem>> element_profiles(const Model& m) {
  const int n = m.domain_size();
  std::vector<std::vector<Elem>> prof(static_cast<std::size_t>(n));
  for (std::size_t ri = 0; ri < m.sig().relations().size(); ++ri) {
    const int arity = m.sig().relations()[ri].arity;
    if (arity == 0) continue;
    std::vector<int> tup(static_cast<std::size_t>(arity), 0);
    std::vector<std::vector<std::vector<Elem>>> buckets(
        static_cast<std::size_t>(n), std::vector<std::vector<Elem>>(static_cast<std::size_t>(arity)));
    do {
      const Elem v = m.value(static_cast<int>(ri), tup);
      for (int p = 0; p < arity; ++p)
        buckets[static_cast<std::size_t>(tup[static_cast<std::size_t>(p)])][static_cast<std::size_t>(p)]
            .push_back(v);
    } while (next_tuple(tup, n));
    for (int x = 0; x < n; ++x)
      for (int p = 0; p < arity; ++p) {
        auto& b = buckets[static_cast<std::size_t>(x)][static_cast<std::size_t>(p)];
        std::sort(b.begin(), b.end());
        auto& out = prof[static_cast<std::size_t>(x)];
        out.push_back(-1);  // separator between (relation, position) blocks
        out.insert(out.end(), b.begin(), b.end());
      }
  }
  return prof;
}

class Search {
 public:
  Search(const Model& m, const Model& n) : m_(m), n_(n), size_(m.domain_size()) {
    map_.assign(static_cast<std::size_t>(size_), -1);
    used_.assign(static_cast<std::size_t>(size_), 0);
    prof_m_ = element_profiles(m);
    prof_n_ = element_profiles(n);
  }

  bool assign(int x, int y) {
    if (map_[static_cast<std::size_t>(x)] == y) return true;
    if (map_[static_cast<std::size_t>(x)] != -1 || used_[static_cast<std::size_t>(y)]) return false;
    if (prof_m_[static_cast<std::size_t>(x)] != prof_n_[static_cast<std::size_t>(y)]) return false;
    map_[static_cast<std::size_t>(x)] = y;
    used_[static_cast<std::size_t>(y)] = 1;
    if (consistent(x)) return true;
    unassign(x);
    return false;
  }

  void unassign(int x) {
    used_[static_cast<std::size_t>(map_[static_cast<std::size_t>(x)])] = 0;
    map_[static_cast<std::size_t>(x)] = -1;
  }

  bool run(int x) {
    while (x < size_ && map_[static_cast<std::size_t>(x)] != -1) ++x;
    if (x == size_) return true;
    for (int y = 0; y < size_; ++y) {
      if (!assign(x, y)) continue;
      if (run(x + 1)) return true;
      unassign(x);
    }
    return false;
  }

  std::vector<int> result() const { return map_; }

 private:
  // Checks every tuple over the currently assigned elements that involves x.
  bool consistent(int x) const {
    std::vector<int> assigned;
    for (int i = 0; i < size_; ++i)
      if (map_[static_cast<std::size_t>(i)] != -1) assigned.push_back(i);
    for (std::size_t ri = 0; ri < m_.sig().relations().size(); ++ri) {
      const int arity = m_.sig().relations()[ri].arity;
      if (arity == 0) {
        if (m_.relation_values(static_cast<int>(ri))[0] != n_.relation_values(static_cast<int>(ri))[0])
          return false;
        continue;
      }
      std::vector<int> idx(static_cast<std::size_t>(arity), 0);
      std::vector<int> tup(static_cast<std::size_t>(arity));
      std::vector<int> img(static_cast<std::size_t>(arity));
      const int k = static_cast<int>(assigned.size());
      do {
        bool touches_x = false;
        for (int p = 0; p < arity; ++p) {
          tup[static_cast<std::size_t>(p)] = assigned[static_cast<std::size_t>(idx[static_cast<std::size_t>(p)])];
          if (tup[static_cast<std::size_t>(p)] == x) touches_x = true;
        }
        if (touches_x) {
          for (int p = 0; p < arity; ++p)
            img[static_cast<std::size_t>(p)] = map_[static_cast<std::size_t>(tup[static_cast<std::size_t>(p)])];
          if (m_.value(static_cast<int>(ri), tup) != n_.value(static_cast<int>(ri), img)) return false;
        }
      } while (next_tuple(idx, k));
    }
    return true;
  }

  const Model& m_;
  const Model& n_;
  int size_;
  std::vector<int> map_;
  std::vector<char> used_;
  std::vector<std::vector<Elem>> prof_m_, prof_n_;
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Model& m, const Model& n,
                                                 std::span<const std::pair<int, int>> pinned) {
  if (m.sig() != n.sig())
    throw Error(ErrorCode::SignatureMismatch, "isomorphism needs identical signatures");
  if (!m.algebra().same_structure(n.algebra()))
    throw Error(ErrorCode::AlgebraMismatch, "isomorphism needs the same algebra");
  if (m.domain_size() != n.domain_size()) return std::nullopt;

  Search search(m, n);
  for (const auto& [x, y] : pinned)
    if (!search.assign(x, y)) return std::nullopt;
  for (std::size_t ci = 0; ci < m.sig().constants().size(); ++ci)
    if (!search.assign(m.constant(static_cast<int>(ci)), n.constant(static_cast<int>(ci))))
      return std::nullopt;
  if (!search.run(0)) return std::nullopt;
  return search.result();
}

}  // namespace reslat
