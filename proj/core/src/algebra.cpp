#include "reslat/algebra.hpp"

#include <algorithm>
#include <numeric>

namespace reslat {

namespace {

std::string table_name(const std::vector<Elem> OperationTables::*table) {
  if (table == &OperationTables::meet) return "meet";
  if (table == &OperationTables::join) return "join";
  if (table == &OperationTables::fuse) return "fuse";
  if (table == &OperationTables::lres) return "lres";
  return "rres";
}

void check_shape(const OperationTables& t, const std::vector<Elem> OperationTables::*table) {
  const std::size_t n = t.labels.size();
  const auto& m = t.*table;
  if (m.size() != n * n)
    throw Error(ErrorCode::BadTables, table_name(table) + " table has " +
                                          std::to_string(m.size()) + " entries, expected " +
                                          std::to_string(n * n));
  for (Elem v : m)
    if (v < 0 || static_cast<std::size_t>(v) >= n)
      throw Error(ErrorCode::BadTables,
                  table_name(table) + " table entry " + std::to_string(v) + " out of range");
}

std::string fraction_label(int k, int d) {
  if (k == 0) return "0";
  if (k == d) return "1";
  const int g = std::gcd(k, d);
  return std::to_string(k / g) + "/" + std::to_string(d / g);
}

}  // namespace

ResiduatedLattice ResiduatedLattice::validate(OperationTables tables) {
  const int n = static_cast<int>(tables.labels.size());
  if (n < 2) throw Error(ErrorCode::TrivialCarrier, "carrier has fewer than two elements");
  if (tables.unit < 0 || tables.unit >= n)
    throw Error(ErrorCode::BadTables, "unit index out of range");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (tables.labels[i] == tables.labels[j])
        throw Error(ErrorCode::BadTables, "duplicate label '" + tables.labels[i] + "'");
  check_shape(tables, &OperationTables::meet);
  check_shape(tables, &OperationTables::join);
  check_shape(tables, &OperationTables::fuse);
  check_shape(tables, &OperationTables::lres);
  check_shape(tables, &OperationTables::rres);

  ResiduatedLattice r;
  r.t_ = std::move(tables);
  const auto& t = r.t_;
  auto mt = [&](Elem a, Elem b) { return t.meet[r.idx(a, b)]; };
  auto jn = [&](Elem a, Elem b) { return t.join[r.idx(a, b)]; };
  auto fu = [&](Elem a, Elem b) { return t.fuse[r.idx(a, b)]; };

  auto lattice_fail = [&](const char* law, int a, int b, int c) {
    throw Error(ErrorCode::LatticeViolation,
                std::string(law) + " fails at (" + t.labels[a] + ", " + t.labels[b] + ", " +
                    t.labels[c] + ")",
                std::array<int, 3>{a, b, c});
  };

  for (Elem a = 0; a < n; ++a) {
    if (mt(a, a) != a) lattice_fail("meet idempotence", a, a, a);
    if (jn(a, a) != a) lattice_fail("join idempotence", a, a, a);
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (mt(a, b) != mt(b, a)) lattice_fail("meet commutativity", a, b, b);
      if (jn(a, b) != jn(b, a)) lattice_fail("join commutativity", a, b, b);
      if (mt(a, jn(a, b)) != a) lattice_fail("absorption meet-join", a, b, b);
      if (jn(a, mt(a, b)) != a) lattice_fail("absorption join-meet", a, b, b);
    }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        if (mt(mt(a, b), c) != mt(a, mt(b, c))) lattice_fail("meet associativity", a, b, c);
        if (jn(jn(a, b), c) != jn(a, jn(b, c))) lattice_fail("join associativity", a, b, c);
      }

  for (Elem a = 0; a < n; ++a) {
    if (fu(t.unit, a) != a || fu(a, t.unit) != a)
      throw Error(ErrorCode::MonoidViolation,
                  "unit law fails at (" + t.labels[t.unit] + ", " + t.labels[a] + ")",
                  std::array<int, 3>{t.unit, a, a});
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (fu(fu(a, b), c) != fu(a, fu(b, c)))
          throw Error(ErrorCode::MonoidViolation,
                      "fuse associativity fails at (" + t.labels[a] + ", " + t.labels[b] + ", " +
                          t.labels[c] + ")",
                      std::array<int, 3>{a, b, c});

  r.leq_.assign(static_cast<std::size_t>(n) * n, 0);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) r.leq_[r.idx(a, b)] = (mt(a, b) == a) ? 1 : 0;

  // a <= c/b iff a*b <= c iff b <= a\c
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        const bool mid = r.leq(fu(a, b), c);
        if (r.leq(a, t.rres[r.idx(c, b)]) != mid || r.leq(b, t.lres[r.idx(a, c)]) != mid)
          throw Error(ErrorCode::ResiduationViolation,
                      "residuation fails at (" + t.labels[a] + ", " + t.labels[b] + ", " +
                          t.labels[c] + ")",
                      std::array<int, 3>{a, b, c});
      }

  r.flags_ = compute_flags(r);
  return r;
}

AlgebraFlags compute_flags(const ResiduatedLattice& a) {
  const int n = a.size();
  AlgebraFlags f;

  f.is_chain = true;
  for (Elem x = 0; x < n && f.is_chain; ++x)
    for (Elem y = 0; y < n; ++y)
      if (!a.leq(x, y) && !a.leq(y, x)) {
        f.is_chain = false;
        break;
      }

  f.well_connected = true;
  for (Elem x = 0; x < n && f.well_connected; ++x)
    for (Elem y = 0; y < n; ++y)
      if (a.designated(a.join(x, y)) && !a.designated(x) && !a.designated(y)) {
        f.well_connected = false;
        break;
      }

  for (Elem c = 0; c < n; ++c) {
    bool is_bot = true, is_top = true;
    for (Elem x = 0; x < n; ++x) {
      if (!a.leq(c, x)) is_bot = false;
      if (!a.leq(x, c)) is_top = false;
    }
    if (is_bot) f.bot = c;
    if (is_top) f.top = c;
  }

  for (Elem c = 0; c < n; ++c) {
    if (c == a.unit()) continue;
    bool ok = true;
    for (Elem x = 0; x < n; ++x)
      if (a.leq(x, c) != !a.designated(x)) {
        ok = false;
        break;
      }
    if (ok) {
      f.co_atom = c;
      break;
    }
  }

  if (f.bot) {
    bool zd = false;
    for (Elem x = 0; x < n && !zd; ++x)
      for (Elem y = 0; y < n; ++y)
        if (x != *f.bot && y != *f.bot && a.fuse(x, y) == *f.bot) {
          zd = true;
          break;
        }
    f.has_zero_divisors = zd;
  }

  for (Elem x = 0; x < n; ++x)
    if (a.designated(x)) f.up_set_of_unit.push_back(x);

  return f;
}

ResiduatedLattice ResiduatedLattice::builtin(BuiltinAlgebra which, int n) {
  if (which == BuiltinAlgebra::boolean2) {
    if (n != 2) throw Error(ErrorCode::SizeTooSmall, "boolean2 requires n == 2");
    which = BuiltinAlgebra::lukasiewicz_n;
  }
  if (n < 2) throw Error(ErrorCode::SizeTooSmall, "chain needs at least two elements");

  const int d = n - 1;
  OperationTables t;
  t.labels.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k <= d; ++k) t.labels.push_back(fraction_label(k, d));
  t.unit = d;
  const std::size_t nn = static_cast<std::size_t>(n) * n;
  t.meet.resize(nn);
  t.join.resize(nn);
  t.fuse.resize(nn);
  t.lres.resize(nn);
  t.rres.resize(nn);

  // Carrier element i stands for i/(n-1); formulas act on the numerators.
  auto fuse_of = [&](int i, int j) {
    if (which == BuiltinAlgebra::lukasiewicz_n) return std::max(0, i + j - d);
    return std::min(i, j);  // Goedel
  };
  auto res_of = [&](int i, int j) {
    if (i <= j) return d;
    if (which == BuiltinAlgebra::lukasiewicz_n) return std::min(d, d - i + j);
    return j;  // Goedel
  };

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const std::size_t at = static_cast<std::size_t>(i) * n + j;
      t.meet[at] = std::min(i, j);
      t.join[at] = std::max(i, j);
      t.fuse[at] = fuse_of(i, j);
      t.lres[at] = res_of(i, j);  // commutative: both residuals coincide
      t.rres[at] = res_of(j, i);  // a/b = b -> a
    }
  return validate(std::move(t));
}

ResiduatedLattice ResiduatedLattice::relabeled(std::vector<std::string> labels) const {
  if (labels.size() != t_.labels.size())
    throw Error(ErrorCode::BadUsage, "relabeled needs one label per carrier element");
  OperationTables t = t_;
  t.labels = std::move(labels);
  return validate(std::move(t));
}

std::optional<Elem> ResiduatedLattice::element_of(std::string_view label) const {
  for (std::size_t i = 0; i < t_.labels.size(); ++i)
    if (t_.labels[i] == label) return static_cast<Elem>(i);
  return std::nullopt;
}

bool ResiduatedLattice::same_structure(const ResiduatedLattice& other) const {
  return t_.unit == other.t_.unit && t_.labels.size() == other.t_.labels.size() &&
         t_.meet == other.t_.meet && t_.join == other.t_.join && t_.fuse == other.t_.fuse &&
         t_.lres == other.t_.lres && t_.rres == other.t_.rres;
}

}  // namespace reslat
