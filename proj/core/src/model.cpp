#include "reslat/model.hpp"

#include <algorithm>
#include <cmath>

namespace reslat {

bool next_tuple(std::vector<int>& tuple, int n) {
  for (std::size_t i = tuple.size(); i-- > 0;) {
    if (++tuple[i] < n) return true;
    tuple[i] = 0;
  }
  return false;
}

std::size_t tuple_index(std::span<const int> tuple, int n) {
  std::size_t at = 0;
  for (int x : tuple) at = at * static_cast<std::size_t>(n) + static_cast<std::size_t>(x);
  return at;
}

namespace {

std::size_t power(int n, int a) {
  std::size_t p = 1;
  for (int i = 0; i < a; ++i) p *= static_cast<std::size_t>(n);
  return p;
}

}  // namespace

Model::Model(ModelData data) {
  if (!data.algebra) throw Error(ErrorCode::BadDocument, "model needs an algebra");
  algebra_ = std::move(data.algebra);
  sig_ = std::move(data.sig);
  domain_size_ = data.domain_size;
  if (domain_size_ <= 0) throw Error(ErrorCode::BadDocument, "domain must be non-empty");

  if (data.eq_gap) {
    eq_gap_ = *data.eq_gap;
    if (eq_gap_ < 0 || eq_gap_ >= algebra_->size())
      throw Error(ErrorCode::BadDocument, "eq_gap out of range");
  } else {
    // A finite lattice is always bounded, so the natural default
    // e = bottom is always available.
    eq_gap_ = *algebra_->flags().bot;
  }
  if (eq_gap_ == algebra_->unit())
    throw Error(ErrorCode::BadDocument, "eq_gap must differ from the unit");

  relations_.resize(sig_.relations().size());
  for (std::size_t i = 0; i < sig_.relations().size(); ++i) {
    const RelationSymbol& r = sig_.relations()[i];
    auto it = data.relations.find(r.name);
    if (it == data.relations.end())
      throw Error(ErrorCode::BadDocument, "missing interpretation for relation " + r.name);
    const std::size_t want = power(domain_size_, r.arity);
    if (it->second.size() != want)
      throw Error(ErrorCode::BadDocument, "relation " + r.name + " has " +
                                              std::to_string(it->second.size()) +
                                              " values, expected " + std::to_string(want));
    for (Elem v : it->second)
      if (v < 0 || v >= algebra_->size())
        throw Error(ErrorCode::BadDocument, "relation " + r.name + " has a value out of range");
    relations_[i] = it->second;
  }
  if (data.relations.size() != sig_.relations().size())
    throw Error(ErrorCode::BadDocument, "interpretation given for an undeclared relation");

  constants_.resize(sig_.constants().size());
  for (std::size_t i = 0; i < sig_.constants().size(); ++i) {
    auto it = data.constants.find(sig_.constants()[i]);
    if (it == data.constants.end())
      throw Error(ErrorCode::BadDocument, "missing interpretation for constant " + sig_.constants()[i]);
    if (it->second < 0 || it->second >= domain_size_)
      throw Error(ErrorCode::BadDocument, "constant " + sig_.constants()[i] + " out of domain");
    constants_[i] = it->second;
  }
  if (data.constants.size() != sig_.constants().size())
    throw Error(ErrorCode::BadDocument, "interpretation given for an undeclared constant");
}

Elem Model::value(int relation_id, std::span<const int> tuple) const {
  return relations_[static_cast<std::size_t>(relation_id)][tuple_index(tuple, domain_size_)];
}

namespace {

ModelData snapshot(const Model& m) {
  ModelData d;
  d.algebra = m.algebra_ptr();
  d.sig = m.sig();
  d.domain_size = m.domain_size();
  d.eq_gap = m.eq_gap();
  for (std::size_t i = 0; i < m.sig().relations().size(); ++i)
    d.relations[m.sig().relations()[i].name] = m.relation_values(static_cast<int>(i));
  for (std::size_t i = 0; i < m.sig().constants().size(); ++i)
    d.constants[m.sig().constants()[i]] = m.constant(static_cast<int>(i));
  return d;
}

}  // namespace

Model Model::standard_expansion() const {
  ModelData d = snapshot(*this);
  std::vector<RelationSymbol> added;
  for (Elem a = 0; a < algebra_->size(); ++a) {
    const std::string name = "@" + algebra_->label(a);
    if (sig_.relation_id(name)) continue;  // already expanded
    added.push_back(RelationSymbol{name, 0});
    d.relations[name] = {a};
  }
  d.sig = sig_.with_relations(added);
  return Model(std::move(d));
}

Model Model::reduct(const Signature& target) const {
  if (!sig_.extends(target))
    throw Error(ErrorCode::SignatureMismatch, "reduct target is not a prefix of the signature");
  ModelData d = snapshot(*this);
  ModelData out;
  out.algebra = d.algebra;
  out.sig = target;
  out.domain_size = d.domain_size;
  out.eq_gap = d.eq_gap;
  for (const auto& r : target.relations()) out.relations[r.name] = d.relations.at(r.name);
  for (const auto& c : target.constants()) out.constants[c] = d.constants.at(c);
  return Model(std::move(out));
}

Model Model::with_constants(std::span<const int> elements,
                            const std::vector<std::string>& names) const {
  if (elements.size() != names.size())
    throw Error(ErrorCode::BadUsage, "one name per pinned element");
  ModelData d = snapshot(*this);
  d.sig = sig_.with_constants(names);
  for (std::size_t i = 0; i < names.size(); ++i) d.constants[names[i]] = elements[i];
  return Model(std::move(d));
}

Model Model::induced_submodel(const std::vector<int>& elements) const {
  std::vector<int> local(static_cast<std::size_t>(domain_size_), -1);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const int e = elements[i];
    if (e < 0 || e >= domain_size_ || local[static_cast<std::size_t>(e)] != -1 ||
        (i > 0 && elements[i - 1] >= e))
      throw Error(ErrorCode::BadUsage, "substructure elements must be sorted, unique, in-domain");
    local[static_cast<std::size_t>(e)] = static_cast<int>(i);
  }
  const int k = static_cast<int>(elements.size());
  if (k == 0) throw Error(ErrorCode::BadUsage, "substructure must be non-empty");

  ModelData d;
  d.algebra = algebra_;
  d.sig = sig_;
  d.domain_size = k;
  d.eq_gap = eq_gap_;
  for (std::size_t ri = 0; ri < sig_.relations().size(); ++ri) {
    const RelationSymbol& r = sig_.relations()[ri];
    std::vector<Elem> vals(power(k, r.arity));
    std::vector<int> tup(static_cast<std::size_t>(r.arity), 0);
    std::vector<int> parent(static_cast<std::size_t>(r.arity), 0);
    if (r.arity == 0) {
      vals[0] = relations_[ri][0];
    } else {
      do {
        for (int i = 0; i < r.arity; ++i) parent[static_cast<std::size_t>(i)] = elements[static_cast<std::size_t>(tup[static_cast<std::size_t>(i)])];
        vals[tuple_index(tup, k)] = value(static_cast<int>(ri), parent);
      } while (next_tuple(tup, k));
    }
    d.relations[r.name] = std::move(vals);
  }
  for (std::size_t ci = 0; ci < sig_.constants().size(); ++ci) {
    const int mapped = local[static_cast<std::size_t>(constants_[ci])];
    if (mapped < 0)
      throw Error(ErrorCode::BadUsage,
                  "constant " + sig_.constants()[ci] + " falls outside the substructure");
    d.constants[sig_.constants()[ci]] = mapped;
  }
  return Model(std::move(d));
}

bool Model::same_interpretation(const Model& other) const {
  return sig_ == other.sig_ && domain_size_ == other.domain_size_ && eq_gap_ == other.eq_gap_ &&
         relations_ == other.relations_ && constants_ == other.constants_ &&
         algebra_->same_structure(*other.algebra_);
}

}  // namespace reslat
