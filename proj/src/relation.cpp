#include "covertop/relation.hpp"

#include "covertop/errors.hpp"

namespace covertop {

Relation::Relation(Base source, Base target)
    : source_(std::move(source)), target_(std::move(target)) {
  preimages_.reserve(target_.size());
  for (std::size_t b = 0; b < target_.size(); ++b) preimages_.emplace_back(source_);
}

Relation Relation::from_pairs(Base source, Base target,
                              const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  Relation r(std::move(source), std::move(target));
  for (auto [a, b] : pairs) r.relate(a, b);
  return r;
}

Relation Relation::from_preimages(Base source, Base target, std::vector<Subset> preimages) {
  if (preimages.size() != target.size()) {
    throw InputError("relation needs one preimage per target element");
  }
  for (const auto& p : preimages) {
    if (!(p.base() == source)) throw BaseMismatch("preimage over a different base");
  }
  Relation r(std::move(source), std::move(target));
  r.preimages_ = std::move(preimages);
  return r;
}

Relation Relation::identity(const Base& base) {
  Relation r(base, base);
  for (std::size_t a = 0; a < base.size(); ++a) r.relate(a, a);
  return r;
}

void Relation::relate(std::size_t a, std::size_t b) {
  if (a >= source_.size() || b >= target_.size()) throw InputError("relation pair out of range");
  preimages_[b].insert(a);
}

bool Relation::related(std::size_t a, std::size_t b) const {
  return b < target_.size() && preimages_[b].contains(a);
}

const Subset& Relation::preimage(std::size_t b) const {
  if (b >= target_.size()) throw InputError("target element out of range");
  return preimages_[b];
}

Subset Relation::rminus(const Subset& v) const {
  if (!(v.base() == target_)) throw BaseMismatch("r^- applied to a subset of another base");
  Subset out(source_);
  v.for_each([&](std::size_t b) { out |= preimages_[b]; });
  return out;
}

Relation Relation::transpose() const {
  Relation t(target_, source_);
  for (std::size_t b = 0; b < target_.size(); ++b) {
    preimages_[b].for_each([&](std::size_t a) { t.relate(b, a); });
  }
  return t;
}

std::vector<std::pair<std::size_t, std::size_t>> Relation::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < source_.size(); ++a) {
    for (std::size_t b = 0; b < target_.size(); ++b) {
      if (preimages_[b].contains(a)) out.emplace_back(a, b);
    }
  }
  return out;
}

bool operator==(const Relation& a, const Relation& b) {
  return a.source_ == b.source_ && a.target_ == b.target_ && a.preimages_ == b.preimages_;
}

Subset rminus(const Relation& r, const Subset& v) { return r.rminus(v); }

Relation compose(const Relation& r, const Relation& s) {
  if (!(r.target() == s.source())) throw BaseMismatch("composing relations with mismatched bases");
  std::vector<Subset> preimages;
  preimages.reserve(s.target().size());
  for (std::size_t c = 0; c < s.target().size(); ++c) {
    preimages.push_back(r.rminus(s.preimage(c)));
  }
  return Relation::from_preimages(r.source(), s.target(), std::move(preimages));
}

Relation identity(const Base& base) { return Relation::identity(base); }

}  // namespace covertop
