#include "covertop/base.hpp"

#include <unordered_map>
#include <unordered_set>

#include "covertop/errors.hpp"
#include "covertop/limits.hpp"

namespace covertop {

struct Base::Impl {
  BaseKind kind = BaseKind::atomic;
  std::vector<std::string> names;
  std::unordered_map<std::string, std::size_t> lookup;
  std::vector<Base> components;  // product: {left, right}; lists/powerset: {atoms}
  std::size_t max_len = 0;
  std::vector<std::vector<std::size_t>> lists;
  std::vector<std::size_t> offsets;  // lists: index of the first list of each length

  void index_names() {
    lookup.reserve(names.size());
    for (std::size_t i = 0; i < names.size(); ++i) lookup.emplace(names[i], i);
  }
};

namespace {

std::string join_names(const Base& atoms, std::span<const std::size_t> items, char open,
                       char close) {
  std::string out(1, open);
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ',';
    out += atoms.name(items[i]);
  }
  out += close;
  return out;
}

}  // namespace

Base Base::atomic(std::vector<std::string> names) {
  if (names.empty()) throw InputError("a base needs at least one element");
  caps::require(names.size(), caps::compound_base, "atomic base");
  std::unordered_set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw InputError("base element names must be non-empty");
    if (!seen.insert(n).second) throw InputError("duplicate base element '" + n + "'");
  }
  auto impl = std::make_shared<Impl>();
  impl->names = std::move(names);
  impl->index_names();
  return Base(std::move(impl));
}

Base Base::product(const Base& left, const Base& right) {
  const std::size_t n = left.size() * right.size();
  caps::require(n, caps::compound_base, "product base");
  auto impl = std::make_shared<Impl>();
  impl->kind = BaseKind::product;
  impl->components = {left, right};
  impl->names.reserve(n);
  for (std::size_t i = 0; i < left.size(); ++i) {
    for (std::size_t j = 0; j < right.size(); ++j) {
      impl->names.push_back("(" + left.name(i) + "," + right.name(j) + ")");
    }
  }
  impl->index_names();
  return Base(std::move(impl));
}

Base Base::lists(const Base& atoms, std::size_t max_len) {
  const std::size_t n = atoms.size();
  std::size_t total = 0;
  std::size_t level = 1;
  for (std::size_t len = 0; len <= max_len; ++len) {
    total += level;
    caps::require(total, caps::compound_base, "list base");
    level *= n;
    if (n == 0) break;
  }
  auto impl = std::make_shared<Impl>();
  impl->kind = BaseKind::lists;
  impl->components = {atoms};
  impl->max_len = max_len;
  impl->lists.reserve(total);
  std::vector<std::vector<std::size_t>> current{{}};
  for (std::size_t len = 0; len <= max_len; ++len) {
    impl->offsets.push_back(impl->lists.size());
    for (const auto& l : current) impl->lists.push_back(l);
    if (len == max_len || n == 0) break;
    std::vector<std::vector<std::size_t>> next;
    next.reserve(current.size() * n);
    for (const auto& l : current) {
      for (std::size_t a = 0; a < n; ++a) {
        auto extended = l;
        extended.push_back(a);
        next.push_back(std::move(extended));
      }
    }
    current = std::move(next);
  }
  impl->names.reserve(impl->lists.size());
  for (const auto& l : impl->lists) impl->names.push_back(join_names(atoms, l, '[', ']'));
  impl->index_names();
  return Base(std::move(impl));
}

Base Base::powerset(const Base& atoms) {
  caps::require(atoms.size(), caps::lattice, "powerset base");
  const std::size_t n = std::size_t{1} << atoms.size();
  caps::require(n, caps::compound_base, "powerset base");
  auto impl = std::make_shared<Impl>();
  impl->kind = BaseKind::powerset;
  impl->components = {atoms};
  impl->names.reserve(n);
  for (std::size_t mask = 0; mask < n; ++mask) {
    std::vector<std::size_t> items;
    for (std::size_t a = 0; a < atoms.size(); ++a) {
      if (mask & (std::size_t{1} << a)) items.push_back(a);
    }
    impl->names.push_back(join_names(atoms, items, '{', '}'));
  }
  impl->index_names();
  return Base(std::move(impl));
}

std::size_t Base::size() const noexcept { return impl().names.size(); }
BaseKind Base::kind() const noexcept { return impl().kind; }

const std::string& Base::name(std::size_t index) const {
  if (index >= size()) throw InputError("element index out of range");
  return impl().names[index];
}

const std::vector<std::string>& Base::names() const noexcept { return impl().names; }

std::optional<std::size_t> Base::find(std::string_view name) const {
  const auto it = impl().lookup.find(std::string(name));
  if (it == impl().lookup.end()) return std::nullopt;
  return it->second;
}

std::size_t Base::index_of(std::string_view name) const {
  if (auto idx = find(name)) return *idx;
  throw InputError("unknown symbol '" + std::string(name) + "'");
}

const Base& Base::left() const {
  if (kind() != BaseKind::product) throw InvariantError("left() on a non-product base");
  return impl().components[0];
}

const Base& Base::right() const {
  if (kind() != BaseKind::product) throw InvariantError("right() on a non-product base");
  return impl().components[1];
}

std::size_t Base::pair(std::size_t l, std::size_t r) const {
  if (l >= left().size() || r >= right().size()) throw InputError("pair index out of range");
  return l * right().size() + r;
}

std::pair<std::size_t, std::size_t> Base::unpair(std::size_t index) const {
  const std::size_t width = right().size();
  if (index >= size()) throw InputError("element index out of range");
  return {index / width, index % width};
}

const Base& Base::atoms() const {
  if (kind() != BaseKind::lists && kind() != BaseKind::powerset) {
    throw InvariantError("atoms() on a base without atoms");
  }
  return impl().components[0];
}

std::size_t Base::max_len() const {
  if (kind() != BaseKind::lists) throw InvariantError("max_len() on a non-list base");
  return impl().max_len;
}

std::span<const std::size_t> Base::list(std::size_t index) const {
  if (kind() != BaseKind::lists) throw InvariantError("list() on a non-list base");
  if (index >= size()) throw InputError("element index out of range");
  return impl().lists[index];
}

std::optional<std::size_t> Base::list_index(std::span<const std::size_t> items) const {
  if (kind() != BaseKind::lists) throw InvariantError("list_index() on a non-list base");
  if (items.size() > impl().max_len) return std::nullopt;
  const std::size_t n = atoms().size();
  std::size_t offset = 0;
  for (std::size_t a : items) {
    if (a >= n) throw InputError("atom index out of range");
    offset = offset * n + a;
  }
  return impl().offsets[items.size()] + offset;
}

std::optional<std::size_t> Base::concat(std::size_t l, std::size_t k) const {
  const auto lhs = list(l);
  const auto rhs = list(k);
  if (lhs.size() + rhs.size() > impl().max_len) return std::nullopt;
  std::vector<std::size_t> joined(lhs.begin(), lhs.end());
  joined.insert(joined.end(), rhs.begin(), rhs.end());
  return list_index(joined);
}

bool operator==(const Base& a, const Base& b) {
  if (a.impl_ == b.impl_) return true;
  const auto& x = a.impl();
  const auto& y = b.impl();
  return x.kind == y.kind && x.max_len == y.max_len && x.names == y.names &&
         x.components == y.components;
}

}  // namespace covertop
