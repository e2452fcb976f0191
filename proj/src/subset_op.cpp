#include "covertop/subset_op.hpp"

#include <string>

#include "covertop/errors.hpp"
#include "covertop/limits.hpp"

namespace covertop {

struct SubsetOp::Impl {
  OpKind kind = OpKind::table;
  Base base;
  std::vector<Subset> table;
  std::vector<char> defined;
  bool partial = false;
  std::vector<char> leq;               // preorder: n*n matrix
  std::vector<std::size_t> product;    // monoid: n*n table
  std::optional<std::size_t> unit;

  explicit Impl(Base b) : base(std::move(b)) {}
  std::size_t n() const { return base.size(); }
};

namespace {

void require_table_size(const Base& base, std::size_t entries) {
  caps::require(base.size(), caps::compound_base, "operation table");
  if (entries != base.size() * base.size()) {
    throw InputError("operation table must have " + std::to_string(base.size() * base.size()) +
                     " entries, got " + std::to_string(entries));
  }
}

}  // namespace

SubsetOp SubsetOp::from_table(Base base, std::vector<Subset> entries) {
  require_table_size(base, entries.size());
  auto impl = std::make_shared<Impl>(base);
  for (const auto& e : entries) {
    if (!(e.base() == base)) throw BaseMismatch("operation value over a different base");
  }
  impl->table = std::move(entries);
  impl->defined.assign(impl->table.size(), 1);
  return SubsetOp(std::move(impl));
}

SubsetOp SubsetOp::from_function(Base base,
                                 const std::function<Subset(std::size_t, std::size_t)>& delta) {
  std::vector<Subset> entries;
  entries.reserve(base.size() * base.size());
  for (std::size_t a = 0; a < base.size(); ++a) {
    for (std::size_t b = 0; b < base.size(); ++b) entries.push_back(delta(a, b));
  }
  return from_table(std::move(base), std::move(entries));
}

SubsetOp SubsetOp::from_partial_table(Base base, std::vector<std::optional<Subset>> entries) {
  require_table_size(base, entries.size());
  auto impl = std::make_shared<Impl>(base);
  impl->table.reserve(entries.size());
  impl->defined.reserve(entries.size());
  for (auto& e : entries) {
    impl->defined.push_back(e.has_value() ? 1 : 0);
    if (e) {
      if (!(e->base() == base)) throw BaseMismatch("operation value over a different base");
      impl->table.push_back(std::move(*e));
    } else {
      impl->partial = true;
      impl->table.emplace_back(base);
    }
  }
  return SubsetOp(std::move(impl));
}

SubsetOp SubsetOp::from_preorder(Base base,
                                 const std::vector<std::pair<std::size_t, std::size_t>>& leq) {
  const std::size_t n = base.size();
  caps::require(n, caps::compound_base, "preorder");
  auto impl = std::make_shared<Impl>(base);
  impl->kind = OpKind::preorder;
  impl->leq.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) impl->leq[a * n + a] = 1;
  for (auto [a, b] : leq) {
    if (a >= n || b >= n) throw InputError("preorder pair out of range");
    impl->leq[a * n + b] = 1;
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!impl->leq[a * n + b]) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (impl->leq[b * n + c] && !impl->leq[a * n + c]) {
          throw InputError("non-transitive preorder: " + base.name(a) + "<=" + base.name(b) +
                           " and " + base.name(b) + "<=" + base.name(c) + " but not " +
                           base.name(a) + "<=" + base.name(c));
        }
      }
    }
  }
  impl->table.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      Subset down(base);
      for (std::size_t x = 0; x < n; ++x) {
        if (impl->leq[x * n + a] && impl->leq[x * n + b]) down.insert(x);
      }
      impl->table.push_back(std::move(down));
    }
  }
  impl->defined.assign(n * n, 1);
  return SubsetOp(std::move(impl));
}

SubsetOp SubsetOp::from_monoid(Base base, std::vector<std::size_t> product,
                               std::optional<std::size_t> unit) {
  require_table_size(base, product.size());
  const std::size_t n = base.size();
  for (auto p : product) {
    if (p >= n) throw InputError("monoid product out of range");
  }
  auto mul = [&](std::size_t a, std::size_t b) { return product[a * n + b]; };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
          throw InputError("monoid table is not associative at (" + base.name(a) + "," +
                           base.name(b) + "," + base.name(c) + ")");
        }
      }
    }
  }
  if (unit) {
    if (*unit >= n) throw InputError("monoid unit out of range");
    for (std::size_t a = 0; a < n; ++a) {
      if (mul(*unit, a) != a || mul(a, *unit) != a) {
        throw InputError("'" + base.name(*unit) + "' is not a unit for the monoid table");
      }
    }
  }
  auto impl = std::make_shared<Impl>(base);
  impl->kind = OpKind::monoid;
  impl->unit = unit;
  impl->table.reserve(n * n);
  for (auto p : product) impl->table.push_back(Subset::singleton(base, p));
  impl->product = std::move(product);
  impl->defined.assign(n * n, 1);
  return SubsetOp(std::move(impl));
}

OpKind SubsetOp::kind() const noexcept { return impl_->kind; }
const Base& SubsetOp::base() const noexcept { return impl_->base; }
bool SubsetOp::is_partial() const noexcept { return impl_->partial; }

bool SubsetOp::defined(std::size_t a, std::size_t b) const {
  const std::size_t n = impl_->n();
  if (a >= n || b >= n) throw InputError("element index out of range");
  return impl_->defined[a * n + b] != 0;
}

const Subset& SubsetOp::at(std::size_t a, std::size_t b) const {
  const std::size_t n = impl_->n();
  if (a >= n || b >= n) throw InputError("element index out of range");
  return impl_->table[a * n + b];
}

SubsetOp::Checked SubsetOp::lift_checked(const Subset& u, const Subset& v) const {
  if (!(u.base() == impl_->base) || !(v.base() == impl_->base)) {
    throw BaseMismatch("lift over a different base");
  }
  const std::size_t n = impl_->n();
  Checked out{Subset(impl_->base), false};
  const auto vs = v.elements();
  u.for_each([&](std::size_t a) {
    for (std::size_t b : vs) {
      const std::size_t k = a * n + b;
      if (impl_->defined[k]) {
        out.value |= impl_->table[k];
      } else {
        out.overflow = true;
      }
    }
  });
  return out;
}

Subset SubsetOp::lift(const Subset& u, const Subset& v) const { return lift_checked(u, v).value; }

Subset SubsetOp::lift(std::size_t a, const Subset& v) const {
  return lift(Subset::singleton(impl_->base, a), v);
}

Subset SubsetOp::lift(const Subset& u, std::size_t b) const {
  return lift(u, Subset::singleton(impl_->base, b));
}

bool SubsetOp::leq(std::size_t a, std::size_t b) const {
  if (impl_->kind != OpKind::preorder) throw InvariantError("leq() on a non-preorder operation");
  const std::size_t n = impl_->n();
  if (a >= n || b >= n) throw InputError("element index out of range");
  return impl_->leq[a * n + b] != 0;
}

std::size_t SubsetOp::product(std::size_t a, std::size_t b) const {
  if (impl_->kind != OpKind::monoid) throw InvariantError("product() on a non-monoid operation");
  const std::size_t n = impl_->n();
  if (a >= n || b >= n) throw InputError("element index out of range");
  return impl_->product[a * n + b];
}

std::optional<std::size_t> SubsetOp::monoid_unit() const { return impl_->unit; }

bool operator==(const SubsetOp& a, const SubsetOp& b) {
  if (a.impl_ == b.impl_) return true;
  return a.impl_->base == b.impl_->base && a.impl_->table == b.impl_->table &&
         a.impl_->defined == b.impl_->defined;
}

}  // namespace covertop
