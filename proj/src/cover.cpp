#include "covertop/cover.hpp"

#include <list>
#include <optional>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

#include "covertop/errors.hpp"
#include "covertop/limits.hpp"

namespace covertop {

namespace {

class LruCache {
 public:
  explicit LruCache(std::size_t capacity) : capacity_(capacity) {}

  std::optional<Subset> get(const Subset& key) {
    std::lock_guard lock(mutex_);
    auto it = index_.find(key);
    if (it == index_.end()) return std::nullopt;
    order_.splice(order_.begin(), order_, it->second);
    return it->second->second;
  }

  void put(const Subset& key, const Subset& value) {
    if (capacity_ == 0) return;
    std::lock_guard lock(mutex_);
    if (auto it = index_.find(key); it != index_.end()) {
      order_.splice(order_.begin(), order_, it->second);
      return;
    }
    order_.emplace_front(key, value);
    index_.emplace(key, order_.begin());
    if (order_.size() > capacity_) {
      index_.erase(order_.back().first);
      order_.pop_back();
    }
  }

  std::size_t size() const {
    std::lock_guard lock(mutex_);
    return order_.size();
  }

 private:
  using Entry = std::pair<Subset, Subset>;
  std::size_t capacity_;
  mutable std::mutex mutex_;
  std::list<Entry> order_;
  std::unordered_map<Subset, std::list<Entry>::iterator> index_;
};

// Forward-chaining closure: each axiom keeps a count of cover elements not yet
// in P; when it reaches zero the head is added.
class Engine {
 public:
  explicit Engine(const AxiomSet& axioms) : base_(axioms.base()), watchers_(base_.size()) {
    std::vector<std::unordered_set<Subset>> seen(base_.size());
    for (std::size_t a = 0; a < base_.size(); ++a) {
      for (const auto& ax : axioms.of(a)) {
        if (ax.cover.contains(a)) continue;
        if (!seen[a].insert(ax.cover).second) continue;
        const std::size_t k = heads_.size();
        heads_.push_back(a);
        covers_.push_back(ax.cover);
        sizes_.push_back(ax.cover.count());
        ax.cover.for_each([&](std::size_t x) { watchers_[x].push_back(k); });
      }
    }
  }

  Subset run(const Subset& u) const {
    if (!(u.base() == base_)) throw BaseMismatch("saturating a subset of a different base");
    Subset p = u;
    std::vector<std::size_t> remaining(heads_.size());
    std::vector<std::size_t> queue;
    for (std::size_t k = 0; k < heads_.size(); ++k) {
      remaining[k] = sizes_[k] - (covers_[k] & u).count();
      if (remaining[k] == 0 && !p.contains(heads_[k])) {
        p.insert(heads_[k]);
        queue.push_back(heads_[k]);
      }
    }
    while (!queue.empty()) {
      const std::size_t x = queue.back();
      queue.pop_back();
      for (std::size_t k : watchers_[x]) {
        if (--remaining[k] == 0 && !p.contains(heads_[k])) {
          p.insert(heads_[k]);
          queue.push_back(heads_[k]);
        }
      }
    }
    return p;
  }

 private:
  Base base_;
  std::vector<std::size_t> heads_;
  std::vector<Subset> covers_;
  std::vector<std::size_t> sizes_;
  std::vector<std::vector<std::size_t>> watchers_;
};

}  // namespace

struct Cover::State {
  Base base;
  Closure closure;
  LruCache cache;
  State(Base b, Closure c, std::size_t capacity)
      : base(std::move(b)), closure(std::move(c)), cache(capacity) {}
};

Cover::Cover(Base base, Closure closure, std::size_t cache_capacity)
    : state_(std::make_shared<State>(std::move(base), std::move(closure), cache_capacity)) {}

const Base& Cover::base() const noexcept { return state_->base; }

Subset Cover::saturate(const Subset& u) const {
  if (!(u.base() == state_->base)) throw BaseMismatch("saturating a subset of a different base");
  if (auto hit = state_->cache.get(u)) return *hit;
  Subset result = state_->closure(u);
  state_->cache.put(u, result);
  return result;
}

Subset Cover::saturate(std::size_t element) const {
  return saturate(Subset::singleton(state_->base, element));
}

bool Cover::covers(std::size_t a, const Subset& u) const { return saturate(u).contains(a); }

bool Cover::covers(const Subset& u, const Subset& v) const {
  return u.is_subset_of(saturate(v));
}

bool Cover::eq_mod(const Subset& u, const Subset& v) const { return saturate(u) == saturate(v); }

bool Cover::is_saturated(const Subset& u) const { return saturate(u) == u; }

std::size_t Cover::cache_size() const { return state_->cache.size(); }

namespace {

void check_generation_cap(const Base& base) {
  if (base.kind() == BaseKind::atomic) {
    caps::require(base.size(), caps::atomic_base, "saturation");
  } else {
    caps::require(base.size(), caps::compound_base, "saturation");
  }
}

Cover::Closure engine_closure(const AxiomSet& axioms) {
  check_generation_cap(axioms.base());
  auto engine = std::make_shared<const Engine>(axioms);
  return [engine](const Subset& u) { return engine->run(u); };
}

}  // namespace

GeneratedCover::GeneratedCover(AxiomSet axioms, std::size_t cache_capacity)
    : axioms_(std::make_shared<const AxiomSet>(std::move(axioms))),
      cover_(axioms_->base(), engine_closure(*axioms_), cache_capacity) {}

Subset saturate(const Cover& cover, const Subset& u) { return cover.saturate(u); }
bool covers(const Cover& cover, std::size_t a, const Subset& u) { return cover.covers(a, u); }
bool covers_subset(const Cover& cover, const Subset& u, const Subset& v) {
  return cover.covers(u, v);
}
bool eq_mod_A(const Cover& cover, const Subset& u, const Subset& v) {
  return cover.eq_mod(u, v);
}

Subset saturate_uncached(const AxiomSet& axioms, const Subset& u) {
  check_generation_cap(axioms.base());
  return Engine(axioms).run(u);
}

}  // namespace covertop
