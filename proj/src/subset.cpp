#include "covertop/subset.hpp"

#include "covertop/errors.hpp"
#include "covertop/limits.hpp"

namespace covertop {

namespace {

std::size_t word_count(std::size_t n) { return (n + 63) / 64; }

}  // namespace

Subset::Subset(Base base)
    : base_(std::move(base)), size_(base_.size()), words_(word_count(size_), 0) {}

Subset Subset::full(Base base) {
  Subset s(std::move(base));
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  if (const std::size_t tail = s.size_ % 64; tail != 0) {
    s.words_.back() = (std::uint64_t{1} << tail) - 1;
  }
  return s;
}

Subset Subset::of(Base base, std::initializer_list<std::size_t> elements) {
  return of(std::move(base), std::span<const std::size_t>(elements.begin(), elements.size()));
}

Subset Subset::of(Base base, std::span<const std::size_t> elements) {
  Subset s(std::move(base));
  for (std::size_t e : elements) s.insert(e);
  return s;
}

Subset Subset::named(Base base, std::initializer_list<std::string_view> names) {
  Subset s(base);
  for (auto n : names) s.insert(base.index_of(n));
  return s;
}

Subset Subset::singleton(Base base, std::size_t element) {
  Subset s(std::move(base));
  s.insert(element);
  return s;
}

Subset Subset::from_mask(Base base, std::uint64_t mask) {
  Subset s(std::move(base));
  if (s.size_ < 64 && (mask >> s.size_) != 0) throw InputError("mask exceeds base size");
  if (!s.words_.empty()) s.words_[0] = mask;
  return s;
}

void Subset::check_index(std::size_t element) const {
  if (element >= size_) throw InputError("element index out of range");
}

void Subset::check_same_base(const Subset& other) const {
  if (!base_.same_object(other.base_) && !(base_ == other.base_)) {
    throw BaseMismatch("subsets belong to different bases");
  }
}

bool Subset::contains(std::size_t element) const {
  if (element >= size_) return false;
  return (words_[element / 64] >> (element % 64)) & 1U;
}

void Subset::insert(std::size_t element) {
  check_index(element);
  words_[element / 64] |= std::uint64_t{1} << (element % 64);
}

void Subset::erase(std::size_t element) {
  check_index(element);
  words_[element / 64] &= ~(std::uint64_t{1} << (element % 64));
}

std::size_t Subset::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool Subset::empty() const noexcept {
  for (auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

bool Subset::is_subset_of(const Subset& other) const {
  check_same_base(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool Subset::intersects(const Subset& other) const {
  check_same_base(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

Subset& Subset::operator|=(const Subset& other) {
  check_same_base(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

Subset& Subset::operator&=(const Subset& other) {
  check_same_base(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

Subset& Subset::operator-=(const Subset& other) {
  check_same_base(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

Subset Subset::complement() const { return full(base_) - *this; }

std::vector<std::size_t> Subset::elements() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each([&](std::size_t e) { out.push_back(e); });
  return out;
}

std::vector<std::string> Subset::names() const {
  std::vector<std::string> out;
  for_each([&](std::size_t e) { out.push_back(base_.name(e)); });
  return out;
}

std::uint64_t Subset::mask() const {
  if (size_ > 64) throw InvariantError("mask() on a base with more than 64 elements");
  return words_.empty() ? 0 : words_[0];
}

std::size_t Subset::hash() const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (auto w : words_) {
    h ^= w;
    h *= 1099511628211ULL;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

std::string Subset::to_string() const {
  std::string out = "{";
  bool first = true;
  for_each([&](std::size_t e) {
    if (!first) out += ',';
    first = false;
    out += base_.name(e);
  });
  out += '}';
  return out;
}

bool operator==(const Subset& a, const Subset& b) {
  a.check_same_base(b);
  return a.words_ == b.words_;
}

std::strong_ordering operator<=>(const Subset& a, const Subset& b) {
  a.check_same_base(b);
  for (std::size_t i = a.words_.size(); i-- > 0;) {
    if (a.words_[i] != b.words_[i]) return a.words_[i] <=> b.words_[i];
  }
  return std::strong_ordering::equal;
}

Subset union_of(const Subset& a, const Subset& b) { return a | b; }
Subset intersect(const Subset& a, const Subset& b) { return a & b; }
bool contains(const Subset& u, std::size_t element) { return u.contains(element); }
bool is_subset(const Subset& a, const Subset& b) { return a.is_subset_of(b); }

void for_each_subset(const Base& base, const std::function<void(const Subset&)>& f) {
  caps::require(base.size(), caps::lattice, "subset enumeration");
  const std::uint64_t total = std::uint64_t{1} << base.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) f(Subset::from_mask(base, mask));
}

std::vector<Subset> all_subsets(const Base& base) {
  std::vector<Subset> out;
  for_each_subset(base, [&](const Subset& s) { out.push_back(s); });
  return out;
}

}  // namespace covertop
