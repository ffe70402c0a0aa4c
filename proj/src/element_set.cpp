#include "modlat/element_set.hpp"

#include "modlat/error.hpp"

namespace modlat {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::closure_exceeds_cap: return "ClosureExceedsCap";
    case Errc::invalid_permutation: return "InvalidPermutation";
    case Errc::not_a_group: return "NotAGroup";
    case Errc::not_normal: return "NotNormal";
    case Errc::not_an_action: return "NotAnAction";
    case Errc::not_prime: return "NotPrime";
    case Errc::bad_depth: return "BadDepth";
    case Errc::bad_ordering: return "BadOrdering";
    case Errc::unknown_name: return "UnknownName";
    case Errc::bad_parameters: return "BadParameters";
    case Errc::unknown_selector: return "UnknownSelector";
    case Errc::load_error: return "LoadError";
    case Errc::internal: return "InternalError";
  }
  return "Error";
}

SubgroupSet SubgroupSet::from_members(std::size_t universe, std::span<const Elem> members) {
  SubgroupSet s(universe);
  for (Elem e : members) s.insert(e);
  return s;
}

SubgroupSet SubgroupSet::full(std::size_t universe) {
  SubgroupSet s(universe);
  for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~std::uint64_t{0};
  if (const std::size_t tail = universe % 64; tail != 0)
    s.words_.back() = (std::uint64_t{1} << tail) - 1;
  return s;
}

std::size_t SubgroupSet::size() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool SubgroupSet::empty() const noexcept {
  for (auto w : words_)
    if (w != 0) return false;
  return true;
}

bool SubgroupSet::is_subset_of(const SubgroupSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  return true;
}

bool SubgroupSet::intersects(const SubgroupSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & other.words_[i]) != 0) return true;
  return false;
}

SubgroupSet& SubgroupSet::operator&=(const SubgroupSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

SubgroupSet& SubgroupSet::operator|=(const SubgroupSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

std::vector<Elem> SubgroupSet::members() const {
  std::vector<Elem> out;
  out.reserve(size());
  for_each([&](Elem e) { out.push_back(e); });
  return out;
}

std::size_t SubgroupSet::hash() const noexcept {
  std::uint64_t h = 1469598103934665603ull ^ universe_;
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

bool canonical_less(const SubgroupSet& a, const SubgroupSet& b) noexcept {
  const std::size_t sa = a.size();
  const std::size_t sb = b.size();
  if (sa != sb) return sa < sb;
  // Equal cardinality: the set holding the lowest differing element sorts first.
  const auto ma = a.members();
  const auto mb = b.members();
  for (std::size_t i = 0; i < ma.size(); ++i)
    if (ma[i] != mb[i]) return ma[i] < mb[i];
  return false;
}

}  // namespace modlat
