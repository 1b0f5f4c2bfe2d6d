#include <algorithm>

#include "causet/error.hpp"
#include "causet/types.hpp"

namespace causet {
namespace {

void require_same(const Mask& a, const Mask& b) {
  if (a.size() != b.size()) throw ArgumentError("mask size mismatch");
}

}  // namespace

std::size_t Mask::count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

Mask& Mask::operator|=(const Mask& o) {
  require_same(*this, o);
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= o.bits_[i];
  return *this;
}

Mask& Mask::operator&=(const Mask& o) {
  require_same(*this, o);
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= o.bits_[i];
  return *this;
}

Mask Mask::operator~() const {
  Mask out(size());
  for (std::size_t i = 0; i < bits_.size(); ++i) out.bits_[i] = bits_[i] ? 0 : 1;
  return out;
}

bool Mask::subset_of(const Mask& o) const {
  require_same(*this, o);
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] && !o.bits_[i]) return false;
  }
  return true;
}

std::vector<NodeId> Mask::nodes() const {
  std::vector<NodeId> out;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) out.push_back(static_cast<NodeId>(i));
  }
  return out;
}

}  // namespace causet
