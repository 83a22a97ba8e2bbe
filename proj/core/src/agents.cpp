#include "noma/agents.hpp"

#include <bit>
#include <stdexcept>

namespace noma {

std::string to_string(AgentId id) {
  return (id.side == Side::Vehicle ? "v" : "c") + std::to_string(int(id.index));
}

PartnerSet PartnerSet::full(Side side, int universe_size) {
  if (universe_size < 0 || universe_size > kMaxAgentsPerSide) {
    throw std::invalid_argument("universe size out of range");
  }
  std::uint32_t bits = (universe_size == 0) ? 0u : ((1u << universe_size) - 1u);
  return PartnerSet(side, static_cast<std::uint16_t>(bits));
}

PartnerSet PartnerSet::of(Side side, std::initializer_list<int> indices) {
  PartnerSet s(side);
  for (int i : indices) s = s.with(i);
  return s;
}

int PartnerSet::size() const { return std::popcount(bits_); }

bool PartnerSet::contains(AgentId id) const {
  if (id.side != side_) throw std::invalid_argument("agent side does not match set side");
  return contains(int(id.index));
}

PartnerSet PartnerSet::with(int index) const {
  if (index < 0 || index >= kMaxAgentsPerSide) throw std::invalid_argument("agent index out of range");
  return PartnerSet(side_, static_cast<std::uint16_t>(bits_ | (1u << index)));
}

PartnerSet PartnerSet::without(int index) const {
  if (index < 0 || index >= kMaxAgentsPerSide) throw std::invalid_argument("agent index out of range");
  return PartnerSet(side_, static_cast<std::uint16_t>(bits_ & ~(1u << index)));
}

namespace {
void require_same_side(const PartnerSet& a, const PartnerSet& b) {
  if (a.side() != b.side()) throw std::invalid_argument("partner sets are from different sides");
}
}  // namespace

PartnerSet PartnerSet::unite(const PartnerSet& other) const {
  require_same_side(*this, other);
  return PartnerSet(side_, static_cast<std::uint16_t>(bits_ | other.bits_));
}

PartnerSet PartnerSet::intersect(const PartnerSet& other) const {
  require_same_side(*this, other);
  return PartnerSet(side_, static_cast<std::uint16_t>(bits_ & other.bits_));
}

PartnerSet PartnerSet::minus(const PartnerSet& other) const {
  require_same_side(*this, other);
  return PartnerSet(side_, static_cast<std::uint16_t>(bits_ & ~other.bits_));
}

bool PartnerSet::is_subset_of(const PartnerSet& other) const {
  require_same_side(*this, other);
  return (bits_ & other.bits_) == bits_;
}

std::vector<int> PartnerSet::indices() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint32_t rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(std::countr_zero(rest));
  }
  return out;
}

std::vector<AgentId> PartnerSet::members() const {
  std::vector<AgentId> out;
  out.reserve(size());
  for (int i : indices()) out.push_back(AgentId{side_, static_cast<std::uint8_t>(i)});
  return out;
}

std::string to_string(const PartnerSet& set) {
  if (set.empty_set()) return "-";
  std::string out;
  for (int i : set.indices()) {
    if (!out.empty()) out += ' ';
    out += to_string(AgentId{set.side(), static_cast<std::uint8_t>(i)});
  }
  return out;
}

}  // namespace noma
