#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace noma {

enum class Side : std::uint8_t { Vehicle, Channel };

constexpr Side opposite(Side s) {
  return s == Side::Vehicle ? Side::Channel : Side::Vehicle;
}

/// Hard cap on the population of one side; subsets are exact 16-bit masks.
inline constexpr int kMaxAgentsPerSide = 16;

struct AgentId {
  Side side;
  std::uint8_t index;

  friend constexpr auto operator<=>(const AgentId&, const AgentId&) = default;
};

constexpr AgentId vehicle(int index) {
  return AgentId{Side::Vehicle, static_cast<std::uint8_t>(index)};
}
constexpr AgentId channel(int index) {
  return AgentId{Side::Channel, static_cast<std::uint8_t>(index)};
}

/// Renders "v3" or "c1".
std::string to_string(AgentId id);

/// A subset of one side's agents. All set algebra is exact bit arithmetic;
/// mixing sides throws std::invalid_argument.
class PartnerSet {
 public:
  explicit PartnerSet(Side side, std::uint16_t bits = 0) : side_(side), bits_(bits) {}

  static PartnerSet empty(Side side) { return PartnerSet(side); }
  static PartnerSet full(Side side, int universe_size);
  static PartnerSet of(Side side, std::initializer_list<int> indices);

  Side side() const { return side_; }
  std::uint16_t bits() const { return bits_; }

  bool empty_set() const { return bits_ == 0; }
  int size() const;

  bool contains(int index) const { return (bits_ >> index) & 1u; }
  bool contains(AgentId id) const;

  PartnerSet with(int index) const;
  PartnerSet without(int index) const;

  PartnerSet unite(const PartnerSet& other) const;
  PartnerSet intersect(const PartnerSet& other) const;
  PartnerSet minus(const PartnerSet& other) const;
  bool is_subset_of(const PartnerSet& other) const;

  /// Member indices in ascending order.
  std::vector<int> indices() const;
  std::vector<AgentId> members() const;

  friend bool operator==(const PartnerSet&, const PartnerSet&) = default;

 private:
  Side side_;
  std::uint16_t bits_;
};

/// Space-separated member ids in ascending order; "-" for the empty set.
std::string to_string(const PartnerSet& set);

}  // namespace noma
