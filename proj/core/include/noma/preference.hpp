#pragma once

#include <variant>
#include <vector>

#include "noma/agents.hpp"

namespace noma {

enum class Ordering { Better, Worse, Equal, Incomparable };

constexpr Ordering flip(Ordering o) {
  if (o == Ordering::Better) return Ordering::Worse;
  if (o == Ordering::Worse) return Ordering::Better;
  return o;
}

/// Strict ranking over subsets of the opposite side, best first.
/// The empty set sits strictly below every listed set; any non-empty set
/// that is not listed is unacceptable, i.e. strictly below the empty set.
/// Listing the empty set or a duplicate is a construction error.
struct RankedPreference {
  AgentId owner;
  std::vector<PartnerSet> ranking;
};

/// Additive utility over individual partners plus a capacity quota.
/// The induced ordering compares the summed utility of a set's top-quota
/// strictly positive members; non-positive partners are unacceptable.
struct ResponsivePreference {
  AgentId owner;
  std::vector<double> utility;  // indexed by partner index; missing == 0
  int quota = 1;
};

using Preference = std::variant<RankedPreference, ResponsivePreference>;

AgentId owner(const Preference& pref);
Side partner_side(const Preference& pref);

/// Throws std::invalid_argument when structural invariants are broken
/// (duplicate or empty ranked entries, wrong-side sets, quota < 1,
///  non-finite utilities, members beyond the partner universe).
void validate_preference(const Preference& pref, int partner_universe_size);

/// The owner's most preferred subset of `offered`.
/// Ranked: the best listed subset of `offered`, or the empty set.
/// Responsive: up to `quota` positive-utility members, highest utility
/// first, ties broken by ascending partner index.
/// Always satisfies choose(choose(S)) == choose(S) and choose(S) subset-of S.
PartnerSet choose(const Preference& pref, const PartnerSet& offered);

/// Compares two subsets of the partner universe from the owner's viewpoint.
/// Ranked: list positions; any listed set beats the empty set, which beats
/// every unlisted non-empty set; distinct unlisted sets are incomparable.
/// Responsive: induced utility values; equal values compare Equal.
Ordering prefers(const Preference& pref, const PartnerSet& a, const PartnerSet& b);

/// Induced value of a set under a responsive preference (top-quota sum).
double responsive_value(const ResponsivePreference& pref, const PartnerSet& set);

}  // namespace noma
