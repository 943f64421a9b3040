#ifndef VOTOPES_ELECTIONS_HPP
#define VOTOPES_ELECTIONS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "votopes/polytope.hpp"

namespace votopes {

// Preference orders for n candidates, listed lexicographically starting
// with 1 > 2 > ... > n. order[0] is the top-ranked candidate.
using PreferenceOrder = std::vector<int>;
const std::vector<PreferenceOrder>& preference_orders(int n);

// Election result: number of voters per preference order.
struct Profile {
    std::vector<long long> counts;

    long long voters() const;
};

enum class Event { C, Q, E, F, T, K, BSt, BSg, BSgRev, BSgRevAlt, U };

// BSgRevAlt is the literal inequality list printed for the reverse strong
// Borda paradox (beta_1, beta_2, beta_4, -beta_10..12); BSgRev is the
// sign-flipped system the surrounding text describes. Both are exposed so
// the discrepancy can be settled against the reported volume.

std::string event_name(Event id);
std::optional<Event> event_from_name(const std::string& name);
std::vector<Event> all_events();  // incl. U, excl. the Alt variant

// Pairwise-majority form: +1 on orders ranking j above j2, -1 otherwise.
LinearForm majority_form(int n, int j, int j2);

// First-place form: +1 on orders with j first, -1 with j2 first, else 0.
LinearForm plurality_form(int n, int j, int j2);

// Inequality system of the event polytope (n = 3 or 4; a subset of events
// exists for n = 3).
HPolytope build_polytope(Event id, int n = 4);
bool event_supported(Event id, int n);

// Ballot-semantics evaluation of the event, independent of the inequality
// tables (pairwise tallies and first-place counts computed directly from
// the preference orders).
bool event_predicate(Event id, int n, const Profile& v);

// Coordinate permutation induced by reversing every preference order.
std::vector<int> inversion_permutation(int n);
Profile invert_preferences(int n, const Profile& v);

// Exact probability assembly from the event volumes. Keys of `volumes` are
// the events whose volume is required by the formula for `id`.
BigRational assemble_probability(Event id, const std::map<Event, BigRational>& volumes);

}  // namespace votopes

#endif
