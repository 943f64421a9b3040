#ifndef VOTOPES_ORACLE_HPP
#define VOTOPES_ORACLE_HPP

#include <functional>

#include "votopes/elections.hpp"

namespace votopes {

// Exhaustive enumeration of the k-voter profiles (weak compositions of the
// voter count over the preference orders). The visitor sees each profile
// exactly once; binom(k + n! - 1, n! - 1) profiles in total.
class ProfileEnumerator {
  public:
    ProfileEnumerator(int candidates, long long voters);

    int candidates() const { return n_; }
    long long voters() const { return k_; }
    BigInteger total() const;

    void for_each(const std::function<void(const Profile&)>& visit) const;

  private:
    int n_;
    long long k_;
};

// Number of k-voter profiles satisfying the event, straight from ballot
// semantics; the independent check of every polytope-derived count.
BigInteger count_event(Event id, int n, long long k, long long budget = 100000000);

// Smallest k with a satisfying profile, tried in increasing order.
long long min_voters_bruteforce(Event id, int n = 4, long long max_k = 9,
                                long long budget = 100000000);

// Classification of the tie-free majority tournaments on four candidates:
// a profile either induces a linear order, a Condorcet winner without a
// loser, a loser without a winner, or neither (the 4-cycle); profiles with
// a pairwise tie fall outside all four classes.
struct MutualExclusionReport {
    BigInteger linear_order;
    BigInteger winner_no_loser;
    BigInteger loser_no_winner;
    BigInteger cycle;
    BigInteger ties;
    bool exclusive = false;  // every profile hit exactly one bucket
    bool exhaustive = false;  // buckets sum to the total profile count
};

MutualExclusionReport mutual_exclusion(long long k, long long budget = 100000000);
bool mutual_exclusion_check(long long k);

}  // namespace votopes

#endif
