#include "votopes/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace votopes {

ProfileEnumerator::ProfileEnumerator(int candidates, long long voters)
    : n_(candidates), k_(voters) {
    if (voters < 0) throw std::invalid_argument("ProfileEnumerator: negative voters");
    preference_orders(candidates);  // validates the candidate count
}

BigInteger ProfileEnumerator::total() const {
    unsigned long parts = preference_orders(n_).size();
    return binomial(to_mpz(k_ + parts - 1), parts - 1);
}

void ProfileEnumerator::for_each(const std::function<void(const Profile&)>& visit) const {
    const std::size_t parts = preference_orders(n_).size();
    Profile v;
    v.counts.assign(parts, 0);
    std::function<void(std::size_t, long long)> rec = [&](std::size_t i, long long rest) {
        if (i == parts - 1) {
            v.counts[i] = rest;
            visit(v);
            v.counts[i] = 0;
            return;
        }
        for (long long c = 0; c <= rest; ++c) {
            v.counts[i] = c;
            rec(i + 1, rest - c);
        }
        v.counts[i] = 0;
    };
    rec(0, k_);
}

namespace {

void check_budget(const ProfileEnumerator& e, long long budget, const char* who) {
    if (e.total() > to_mpz(budget))
        throw budget_exceeded(std::string(who) + ": profile enumeration over budget");
}

}  // namespace

BigInteger count_event(Event id, int n, long long k, long long budget) {
    ProfileEnumerator e(n, k);
    check_budget(e, budget, "count_event");
    BigInteger total = 0;
    e.for_each([&](const Profile& v) {
        if (event_predicate(id, n, v)) total += 1;
    });
    return total;
}

long long min_voters_bruteforce(Event id, int n, long long max_k, long long budget) {
    for (long long k = 1; k <= max_k; ++k)
        if (count_event(id, n, k, budget) > 0) return k;
    throw budget_exceeded("min_voters_bruteforce: no satisfying profile within budget");
}

MutualExclusionReport mutual_exclusion(long long k, long long budget) {
    const int n = 4;
    const auto& orders = preference_orders(n);
    ProfileEnumerator e(n, k);
    check_budget(e, budget, "mutual_exclusion");

    MutualExclusionReport r;
    bool exclusive = true;
    e.for_each([&](const Profile& v) {
        long long margin[5][5] = {};
        for (std::size_t i = 0; i < orders.size(); ++i) {
            long long c = v.counts[i];
            if (c == 0) continue;
            const auto& o = orders[i];
            for (int pa = 0; pa < n; ++pa)
                for (int pb = pa + 1; pb < n; ++pb) {
                    margin[o[pa]][o[pb]] += c;
                    margin[o[pb]][o[pa]] -= c;
                }
        }
        bool tie = false;
        int wins[5] = {};
        for (int a = 1; a <= n && !tie; ++a)
            for (int b = a + 1; b <= n; ++b) {
                if (margin[a][b] == 0) {
                    tie = true;
                    break;
                }
                ++wins[margin[a][b] > 0 ? a : b];
            }
        if (tie) {
            r.ties += 1;
            return;
        }
        bool winner = false, loser = false;
        for (int a = 1; a <= n; ++a) {
            if (wins[a] == n - 1) winner = true;
            if (wins[a] == 0) loser = true;
        }
        if (winner && loser) {
            // with four candidates this forces a transitive tournament
            int sorted[4] = {wins[1], wins[2], wins[3], wins[4]};
            std::sort(sorted, sorted + 4);
            if (sorted[0] != 0 || sorted[1] != 1 || sorted[2] != 2 || sorted[3] != 3)
                exclusive = false;
            r.linear_order += 1;
        } else if (winner) {
            r.winner_no_loser += 1;
        } else if (loser) {
            r.loser_no_winner += 1;
        } else {
            r.cycle += 1;
        }
    });
    r.exclusive = exclusive;
    r.exhaustive = r.linear_order + r.winner_no_loser + r.loser_no_winner + r.cycle +
                       r.ties ==
                   e.total();
    return r;
}

bool mutual_exclusion_check(long long k) {
    auto r = mutual_exclusion(k);
    return r.exclusive && r.exhaustive;
}

}  // namespace votopes
