#include <doctest.h>

#include <set>

#include "votopes/dual_description.hpp"
#include "votopes/ehrhart.hpp"
#include "votopes/oracle.hpp"
#include "votopes/triangulation.hpp"

using namespace votopes;

TEST_CASE("profile enumerator visits each composition exactly once") {
    ProfileEnumerator e(3, 3);
    std::set<std::vector<long long>> seen;
    e.for_each([&](const Profile& v) {
        CHECK(v.voters() == 3);
        CHECK(seen.insert(v.counts).second);
    });
    CHECK(to_mpz(static_cast<long long>(seen.size())) == e.total());
    CHECK(e.total() == binomial(BigInteger(8), 5));
    CHECK(ProfileEnumerator(4, 2).total() == 300);
}

TEST_CASE("event counts at small voter numbers") {
    CHECK(count_event(Event::C, 4, 1) == 6);
    CHECK(count_event(Event::U, 4, 2) == 300);
    CHECK(count_event(Event::BSg, 4, 4) == 0);
    CHECK(count_event(Event::BSg, 4, 5) > 0);
    CHECK_THROWS_AS((void)count_event(Event::C, 4, 50, 1000), budget_exceeded);
}

TEST_CASE("oracle counts agree with the semiopen Ehrhart expansions") {
    for (Event id : {Event::C, Event::T, Event::BSg, Event::BSgRev}) {
        auto tri = stanley_mark(lex_triangulate(extreme_rays(build_polytope(id, 3)).cone));
        auto open = reciprocity_transform(ehrhart_series_closed(tri));
        auto coeffs = expand_series(open, 7);
        CAPTURE(event_name(id));
        for (long long k = 0; k <= 6; ++k) CHECK(coeffs[k] == count_event(id, 3, k));
    }
}

TEST_CASE("condorcet counts match the closed-form probability") {
    for (long long k = 1; k <= 6; ++k) {
        BigRational p = make_rational(4 * count_event(Event::C, 4, k),
                                      binomial(to_mpz(k + 23), 23));
        CHECK(p == pcw_eval(k));
    }
}

TEST_CASE("minimal voter numbers for the cheap events") {
    CHECK(min_voters_bruteforce(Event::C) == 1);
    CHECK(min_voters_bruteforce(Event::E) == 1);
    CHECK(min_voters_bruteforce(Event::T) == 1);
    CHECK(min_voters_bruteforce(Event::Q) == 3);
    CHECK(min_voters_bruteforce(Event::K) == 3);
    CHECK(min_voters_bruteforce(Event::BSgRev) == 3);
    CHECK(min_voters_bruteforce(Event::BSg) == 5);
    CHECK_THROWS_AS((void)min_voters_bruteforce(Event::BSt, 4, 2), budget_exceeded);
}

TEST_CASE("tournament classes are mutually exclusive and exhaustive") {
    auto r1 = mutual_exclusion(1);
    CHECK(r1.linear_order == 24);
    CHECK(r1.winner_no_loser == 0);
    CHECK(r1.loser_no_winner == 0);
    CHECK(r1.cycle == 0);
    CHECK(r1.ties == 0);
    CHECK(r1.exclusive);
    CHECK(r1.exhaustive);

    auto r2 = mutual_exclusion(2);
    CHECK(r2.ties > 0);

    for (long long k = 2; k <= 5; ++k) {
        auto r = mutual_exclusion(k);
        CAPTURE(k);
        CHECK(r.exclusive);
        CHECK(r.exhaustive);
        // inversion swaps winners and losers
        CHECK(r.winner_no_loser == r.loser_no_winner);
    }
    CHECK(mutual_exclusion(3).linear_order + mutual_exclusion(3).winner_no_loser +
              mutual_exclusion(3).loser_no_winner + mutual_exclusion(3).cycle +
              mutual_exclusion(3).ties ==
          binomial(BigInteger(26), 23));
}
