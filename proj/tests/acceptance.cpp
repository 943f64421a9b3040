// Replays the headline results end to end and prints one PASS/FAIL line
// per criterion. Slow: expect ~35 minutes on one core.

#include <chrono>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "votopes/cli_io.hpp"
#include "votopes/dual_description.hpp"
#include "votopes/ehrhart.hpp"
#include "votopes/elections.hpp"
#include "votopes/oracle.hpp"
#include "votopes/symmetry.hpp"
#include "votopes/triangulation.hpp"
#include "votopes/volume.hpp"

using namespace votopes;

namespace {

struct Criterion {
    std::string label;
    bool ok = true;
    std::vector<std::string> failures;
};

std::vector<Criterion> criteria;

Criterion& crit(std::size_t n, const std::string& label) {
    if (criteria.size() < n) criteria.resize(n);
    criteria[n - 1].label = label;
    return criteria[n - 1];
}

void expect(Criterion& c, bool ok, const std::string& what) {
    if (!ok) {
        c.ok = false;
        c.failures.push_back(what);
    }
}

template <typename T>
void expect_eq(Criterion& c, const T& got, const T& want, const std::string& what) {
    if (got == want) return;
    c.ok = false;
    std::string msg = what;
    if constexpr (requires { got.get_str(); })
        msg += " (got " + got.get_str() + ", want " + want.get_str() + ")";
    c.failures.push_back(msg);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string note(const std::string& what, double secs) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), " (%.0fs)", secs);
    return what + buf;
}

BigRational frac(const char* num, const char* den) {
    return make_rational(BigInteger(num), BigInteger(den));
}

Triangulation marked_triangulation(Event id, int n = 4) {
    return stanley_mark(lex_triangulate(extreme_rays(build_polytope(id, n)).cone));
}

std::vector<BigInteger> reference_c_open_numerator();
std::vector<BigInteger> reference_c_closed_numerator();

std::vector<BigInteger> poly_mul(const std::vector<BigInteger>& a,
                                 const std::vector<BigInteger>& b) {
    std::vector<BigInteger> r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

std::vector<BigInteger> denominator_poly(const std::vector<long long>& exps) {
    std::vector<BigInteger> r = {1};
    for (long long g : exps) {
        std::vector<BigInteger> f(g + 1);
        f[0] = 1;
        f[g] = -1;
        r = poly_mul(r, f);
    }
    return r;
}

bool same_rational_function(const std::vector<BigInteger>& num_a,
                            const std::vector<long long>& den_a,
                            const std::vector<BigInteger>& num_b,
                            const std::vector<long long>& den_b) {
    auto lhs = poly_mul(num_a, denominator_poly(den_b));
    auto rhs = poly_mul(num_b, denominator_poly(den_a));
    lhs.resize(std::max(lhs.size(), rhs.size()));
    rhs.resize(lhs.size());
    return lhs == rhs;
}

}  // namespace

int main() {
    std::map<Event, BigRational> vol;
    std::map<Event, EhrhartSeries> closed_series;  // four-candidate, reduced

    // ------------------------------------------------------------------
    {
        auto& c = crit(1, "volumes, fast tier (C, Q direct/symmetrized; K, T direct)");
        auto t0 = std::chrono::steady_clock::now();
        for (Event id : {Event::C, Event::K, Event::T}) {
            auto tri = lex_triangulate(extreme_rays(build_polytope(id, 4)).cone);
            vol[id] = normalized_volume(tri).value;
        }
        vol[Event::Q] = weighted_volume(detect_symmetry(build_polytope(Event::Q, 4)));
        expect_eq(c, vol[Event::C], frac("1717", "8192"), "vol C");
        expect_eq(c, vol[Event::Q],
                  frac("9185069468583833", "146081389744226304"), "vol Q");
        expect_eq(c, vol[Event::K], frac("602110129", "43486543872"), "vol K");
        expect_eq(c, vol[Event::T], frac("5507086513", "173946175488"), "vol T");
        c.label = note(c.label, seconds_since(t0));
    }

    // ------------------------------------------------------------------
    {
        auto& c = crit(2,
                       "volumes, extended tier (E, F, BSg, BSgRev symmetrized; BSt "
                       "substitutes)");
        auto t0 = std::chrono::steady_clock::now();
        for (Event id : {Event::E, Event::F, Event::BSg, Event::BSgRev})
            vol[id] = weighted_volume(detect_symmetry(build_polytope(id, 4)));
        expect_eq(c, vol[Event::E],
                  frac("10658098255011916449318509", "68475651442606080000000000"),
                  "vol E");
        expect_eq(c, vol[Event::F],
                  frac("7280153240719060220104571", "616280862983454720000000000"),
                  "vol F");
        expect_eq(c, vol[Event::BSg],
                  frac("325451674835828550681491", "68475651442606080000000000"),
                  "vol BSg");
        expect_eq(c, vol[Event::BSgRev],
                  frac("104898234852130241", "21035720123168587776"), "vol BSgRev");
        // B_St substitute: three-candidate strict Borda conditional probability
        auto volT3 =
            normalized_volume(lex_triangulate(extreme_rays(build_polytope(Event::T, 3)).cone))
                .value;
        auto volB3 =
            normalized_volume(lex_triangulate(extreme_rays(build_polytope(Event::BSt, 3)).cone))
                .value;
        expect_eq(c, BigRational(volB3 / volT3), make_rational(1, 90),
                  "three-candidate strict Borda conditional probability");
        // B_St substitute: series-free counts at the minimal voter numbers
        expect_eq(c, count_event(Event::BSt, 4, 8), BigInteger(0), "count BSt k=8");
        auto c9 = count_event(Event::BSt, 4, 9);
        auto c10 = count_event(Event::BSt, 4, 10);
        expect(c, c9 > 0, "count BSt k=9 positive");
        expect(c, c10 > 0, "count BSt k=10 positive");
        // inversion duality: the inverse-profile bijection fixes the counts
        BigInteger c9_inv = 0;
        ProfileEnumerator e(4, 9);
        e.for_each([&](const Profile& v) {
            if (event_predicate(Event::BSt, 4, invert_preferences(4, v))) c9_inv += 1;
        });
        expect_eq(c, c9_inv, c9, "count BSt k=9 under preference inversion");
        c.label = note(c.label, seconds_since(t0));
    }

    // ------------------------------------------------------------------
    {
        auto& c = crit(3, "probability table");
        auto t0 = std::chrono::steady_clock::now();
        // vol BSt is not desk-scale (criterion 2 substitutes); the printed
        // volume enters as a cached value so the assembly formula is checked
        vol[Event::BSt] = frac("1281727528386311499990911876166511",
                               "25940255058441281524973174784000000000");
        auto p = [&](Event id) { return assemble_probability(id, vol); };
        expect_eq(c, p(Event::C), frac("1717", "2048"), "p_CW");
        expect_eq(c, to_decimal_string(p(Event::C)), std::string("0.8384"),
                  "p_CW decimal");
        expect_eq(c, p(Event::Q),
                  frac("9185069468583833", "12173449145352192"), "runoff win");
        expect_eq(c, to_decimal_string(p(Event::Q)), std::string("0.7545"),
                  "runoff win decimal");
        expect_eq(c, to_decimal_string(p(Event::E)), std::string("0.7426"),
                  "condorcet efficiency decimal");
        expect_eq(c, to_decimal_string(p(Event::F)), std::string("0.9117"),
                  "runoff efficiency decimal");
        BigRational linear = 24 * vol[Event::T];
        BigRational winner_only = 4 * vol[Event::C] - linear;
        BigRational cycle = 6 * vol[Event::K];
        expect_eq(c, linear, frac("5507086513", "7247757312"), "linear-order class");
        expect_eq(c, to_decimal_string(linear), std::string("0.7598"),
                  "linear-order class decimal");
        expect_eq(c, winner_only, frac("569280335", "7247757312"),
                  "winner-no-loser class");
        expect_eq(c, to_decimal_string(winner_only), std::string("0.07855"),
                  "winner-no-loser class decimal");
        expect_eq(c, cycle, frac("602110129", "7247757312"), "4-cycle class");
        expect_eq(c, to_decimal_string(cycle, 3), std::string("0.0831"),
                  "4-cycle class decimal");
        expect_eq(c, BigRational(linear + 2 * winner_only + cycle), BigRational(1),
                  "classes sum to one");
        expect_eq(c, p(Event::BSt),
                  frac("1281727528386311499990911876166511",
                       "821261107784328041072841984000000000"),
                  "strict Borda probability (volume from cache)");
        expect_eq(c, to_decimal_string(p(Event::BSt), 3), std::string("0.00156"),
                  "strict Borda decimal");
        expect_eq(c, p(Event::BSg),
                  frac("325451674835828550681491", "14352135440302080000000000"),
                  "strong Borda probability");
        expect_eq(c, to_decimal_string(p(Event::BSg)), std::string("0.02268"),
                  "strong Borda decimal");
        expect_eq(c, p(Event::BSgRev),
                  frac("104898234852130241", "4408976007260798976"),
                  "reverse strong Borda probability");
        expect_eq(c, to_decimal_string(p(Event::BSgRev)), std::string("0.02379"),
                  "reverse strong Borda decimal");
        c.label = note(c.label, seconds_since(t0));
    }

    // ------------------------------------------------------------------
    {
        auto& c = crit(4, "Ehrhart series of C/closure(C), T and K");
        auto t0 = std::chrono::steady_clock::now();
        for (Event id : {Event::C, Event::K, Event::T}) {
            auto tri = marked_triangulation(id);
            closed_series.emplace(id, ehrhart_series_closed(tri));
        }
        const auto& sc = closed_series.at(Event::C);
        std::vector<long long> reference_den = {1, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2,
                                            2, 2, 4, 4, 4, 4, 4, 4, 4, 4, 4};
        expect(c,
               same_rational_function(sc.numerator, sc.denominator,
                                      reference_c_closed_numerator(), reference_den),
               "closure(C) series equals the printed numerator over "
               "(1-t)(1-t^2)^14(1-t^4)^9");
        auto open_c = reciprocity_transform(sc);
        expect(c,
               same_rational_function(open_c.numerator, open_c.denominator,
                                      reference_c_open_numerator(), reference_den),
               "C series equals the printed numerator");
        long long w_c = sc.denominator_sum() - 24 - sc.degree();
        expect_eq(c, to_mpz(w_c), BigInteger(1), "reciprocity shift w = 1 for C");

        for (auto [id, period, w] : {std::tuple{Event::T, 24LL, 1LL},
                                     std::tuple{Event::K, 12LL, 3LL}}) {
            const auto& s = closed_series.at(id);
            std::string name = event_name(id);
            expect_eq(c, to_mpz(s.period()), to_mpz(period), name + " period");
            auto open = reciprocity_transform(s);
            expect_eq(c, to_mpz(s.denominator_sum() - 24 - s.degree()), to_mpz(w),
                      name + " reciprocity shift");
            expect_eq(c, to_mpz(min_voters(open)), to_mpz(w),
                      name + " minimal voter number");
            expect(c, reciprocity_applicable(build_polytope(id, 4)),
                   name + " reciprocity hypotheses");
            bool palindrome =
                open.degree() == s.degree() + w && open.denominator == s.denominator;
            for (int i = 0; palindrome && i <= s.degree(); ++i)
                if (open.numerator[w + s.degree() - i] != s.numerator[i])
                    palindrome = false;
            expect(c, palindrome, name + " shifted-palindrome numerators");
            // leading quasipolynomial coefficient = vol / 23!
            auto q = quasipolynomial(s);
            bool leading_ok = true;
            for (long long r = 0; r < q.period; ++r)
                if (q.coeffs[r][23] != vol[id] / BigRational(factorial(23)))
                    leading_ok = false;
            expect(c, leading_ok, name + " leading coefficient vol/23!");
            // oracle equality for k <= 4
            auto coeffs = expand_series(open, 5);
            for (long long k = 0; k <= 4; ++k)
                expect_eq(c, coeffs[k], count_event(id, 4, k),
                          name + " oracle k=" + std::to_string(k));
        }
        c.label = note(c.label, seconds_since(t0));
    }

    // ------------------------------------------------------------------
    {
        auto& c = crit(5, "quasipolynomial of C and the closed-form p_CW");
        auto t0 = std::chrono::steady_clock::now();
        const auto& sc = closed_series.at(Event::C);
        auto q = quasipolynomial(sc);
        expect_eq(c, to_mpz(q.period), BigInteger(4), "period 4");
        // odd residues: q(k) = R13(k) (12+k) prod_{odd i<=23} (i+k) / (23! 131072)
        std::vector<BigRational> poly = {
            BigRational(BigInteger("261812975764725")),
            BigRational(BigInteger("308449567353120")),
            BigRational(BigInteger("165347938576012")),
            BigRational(BigInteger("50600971266720")),
            BigRational(BigInteger("9607752151310")),
            BigRational(BigInteger("1183838427360")),
            BigRational(BigInteger("96296973756")),
            BigRational(BigInteger("5130593760")),
            BigRational(BigInteger("172122725")),
            BigRational(BigInteger("3296640")),
            BigRational(BigInteger("27472"))};
        auto mul_linear = [&](long long a) {  // multiply by (a + k)
            poly.push_back(0);
            for (std::size_t i = poly.size() - 1; i > 0; --i)
                poly[i] = poly[i - 1] + BigRational(to_mpz(a)) * poly[i];
            poly[0] = BigRational(to_mpz(a)) * poly[0];
        };
        mul_linear(12);
        for (long long i = 1; i <= 23; i += 2) mul_linear(i);
        BigRational scale =
            make_rational(BigInteger(1), factorial(23) * BigInteger(131072));
        for (auto& x : poly) x *= scale;
        for (long long r : {1LL, 3LL}) {
            bool same = poly.size() == static_cast<std::size_t>(q.degree) + 1;
            for (int j = 0; same && j <= q.degree; ++j)
                if (q.coeffs[r][j] != poly[j]) same = false;
            expect(c, same,
                   "odd residue " + std::to_string(r) + " polynomial identity");
        }
        // all four residue branches against the series expansion, k = 1..12
        auto open_c = reciprocity_transform(sc);
        auto coeffs = expand_series(open_c, 13);
        for (long long k = 1; k <= 12; ++k)
            expect(c,
                   pcw_eval(k) == BigRational(4 * coeffs[k]) /
                                      BigRational(binomial(to_mpz(k + 23), 23)),
                   "pcw_eval(" + std::to_string(k) + ") = 4 E(C,k)/binom(k+23,23)");
        c.label = note(c.label, seconds_since(t0));
    }

    // ------------------------------------------------------------------
    {
        auto& c = crit(6, "oracle equivalence suite");
        auto t0 = std::chrono::steady_clock::now();
        // predicate vs inequality system, exhaustive for k <= 4
        for (Event id : all_events()) {
            auto p = build_polytope(id, 4);
            long long mismatches = 0;
            for (long long k = 0; k <= 4; ++k) {
                ProfileEnumerator e(4, k);
                e.for_each([&](const Profile& v) {
                    bool pred = event_predicate(id, 4, v);
                    bool ineq = true;
                    for (const auto& f : p.closed_inequalities)
                        if (f.eval(v.counts) < 0) ineq = false;
                    for (const auto& f : p.strict_inequalities)
                        if (f.eval(v.counts) <= 0) ineq = false;
                    if (pred != ineq) ++mismatches;
                });
            }
            expect(c, mismatches == 0,
                   event_name(id) + " predicate vs inequalities, k <= 4");
        }
        // series coefficients vs oracle counts, k <= 6
        for (Event id : {Event::C, Event::T, Event::K}) {
            auto open = reciprocity_transform(closed_series.at(id));
            auto coeffs = expand_series(open, 7);
            for (long long k = 0; k <= 6; ++k)
                expect_eq(c, coeffs[k], count_event(id, 4, k),
                          event_name(id) + " series vs oracle k=" + std::to_string(k));
        }
        for (Event id : {Event::C, Event::T, Event::BSg, Event::BSgRev}) {
            auto tri = marked_triangulation(id, 3);
            auto open = reciprocity_transform(ehrhart_series_closed(tri));
            auto coeffs = expand_series(open, 7);
            for (long long k = 0; k <= 6; ++k)
                expect_eq(c, coeffs[k], count_event(id, 3, k),
                          event_name(id) +
                              " three-candidate series vs oracle k=" +
                              std::to_string(k));
        }
        // tournament classes partition the tie-free profiles
        for (long long k = 2; k <= 4; ++k) {
            auto rep = mutual_exclusion(k);
            expect(c, rep.exclusive && rep.exhaustive,
                   "mutual exclusion k=" + std::to_string(k));
            expect_eq(c, rep.linear_order, BigInteger(24 * count_event(Event::T, 4, k)),
                      "linear-order class = 24 count(T), k=" + std::to_string(k));
        }
        c.label = note(c.label, seconds_since(t0));
    }

    // ------------------------------------------------------------------
    {
        auto& c = crit(7, "minimal voter numbers");
        auto t0 = std::chrono::steady_clock::now();
        const struct {
            Event id;
            long long w;
        } rows[] = {{Event::C, 1},      {Event::E, 1},   {Event::T, 1},
                    {Event::Q, 3},      {Event::K, 3},   {Event::BSgRev, 3},
                    {Event::BSg, 5},    {Event::BSt, 9}};
        for (const auto& row : rows)
            expect_eq(c, to_mpz(min_voters_bruteforce(row.id)), to_mpz(row.w),
                      "w(" + event_name(row.id) + ")");
        c.label = note(c.label, seconds_since(t0));
    }

    // ------------------------------------------------------------------
    {
        auto& c = crit(8, "vertex and support-hyperplane counts, full and symmetrized");
        auto t0 = std::chrono::steady_clock::now();
        const struct {
            Event id;
            std::size_t rays, supports;
        } table7[] = {{Event::C, 234, 27},    {Event::Q, 2418, 28},
                      {Event::E, 4644, 30},   {Event::F, 4572, 30},
                      {Event::T, 491, 30},    {Event::K, 262, 28},
                      {Event::BSt, 6363, 33}, {Event::BSg, 3216, 30},
                      {Event::BSgRev, 3432, 30}};
        for (const auto& row : table7) {
            auto dd = extreme_rays(build_polytope(row.id, 4));
            expect(c,
                   dd.cone.generators.size() == row.rays &&
                       dd.cone.support_hyperplanes.size() == row.supports,
                   event_name(row.id) + " full vertex/support counts");
        }
        const struct {
            Event id;
            std::size_t rays, supports;
        } table8[] = {{Event::C, 16, 11},  {Event::Q, 12, 8},
                      {Event::E, 170, 18}, {Event::F, 163, 18},
                      {Event::K, 63, 18},  {Event::BSg, 100, 18},
                      {Event::BSgRev, 115, 19}};
        for (const auto& row : table8) {
            auto sp = detect_symmetry(build_polytope(row.id, 4));
            auto dd = extreme_rays(closure(sp.projected));
            expect(c,
                   dd.cone.generators.size() == row.rays &&
                       dd.cone.support_hyperplanes.size() == row.supports,
                   event_name(row.id) + " symmetrized vertex/support counts");
        }
        c.label = note(c.label, seconds_since(t0));
    }

    // ------------------------------------------------------------------
    {
        auto& c = crit(9, "symmetrization consistency");
        auto t0 = std::chrono::steady_clock::now();
        for (Event id : {Event::C, Event::K}) {
            auto sp = detect_symmetry(build_polytope(id, 4));
            expect_eq(c, weighted_volume(sp), vol[id],
                      "weighted = direct volume for " + event_name(id));
        }
        for (Event id : {Event::C, Event::Q, Event::E, Event::F, Event::K,
                         Event::BSg, Event::BSgRev}) {
            auto sp = detect_symmetry(build_polytope(id, 4));
            for (long long k = 0; k <= 4; ++k)
                expect_eq(c, weighted_count(sp, k), count_event(id, 4, k),
                          "weighted_count " + event_name(id) +
                              " k=" + std::to_string(k));
        }
        c.label = note(c.label, seconds_since(t0));
    }

    // ------------------------------------------------------------------
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        std::printf("%s criterion %zu: %s\n", c.ok ? "PASS" : "FAIL", i + 1,
                    c.label.c_str());
        for (const auto& f : c.failures) std::printf("       - %s\n", f.c_str());
        if (!c.ok) ++failed;
    }
    std::printf("%d/%zu criteria passed\n",
                static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}

namespace {

std::vector<BigInteger> from_strings(const std::vector<const char*>& v) {
    std::vector<BigInteger> r;
    for (const char* s : v) r.emplace_back(s);
    return r;
}

std::vector<BigInteger> reference_c_open_numerator() {
    return from_strings(
        {"0",         "6",         "15",        "481",       "890",
         "12346",     "17845",     "152891",    "180850",    "1113216",
         "1111974",   "5320122",   "4580485",   "17837843",  "13415068",
         "43770180",  "28993857",  "80758791",  "47336170",  "113925878",
         "59177761",  "123966919", "56990048",  "104272000", "42243510",
         "67509138",  "23917200",  "33268048",  "10182887",  "12235441",
         "3176870",   "3255226",   "697232",    "596834",    "100915",
         "69821",     "8655",      "4581",      "363",       "133",
         "5",         "1"});
}

std::vector<BigInteger> reference_c_closed_numerator() {
    return from_strings(
        {"1",         "5",         "133",       "363",       "4581",
         "8655",      "69821",     "100915",    "596834",    "697232",
         "3255226",   "3176870",   "12235441",  "10182887",  "33268048",
         "23917200",  "67509138",  "42243510",  "104272000", "56990048",
         "123966919", "59177761",  "113925878", "47336170",  "80758791",
         "28993857",  "43770180",  "13415068",  "17837843",  "4580485",
         "5320122",   "1111974",   "1113216",   "180850",    "152891",
         "17845",     "12346",     "890",       "481",       "15",
         "6"});
}

}  // namespace
