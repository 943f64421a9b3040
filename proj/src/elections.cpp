#include "votopes/elections.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace votopes {

namespace {

int factorial_small(int n) {
    int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

void require_candidates(int n) {
    if (n != 3 && n != 4)
        throw std::invalid_argument(
            "only 3- and 4-candidate elections are supported (got n=" +
            std::to_string(n) + ")");
}

// rank position of candidate j in an order (0 = first)
int position(const PreferenceOrder& order, int j) {
    for (std::size_t p = 0; p < order.size(); ++p)
        if (order[p] == j) return static_cast<int>(p);
    throw std::logic_error("candidate not in order");
}

}  // namespace

const std::vector<PreferenceOrder>& preference_orders(int n) {
    require_candidates(n);
    static std::map<int, std::vector<PreferenceOrder>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<PreferenceOrder> orders;
    PreferenceOrder p(n);
    std::iota(p.begin(), p.end(), 1);
    do {
        orders.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return cache.emplace(n, std::move(orders)).first->second;
}

long long Profile::voters() const {
    long long k = 0;
    for (long long c : counts) {
        if (c < 0) throw std::invalid_argument("Profile: negative count");
        k += c;
    }
    return k;
}

std::string event_name(Event id) {
    switch (id) {
        case Event::C: return "C";
        case Event::Q: return "Q";
        case Event::E: return "E";
        case Event::F: return "F";
        case Event::T: return "T";
        case Event::K: return "K";
        case Event::BSt: return "BSt";
        case Event::BSg: return "BSg";
        case Event::BSgRev: return "BSgRev";
        case Event::BSgRevAlt: return "BSgRevAlt";
        case Event::U: return "U";
    }
    throw std::logic_error("unknown event");
}

std::optional<Event> event_from_name(const std::string& name) {
    for (Event e : {Event::C, Event::Q, Event::E, Event::F, Event::T, Event::K,
                    Event::BSt, Event::BSg, Event::BSgRev, Event::BSgRevAlt,
                    Event::U})
        if (event_name(e) == name) return e;
    return std::nullopt;
}

std::vector<Event> all_events() {
    return {Event::C,   Event::Q,   Event::E,      Event::F, Event::T,
            Event::K,   Event::BSt, Event::BSg,    Event::BSgRev, Event::U};
}

LinearForm majority_form(int n, int j, int j2) {
    require_candidates(n);
    if (j == j2 || j < 1 || j > n || j2 < 1 || j2 > n)
        throw std::invalid_argument("majority_form: invalid candidate pair");
    const auto& orders = preference_orders(n);
    LinearForm f;
    f.coeffs.reserve(orders.size());
    for (const auto& o : orders)
        f.coeffs.push_back(position(o, j) < position(o, j2) ? 1 : -1);
    return f;
}

LinearForm plurality_form(int n, int j, int j2) {
    require_candidates(n);
    if (j == j2 || j < 1 || j > n || j2 < 1 || j2 > n)
        throw std::invalid_argument("plurality_form: invalid candidate pair");
    const auto& orders = preference_orders(n);
    LinearForm f;
    f.coeffs.reserve(orders.size());
    for (const auto& o : orders)
        f.coeffs.push_back(o[0] == j ? 1 : (o[0] == j2 ? -1 : 0));
    return f;
}

bool event_supported(Event id, int n) {
    require_candidates(n);
    if (n == 4) return true;
    switch (id) {
        case Event::C:
        case Event::T:
        case Event::BSt:
        case Event::BSg:
        case Event::BSgRev:
        case Event::U:
            return true;
        default:
            return false;
    }
}

HPolytope build_polytope(Event id, int n) {
    require_candidates(n);
    if (!event_supported(id, n))
        throw std::invalid_argument("event " + event_name(id) +
                                    " is not defined for n=" + std::to_string(n));
    HPolytope p = make_polytope(factorial_small(n));
    auto maj = [&](int a, int b) { return majority_form(n, a, b); };
    auto plu = [&](int a, int b) { return plurality_form(n, a, b); };
    auto strict = [&](const LinearForm& f) { p.strict_inequalities.push_back(f); };
    auto closed = [&](const LinearForm& f) { p.closed_inequalities.push_back(f); };

    switch (id) {
        case Event::U:
            break;
        case Event::C:  // candidate 1 is the Condorcet winner
            for (int j = 2; j <= n; ++j) strict(maj(1, j));
            break;
        case Event::E:  // Condorcet winner 1 also wins plurality
            for (int j = 2; j <= n; ++j) strict(maj(1, j));
            for (int j = 2; j <= n; ++j) strict(plu(1, j));
            break;
        case Event::Q:  // 1 first and 2 second in plurality, 1 wins runoff
            strict(plu(1, 2));
            for (int j = 3; j <= n; ++j) strict(plu(2, j));
            strict(maj(1, 2));
            break;
        case Event::F:  // Condorcet winner 1 second in plurality behind 2
            for (int j = 2; j <= n; ++j) strict(maj(1, j));
            for (int j = 3; j <= n; ++j) strict(plu(1, j));
            closed(plu(2, 1));
            break;
        case Event::T:  // majority gives the linear order 1 > 2 > ... > n
            for (int a = 1; a <= n; ++a)
                for (int b = a + 1; b <= n; ++b) strict(maj(a, b));
            break;
        case Event::K:  // 4-cycle 1 > 2 > 3 > 4 > 1
            strict(maj(1, 2));
            strict(maj(2, 3));
            strict(maj(3, 4));
            strict(maj(4, 1));
            break;
        case Event::BSt:  // plurality fully reverses the majority linear order
            for (int a = 1; a <= n; ++a)
                for (int b = a + 1; b <= n; ++b) strict(maj(a, b));
            for (int j = 2; j <= n; ++j) strict(plu(j, j - 1));
            break;
        case Event::BSg:  // Condorcet loser 1 wins plurality
            for (int j = 2; j <= n; ++j) strict(maj(j, 1));
            for (int j = 2; j <= n; ++j) strict(plu(1, j));
            break;
        case Event::BSgRev:  // Condorcet winner 1 last in plurality
            for (int j = 2; j <= n; ++j) strict(maj(1, j));
            for (int j = 2; j <= n; ++j) strict(plu(j, 1));
            break;
        case Event::BSgRevAlt:  // literal list beta_1, beta_2, beta_4, -beta_10..12
            strict(maj(1, 2));
            strict(maj(1, 3));
            strict(maj(2, 3));
            for (int j = 2; j <= n; ++j) strict(plu(j, 1));
            break;
    }
    p.validate();
    return p;
}

namespace {

struct Tallies {
    // margins[a][b] = #voters preferring a to b minus #preferring b to a
    long long margins[5][5] = {};
    long long firsts[5] = {};
};

Tallies tally(int n, const Profile& v) {
    const auto& orders = preference_orders(n);
    if (v.counts.size() != orders.size())
        throw std::invalid_argument("event_predicate: wrong profile length");
    Tallies t;
    for (std::size_t i = 0; i < orders.size(); ++i) {
        long long c = v.counts[i];
        if (c == 0) continue;
        const auto& o = orders[i];
        t.firsts[o[0]] += c;
        for (int pa = 0; pa < n; ++pa)
            for (int pb = pa + 1; pb < n; ++pb) {
                t.margins[o[pa]][o[pb]] += c;
                t.margins[o[pb]][o[pa]] -= c;
            }
    }
    return t;
}

}  // namespace

bool event_predicate(Event id, int n, const Profile& v) {
    require_candidates(n);
    if (!event_supported(id, n))
        throw std::invalid_argument("event " + event_name(id) +
                                    " is not defined for n=" + std::to_string(n));
    Tallies t = tally(n, v);
    auto beats = [&](int a, int b) { return t.margins[a][b] > 0; };
    auto more_firsts = [&](int a, int b) { return t.firsts[a] > t.firsts[b]; };

    switch (id) {
        case Event::U:
            return true;
        case Event::C: {
            for (int j = 2; j <= n; ++j)
                if (!beats(1, j)) return false;
            return true;
        }
        case Event::E: {
            for (int j = 2; j <= n; ++j)
                if (!beats(1, j) || !more_firsts(1, j)) return false;
            return true;
        }
        case Event::Q: {
            if (!more_firsts(1, 2)) return false;
            for (int j = 3; j <= n; ++j)
                if (!more_firsts(2, j)) return false;
            return beats(1, 2);
        }
        case Event::F: {
            for (int j = 2; j <= n; ++j)
                if (!beats(1, j)) return false;
            for (int j = 3; j <= n; ++j)
                if (!more_firsts(1, j)) return false;
            return t.firsts[2] >= t.firsts[1];
        }
        case Event::T: {
            for (int a = 1; a <= n; ++a)
                for (int b = a + 1; b <= n; ++b)
                    if (!beats(a, b)) return false;
            return true;
        }
        case Event::K:
            return beats(1, 2) && beats(2, 3) && beats(3, 4) && beats(4, 1);
        case Event::BSt: {
            for (int a = 1; a <= n; ++a)
                for (int b = a + 1; b <= n; ++b)
                    if (!beats(a, b)) return false;
            for (int j = 2; j <= n; ++j)
                if (!more_firsts(j, j - 1)) return false;
            return true;
        }
        case Event::BSg: {
            for (int j = 2; j <= n; ++j)
                if (!beats(j, 1) || !more_firsts(1, j)) return false;
            return true;
        }
        case Event::BSgRev: {
            for (int j = 2; j <= n; ++j)
                if (!beats(1, j) || !more_firsts(j, 1)) return false;
            return true;
        }
        case Event::BSgRevAlt: {
            if (!beats(1, 2) || !beats(1, 3) || !beats(2, 3)) return false;
            for (int j = 2; j <= n; ++j)
                if (!more_firsts(j, 1)) return false;
            return true;
        }
    }
    throw std::logic_error("unknown event");
}

std::vector<int> inversion_permutation(int n) {
    const auto& orders = preference_orders(n);
    std::vector<int> perm(orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) {
        PreferenceOrder rev(orders[i].rbegin(), orders[i].rend());
        auto it = std::lower_bound(orders.begin(), orders.end(), rev);
        perm[i] = static_cast<int>(it - orders.begin());
    }
    return perm;
}

Profile invert_preferences(int n, const Profile& v) {
    auto perm = inversion_permutation(n);
    if (v.counts.size() != perm.size())
        throw std::invalid_argument("invert_preferences: wrong profile length");
    Profile out;
    out.counts.assign(v.counts.size(), 0);
    for (std::size_t i = 0; i < perm.size(); ++i) out.counts[perm[i]] = v.counts[i];
    return out;
}

BigRational assemble_probability(Event id,
                                 const std::map<Event, BigRational>& volumes) {
    auto vol = [&](Event e) -> const BigRational& {
        auto it = volumes.find(e);
        if (it == volumes.end())
            throw std::invalid_argument("assemble_probability: missing volume for " +
                                        event_name(e));
        return it->second;
    };
    switch (id) {
        case Event::C:  // p_CW
            return 4 * vol(Event::C);
        case Event::Q:  // plurality winner also wins the runoff
            return 12 * vol(Event::Q);
        case Event::E:  // Condorcet efficiency of plurality
            return 4 * vol(Event::E) / (4 * vol(Event::C));
        case Event::F:  // Condorcet efficiency of the runoff scheme
            return (4 * vol(Event::E) + 12 * vol(Event::F)) / (4 * vol(Event::C));
        case Event::T:  // majority relation is a linear order
            return 24 * vol(Event::T);
        case Event::K:  // 4-cycle: no winner, no loser
            return 6 * vol(Event::K);
        case Event::BSt:
            return vol(Event::BSt) / vol(Event::T);
        case Event::BSg:
            return 4 * vol(Event::BSg) / (4 * vol(Event::C));
        case Event::BSgRev:
        case Event::BSgRevAlt:
            return 4 * vol(id) / (4 * vol(Event::C));
        case Event::U:
            return BigRational(1);
    }
    throw std::logic_error("unknown event");
}

}  // namespace votopes
