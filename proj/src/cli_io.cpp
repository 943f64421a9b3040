#include "votopes/cli_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "votopes/dual_description.hpp"
#include "votopes/ehrhart.hpp"
#include "votopes/elections.hpp"
#include "votopes/oracle.hpp"
#include "votopes/symmetry.hpp"
#include "votopes/triangulation.hpp"
#include "votopes/volume.hpp"

namespace votopes {

namespace {

std::vector<std::vector<std::string>> tokenize_lines(const std::string& text) {
    std::vector<std::vector<std::string>> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(std::move(t));
        if (!toks.empty()) lines.push_back(std::move(toks));
    }
    return lines;
}

long long parse_integer(const std::string& tok, const std::string& where) {
    std::size_t i = tok[0] == '-' ? 1 : 0;
    if (i == tok.size()) throw parse_error(where + ": '" + tok + "' is not an integer");
    for (; i < tok.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(tok[i])))
            throw parse_error(where + ": '" + tok + "' is not an integer");
    return std::stoll(tok);
}

}  // namespace

InputDocument parse_input(const std::string& text) {
    auto lines = tokenize_lines(text);
    InputDocument doc;
    bool have_amb = false;
    std::size_t i = 0;
    while (i < lines.size()) {
        const auto& toks = lines[i];
        const std::string& kw = toks[0];
        if (kw == "amb_space") {
            if (toks.size() != 2)
                throw parse_error("amb_space expects exactly one argument");
            long long d = parse_integer(toks[1], "amb_space");
            if (d < 1) throw parse_error("amb_space must be positive");
            doc.ambient_dim = static_cast<int>(d);
            have_amb = true;
            ++i;
        } else if (kw == "nonnegative" || kw == "total_degree") {
            if (toks.size() != 1) throw parse_error(kw + " takes no arguments");
            (kw == "nonnegative" ? doc.nonnegative : doc.total_degree) = true;
            ++i;
        } else if (kw == "inequalities" || kw == "excluded_faces") {
            if (!have_amb)
                throw parse_error("block '" + kw + "' before amb_space");
            if (toks.size() != 2)
                throw parse_error(kw + " expects exactly one row count");
            long long count = parse_integer(toks[1], kw);
            if (count < 0) throw parse_error(kw + ": negative row count");
            auto& rows = kw == "inequalities" ? doc.inequalities : doc.excluded_faces;
            ++i;
            for (long long r = 0; r < count; ++r, ++i) {
                if (i >= lines.size())
                    throw parse_error(kw + ": expected " + std::to_string(count) +
                                      " rows, found " + std::to_string(r));
                const auto& row = lines[i];
                std::string where = kw + " row " + std::to_string(r + 1);
                if (static_cast<int>(row.size()) != doc.ambient_dim)
                    throw parse_error(where + ": expected " +
                                      std::to_string(doc.ambient_dim) +
                                      " entries, got " + std::to_string(row.size()));
                std::vector<long long> vals(row.size());
                for (std::size_t j = 0; j < row.size(); ++j)
                    vals[j] = parse_integer(row[j], where);
                rows.push_back(std::move(vals));
            }
        } else if (kw == "equations") {
            throw parse_error(
                "'equations' blocks are not supported; express the system with "
                "inequalities and excluded_faces");
        } else {
            throw parse_error("unknown keyword '" + kw + "'");
        }
    }
    if (!have_amb) throw parse_error("missing amb_space");
    if (!doc.total_degree) throw parse_error("missing total_degree grading");
    return doc;
}

std::string emit_input(const HPolytope& p) {
    p.validate();
    std::ostringstream out;
    out << "amb_space " << p.ambient_dim << "\n";
    auto block = [&](const char* name, const std::vector<LinearForm>& forms) {
        if (forms.empty()) return;
        out << name << ' ' << forms.size() << "\n";
        for (const auto& f : forms) {
            for (std::size_t j = 0; j < f.coeffs.size(); ++j)
                out << (j ? " " : "") << f.coeffs[j];
            out << "\n";
        }
    };
    block("excluded_faces", p.strict_inequalities);
    block("inequalities", p.closed_inequalities);
    if (p.sign_conditions) out << "nonnegative\n";
    out << "total_degree\n";
    return out.str();
}

HPolytope to_polytope(const InputDocument& doc) {
    HPolytope p = make_polytope(doc.ambient_dim);
    p.sign_conditions = doc.nonnegative;
    for (const auto& row : doc.inequalities)
        p.closed_inequalities.push_back(LinearForm{row});
    for (const auto& row : doc.excluded_faces)
        p.strict_inequalities.push_back(LinearForm{row});
    p.validate();
    return p;
}

InputDocument from_polytope(const HPolytope& p) {
    p.validate();
    InputDocument doc;
    doc.ambient_dim = p.ambient_dim;
    doc.nonnegative = p.sign_conditions;
    doc.total_degree = true;
    for (const auto& f : p.closed_inequalities) doc.inequalities.push_back(f.coeffs);
    for (const auto& f : p.strict_inequalities) doc.excluded_faces.push_back(f.coeffs);
    return doc;
}

void OutputDocument::section(const std::string& title) {
    items_.emplace_back(title, "");
    is_section_.push_back(true);
}

void OutputDocument::entry(const std::string& key, const std::string& value) {
    items_.emplace_back(key, value);
    is_section_.push_back(false);
}

std::string OutputDocument::render() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < items_.size(); ++i) {
        if (is_section_[i]) {
            if (i) out << "\n";
            out << items_[i].first << "\n"
                << std::string(items_[i].first.size(), '-') << "\n";
        } else {
            out << items_[i].first << ": " << items_[i].second << "\n";
        }
    }
    return out.str();
}

std::string OutputDocument::render_flat() const {
    std::ostringstream out;
    std::string prefix;
    for (std::size_t i = 0; i < items_.size(); ++i) {
        if (is_section_[i]) {
            prefix = items_[i].first + ".";
            for (auto& c : prefix)
                if (c == ' ') c = '_';
        } else {
            out << prefix << items_[i].first << "=" << items_[i].second << "\n";
        }
    }
    return out.str();
}

namespace {

struct CommonOptions {
    int threads = 1;
    std::string symmetrize = "auto";
    bool progress = false;
    std::string out_path;
    std::string event;
    std::string input_path;
    int candidates = 4;
};

void progress_note(const CommonOptions& opt, const std::string& msg) {
    if (opt.progress) std::cerr << msg << std::endl;
}

HPolytope resolve_polytope(const CommonOptions& opt) {
    if (!opt.input_path.empty()) {
        std::ifstream in(opt.input_path);
        if (!in) throw parse_error("cannot open input file " + opt.input_path);
        std::ostringstream buf;
        buf << in.rdbuf();
        return to_polytope(parse_input(buf.str()));
    }
    if (opt.event.empty()) throw parse_error("either --event or --input is required");
    auto id = event_from_name(opt.event);
    if (!id) throw parse_error("unknown event '" + opt.event + "'");
    return build_polytope(*id, opt.candidates);
}

bool use_symmetrization(const CommonOptions& opt, const SymmetryProjection& sp) {
    if (opt.symmetrize == "on") return true;
    if (opt.symmetrize == "off") return false;
    if (opt.symmetrize != "auto")
        throw parse_error("--symmetrize must be auto, on or off");
    return symmetrization_worthwhile(sp);
}

BigRational compute_volume(const HPolytope& p, const CommonOptions& opt) {
    auto sp = detect_symmetry(p);
    if (use_symmetrization(opt, sp)) {
        progress_note(opt, "symmetrized path: projected dimension " +
                               std::to_string(sp.group_count()));
        return weighted_volume(sp, opt.threads);
    }
    progress_note(opt, "direct path: triangulating");
    auto tri = lex_triangulate(extreme_rays(p).cone);
    progress_note(opt, "direct path: " + std::to_string(tri.size()) + " cones");
    return normalized_volume(tri, opt.threads).value;
}

void write_out(const CommonOptions& opt, const OutputDocument& doc) {
    std::string text = doc.render();
    if (opt.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(opt.out_path);
        if (!out) throw parse_error("cannot open output file " + opt.out_path);
        out << text;
    }
}

std::string fraction(const BigRational& q) { return q.get_str(); }

int cmd_volume(const CommonOptions& opt) {
    HPolytope p = resolve_polytope(opt);
    BigRational v = compute_volume(p, opt);
    OutputDocument doc;
    doc.section("volume");
    if (!opt.event.empty()) doc.entry("event", opt.event);
    doc.entry("normalized_volume", fraction(v));
    if (v > 0) doc.entry("decimal", to_decimal_string(v));
    write_out(opt, doc);
    return 0;
}

int cmd_ehrhart(const CommonOptions& opt, bool closed) {
    HPolytope p = resolve_polytope(opt);
    progress_note(opt, "triangulating");
    auto tri = stanley_mark(lex_triangulate(extreme_rays(p).cone));
    progress_note(opt, std::to_string(tri.size()) + " cones");
    auto s = ehrhart_series_closed(tri, opt.threads);
    if (!closed) {
        if (!reciprocity_applicable(p))
            throw std::invalid_argument(
                "semiopen series needs the reciprocity hypotheses; rerun with "
                "--closed");
        s = reciprocity_transform(s);
    }
    OutputDocument doc;
    doc.section(closed ? "ehrhart series (closure)" : "ehrhart series");
    if (!opt.event.empty()) doc.entry("event", opt.event);
    {
        std::ostringstream den;
        for (std::size_t i = 0; i < s.denominator.size(); ++i)
            den << (i ? " " : "") << s.denominator[i];
        doc.entry("denominator_exponents", den.str());
    }
    doc.entry("period", std::to_string(s.period()));
    doc.section("numerator");
    for (std::size_t i = 0; i < s.numerator.size(); ++i)
        doc.entry(std::to_string(i), s.numerator[i].get_str());
    auto q = quasipolynomial(s);
    doc.section("quasipolynomial");
    doc.entry("degree", std::to_string(q.degree));
    doc.entry("period", std::to_string(q.period));
    for (long long r = 0; r < q.period; ++r) {
        std::ostringstream row;
        for (int j = 0; j <= q.degree; ++j)
            row << (j ? " " : "") << q.coeffs[r][j].get_str();
        doc.entry("residue " + std::to_string(r), row.str());
    }
    write_out(opt, doc);
    return 0;
}

int cmd_count(const CommonOptions& opt, long long voters) {
    HPolytope p = resolve_polytope(opt);
    auto sp = detect_symmetry(p);
    progress_note(opt, "projected dimension " + std::to_string(sp.group_count()));
    BigInteger c = weighted_count(sp, voters);
    OutputDocument doc;
    doc.section("lattice point count");
    if (!opt.event.empty()) doc.entry("event", opt.event);
    doc.entry("voters", std::to_string(voters));
    doc.entry("count", c.get_str());
    write_out(opt, doc);
    return 0;
}

int cmd_oracle(const CommonOptions& opt, long long voters) {
    if (opt.event.empty()) throw parse_error("--event is required");
    auto id = event_from_name(opt.event);
    if (!id) throw parse_error("unknown event '" + opt.event + "'");
    BigInteger c = count_event(*id, opt.candidates, voters);
    OutputDocument doc;
    doc.section("oracle count");
    doc.entry("event", opt.event);
    doc.entry("candidates", std::to_string(opt.candidates));
    doc.entry("voters", std::to_string(voters));
    doc.entry("count", c.get_str());
    write_out(opt, doc);
    return 0;
}

std::map<Event, std::vector<Event>> probability_dependencies() {
    return {{Event::C, {Event::C}},
            {Event::Q, {Event::Q}},
            {Event::E, {Event::E, Event::C}},
            {Event::F, {Event::E, Event::F, Event::C}},
            {Event::T, {Event::T}},
            {Event::K, {Event::K}},
            {Event::BSt, {Event::BSt, Event::T}},
            {Event::BSg, {Event::BSg, Event::C}},
            {Event::BSgRev, {Event::BSgRev, Event::C}}};
}

std::map<Event, BigRational> load_cache(const std::string& path) {
    std::map<Event, BigRational> cache;
    if (path.empty()) return cache;
    std::ifstream in(path);
    if (!in) return cache;  // absent cache file = empty cache
    std::string name, value;
    while (in >> name >> value) {
        auto id = event_from_name(name);
        if (!id) throw parse_error("volume cache: unknown event '" + name + "'");
        BigRational q;
        if (q.set_str(value, 10) != 0)
            throw parse_error("volume cache: bad fraction '" + value + "'");
        q.canonicalize();
        cache[*id] = q;
    }
    return cache;
}

void store_cache(const std::string& path, const std::map<Event, BigRational>& cache) {
    if (path.empty()) return;
    std::ofstream out(path);
    for (const auto& [id, v] : cache) out << event_name(id) << ' ' << v.get_str() << "\n";
}

const std::vector<std::pair<std::string, Event>>& report_rows() {
    static const std::vector<std::pair<std::string, Event>> rows = {
        {"condorcet winner exists", Event::C},
        {"plurality winner wins the runoff", Event::Q},
        {"condorcet efficiency of plurality", Event::E},
        {"condorcet efficiency of plurality with runoff", Event::F},
        {"majority order is linear", Event::T},
        {"majority 4-cycle", Event::K},
        {"strict borda paradox", Event::BSt},
        {"strong borda paradox", Event::BSg},
        {"reverse strong borda paradox", Event::BSgRev}};
    return rows;
}

int cmd_report(const CommonOptions& opt, const std::vector<std::string>& skip,
               const std::string& cache_path) {
    std::vector<Event> skipped;
    for (const auto& name : skip) {
        auto id = event_from_name(name);
        if (!id) throw parse_error("unknown event '" + name + "'");
        skipped.push_back(*id);
    }
    auto cache = load_cache(cache_path);
    auto deps = probability_dependencies();

    auto is_skipped = [&](Event id) {
        return std::find(skipped.begin(), skipped.end(), id) != skipped.end();
    };
    auto volume_of = [&](Event id) -> const BigRational& {
        auto it = cache.find(id);
        if (it == cache.end()) {
            CommonOptions vopt = opt;
            vopt.event = event_name(id);
            progress_note(opt, "computing volume of " + vopt.event);
            it = cache.emplace(id, compute_volume(build_polytope(id, 4), vopt)).first;
        }
        return it->second;
    };

    OutputDocument doc;
    doc.section("volumes");
    for (const auto& [label, id] : report_rows()) {
        if (is_skipped(id)) {
            doc.entry("vol " + event_name(id), "skipped");
            continue;
        }
        bool deps_ok = true;
        for (Event d : deps.at(id))
            if (is_skipped(d) && cache.find(d) == cache.end()) deps_ok = false;
        if (!deps_ok) {
            doc.entry("vol " + event_name(id), "skipped");
            continue;
        }
        doc.entry("vol " + event_name(id), fraction(volume_of(id)));
    }

    doc.section("probabilities");
    auto row = [&](const std::string& label, Event id) {
        for (Event d : deps.at(id))
            if (is_skipped(d) && cache.find(d) == cache.end()) {
                doc.entry(label, "skipped");
                return;
            }
        std::map<Event, BigRational> vols;
        for (Event d : deps.at(id)) vols[d] = volume_of(d);
        BigRational p = assemble_probability(id, vols);
        doc.entry(label, fraction(p) + " = " + to_decimal_string(p));
    };
    for (const auto& [label, id] : report_rows()) row(label, id);

    // the four tournament classes partition the tie-free limit
    if (!is_skipped(Event::C) && !is_skipped(Event::T) && !is_skipped(Event::K)) {
        doc.section("tournament classes");
        BigRational linear = 24 * volume_of(Event::T);
        BigRational winner_only = 4 * volume_of(Event::C) - linear;
        BigRational cycle = 6 * volume_of(Event::K);
        doc.entry("linear order", fraction(linear) + " = " + to_decimal_string(linear));
        doc.entry("winner without loser",
                  fraction(winner_only) + " = " + to_decimal_string(winner_only));
        doc.entry("loser without winner",
                  fraction(winner_only) + " = " + to_decimal_string(winner_only));
        doc.entry("4-cycle", fraction(cycle) + " = " + to_decimal_string(cycle));
        BigRational sum = linear + 2 * winner_only + cycle;
        doc.entry("sum", fraction(sum));
    }

    store_cache(cache_path, cache);
    write_out(opt, doc);
    return 0;
}

int cmd_probability(const CommonOptions& opt, bool all,
                    const std::vector<std::string>& skip,
                    const std::string& cache_path) {
    if (all) return cmd_report(opt, skip, cache_path);
    if (opt.event.empty()) throw parse_error("--event or --all is required");
    auto id = event_from_name(opt.event);
    if (!id) throw parse_error("unknown event '" + opt.event + "'");
    auto cache = load_cache(cache_path);
    std::map<Event, BigRational> vols;
    for (Event d : probability_dependencies().at(*id)) {
        auto it = cache.find(d);
        if (it == cache.end()) {
            CommonOptions vopt = opt;
            vopt.event = event_name(d);
            it = cache.emplace(d, compute_volume(build_polytope(d, 4), vopt)).first;
        }
        vols[d] = it->second;
    }
    BigRational p = assemble_probability(*id, vols);
    OutputDocument doc;
    doc.section("probability");
    doc.entry("event", opt.event);
    doc.entry("probability", fraction(p));
    doc.entry("decimal", to_decimal_string(p));
    store_cache(cache_path, cache);
    write_out(opt, doc);
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"exact volumes, Ehrhart series and probabilities of election polytopes"};
    app.require_subcommand(1);

    CommonOptions opt;
    long long voters = 0;
    bool closed = false;
    bool all = false;
    std::vector<std::string> skip;
    std::string cache_path;

    auto add_common = [&](CLI::App* sub, bool with_polytope = true) {
        sub->add_option("--threads", opt.threads, "worker thread cap")
            ->check(CLI::PositiveNumber);
        sub->add_option("--symmetrize", opt.symmetrize, "auto|on|off")
            ->check(CLI::IsMember({"auto", "on", "off"}));
        sub->add_flag("--progress", opt.progress, "progress notes on stderr");
        sub->add_option("--out", opt.out_path, "write results to a file");
        if (with_polytope) {
            sub->add_option("--event", opt.event, "event polytope name");
            sub->add_option("--input", opt.input_path, "polytope input file");
            sub->add_option("--candidates", opt.candidates, "number of candidates")
                ->check(CLI::Range(3, 4));
        }
    };

    auto* vol = app.add_subcommand("volume", "normalized volume of a polytope");
    add_common(vol);
    auto* ehr = app.add_subcommand("ehrhart", "Ehrhart series and quasipolynomial");
    add_common(ehr);
    ehr->add_flag("--closed", closed, "series of the closure");
    auto* cnt = app.add_subcommand("count", "lattice point count of a dilation");
    add_common(cnt);
    cnt->add_option("--voters", voters, "dilation factor")->required();
    auto* orc = app.add_subcommand("oracle", "brute-force profile count");
    add_common(orc);
    orc->add_option("--voters", voters, "number of voters")->required();
    auto* prob = app.add_subcommand("probability", "event probability from volumes");
    add_common(prob);
    prob->add_flag("--all", all, "full probability table");
    prob->add_option("--skip", skip, "events to skip");
    prob->add_option("--cache", cache_path, "volume cache file");
    auto* rep = app.add_subcommand("report", "full probability table");
    add_common(rep, false);
    rep->add_option("--skip", skip, "events to skip");
    rep->add_option("--cache", cache_path, "volume cache file");

    try {
        app.parse(argc, argv);
        if (vol->parsed()) return cmd_volume(opt);
        if (ehr->parsed()) return cmd_ehrhart(opt, closed);
        if (cnt->parsed()) return cmd_count(opt, voters);
        if (orc->parsed()) return cmd_oracle(opt, voters);
        if (prob->parsed()) return cmd_probability(opt, all, skip, cache_path);
        if (rep->parsed()) return cmd_report(opt, skip, cache_path);
        return 2;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
    } catch (const budget_exceeded& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    }
}

}  // namespace votopes
