// hopf: print closed-form motives of the twisted Hopf link varieties, tabulate
// them, and verify them by point counting. Exit codes: 0 ok, 1 mismatch, 2 bad input.

#include <charconv>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hopf/hopf.hpp"
#include "hopf/report_json.hpp"

namespace {

using hopf::Int;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitBadInput = 2;
constexpr Int kAutoPrimeBound = 13;

struct BadInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

Int parse_int(std::string_view s, std::string_view what) {
    Int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw BadInput("bad " + std::string(what) + ": '" + std::string(s) + "'");
    }
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) return out;
        start = pos + 1;
    }
}

/// "3", "1..4", "1,2,5", "1..3,7" -> sorted distinct values >= 1.
std::vector<Int> parse_n_range(std::string_view spec) {
    std::set<Int> values;
    for (auto part : split(spec, ',')) {
        const auto dots = part.find("..");
        if (dots == std::string_view::npos) {
            values.insert(parse_int(part, "n"));
            continue;
        }
        const Int lo = parse_int(part.substr(0, dots), "n range start");
        const Int hi = parse_int(part.substr(dots + 2), "n range end");
        if (hi < lo) throw BadInput("empty n range: '" + std::string(part) + "'");
        if (hi - lo > 4096) throw BadInput("n range too long: '" + std::string(part) + "'");
        for (Int n = lo; n <= hi; ++n) values.insert(n);
    }
    for (Int n : values) {
        if (n < 1) throw BadInput("n must be >= 1, got " + std::to_string(n));
    }
    return {values.begin(), values.end()};
}

std::vector<Int> parse_int_list(std::string_view spec, std::string_view what) {
    std::vector<Int> out;
    for (auto part : split(spec, ',')) out.push_back(parse_int(part, what));
    return out;
}

/// The two smallest admissible odd primes <= 13.
std::vector<Int> auto_primes(Int n) {
    std::vector<Int> out;
    for (Int p = 3; p <= kAutoPrimeBound && out.size() < 2; p += 2) {
        if (hopf::is_admissible(n, p)) out.push_back(p);
    }
    return out;
}

enum class Format { text, json, csv, md };

Format parse_format(const std::string& s) {
    if (s == "text") return Format::text;
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    if (s == "md") return Format::md;
    throw BadInput("unknown format: " + s);
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string fixed2(double x) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(2) << x;
    return os.str();
}

// ---- motive ------------------------------------------------------------------

struct MotiveArgs {
    std::string family;
    Int n = 1;
    std::vector<Int> evals;
    std::string format = "text";
};

int cmd_motive(const MotiveArgs& a) {
    const auto format = parse_format(a.format);
    const auto family = hopf::FamilyId::parse(a.family);
    const auto entry = hopf::formula_entry(family, a.n);
    const auto poly = entry.expanded();
    if (format == Format::json) {
        hopf::Json j;
        j["family"] = family.token();
        j["n"] = a.n;
        j["origin"] = std::string(entry.origin);
        j["factored"] = entry.factored.to_string();
        j["expanded"] = poly.to_string();
        j["values"] = hopf::Json::object();
        for (Int q : a.evals) j["values"]["q=" + std::to_string(q)] = std::to_string(poly.eval(q));
        std::cout << j.dump() << '\n';
        return kExitOk;
    }
    if (format != Format::text) throw BadInput("motive supports --format text or json");
    std::cout << "family:   " << family.token() << '\n'
              << "n:        " << a.n << '\n'
              << "origin:   " << entry.origin << '\n'
              << "factored: " << entry.factored.to_string() << '\n'
              << "expanded: " << poly.to_string() << '\n';
    for (Int q : a.evals) std::cout << "q=" << q << ": " << poly.eval(q) << '\n';
    return kExitOk;
}

// ---- table -------------------------------------------------------------------

struct TableArgs {
    std::vector<std::string> families{"totals"};
    std::string n = "1..4";
    std::vector<Int> evals;
    std::string format = "text";
};

int cmd_table(const TableArgs& a) {
    const auto format = parse_format(a.format);
    std::vector<hopf::FamilyId> families;
    for (const auto& sel : a.families) {
        for (const auto& f : hopf::family_group(sel)) families.push_back(f);
    }
    const auto ns = parse_n_range(a.n);

    std::vector<std::string> header{"family", "n", "factored", "expanded"};
    for (Int q : a.evals) header.push_back("q=" + std::to_string(q));
    std::vector<std::vector<std::string>> rows;
    for (const auto& f : families) {
        for (Int n : ns) {
            const auto entry = hopf::formula_entry(f, n);
            const auto poly = entry.expanded();
            std::vector<std::string> row{f.token(), std::to_string(n), entry.factored.to_string(), poly.to_string()};
            for (Int q : a.evals) row.push_back(std::to_string(poly.eval(q)));
            rows.push_back(std::move(row));
        }
    }

    switch (format) {
        case Format::csv: {
            const auto line = [](const std::vector<std::string>& cells) {
                std::string out;
                for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + csv_field(cells[i]);
                return out;
            };
            std::cout << line(header) << '\n';
            for (const auto& r : rows) std::cout << line(r) << '\n';
            break;
        }
        case Format::md: {
            const auto line = [](const std::vector<std::string>& cells) {
                std::string out = "|";
                for (const auto& c : cells) out += " " + c + " |";
                return out;
            };
            std::cout << line(header) << '\n' << '|';
            for (std::size_t i = 0; i < header.size(); ++i) std::cout << " --- |";
            std::cout << '\n';
            for (const auto& r : rows) std::cout << line(r) << '\n';
            break;
        }
        case Format::json:
            for (const auto& r : rows) {
                hopf::Json j;
                for (std::size_t i = 0; i < header.size(); ++i) j[header[i]] = header[i] == "n" ? hopf::Json(std::stoll(r[i])) : hopf::Json(r[i]);
                std::cout << j.dump() << '\n';
            }
            break;
        case Format::text:
            for (const auto& r : rows) {
                std::cout << r[0] << " n=" << r[1] << ": " << r[3];
                for (std::size_t i = 4; i < r.size(); ++i) std::cout << "  [" << header[i] << " -> " << r[i] << ']';
                std::cout << '\n';
            }
            break;
    }
    return kExitOk;
}

// ---- strata ------------------------------------------------------------------

struct StrataArgs {
    int rank = 2;
    std::optional<Int> n;
    std::string format = "text";
};

std::string shape_string(const hopf::TypeShape& s) {
    std::string out = "[";
    for (std::size_t i = 0; i < s.size(); ++i) {
        out += i ? ",[" : "[";
        for (std::size_t k = 0; k < s[i].size(); ++k) out += (k ? "," : "") + std::to_string(s[i][k]);
        out += ']';
    }
    return out + "]";
}

int cmd_strata(const StrataArgs& a) {
    const auto format = parse_format(a.format);
    if (format == Format::csv || format == Format::md) throw BadInput("strata supports --format text or json");
    if (a.n && a.rank != 2) throw BadInput("--n is only meaningful with --rank 2");
    const auto types = hopf::enumerate_jordan_types(a.rank);
    const auto pairs = hopf::stratum_pairs(a.rank);
    if (format == Format::json) {
        hopf::Json j;
        j["rank"] = a.rank;
        j["types"] = hopf::Json::array();
        for (const auto& t : types) {
            j["types"].push_back({{"token", hopf::jordan_token(t)},
                                  {"shape", shape_string(hopf::shape_of(t))},
                                  {"chains", hopf::describe(t)},
                                  {"diagonalizable", hopf::is_diagonalizable(t)}});
        }
        j["strata"] = hopf::Json::array();
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            hopf::Json s{{"token", hopf::stratum_token(pairs[i])}};
            if (a.n) {
                const auto st = static_cast<hopf::Stratum2>(i);
                s["rep_gl2"] = hopf::motive_formula(hopf::FamilyId::gl2_stratum(st), *a.n).to_string();
                s["rep_agl2"] = hopf::motive_formula(hopf::FamilyId::agl2_stratum(st), *a.n).to_string();
            }
            j["strata"].push_back(std::move(s));
        }
        std::cout << j.dump() << '\n';
        return kExitOk;
    }
    std::cout << "rank " << a.rank << ": " << types.size() << " Jordan types\n";
    for (const auto& t : types) {
        std::cout << "  " << hopf::jordan_token(t) << "  shape " << shape_string(hopf::shape_of(t)) << "  chains "
                  << hopf::describe(t) << (hopf::is_diagonalizable(t) ? "  diagonalizable" : "") << '\n';
    }
    std::cout << "stratum pairs: " << pairs.size() << '\n';
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        std::cout << "  " << hopf::stratum_token(pairs[i]);
        if (a.n) {
            const auto st = static_cast<hopf::Stratum2>(i);
            std::cout << "  GL2: " << hopf::motive_formula(hopf::FamilyId::gl2_stratum(st), *a.n).to_string()
                      << "  AGL2: " << hopf::motive_formula(hopf::FamilyId::agl2_stratum(st), *a.n).to_string();
        }
        std::cout << '\n';
    }
    return kExitOk;
}

// ---- verify ------------------------------------------------------------------

struct VerifyArgs {
    std::vector<std::string> families{"all"};
    std::string n = "1";
    std::string primes = "auto";
    std::string strategy = "class_based";
    std::string format = "text";
    unsigned jobs = 0;
    bool naive_crosscheck = false;
};

class ReportSink {
public:
    explicit ReportSink(Format f) : format_(f) {}

    void begin() {
        if (format_ == Format::csv) std::cout << "family,n,p,strategy,formula_value,counted_value,verdict,elapsed_ms\n";
        if (format_ == Format::md) {
            std::cout << "| family | n | p | strategy | formula | counted | verdict |\n"
                      << "| --- | --- | --- | --- | --- | --- | --- |\n";
        }
    }

    void emit(const hopf::VerifyReport& r) {
        ++reports_;
        if (!r.all_match()) ++mismatches_;
        switch (format_) {
            case Format::json: std::cout << hopf::to_json_line(r) << '\n'; break;
            case Format::text: text(r, 0); break;
            case Format::csv: csv(r); break;
            case Format::md: md(r, 0); break;
        }
        std::cout.flush();
    }

    int reports() const { return reports_; }
    int mismatches() const { return mismatches_; }

private:
    static void text(const hopf::VerifyReport& r, int depth) {
        std::cout << std::string(static_cast<std::size_t>(2 * depth), ' ') << std::left << std::setw(9)
                  << r.verdict() << r.family << " n=" << r.n << " p=" << r.p << " " << r.strategy
                  << " formula=" << r.formula_value << " counted=" << r.counted_value;
        if (depth == 0) std::cout << " [" << fixed2(r.elapsed_ms) << " ms]";
        std::cout << '\n';
        for (const auto& b : r.breakdown) text(b, depth + 1);
    }
    static void csv(const hopf::VerifyReport& r) {
        std::cout << csv_field(r.family) << ',' << r.n << ',' << r.p << ',' << r.strategy << ',' << r.formula_value
                  << ',' << r.counted_value << ',' << r.verdict() << ',' << fixed2(r.elapsed_ms) << '\n';
        for (const auto& b : r.breakdown) csv(b);
    }
    static void md(const hopf::VerifyReport& r, int depth) {
        std::cout << "| " << std::string(static_cast<std::size_t>(depth), '>') << (depth ? " " : "") << r.family
                  << " | " << r.n << " | " << r.p << " | " << r.strategy << " | " << r.formula_value << " | "
                  << r.counted_value << " | " << r.verdict() << " |\n";
        for (const auto& b : r.breakdown) md(b, depth + 1);
    }

    Format format_;
    int reports_ = 0;
    int mismatches_ = 0;
};

int cmd_verify(const VerifyArgs& a) {
    const auto format = parse_format(a.format);
    const auto strategy = hopf::parse_strategy(a.strategy);
    std::vector<hopf::VerifyTarget> targets;
    for (const auto& sel : a.families) {
        for (auto& t : hopf::target_group(sel)) targets.push_back(std::move(t));
    }
    const auto ns = parse_n_range(a.n);
    const bool auto_mode = a.primes == "auto";
    const auto explicit_primes = auto_mode ? std::vector<Int>{} : parse_int_list(a.primes, "prime");

    struct Cell {
        Int n, p;
    };
    std::vector<Cell> cells;
    for (Int n : ns) {
        const auto primes = auto_mode ? auto_primes(n) : explicit_primes;
        if (auto_mode && primes.size() < 2) {
            std::cerr << "warning: n=" << n << " has " << primes.size() << " admissible prime(s) <= "
                      << kAutoPrimeBound << (primes.empty() ? "; skipped" : "") << '\n';
        }
        for (Int p : primes) cells.push_back({n, p});
    }

    // With explicit primes every requested cell must be runnable before anything runs.
    // Under "auto" the only cells that can fail are size-bounded checks, which are skipped.
    std::vector<std::vector<bool>> runnable(cells.size(), std::vector<bool>(targets.size(), true));
    for (std::size_t c = 0; c < cells.size(); ++c) {
        for (std::size_t t = 0; t < targets.size(); ++t) {
            try {
                hopf::require_runnable(targets[t], cells[c].n, cells[c].p, strategy);
            } catch (const hopf::InadmissibleError& e) {
                if (!auto_mode) throw;
                runnable[c][t] = false;
                std::cerr << "warning: skipping " << hopf::target_token(targets[t]) << " at n=" << cells[c].n
                          << " p=" << cells[c].p << ": " << e.what() << '\n';
            }
        }
    }

    ReportSink sink(format);
    sink.begin();
    for (std::size_t c = 0; c < cells.size(); ++c) {
        const auto [n, p] = cells[c];
        hopf::CellVerifier verifier(n, p, strategy, a.jobs);
        std::optional<hopf::CellVerifier> naive;
        for (std::size_t t = 0; t < targets.size(); ++t) {
            if (!runnable[c][t]) continue;
            sink.emit(verifier.verify(targets[t]));
            const auto* fam = std::get_if<hopf::FamilyId>(&targets[t]);
            if (!a.naive_crosscheck || strategy == hopf::Strategy::naive || !fam || !hopf::has_strategies(*fam)) {
                continue;
            }
            if (p > hopf::kNaiveMaxPrime) {
                std::cerr << "warning: no naive crosscheck for " << fam->token() << " at p=" << p << " (p > "
                          << hopf::kNaiveMaxPrime << ")\n";
                continue;
            }
            if (!naive) naive.emplace(n, p, hopf::Strategy::naive, a.jobs);
            sink.emit(naive->verify(targets[t]));
        }
    }
    std::cerr << sink.reports() << " report(s), " << sink.mismatches() << " with mismatches\n";
    return sink.mismatches() == 0 ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Motives of representation and character varieties of the twisted Hopf link"};
    app.require_subcommand(1);

    MotiveArgs motive;
    auto* m = app.add_subcommand("motive", "Print the closed form of one family");
    m->add_option("--family", motive.family, "Family token, e.g. rep_agl2_stratum:xi2_xi0")->required();
    m->add_option("--n", motive.n, "Twist parameter n >= 1");
    m->add_option("--eval", motive.evals, "Evaluate at these q values")->delimiter(',');
    m->add_option("--format", motive.format, "text | json");

    VerifyArgs verify;
    auto* v = app.add_subcommand("verify", "Check formulas against exact point counts");
    v->add_option("--family,--families", verify.families,
                  "Families, groups (all, totals, gl2, char, agl1, agl2, twisted) or sl_gl_relation")
        ->delimiter(',');
    v->add_option("--n", verify.n, "n values, e.g. 2, 1..4, 1,3,5");
    v->add_option("--primes", verify.primes, "Comma-separated primes or 'auto'");
    v->add_option("--strategy", verify.strategy, "naive | class_based");
    v->add_option("--format", verify.format, "text | json | csv | md");
    v->add_option("--jobs", verify.jobs, "Worker threads (0: HOPF_JOBS or hardware)");
    v->add_flag("--naive-crosscheck", verify.naive_crosscheck, "Also run the naive count when p <= 7");

    TableArgs table;
    auto* t = app.add_subcommand("table", "Tabulate expanded formulas");
    t->add_option("--family,--families", table.families, "Families or groups")->delimiter(',');
    t->add_option("--n", table.n, "n values");
    t->add_option("--eval", table.evals, "Evaluate at these q values")->delimiter(',');
    t->add_option("--format", table.format, "text | json | csv | md");

    StrataArgs strata;
    auto* s = app.add_subcommand("strata", "List Jordan types and stratum pairs");
    s->add_option("--rank", strata.rank, "Rank r in [1, 6]");
    s->add_option("--n", strata.n, "With rank 2, also print the stratum motives at this n");
    s->add_option("--format", strata.format, "text | json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadInput;
    }

    try {
        if (m->parsed()) return cmd_motive(motive);
        if (v->parsed()) return cmd_verify(verify);
        if (t->parsed()) return cmd_table(table);
        if (s->parsed()) return cmd_strata(strata);
    } catch (const std::invalid_argument& e) {  // includes InadmissibleError and BadInput
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const std::overflow_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    }
    return kExitBadInput;
}
