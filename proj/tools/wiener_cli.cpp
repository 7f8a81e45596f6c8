#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <tuple>
#include <utility>

#include "CLI11.hpp"
#include "wiener/constructors.hpp"
#include "wiener/degree_sequence.hpp"
#include "wiener/errors.hpp"
#include "wiener/oracle.hpp"
#include "wiener/report.hpp"

namespace {

struct CommonArgs {
    std::string degrees;
    std::string leaves;
    std::string out_dir = ".";
    bool emit = false;
};

wiener::Degrees resolve_degrees(const CommonArgs& args) {
    wiener::Degrees d = wiener::parse_degree_sequence(args.degrees);
    if (!args.leaves.empty()) {
        if (args.leaves == "auto") {
            d = wiener::fill_leaves_auto(d);
        } else {
            std::size_t pos = 0;
            int extra = std::stoi(args.leaves, &pos);
            if (pos != args.leaves.size() || extra < 0)
                throw std::invalid_argument("--leaves expects 'auto' or a count");
            d.insert(d.end(), extra, 1);
            std::sort(d.begin(), d.end(), std::greater<>());
        }
    }
    return d;
}

std::int64_t parse_budget(const std::string& text) {
    char* end = nullptr;
    double v = std::strtod(text.c_str(), &end);
    if (end == text.c_str() || *end != '\0' || v < 1.0 || v > 9.2e18)
        throw std::invalid_argument("--budget expects a positive number such as 5e7");
    return static_cast<std::int64_t>(v);
}

// "3..8" or a single "6", inclusive.
std::pair<int, int> parse_girth_range(const std::string& text) {
    auto parse_int = [](const std::string& part) {
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(part, &pos);
        } catch (const std::exception&) {
            pos = std::string::npos;
        }
        if (pos != part.size()) throw std::invalid_argument("--girth expects N or A..B");
        return v;
    };
    std::size_t dots = text.find("..");
    if (dots == std::string::npos) {
        int g = parse_int(text);
        return {g, g};
    }
    return {parse_int(text.substr(0, dots)), parse_int(text.substr(dots + 2))};
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

// Build the candidates array and drop one DOT file per constructed graph.
std::vector<wiener::CandidateArtifact> emit_candidates(
    const std::vector<wiener::CandidateResult>& results,
    const std::filesystem::path& out_dir, std::ostream& text) {
    std::vector<wiener::CandidateArtifact> artifacts;
    for (const auto& c : results) {
        std::string name = wiener::kind_name(c.kind);
        if (!c.applicable) {
            text << name << ": not applicable (" << c.detail << ")\n";
            continue;
        }
        wiener::CandidateArtifact a;
        a.kind = name;
        a.wiener = c.wiener;
        a.canonical = wiener::canonical_form(c.graph);
        a.dot_path = name + ".dot";
        write_file(out_dir / a.dot_path, wiener::to_dot(c.graph));
        text << name << ": W=" << a.wiener << "  " << a.canonical << "\n";
        artifacts.push_back(std::move(a));
    }
    return artifacts;
}

int run_candidates(const CommonArgs& args, int girth) {
    wiener::Degrees d = resolve_degrees(args);
    auto v = wiener::validate_unicyclic(d, girth);
    if (!v.ok) {
        for (const auto& f : v.failures) std::cerr << "invalid input: " << f << "\n";
        return 1;
    }
    std::filesystem::path out_dir(args.out_dir);
    std::filesystem::create_directories(out_dir);

    std::ostringstream text;
    text << "degrees: " << wiener::render_degree_sequence(d) << "  (n=" << d.size()
         << "), girth " << girth << "\n";
    auto results = wiener::all_candidates(d, girth);
    wiener::RunReport report;
    report.degrees = d;
    report.girth = girth;
    report.candidates = emit_candidates(results, out_dir, text);
    if (report.candidates.empty()) {
        std::cerr << text.str() << "no construction applies to this input\n";
        return 1;
    }
    auto best = wiener::best_candidates(d, girth);
    text << "minimum W=" << best.front().wiener << " attained by " << best.size()
         << " candidate(s)";
    std::size_t distinct = 0;
    std::string last;
    for (const auto& b : best) {
        std::string canon = wiener::canonical_form(b.graph);
        if (canon != last) ++distinct;
        last = canon;
        text << " " << wiener::kind_name(b.kind);
    }
    text << " (" << distinct << " distinct graph" << (distinct == 1 ? "" : "s") << ")\n";

    std::string json = wiener::report_to_json(report);
    write_file(out_dir / "report.json", json);
    std::cout << (args.emit ? json : text.str());
    return 0;
}

int run_oracle(const CommonArgs& args, int girth, const wiener::OracleOptions& opts) {
    wiener::Degrees d = resolve_degrees(args);
    auto v = wiener::validate_unicyclic(d, girth);
    if (!v.ok) {
        for (const auto& f : v.failures) std::cerr << "invalid input: " << f << "\n";
        return 1;
    }
    std::filesystem::path out_dir(args.out_dir);
    std::filesystem::create_directories(out_dir);

    std::ostringstream text;
    text << "degrees: " << wiener::render_degree_sequence(d) << "  (n=" << d.size()
         << "), girth " << girth << "\n";
    wiener::RunReport report;
    report.degrees = d;
    report.girth = girth;
    report.candidates = emit_candidates(wiener::all_candidates(d, girth), out_dir, text);

    wiener::EnumerationReport rep = wiener::exhaustive_minimum(d, girth, opts);
    text << (rep.exhaustive ? "exhaustive" : "partial") << " minimum W=" << rep.min_wiener
         << " over " << rep.count << " isomorphism classes (" << rep.minimizers.size()
         << " minimizers, " << (rep.exhaustive ? "complete" : "budget hit") << ", visited "
         << rep.visited << ")\n";
    // The structural checks reason about true optima, so a clipped
    // enumeration only reports the partial minimum and skips them.
    if (rep.exhaustive) report.checks = wiener::check_theorems(d, girth, rep, opts);
    else text << "checks skipped: enumeration incomplete, raise --budget\n";
    report.oracle = std::move(rep);

    bool violated = false;
    for (const auto& c : report.checks) {
        text << "check " << c.id << ": tested " << c.tested << ", violations "
             << c.violations.size() << "\n";
        for (const auto& w : c.violations) text << "    " << w << "\n";
        violated = violated || !c.violations.empty();
    }

    std::string json = wiener::report_to_json(report);
    write_file(out_dir / "report.json", json);
    std::cout << (args.emit ? json : text.str());
    return violated ? 3 : 0;
}

int run_conjecture(const CommonArgs& args, int girth_lo, int girth_hi, bool with_oracle,
                   const wiener::OracleOptions& opts) {
    wiener::Degrees d = resolve_degrees(args);
    std::filesystem::path out_dir(args.out_dir);
    std::filesystem::create_directories(out_dir);

    wiener::ConjectureTable table =
        wiener::explore_conjecture(d, girth_lo, girth_hi, with_oracle, opts);
    std::string json = wiener::conjecture_to_json(table);
    write_file(out_dir / "conjecture.json", json);
    std::cout << (args.emit ? json : wiener::conjecture_to_text(table));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimum Wiener index unicyclic graph construction and verification"};
    app.require_subcommand(1);

    CommonArgs args;
    int girth = 0;
    int girth_lo = 3, girth_hi = 0;
    bool with_oracle = false;
    std::string budget_text;
    int workers = 0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--degrees", args.degrees,
                        "degree sequence, e.g. \"4,3^7,2^2,1^9\"")
            ->required();
        cmd->add_option("--leaves", args.leaves,
                        "'auto' tops up degree-1 entries until the sum is 2n, "
                        "an integer appends that many");
        cmd->add_option("--out", args.out_dir, "output directory (default .)");
        cmd->add_flag("--emit", args.emit, "print the JSON report to stdout");
    };

    CLI::App* cand = app.add_subcommand(
        "candidates", "construct the three candidate graphs and report the best");
    add_common(cand);
    cand->add_option("--girth", girth, "cycle length")->required();

    CLI::App* orac = app.add_subcommand(
        "oracle", "exhaustive minimum plus structural checks for one girth");
    add_common(orac);
    orac->add_option("--girth", girth, "cycle length")->required();
    orac->add_option("--budget", budget_text, "visited-arrangement cap, e.g. 5e7");
    orac->add_option("--workers", workers, "worker threads, 0 = hardware");

    CLI::App* conj = app.add_subcommand(
        "conjecture", "sweep girths and compare against the predicted optimum");
    add_common(conj);
    std::string girth_range;
    conj->add_option("--girth", girth_range, "girth range, e.g. 3..8 or a single value");
    conj->add_option("--girth-min", girth_lo, "first girth (default 3)");
    conj->add_option("--girth-max", girth_hi, "last girth (default: largest feasible)");
    conj->add_flag("--with-oracle", with_oracle, "also run the exhaustive oracle per girth");
    conj->add_option("--budget", budget_text, "visited-arrangement cap, e.g. 5e7");
    conj->add_option("--workers", workers, "worker threads, 0 = hardware");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        wiener::OracleOptions opts;
        opts.budget = budget_text.empty() ? wiener::default_budget() : parse_budget(budget_text);
        opts.workers = workers;
        if (cand->parsed()) return run_candidates(args, girth);
        if (orac->parsed()) return run_oracle(args, girth, opts);
        if (!girth_range.empty()) std::tie(girth_lo, girth_hi) = parse_girth_range(girth_range);
        return run_conjecture(args, girth_lo, girth_hi, with_oracle, opts);
    } catch (const wiener::InternalError& e) {
        std::cerr << "internal invariant breach: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
