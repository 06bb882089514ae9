#include "nht/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <ostream>
#include <random>
#include <sstream>

#include "nht/core.hpp"
#include "nht/csv.hpp"
#include "nht/fixtures.hpp"
#include "nht/search.hpp"
#include "nht/sequence_file.hpp"

namespace nht::cli {

namespace fs = std::filesystem;

std::string RunReport::to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["outputs"] = outputs;
    j["convention"] = convention ? nlohmann::ordered_json(std::string(to_string(*convention))) : nullptr;
    j["diagnostics"] = diagnostics;
    j["exit_status"] = exit_status;
    return j.dump(2) + "\n";
}

namespace {

/// Bad invocation or unusable input; maps to exit code 2.
struct UsageError : Error {
    using Error::Error;
};

struct Options {
    std::vector<std::string> positional;
    std::string convention = "auto";
    std::string modulus_of = "a";
    bool prime_only = false;
    std::string seeds;
    std::size_t n = 16;
    std::string chain_start = "2";
    bool valid_only = false;
    std::size_t random_count = 0;
    std::uint64_t rng_seed = 0;
    std::string out;
    std::string svg;
    std::string emit_dir;
    std::string report;
};

SequenceFile load_sequence(const std::string& arg) {
    if (fs::exists(arg)) {
        try {
            return parse_sequence_file(arg);
        } catch (const ParseError& e) {
            throw UsageError(e.what());
        }
    }
    if (auto f = fixtures::find(arg)) return *f;
    throw UsageError("'" + arg + "' is neither a readable sequence file nor a fixture name");
}

Convention pick_convention(const std::string& text, RunReport& report) {
    if (text == "auto") {
        const auto res = resolve_convention(fixtures::pair_table_inputs(), fixtures::table2());
        report.diagnostics.push_back("convention auto-resolved to " + std::string(to_string(res.chosen)));
        return res.chosen;
    }
    try {
        return parse_convention(text);
    } catch (const InvalidInput& e) {
        throw UsageError(e.what());
    }
}

/// The file's modulus, or one discovered through the gcd of its lag sums.
Residue modulus_for(const SequenceFile& f, bool prime_only, RunReport& report) {
    if (f.modulus) return *f.modulus;
    const auto c = evaluate_candidate(f.generator(), prime_only);
    if (!c.valid) {
        std::string why = c.diagnostics.empty() ? "no usable modulus" : c.diagnostics.front();
        throw UsageError("sequence '" + f.name + "' has no modulus and discovery failed: " + why);
    }
    report.diagnostics.push_back("sequence '" + f.name + "': discovered modulus " + std::to_string(c.modulus) +
                                 " from gcd " + to_string(c.gcd));
    return c.modulus;
}

void deliver(const std::string& content, const std::string& path, std::ostream& out, RunReport& report) {
    if (path.empty()) {
        out << content;
    } else {
        write_file_atomic(path, content);
        report.outputs.push_back(path);
    }
}

std::vector<std::uint64_t> parse_seed_list(const std::string& text) {
    std::vector<std::uint64_t> seeds;
    std::stringstream ss(text);
    std::string item;
    auto to_u64 = [&](const std::string& s) {
        Int v;
        try {
            v = parse_int(s);
        } catch (const Error&) {
            throw UsageError("malformed seed '" + s + "'");
        }
        if (!fits_u64(v)) throw UsageError("seed '" + s + "' out of range");
        return static_cast<std::uint64_t>(v);
    };
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        const auto dots = item.find("..");
        if (dots == std::string::npos) {
            seeds.push_back(to_u64(item));
            continue;
        }
        const auto lo = to_u64(item.substr(0, dots));
        const auto hi = to_u64(item.substr(dots + 2));
        if (lo > hi) throw UsageError("empty seed range '" + item + "'");
        if (hi - lo > 10'000'000) throw UsageError("seed range '" + item + "' is too large");
        for (std::uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
    }
    return seeds;
}

std::string join_residues(std::span<const Residue> v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

// verify <seq>
int cmd_verify(const Options& o, std::ostream& out, RunReport& report) {
    const SequenceFile f = load_sequence(o.positional.at(0));
    report.inputs.push_back(o.positional[0]);
    const Residue q = modulus_for(f, o.prime_only, report);
    const OrthogonalityReport r = check_orthogonality(f.generator(), q);

    std::ostringstream text;
    text << "sequence: " << f.name << "\n";
    text << "n: " << f.n << "\n";
    text << "modulus: " << q << (r.modulus_is_prime ? " (prime)" : " (composite)") << "\n";
    text << "diagonal_residue: " << r.diagonal_residue << "\n";
    text << "lag_residues: " << join_residues(r.offdiag_residues) << "\n";
    if (r.normalizer) {
        text << "normalizer: " << *r.normalizer << "\n";
    } else if (!r.modulus_is_prime) {
        text << "normalizer: unavailable (composite modulus)\n";
    } else {
        text << "normalizer: none (flagged: diagonal residue cannot be normalized to 1)\n";
        report.diagnostics.push_back("diagonal residue " + std::to_string(r.diagonal_residue) +
                                     " has no normalizer modulo " + std::to_string(q));
    }
    text << "exact_identity: " << (r.is_exact_identity ? "true" : "false") << "\n";

    const auto bad = r.offending_lags();
    for (std::size_t k : bad) {
        report.diagnostics.push_back("lag " + std::to_string(k) + ": residue " +
                                     std::to_string(r.offdiag_residues[k - 1]) + " != 0");
    }
    text << "status: " << (bad.empty() ? "ok" : "FAILED") << "\n";
    deliver(text.str(), o.out, out, report);
    return bad.empty() ? exit_ok : exit_failure;
}

int emit_series(const CorrelationSeries& series, const std::string& title, const Options& o, std::ostream& out,
                RunReport& report) {
    std::ostringstream csv;
    emit_correlation_csv(series, csv);
    deliver(csv.str(), o.out, out, report);
    if (!o.svg.empty()) {
        std::ostringstream svg;
        emit_stem_svg(series, title, svg);
        write_file_atomic(o.svg, svg.str());
        report.outputs.push_back(o.svg);
    }
    return exit_ok;
}

// autocorr <seq>
int cmd_autocorr(const Options& o, std::ostream& out, RunReport& report) {
    const SequenceFile f = load_sequence(o.positional.at(0));
    report.inputs.push_back(o.positional[0]);
    const Convention conv = pick_convention(o.convention, report);
    report.convention = conv;
    const Residue q = modulus_for(f, o.prime_only, report);
    const ResidueSequence s = reduce_mod(f.generator(), q);
    const CorrelationSeries series = circular_autocorr(s, conv);
    for (std::size_t k = 1; k < series.length; ++k) {
        if (series.residue[k] != 0) {
            report.diagnostics.push_back("lag " + std::to_string(k) + ": autocorrelation residue " +
                                         std::to_string(series.residue[k]));
        }
    }
    return emit_series(series, "autocorrelation of " + f.name, o, out, report);
}

struct PairInputs {
    SequenceFile a, b;
    Residue q;
    Convention conv;
};

PairInputs load_pair(const Options& o, RunReport& report) {
    PairInputs p{load_sequence(o.positional.at(0)), load_sequence(o.positional.at(1)), 0, Convention::raw};
    report.inputs = {o.positional[0], o.positional[1]};
    if (p.a.values.size() != p.b.values.size()) {
        throw UsageError("sequences differ in length (" + std::to_string(p.a.values.size()) + " vs " +
                         std::to_string(p.b.values.size()) + ")");
    }
    p.conv = pick_convention(o.convention, report);
    report.convention = p.conv;
    p.q = o.modulus_of == "b" ? modulus_for(p.b, o.prime_only, report) : modulus_for(p.a, o.prime_only, report);
    return p;
}

CorrelationSeries pair_series(const PairInputs& p) {
    const ResidueSequence a = reduce_mod(p.a.generator(), p.q);
    const ResidueSequence b = reduce_mod(p.b.generator(), p.q);
    return circular_crosscorr(a.values(), b.values(), p.q, p.conv);
}

// xcorr <a> <b>
int cmd_xcorr(const Options& o, std::ostream& out, RunReport& report) {
    const PairInputs p = load_pair(o, report);
    return emit_series(pair_series(p), "cross-correlation of " + p.a.name + " and " + p.b.name, o, out, report);
}

// expect <a> <b>
int cmd_expect(const Options& o, std::ostream& out, RunReport& report) {
    const PairInputs p = load_pair(o, report);
    const Rational e = expectation_measure(pair_series(p));
    std::ostringstream text;
    text << "a: " << p.a.name << "\n";
    text << "b: " << p.b.name << "\n";
    text << "modulus: " << p.q << "\n";
    text << "convention: " << to_string(p.conv) << "\n";
    text << "expectation: " << e.to_string() << "\n";
    text << "expectation_decimal: " << format_fixed(e.num, e.den, 6) << "\n";
    text << "expectation_rounded: " << e.to_fixed2() << "\n";
    deliver(text.str(), o.out, out, report);
    return exit_ok;
}

// search --seeds ...
int cmd_search(const Options& o, std::ostream& out, RunReport& report) {
    if (o.seeds.empty()) throw UsageError("search needs --seeds");
    std::vector<std::uint64_t> seeds = parse_seed_list(o.seeds);
    report.inputs.push_back("seeds=" + o.seeds);
    if (o.random_count > 0) {
        if (seeds.empty()) throw UsageError("--random needs a nonempty --seeds range");
        const auto [lo, hi] = std::minmax_element(seeds.begin(), seeds.end());
        try {
            seeds = random_prime_seeds(o.random_count, *lo, *hi, o.rng_seed);
        } catch (const InvalidInput& e) {
            throw UsageError(e.what());
        }
        report.inputs.push_back("random=" + std::to_string(o.random_count) + " rng_seed=" + std::to_string(o.rng_seed));
    }
    SearchOptions opts;
    opts.n = o.n;
    opts.prime_only = o.prime_only;
    opts.valid_only = o.valid_only;
    try {
        opts.chain_start = parse_int(o.chain_start);
    } catch (const Error&) {
        throw UsageError("malformed --chain-start '" + o.chain_start + "'");
    }
    if (opts.n < 2) throw UsageError("--n must be at least 2");
    if (opts.chain_start < 1) throw UsageError("--chain-start must be positive");

    const SearchResult result = search_seeds(seeds, opts);
    report.diagnostics.insert(report.diagnostics.end(), result.diagnostics.begin(), result.diagnostics.end());

    std::ostringstream csv;
    emit_search_csv(result.candidates, csv);
    deliver(csv.str(), o.out, out, report);

    if (!o.emit_dir.empty()) {
        fs::create_directories(o.emit_dir);
        for (const auto& c : result.candidates) {
            if (!c.valid || !c.reduced) continue;
            SequenceFile f;
            f.name = "seed" + to_string(c.seed) + "-n" + std::to_string(c.n);
            f.n = c.n;
            f.values.assign(c.reduced->values().begin(), c.reduced->values().end());
            f.modulus = c.modulus;
            const fs::path path = fs::path(o.emit_dir) / (f.name + ".seq");
            write_file_atomic(path, emit_sequence_text(f));
            report.outputs.push_back(path.string());
        }
    }
    return exit_ok;
}

// reproduce
int cmd_reproduce(const Options& o, std::ostream& out, RunReport& report) {
    bool ok = true;
    std::ostringstream summary;
    const bool to_dir = !o.out.empty();
    if (to_dir) fs::create_directories(o.out);
    auto save = [&](const std::string& name, const std::string& content) {
        if (!to_dir) return;
        const fs::path path = fs::path(o.out) / name;
        write_file_atomic(path, content);
        report.outputs.push_back(path.string());
    };

    std::ostringstream t1;
    t1 << "example,n,modulus,modulus_is_prime,diagonal_residue,normalizer,lags_vanish,autocorr_zero,plotted\n";
    summary << "table 1 verification\n";
    for (const auto& row : fixtures::table1()) {
        const SequenceFile& f = row.file;
        report.inputs.push_back(f.name);
        const OrthogonalityReport r = check_orthogonality(f.generator(), *f.modulus);
        const ResidueSequence s = f.residues();
        bool autocorr_zero = true;
        for (Convention conv : {Convention::raw, Convention::scaled}) {
            const auto series = circular_autocorr(s, conv);
            std::ostringstream csv;
            emit_correlation_csv(series, csv);
            save("autocorr_" + f.name + "_" + std::string(to_string(conv)) + ".csv", csv.str());
            for (std::size_t k = 1; k < series.length; ++k) autocorr_zero = autocorr_zero && series.residue[k] == 0;
        }
        const bool lags = r.lags_vanish();
        const bool flagged = r.diagonal_residue != 1 && !r.normalizer;
        ok = ok && lags && autocorr_zero;
        for (std::size_t k : r.offending_lags()) {
            report.diagnostics.push_back(f.name + ": lag " + std::to_string(k) + " residue " +
                                         std::to_string(r.offdiag_residues[k - 1]));
        }
        if (flagged) report.diagnostics.push_back(f.name + ": diagonal residue has no normalizer (flagged)");
        t1 << f.name << ',' << f.n << ',' << r.modulus << ',' << (r.modulus_is_prime ? "true" : "false") << ','
           << r.diagonal_residue << ',' << (r.normalizer ? std::to_string(*r.normalizer) : std::string()) << ','
           << (lags ? "true" : "false") << ',' << (autocorr_zero ? "true" : "false") << ','
           << (row.plotted ? "true" : "false") << '\n';
        summary << "  " << f.name << " mod " << r.modulus << ": lags " << (lags ? "vanish" : "FAIL")
                << ", autocorrelation " << (autocorr_zero ? "zero off-peak" : "FAIL") << ", r = " << r.diagonal_residue
                << ", w = " << (r.normalizer ? std::to_string(*r.normalizer) : std::string("-")) << "\n";
    }
    save("table1.csv", t1.str());

    const auto inputs = fixtures::pair_table_inputs();
    const auto res = resolve_convention(inputs, fixtures::table2());
    Convention conv = res.chosen;
    if (o.convention != "auto") conv = pick_convention(o.convention, report);
    report.convention = conv;
    const DeviationProfile& used = conv == Convention::raw ? res.raw : res.scaled;

    for (const auto* p : {&res.raw, &res.scaled}) {
        std::ostringstream csv;
        emit_deviation_csv(*p, csv);
        save("deviations_" + std::string(to_string(p->convention)) + ".csv", csv.str());
    }

    const auto rows = pair_table(inputs, conv);
    std::ostringstream t2;
    emit_pair_table_csv(rows, t2);
    save("table2.csv", t2.str());
    for (const auto& row : rows) {
        const auto series = circular_crosscorr(inputs[row.i - 1].values(), inputs[row.j - 1].values(), row.modulus, conv);
        std::ostringstream csv;
        emit_correlation_csv(series, csv);
        save("xcorr_" + std::to_string(row.i) + "_" + std::to_string(row.j) + "_mod" + std::to_string(row.modulus) +
                 ".csv",
             csv.str());
    }

    const bool table2_ok = !used.failure && used.max_rounded_deviation_hundredths() <= 1;
    ok = ok && table2_ok;
    char buf[64];
    summary << "table 2 reproduction (convention " << to_string(conv) << ", resolved " << to_string(res.chosen)
            << ")\n";
    for (const auto& e : used.entries) {
        std::snprintf(buf, sizeof buf, "%.2f", e.target);
        summary << "  " << e.i << " and " << e.j << " mod " << e.modulus << ": " << e.expectation.to_fixed2()
                << " (target " << buf << ")\n";
    }
    for (const auto* p : {&res.raw, &res.scaled}) {
        if (p->failure) {
            summary << "  " << to_string(p->convention) << ": not evaluable (" << *p->failure << ")\n";
        } else {
            std::snprintf(buf, sizeof buf, "%.4f", p->max_deviation());
            summary << "  " << to_string(p->convention) << " max deviation " << buf << "\n";
        }
    }
    summary << "status: " << (ok ? "ok" : "FAILED") << "\n";

    if (to_dir) {
        save("summary.txt", summary.str());
        out << summary.str();
    } else {
        out << summary.str() << "\n";
        out << t1.str() << "\n";
        out << t2.str();
    }
    if (!table2_ok) report.diagnostics.push_back("table 2 deviates by more than 0.01");
    return ok ? exit_ok : exit_failure;
}

}  // namespace

RunReport run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunReport report;
    Options o;

    CLI::App app{"Number-theoretic Hilbert transform sequence toolkit", "nht"};
    app.require_subcommand(1);
    app.add_option("--report", o.report, "Write the run report as JSON to this path");

    auto* verify = app.add_subcommand("verify", "Check N N^T = r I modulo the sequence's modulus");
    verify->add_option("sequence", o.positional, "Sequence file or fixture name")->required()->expected(1);
    verify->add_flag("--prime-only", o.prime_only, "Use the largest prime factor when discovering a modulus");
    verify->add_option("--out", o.out, "Output path (default: stdout)");

    auto* autocorr = app.add_subcommand("autocorr", "Circular autocorrelation as CSV");
    autocorr->add_option("sequence", o.positional, "Sequence file or fixture name")->required()->expected(1);
    autocorr->add_option("--convention", o.convention, "raw, scaled or auto")
        ->check(CLI::IsMember({"raw", "scaled", "auto"}));
    autocorr->add_flag("--prime-only", o.prime_only, "Use the largest prime factor when discovering a modulus");
    autocorr->add_option("--out", o.out, "Output path (default: stdout)");
    autocorr->add_option("--svg", o.svg, "Also write a stem plot");

    auto* xcorr = app.add_subcommand("xcorr", "Circular cross-correlation as CSV");
    auto* expect = app.add_subcommand("expect", "Expectation of the cross-correlation");
    for (auto* sub : {xcorr, expect}) {
        sub->add_option("sequences", o.positional, "Two sequence files or fixture names")->required()->expected(2);
        sub->add_option("--convention", o.convention, "raw, scaled or auto")
            ->check(CLI::IsMember({"raw", "scaled", "auto"}));
        sub->add_option("--modulus-of", o.modulus_of, "Correlate modulo the modulus of a or b")
            ->check(CLI::IsMember({"a", "b"}));
        sub->add_flag("--prime-only", o.prime_only, "Use the largest prime factor when discovering a modulus");
        sub->add_option("--out", o.out, "Output path (default: stdout)");
    }
    xcorr->add_option("--svg", o.svg, "Also write a stem plot");

    auto* search = app.add_subcommand("search", "Evaluate prime-seed doubling chains");
    search->add_option("--seeds", o.seeds, "Comma-separated seeds and lo..hi ranges")->required();
    search->add_option("--n", o.n, "Chain length")->check(CLI::Range(2, 1 << 20));
    search->add_flag("--prime-only", o.prime_only, "Use the largest prime factor of the gcd as modulus");
    search->add_option("--chain-start", o.chain_start, "First doubling value (default 2)");
    search->add_flag("--valid-only", o.valid_only, "Drop invalid candidates");
    search->add_option("--random", o.random_count, "Draw this many primes from the --seeds span");
    search->add_option("--rng-seed", o.rng_seed, "Seed for --random");
    search->add_option("--out", o.out, "Output path (default: stdout)");
    search->add_option("--emit-dir", o.emit_dir, "Write a sequence file per valid candidate");

    auto* reproduce = app.add_subcommand("reproduce", "Regenerate the published tables from fixtures");
    reproduce->add_option("--out", o.out, "Directory for CSV outputs (default: summary to stdout)");
    reproduce->add_option("--convention", o.convention, "raw, scaled or auto")
        ->check(CLI::IsMember({"raw", "scaled", "auto"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        report.command = args.empty() ? "" : args.front();
        report.exit_status = code == 0 ? exit_ok : exit_usage;
        if (code != 0) report.diagnostics.push_back(e.what());
        return report;
    }

    CLI::App* sub = app.get_subcommands().front();
    report.command = sub->get_name();
    try {
        if (sub == verify) report.exit_status = cmd_verify(o, out, report);
        else if (sub == autocorr) report.exit_status = cmd_autocorr(o, out, report);
        else if (sub == xcorr) report.exit_status = cmd_xcorr(o, out, report);
        else if (sub == expect) report.exit_status = cmd_expect(o, out, report);
        else if (sub == search) report.exit_status = cmd_search(o, out, report);
        else report.exit_status = cmd_reproduce(o, out, report);
    } catch (const UsageError& e) {
        report.diagnostics.push_back(e.what());
        report.exit_status = exit_usage;
    } catch (const std::exception& e) {
        report.diagnostics.push_back(e.what());
        report.exit_status = exit_failure;
    }

    for (const auto& d : report.diagnostics) err << d << "\n";
    if (report.exit_status == exit_usage) err << sub->help();
    if (!o.report.empty()) {
        try {
            write_file_atomic(o.report, report.to_json());
        } catch (const Error& e) {
            err << e.what() << "\n";
            report.exit_status = exit_failure;
        }
    }
    return report;
}

}  // namespace nht::cli
