#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "nht/cli.hpp"
#include "nht/fixtures.hpp"
#include "nht/sequence_file.hpp"

using namespace nht;
namespace fs = std::filesystem;

namespace {

struct Run {
    cli::RunReport report;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    auto report = cli::run_command(args, out, err);
    return {report, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / ("nht_cli_" + std::to_string(counter()++))) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    static int& counter() {
        static int c = 0;
        return c;
    }
};

}  // namespace

TEST_CASE("verify") {
    const auto r = run({"verify", "example1"});
    CHECK(r.report.exit_status == cli::exit_ok);
    CHECK(r.out.find("diagonal_residue: 1\n") != std::string::npos);
    CHECK(r.out.find("lag_residues: 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0\n") != std::string::npos);
    CHECK(r.out.find("exact_identity: true") != std::string::npos);

    const auto r4 = run({"verify", "example4"});
    CHECK(r4.report.exit_status == cli::exit_ok);
    CHECK(r4.out.find("diagonal_residue: 4\n") != std::string::npos);
    CHECK(r4.out.find("normalizer: 165\n") != std::string::npos);

    TempDir tmp;
    const auto bad = tmp.path / "bad.seq";
    {
        std::ofstream f(bad);
        f << "name: bad\nn: 3\nvalues: 1 1 0\nmodulus: 5\n";
    }
    const auto rb = run({"verify", bad.string()});
    CHECK(rb.report.exit_status == cli::exit_failure);
    CHECK(rb.err.find("lag 1: residue 1") != std::string::npos);
    CHECK(rb.err.find("lag 2: residue 1") != std::string::npos);
}

TEST_CASE("verify discovers a modulus for raw chains") {
    const auto r = run({"verify", "chain-seed3", "--prime-only"});
    CHECK(r.report.exit_status == cli::exit_ok);
    CHECK(r.out.find("modulus: 3121 (prime)") != std::string::npos);
}

TEST_CASE("autocorr writes the CSV schema") {
    const auto r = run({"autocorr", "example3", "--convention", "raw"});
    CHECK(r.report.exit_status == cli::exit_ok);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "lag,raw_sum,residue,normalized");
    int count = 0;
    while (std::getline(lines, line)) {
        const auto first = line.find(',');
        const auto second = line.find(',', first + 1);
        const auto third = line.find(',', second + 1);
        const std::string residue = line.substr(second + 1, third - second - 1);
        if (count > 0) CHECK(residue == "0");
        ++count;
    }
    CHECK(count == 16);
    CHECK(r.report.convention == Convention::raw);
}

TEST_CASE("delta autocorrelation CSV is byte-exact") {
    TempDir tmp;
    const auto seq = tmp.path / "delta.seq";
    {
        std::ofstream f(seq);
        f << "name: delta\nn: 4\nvalues: 1 0 0 0\nmodulus: 5\n";
    }
    const auto out = tmp.path / "delta.csv";
    const auto r = run({"autocorr", seq.string(), "--convention", "raw", "--out", out.string()});
    CHECK(r.report.exit_status == cli::exit_ok);
    CHECK(slurp(out) ==
          "lag,raw_sum,residue,normalized\n"
          "0,1,1,0.200000\n"
          "1,0,0,0.000000\n"
          "2,0,0,0.000000\n"
          "3,0,0,0.000000\n");
    CHECK_FALSE(fs::exists(tmp.path / "delta.csv.tmp"));
}

TEST_CASE("xcorr and expect") {
    const auto x = run({"xcorr", "example1", "example2", "--convention", "raw"});
    CHECK(x.report.exit_status == cli::exit_ok);
    CHECK(x.out.rfind("lag,raw_sum,residue,normalized\n", 0) == 0);

    const auto e = run({"expect", "example1", "example2", "--convention", "raw"});
    CHECK(e.out.find("modulus: 7283\n") != std::string::npos);
    CHECK(e.out.find("expectation: 101947/116528\n") != std::string::npos);
    CHECK(e.out.find("expectation_rounded: 0.87\n") != std::string::npos);

    const auto eb = run({"expect", "example1", "example2", "--convention", "raw", "--modulus-of", "b"});
    CHECK(eb.out.find("modulus: 21851\n") != std::string::npos);

    TempDir tmp;
    const auto short_seq = tmp.path / "short.seq";
    {
        std::ofstream f(short_seq);
        f << "name: short\nn: 2\nvalues: 1 2\nmodulus: 7\n";
    }
    const auto mismatch = run({"xcorr", "example1", short_seq.string()});
    CHECK(mismatch.report.exit_status == cli::exit_usage);
}

TEST_CASE("search reproduces the published rows") {
    const auto r = run({"search", "--seeds", "2,3,11,13", "--n", "16", "--prime-only"});
    CHECK(r.report.exit_status == cli::exit_ok);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "seed,n,gcd,gcd_factors,modulus,modulus_is_prime,diagonal_residue,normalizer,valid,reduced");
    std::getline(lines, line);
    CHECK(line == "2,16,43692,2^2*3*11*331,331,true,4,165,true,2 2 4 8 16 32 64 128 256 181 31 62 124 248 165 330");

    TempDir tmp;
    const auto emitted = run({"search", "--seeds", "3", "--prime-only", "--emit-dir", tmp.path.string()});
    CHECK(emitted.report.exit_status == cli::exit_ok);
    auto f = parse_sequence_file(tmp.path / "seed3-n16.seq");
    CHECK(f.values == fixtures::table1()[2].file.values);

    const auto ranged = run({"search", "--seeds", "2..20", "--random", "3", "--rng-seed", "9"});
    CHECK(ranged.report.exit_status == cli::exit_ok);
    const auto again = run({"search", "--seeds", "2..20", "--random", "3", "--rng-seed", "9"});
    CHECK(ranged.out == again.out);

    const auto nonprime = run({"search", "--seeds", "4"});
    CHECK(nonprime.report.exit_status == cli::exit_ok);
    CHECK(nonprime.err.find("not prime") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({"frobnicate"}).report.exit_status == cli::exit_usage);
    CHECK(run({}).report.exit_status == cli::exit_usage);
    CHECK(run({"verify"}).report.exit_status == cli::exit_usage);
    CHECK(run({"autocorr", "example1", "--convention", "cubic"}).report.exit_status == cli::exit_usage);
    CHECK(run({"verify", "no-such-sequence"}).report.exit_status == cli::exit_usage);
    CHECK(run({"search", "--seeds", "x"}).report.exit_status == cli::exit_usage);
    CHECK(run({"verify", "example1", "--bogus"}).report.exit_status == cli::exit_usage);
    CHECK(run({"--help"}).report.exit_status == cli::exit_ok);
}

TEST_CASE("reproduce writes tables and a JSON report") {
    TempDir tmp;
    const auto report_path = tmp.path / "report.json";
    const auto r = run({"--report", report_path.string(), "reproduce", "--out", (tmp.path / "out").string()});
    CHECK(r.report.exit_status == cli::exit_ok);
    CHECK(r.report.convention == Convention::raw);

    const std::string table2 = slurp(tmp.path / "out" / "table2.csv");
    CHECK(table2.rfind("i,j,modulus,expectation\n1,2,7283,0.87\n", 0) == 0);
    CHECK(std::count(table2.begin(), table2.end(), '\n') == 13);
    CHECK(fs::exists(tmp.path / "out" / "deviations_scaled.csv"));
    CHECK(fs::exists(tmp.path / "out" / "xcorr_4_3_mod331.csv"));
    CHECK(fs::exists(tmp.path / "out" / "autocorr_example6_scaled.csv"));

    const auto json = nlohmann::json::parse(slurp(report_path));
    CHECK(json["command"] == "reproduce");
    CHECK(json["convention"] == "raw");
    CHECK(json["exit_status"] == 0);

    // Deterministic output.
    const auto r2 = run({"reproduce"});
    const auto r3 = run({"reproduce"});
    CHECK(r2.out == r3.out);
    CHECK(r2.report.exit_status == cli::exit_ok);
}
