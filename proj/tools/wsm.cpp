#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "wsm/bench.hpp"
#include "wsm/errors.hpp"
#include "wsm/genmodel.hpp"
#include "wsm/io.hpp"
#include "wsm/oracle.hpp"
#include "wsm/threshold.hpp"
#include "wsm/wpm.hpp"
#include "wsm/wtm.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw wsm::Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string check_z(const std::string& value) {
    try {
        if (std::stod(value) >= 2.0) return {};
    } catch (...) {
    }
    return "z must be a real number >= 2";
}

void print_positions(const std::vector<std::size_t>& positions) {
    for (std::size_t p : positions)
        std::cout << p << '\n';
}

void print_stats(const wsm::MatchReport& report) {
    std::cerr << "charsInspected=" << report.counters.chars_inspected << '\n'
              << "candidates=" << report.counters.candidates << '\n'
              << "gateSatisfied=" << (report.gate_satisfied ? "true" : "false") << '\n'
              << "usedFallback=" << (report.used_fallback ? "true" : "false") << '\n';
}

struct MatchArgs {
    std::string pattern_path;
    std::string text_path;
    double z = 2.0;
    bool stats = false;
    unsigned threads = 1;
};

void add_match_options(CLI::App* cmd, MatchArgs& args, bool with_stats) {
    cmd->add_option("--pattern", args.pattern_path, "pattern file")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--text", args.text_path, "text file")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--z", args.z, "cumulative weight threshold parameter z")
        ->required()
        ->check(check_z);
    if (with_stats) {
        cmd->add_flag("--stats", args.stats,
                      "write search counters to standard error");
        cmd->add_option("--threads", args.threads, "chunked parallel search")
            ->check(CLI::Range(1u, 256u));
    }
}

void run_wpm(const MatchArgs& args, bool use_oracle) {
    const wsm::WeightedString x = wsm::parse_weighted(read_file(args.pattern_path));
    const wsm::PlainSequence text = wsm::parse_plain(read_file(args.text_path));
    if (!(x.alphabet() == text.alphabet))
        throw wsm::AlphabetMismatchError("pattern and text declare different alphabets");
    const wsm::Threshold t(args.z);

    if (use_oracle) {
        print_positions(wsm::oracle::oracle_wpm(x, text.symbols, t));
        return;
    }
    wsm::PlainText y(std::move(text.symbols), text.alphabet.size());
    const wsm::MatchReport report =
        wsm::wpm_search(x, y, t, nullptr, args.threads);
    print_positions(report.positions);
    if (args.stats) print_stats(report);
}

void run_wtm(const MatchArgs& args, bool use_oracle) {
    const wsm::PlainSequence pattern = wsm::parse_plain(read_file(args.pattern_path));
    const wsm::WeightedString y = wsm::parse_weighted(read_file(args.text_path));
    if (!(pattern.alphabet == y.alphabet()))
        throw wsm::AlphabetMismatchError("pattern and text declare different alphabets");
    const wsm::Threshold t(args.z);

    if (use_oracle) {
        print_positions(wsm::oracle::oracle_wtm(pattern.symbols, y, t));
        return;
    }
    const wsm::MatchReport report =
        wsm::wtm_search(pattern.symbols, y, t, nullptr, args.threads);
    print_positions(report.positions);
    if (args.stats) print_stats(report);
}

void run_bench(const std::string& suite, std::size_t n, unsigned seeds,
               std::uint64_t trials, double z, std::uint32_t sigma,
               std::uint64_t seed) {
    char buf[160];
    if (suite == "lcp") {
        std::cout << "sigma,trials,mean_prefix,expected,bound\n";
        for (const auto& row : wsm::bench::lcp_suite(trials, seed)) {
            std::snprintf(buf, sizeof buf, "%u,%llu,%.10g,%.10g,%.10g\n", row.sigma,
                          static_cast<unsigned long long>(row.trials), row.mean,
                          row.expected, row.bound);
            std::cout << buf;
        }
        return;
    }
    if (suite == "sublinearity") {
        std::cout << "algo,m,n,sigma,z,seeds,chars_per_n,candidates_per_n\n";
        for (const auto& row : wsm::bench::sublinearity_suite(n, seeds, z, sigma, seed)) {
            std::snprintf(buf, sizeof buf, "%s,%zu,%zu,%u,%.10g,%u,%.10g,%.10g\n",
                          row.algo.c_str(), row.m, row.n, row.sigma, row.z,
                          row.seeds, row.chars_per_n, row.candidates_per_n);
            std::cout << buf;
        }
        return;
    }
    std::cout << "m,seed,n,ell_prime,candidates,candidates_per_n,bound\n";
    for (const auto& row : wsm::bench::occurrences_suite(n, seeds, z, sigma, seed)) {
        std::snprintf(buf, sizeof buf, "%zu,%u,%zu,%zu,%llu,%.10g,%.10g\n", row.m,
                      row.seed_index, row.n, row.ell_prime,
                      static_cast<unsigned long long>(row.candidates),
                      row.candidates_per_n, row.bound);
        std::cout << buf;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"average-case weighted string matching"};
    app.require_subcommand(1);

    MatchArgs wpm_args, wtm_args, oracle_wpm_args, oracle_wtm_args;

    auto* wpm_cmd = app.add_subcommand(
        "wpm", "search a plain text for valid factors of a weighted pattern");
    add_match_options(wpm_cmd, wpm_args, true);
    wpm_cmd->callback([&] { run_wpm(wpm_args, false); });

    auto* wtm_cmd = app.add_subcommand(
        "wtm", "search a weighted text for a plain pattern");
    add_match_options(wtm_cmd, wtm_args, true);
    wtm_cmd->callback([&] { run_wtm(wtm_args, false); });

    auto* oracle_cmd =
        app.add_subcommand("oracle", "brute-force reference results");
    oracle_cmd->require_subcommand(1);
    auto* oracle_wpm_cmd = oracle_cmd->add_subcommand("wpm", "brute-force wpm");
    add_match_options(oracle_wpm_cmd, oracle_wpm_args, false);
    oracle_wpm_cmd->callback([&] { run_wpm(oracle_wpm_args, true); });
    auto* oracle_wtm_cmd = oracle_cmd->add_subcommand("wtm", "brute-force wtm");
    add_match_options(oracle_wtm_cmd, oracle_wtm_args, false);
    oracle_wtm_cmd->callback([&] { run_wtm(oracle_wtm_args, true); });

    auto* gen_cmd = app.add_subcommand("gen", "generate random instances");
    gen_cmd->require_subcommand(1);
    std::size_t gen_n = 0;
    std::uint32_t gen_sigma = 4;
    std::uint64_t gen_seed = 0;
    double solid_bias = 0.5;
    auto add_gen_options = [&](CLI::App* cmd) {
        cmd->add_option("--n", gen_n, "sequence length")
            ->required()
            ->check(CLI::PositiveNumber);
        cmd->add_option("--sigma", gen_sigma, "alphabet size")
            ->required()
            ->check(CLI::Range(2u, 62u));
        cmd->add_option("--seed", gen_seed, "random seed")->required();
    };
    auto* gen_weighted_cmd =
        gen_cmd->add_subcommand("weighted", "weighted string under the subset model");
    add_gen_options(gen_weighted_cmd);
    gen_weighted_cmd
        ->add_option("--solid-bias", solid_bias,
                     "probability of forcing a position solid")
        ->check(CLI::Range(0.0, 1.0));
    gen_weighted_cmd->callback([&] {
        std::cout << wsm::serialize_weighted(
            wsm::gen_weighted(gen_n, gen_sigma, gen_seed, solid_bias));
    });
    auto* gen_solid_cmd = gen_cmd->add_subcommand("solid", "uniform plain string");
    add_gen_options(gen_solid_cmd);
    gen_solid_cmd->callback([&] {
        std::cout << wsm::serialize_plain(
            wsm::Alphabet::generic(gen_sigma),
            wsm::gen_solid(gen_n, gen_sigma, gen_seed));
    });

    auto* bench_cmd = app.add_subcommand("bench", "measurement suites (CSV)");
    std::string suite;
    std::size_t bench_n = 1000000;
    unsigned bench_seeds = 10;
    std::uint64_t bench_trials = 100000;
    double bench_z = 4.0;
    std::uint32_t bench_sigma = 4;
    std::uint64_t bench_seed = 1;
    bench_cmd->add_option("--suite", suite, "sublinearity, occurrences or lcp")
        ->required()
        ->check(CLI::IsMember({"sublinearity", "occurrences", "lcp"}));
    bench_cmd->add_option("--n", bench_n, "text length")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--seeds", bench_seeds, "seeds per point")
        ->check(CLI::PositiveNumber);
    bench_cmd->add_option("--trials", bench_trials, "trials (lcp suite)")
        ->check(CLI::PositiveNumber);
    bench_cmd->add_option("--z", bench_z, "threshold parameter")->check(check_z);
    bench_cmd->add_option("--sigma", bench_sigma, "alphabet size")
        ->check(CLI::Range(2u, 62u));
    bench_cmd->add_option("--seed", bench_seed, "base seed");
    bench_cmd->callback([&] {
        run_bench(suite, bench_n, bench_seeds, bench_trials, bench_z, bench_sigma,
                  bench_seed);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const wsm::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const wsm::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    }
    return 0;
}
