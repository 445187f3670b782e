// spectroham: spectral Hamiltonicity condition checker.
//
//   spectroham check <graph6-or-file>
//   spectroham verify --n-max N [--theorems LIST] [--min-kappa K] [--format csv|jsonl] [--out PATH]
//   spectroham stream --file PATH [same flags]
//   spectroham extremal --k K --s S
//   spectroham sample --n N --count C --seed SEED [same flags]
//
// Exit status is 0 iff no verdict was contradicted by the exact oracles,
// 1 on inconsistencies, 2 on usage or input errors.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "spectroham/harness.hpp"

namespace {

using namespace spectroham;

struct RunFlags {
    std::string theorems = "all";
    std::optional<int> k;
    int min_kappa = 0;
    int n_min = 1;
    std::string format = "csv";
    std::string out;
    unsigned jobs = std::max(1U, std::thread::hardware_concurrency());
};

void add_run_flags(CLI::App* cmd, RunFlags& flags)
{
    cmd->add_option("--theorems", flags.theorems,
                    "Comma list of theorem[:s], or 'all' (default)");
    cmd->add_option("--k", flags.k, "Override the connectivity parameter k where it applies");
    cmd->add_option("--min-kappa", flags.min_kappa, "Skip graphs with connectivity below this");
    cmd->add_option("--n-min", flags.n_min, "Skip graphs with fewer vertices");
    cmd->add_option("--format", flags.format, "Report format")
        ->check(CLI::IsMember({"csv", "jsonl"}));
    cmd->add_option("--out", flags.out, "Report path (no report if omitted, '-' for stdout)");
    cmd->add_option("--jobs", flags.jobs, "Worker threads")->check(CLI::PositiveNumber);
}

VerifyOptions make_options(const RunFlags& flags, int n_max)
{
    VerifyOptions options;
    options.queries = parse_theorem_list(flags.theorems);
    if (flags.k) {
        for (auto& q : options.queries) {
            if (q.theorem == TheoremId::main1_adjacency || q.theorem == TheoremId::main2_cone ||
                q.theorem == TheoremId::main3_laplacian || q.theorem == TheoremId::chvatal_erdos) {
                q.k = flags.k;
            }
        }
    }
    options.min_kappa = flags.min_kappa;
    options.n_min = flags.n_min;
    options.n_max = n_max;
    options.format = flags.format == "jsonl" ? ReportFormat::jsonl : ReportFormat::csv;
    options.jobs = flags.jobs;
    return options;
}

int run(GraphSource& source, const RunFlags& flags, int n_max)
{
    const VerifyOptions options = make_options(flags, n_max);
    std::ofstream file;
    std::ostream* report = nullptr;
    if (flags.out == "-") {
        report = &std::cout;
    } else if (!flags.out.empty()) {
        file.open(flags.out);
        if (!file) {
            throw std::runtime_error("cannot open report file '" + flags.out + "'");
        }
        report = &file;
    }

    const VerificationResult result = verify(source, options, report);
    const auto& c = result.counters;
    std::cerr << "scanned=" << c.scanned << " applicable=" << c.applicable
              << " predicted=" << c.predicted << " boundary=" << c.boundary
              << " inconsistent=" << c.inconsistent;
    if (result.skipped_records > 0) {
        std::cerr << " skipped_bad=" << result.skipped_records;
    }
    std::cerr << '\n';
    for (const auto& [name, tc] : result.per_theorem) {
        std::fprintf(stderr, "  %-32s applicable=%zu predicted=%zu boundary=%zu inconsistent=%zu\n",
                     name.c_str(), tc.applicable, tc.predicted, tc.boundary, tc.inconsistent);
    }
    for (const auto& ce : result.counterexamples) {
        std::cerr << "COUNTEREXAMPLE " << ce.graph6 << ' ' << label(ce.verdict.query) << '\n';
    }
    return c.inconsistent == 0 ? 0 : 1;
}

std::string yes_no(bool b)
{
    return b ? "yes" : "no";
}

std::string optional_text(const std::optional<bool>& b)
{
    return b ? yes_no(*b) : "-";
}

int check_one(const Graph& g)
{
    const GraphFacts facts = analyze(g);
    const auto queries = all_queries();
    const ReportRow row = make_row(facts, queries);
    std::printf("graph6   %s\n", row.graph6.c_str());
    std::printf("order    n=%d  edges=%d  delta=%d  kappa=%d  alpha=%d  connected=%s\n", row.n,
                g.edge_count(), row.delta, row.kappa, row.alpha,
                yes_no(facts.invariants.is_connected).c_str());
    std::printf("spectra  lambda1=%.12g  lambdaN=%.12g  mu1=%.12g  lambda1(cone)=%.12g\n",
                row.lambda1, row.lambdaN, row.mu1, facts.cone_lambda1);
    std::printf("oracles  traceable=%s  hamiltonian=%s  homogeneously_traceable=%s  "
                "hamiltonian_connected=%s\n",
                yes_no(row.profile.traceable).c_str(), yes_no(row.profile.hamiltonian).c_str(),
                yes_no(row.profile.homogeneously_traceable).c_str(),
                yes_no(row.profile.hamiltonian_connected).c_str());
    std::printf("%-26s %-9s %14s %14s %8s %10s %9s %6s %10s\n", "theorem", "hypothesis", "bound",
                "observed", "excluded", "applicable", "predicted", "oracle", "consistent");
    bool consistent = true;
    for (const auto& v : row.verdicts) {
        std::printf("%-26s %-9s %14.12g %14.12g %8s %10s %9s %6s %10s\n", label(v.query).c_str(),
                    std::string(to_string(v.hypothesis)).c_str(), v.bound_value, v.observed_value,
                    yes_no(v.excluded_extremal).c_str(), yes_no(v.applicability).c_str(),
                    optional_text(v.predicted).c_str(), optional_text(v.oracle_truth).c_str(),
                    yes_no(v.consistent).c_str());
        consistent = consistent && v.consistent;
    }
    return consistent ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Spectral sufficient conditions for Hamiltonian properties: checker and "
                 "exhaustive verifier"};
    app.require_subcommand(1);

    std::string check_input;
    auto* check = app.add_subcommand("check", "Full report for one graph (graph6 or file)");
    check->add_option("graph", check_input, "graph6 string, or a file of graph6 lines")
        ->required();

    RunFlags verify_flags;
    int n_max = 6;
    auto* verify_cmd =
        app.add_subcommand("verify", "Exhaustively check every connected graph up to n-max");
    verify_cmd->add_option("--n-max", n_max, "Largest order (at most 7)")->required();
    add_run_flags(verify_cmd, verify_flags);

    RunFlags stream_flags;
    std::string stream_path;
    bool skip_bad = false;
    auto* stream_cmd = app.add_subcommand("stream", "Check every graph in a graph6 file");
    stream_cmd->add_option("--file", stream_path, "graph6 file, one graph per line ('-' = stdin)")
        ->required();
    stream_cmd->add_flag("--skip-bad", skip_bad, "Skip malformed lines instead of aborting");
    add_run_flags(stream_cmd, stream_flags);

    int ext_k = 0;
    int ext_s = 0;
    std::string ext_format = "csv";
    auto* extremal_cmd =
        app.add_subcommand("extremal", "Confirm K_{k,k-s+1} sits on the Laplacian bound");
    extremal_cmd->add_option("--k", ext_k)->required()->check(CLI::Range(1, 30));
    extremal_cmd->add_option("--s", ext_s)->required()->check(CLI::Range(-1, 1));
    extremal_cmd->add_option("--format", ext_format)->check(CLI::IsMember({"csv", "jsonl"}));

    RunFlags sample_flags;
    int sample_n = 12;
    std::size_t sample_count = 1000;
    std::uint64_t sample_seed = 1;
    auto* sample_cmd = app.add_subcommand("sample", "Check seeded uniform random graphs G(n, 1/2)");
    sample_cmd->add_option("--n", sample_n)->required()->check(CLI::Range(1, kMaxOrder));
    sample_cmd->add_option("--count", sample_count)->required();
    sample_cmd->add_option("--seed", sample_seed)->required();
    add_run_flags(sample_cmd, sample_flags);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*check) {
            if (std::filesystem::is_regular_file(check_input)) {
                std::ifstream in(check_input);
                Graph6Reader reader(in, false);
                int status = 0;
                bool first = true;
                while (auto g = reader.next()) {
                    if (!first) {
                        std::printf("\n");
                    }
                    first = false;
                    status = std::max(status, check_one(*g));
                }
                return status;
            }
            return check_one(parse_graph6(check_input));
        }
        if (*verify_cmd) {
            EnumerationSource source(std::max(1, verify_flags.n_min), n_max);
            return run(source, verify_flags, n_max);
        }
        if (*stream_cmd) {
            std::ifstream file;
            std::istream* in = &std::cin;
            if (stream_path != "-") {
                file.open(stream_path);
                if (!file) {
                    throw std::runtime_error("cannot read '" + stream_path + "'");
                }
                in = &file;
            }
            Graph6Reader reader(*in, skip_bad);
            return run(reader, stream_flags, kMaxOrder);
        }
        if (*extremal_cmd) {
            const ExtremalReport report = extremal_report(ext_k, ext_s);
            if (ext_format == "csv") {
                std::cout << csv_header(all_queries()) << '\n' << to_csv(report.row) << '\n';
            } else {
                std::cout << to_jsonl(report.row) << '\n';
            }
            std::cerr << "K_{" << ext_k << ',' << ext_k - ext_s + 1 << "}: mu1=" << report.mu1
                      << " (expected " << report.expected_mu1 << "), bound=" << report.bound
                      << ", s-property=" << yes_no(report.property_holds) << '\n';
            return 0;
        }
        if (*sample_cmd) {
            RandomGraphSource source(sample_n, sample_count, sample_seed);
            return run(source, sample_flags, kMaxOrder);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
