#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "spectroham/graph.hpp"
#include "spectroham/graph6.hpp"
#include "spectroham/theorems.hpp"

namespace spectroham {

/// Largest order the internal enumeration accepts.
inline constexpr int kMaxEnumerationOrder = 7;

/// Every connected labeled graph on n vertices, in ascending order of the
/// edge-subset counter. Bit i of the counter is the i-th pair of the graph6
/// column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
class ConnectedGraphEnumerator {
public:
    explicit ConnectedGraphEnumerator(int n);

    std::optional<Graph> next();

private:
    int n_;
    std::vector<std::pair<Vertex, Vertex>> pairs_;
    std::uint64_t counter_ = 0;
    std::uint64_t limit_;
};

/// Pull-based supply of graphs for verify().
class GraphSource {
public:
    virtual ~GraphSource() = default;
    virtual std::optional<Graph> next() = 0;
    /// Records the source dropped instead of yielding.
    [[nodiscard]] virtual std::size_t skipped() const { return 0; }
};

/// Connected graphs for n_min..n_max.
class EnumerationSource : public GraphSource {
public:
    EnumerationSource(int n_min, int n_max);
    std::optional<Graph> next() override;

private:
    int n_;
    int n_max_;
    ConnectedGraphEnumerator current_;
};

class StreamError : public std::runtime_error {
public:
    StreamError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }
    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// One graph6 record per line. Blank lines and a leading ">>graph6<<" header
/// are ignored; malformed lines throw StreamError unless skip_bad is set.
class Graph6Reader : public GraphSource {
public:
    Graph6Reader(std::istream& in, bool skip_bad);
    std::optional<Graph> next() override;
    [[nodiscard]] std::size_t skipped() const override { return skipped_; }

private:
    std::istream& in_;
    bool skip_bad_;
    std::size_t line_ = 0;
    std::size_t skipped_ = 0;
};

/// Uniform random graphs: every pair is an edge with probability 1/2, drawn
/// from the raw bits of mt19937_64 so the sequence is portable.
class RandomGraphSource : public GraphSource {
public:
    RandomGraphSource(int n, std::size_t count, std::uint64_t seed);
    std::optional<Graph> next() override;

private:
    int n_;
    std::size_t remaining_;
    std::mt19937_64 rng_;
};

struct ReportRow {
    std::string graph6;
    int n;
    int delta;
    int kappa;
    int alpha;
    double lambda1;
    double lambdaN;
    double mu1;
    HamiltonianProfile profile;
    std::vector<TheoremVerdict> verdicts;
};

ReportRow make_row(const GraphFacts& facts, std::span<const TheoremQuery> queries,
                   double tol = eps());

enum class ReportFormat { csv, jsonl };

std::string csv_header(std::span<const TheoremQuery> queries);
std::string to_csv(const ReportRow& row);
std::string to_jsonl(const ReportRow& row);

/// Parses "all" or a comma list of names, each optionally suffixed ":s",
/// e.g. "main3_laplacian:0,main2_cone". A name without ":s" expands to all
/// of its valid s values. Throws std::invalid_argument on unknown names.
std::vector<TheoremQuery> parse_theorem_list(std::string_view text);

struct Counters {
    std::size_t scanned = 0;       // graphs passing the filters
    std::size_t applicable = 0;    // verdicts whose side conditions were met
    std::size_t predicted = 0;     // verdicts guaranteeing the property
    std::size_t boundary = 0;      // verdicts sitting on the bound within eps
    std::size_t inconsistent = 0;  // verdicts contradicted by the oracle

    Counters& operator+=(const Counters& other);
    friend bool operator==(const Counters&, const Counters&) = default;
};

struct Counterexample {
    std::string graph6;
    TheoremVerdict verdict;
};

struct VerifyOptions {
    std::vector<TheoremQuery> queries = all_queries();
    int min_kappa = 0;
    int n_min = 1;
    int n_max = kMaxOrder;
    ReportFormat format = ReportFormat::csv;
    unsigned jobs = 1;
    std::size_t batch_size = 2048;
    double tol = eps();
};

struct VerificationResult {
    Counters counters;
    std::map<std::string, Counters> per_theorem;  // keyed by label(query)
    std::vector<Counterexample> counterexamples;
    std::size_t skipped_records = 0;
};

/// Runs every query on every graph from `source` that passes the filters.
/// Rows are written to `report` (if given) in input order whatever the
/// number of jobs.
VerificationResult verify(GraphSource& source, const VerifyOptions& options,
                          std::ostream* report = nullptr);

/// Re-derives a counterexample's verdict from its graph6 string alone.
TheoremVerdict replay(const Counterexample& counterexample, double tol = eps());

/// Field-wise equality that treats two NaN bounds as equal.
bool same_verdict(const TheoremVerdict& a, const TheoremVerdict& b);

struct ExtremalReport {
    ReportRow row;
    double mu1;
    double expected_mu1;      // 2k - s + 1
    double bound;             // n delta / (n - k + s - 1)
    bool property_holds;      // oracle value of the s-property
};

/// Builds K_{k,k-s+1} and confirms it sits on the Laplacian bound while
/// lacking the s-property. Throws std::logic_error if any check fails.
/// For n < 3 (k = 1, s = 1) the property check is skipped: the theorems
/// need n >= 3 and K_2 is Hamiltonian-connected by convention.
ExtremalReport extremal_report(int k, int s, double tol = eps());

}  // namespace spectroham
