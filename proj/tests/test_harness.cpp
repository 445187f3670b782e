#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "brute_force.hpp"
#include "spectroham/harness.hpp"

using namespace spectroham;
using nlohmann::json;

namespace {

std::vector<std::string> lines_of(const std::string& text)
{
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        lines.push_back(line);
    }
    return lines;
}

std::size_t count_fields(const std::string& line)
{
    return static_cast<std::size_t>(std::count(line.begin(), line.end(), ',')) + 1;
}

VerificationResult run_stream(const std::string& text, VerifyOptions options,
                              std::string* report = nullptr, bool skip_bad = false)
{
    std::istringstream in(text);
    Graph6Reader reader(in, skip_bad);
    std::ostringstream out;
    auto result = verify(reader, options, report ? &out : nullptr);
    if (report) {
        *report = out.str();
    }
    return result;
}

VerifyOptions only(std::string_view theorems)
{
    VerifyOptions options;
    options.queries = parse_theorem_list(theorems);
    return options;
}

std::filesystem::path temp_path(const std::string& name)
{
    return std::filesystem::temp_directory_path() / ("spectroham_test_" + name);
}

int run_cli(const std::string& args, const std::string& env = "")
{
    const std::string command = env + (env.empty() ? "" : " ") + "\"" SPECTROHAM_CLI "\" " + args;
    const int status = std::system(command.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("enumeration counts match brute-force filtering")
{
    const std::vector<std::size_t> expected{1, 1, 4, 38, 728, 26704};
    for (int n = 1; n <= 6; ++n) {
        std::size_t count = 0;
        ConnectedGraphEnumerator graphs(n);
        while (auto g = graphs.next()) {
            REQUIRE(testing::brute_connected(*g));
            ++count;
        }
        CHECK(count == expected[static_cast<std::size_t>(n - 1)]);

        // Independent count: every edge subset, connectivity by relaxation.
        std::size_t brute = 0;
        const int pairs = n * (n - 1) / 2;
        for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << pairs); ++subset) {
            GraphBuilder b(n);
            int bit = 0;
            for (Vertex v = 1; v < n; ++v) {
                for (Vertex u = 0; u < v; ++u, ++bit) {
                    if ((subset >> bit) & 1U) {
                        b.add_edge(u, v);
                    }
                }
            }
            brute += testing::brute_connected(b.build());
        }
        CHECK(count == brute);
    }
    CHECK_THROWS_AS(ConnectedGraphEnumerator(0), std::invalid_argument);
    CHECK_THROWS_AS(ConnectedGraphEnumerator(8), std::invalid_argument);
}

TEST_CASE("enumeration order follows the edge-subset counter")
{
    ConnectedGraphEnumerator graphs(3);
    std::vector<std::string> codes;
    while (auto g = graphs.next()) {
        codes.push_back(emit_graph6(*g));
    }
    // Subsets 3 = {01,02}, 5 = {01,12}, 6 = {02,12}, 7 = triangle.
    CHECK(codes == std::vector<std::string>{"Bo", "Bg", "BW", "Bw"});
}

TEST_CASE("EnumerationSource spans a range of orders")
{
    EnumerationSource source(3, 4);
    std::size_t count = 0;
    while (source.next()) {
        ++count;
    }
    CHECK(count == 4 + 38);
}

TEST_CASE("stream examples")
{
    SUBCASE("K_{2,3} against main3, s=0")
    {
        const auto r = run_stream(emit_graph6(complete_bipartite(2, 3)) + "\n",
                                  only("main3_laplacian:0"));
        CHECK(r.counters.scanned == 1);
        CHECK(r.counters.applicable == 1);
        CHECK(r.counters.predicted == 0);
        CHECK(r.counters.boundary == 1);
        CHECK(r.counters.inconsistent == 0);
    }
    SUBCASE("K4 against main1")
    {
        const auto r = run_stream("C~\n", only("main1_adjacency"));
        CHECK(r.counters.scanned == 1);
        CHECK(r.counters.predicted == 1);
        CHECK(r.counters.inconsistent == 0);
    }
    SUBCASE("header, blank lines and CRLF")
    {
        const auto r = run_stream(">>graph6<<C~\r\n\n  D?{  \n", only("dirac_ore"));
        CHECK(r.counters.scanned == 2);
    }
}

TEST_CASE("malformed stream lines")
{
    const std::string text = "C~\nC~\nD?\nBw\n";
    try {
        run_stream(text, only("dirac_ore"));
        FAIL("expected a StreamError");
    } catch (const StreamError& e) {
        CHECK(e.line() == 3);
        CHECK(std::string(e.what()).starts_with("line 3: "));
    }
    const auto r = run_stream(text, only("dirac_ore"), nullptr, true);
    CHECK(r.counters.scanned == 3);
    CHECK(r.skipped_records == 1);
}

TEST_CASE("filters")
{
    VerifyOptions options = only("chvatal_erdos:0");
    options.min_kappa = 2;
    EnumerationSource source(1, 5);
    const auto r = verify(source, options);
    std::size_t expected = 0;
    for (int n = 1; n <= 5; ++n) {
        ConnectedGraphEnumerator graphs(n);
        while (auto g = graphs.next()) {
            expected += testing::brute_connectivity(*g) >= 2;
        }
    }
    CHECK(r.counters.scanned == expected);

    VerifyOptions sized = only("dirac_ore:0");
    sized.n_min = 4;
    sized.n_max = 4;
    EnumerationSource all(1, 5);
    CHECK(verify(all, sized).counters.scanned == 38);
}

TEST_CASE("parse_theorem_list")
{
    CHECK(parse_theorem_list("all") == all_queries());
    CHECK(parse_theorem_list("main3_laplacian").size() == 3);
    const auto two = parse_theorem_list("li_adjacency:-1, main2_cone");
    REQUIRE(two.size() == 2);
    CHECK(two[0] == TheoremQuery{TheoremId::li_adjacency, -1, std::nullopt});
    CHECK(two[1] == TheoremQuery{TheoremId::main2_cone, std::nullopt, std::nullopt});
    CHECK_THROWS_AS(parse_theorem_list("hamilton"), std::invalid_argument);
    CHECK_THROWS_AS(parse_theorem_list("li_adjacency:1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_theorem_list("main3_laplacian:x"), std::invalid_argument);
}

TEST_CASE("reports are deterministic and independent of the worker count")
{
    VerifyOptions options;
    options.batch_size = 97;
    std::string baseline;
    VerificationResult base_result;
    {
        EnumerationSource source(1, 5);
        std::ostringstream out;
        base_result = verify(source, options, &out);
        baseline = out.str();
    }
    for (unsigned jobs : {1U, 2U, 3U, 8U}) {
        options.jobs = jobs;
        EnumerationSource source(1, 5);
        std::ostringstream out;
        const auto r = verify(source, options, &out);
        CHECK(out.str() == baseline);
        CHECK(r.counters == base_result.counters);
        CHECK(r.per_theorem == base_result.per_theorem);
    }
    CHECK(base_result.counters.scanned == 1 + 1 + 4 + 38 + 728);
    CHECK(base_result.counters.inconsistent == 0);
}

TEST_CASE("CSV rows line up with the header")
{
    std::string report;
    run_stream("C~\nDhc\n" + emit_graph6(petersen_graph()) + "\n", VerifyOptions{}, &report);
    const auto lines = lines_of(report);
    REQUIRE(lines.size() == 4);
    const std::size_t columns = count_fields(lines[0]);
    CHECK(columns == 12 + all_queries().size());
    for (std::size_t i = 1; i < lines.size(); ++i) {
        CHECK(count_fields(lines[i]) == columns);
    }
    CHECK(lines[2].starts_with("Dhc,5,2,2,2,2,"));
}

TEST_CASE("JSON lines are valid and carry every verdict")
{
    VerifyOptions options;
    options.format = ReportFormat::jsonl;
    std::string report;
    run_stream("C~\nDhc\nA_\n", options, &report);
    const auto lines = lines_of(report);
    REQUIRE(lines.size() == 3);
    for (const auto& line : lines) {
        const json row = json::parse(line);
        CHECK(row["verdicts"].size() == all_queries().size());
        CHECK(row.contains("profile"));
    }
    const json c5 = json::parse(lines[1]);
    CHECK(c5["graph6"] == "Dhc");
    CHECK(c5["mu1"].get<double>() == doctest::Approx(3.61803398875));
    CHECK(c5["profile"]["hamiltonian"] == true);

    // K4 has no defined li bound (zero denominator): NaN is written as null.
    const json k4 = json::parse(lines[0]);
    CHECK(k4["verdicts"][0]["theorem"] == "li_adjacency");
    CHECK(k4["verdicts"][0]["bound"].is_null());
    CHECK(k4["verdicts"][0]["predicted"].is_null());
}

TEST_CASE("counterexamples are recorded and replay")
{
    // An absurd tolerance turns clear failures into boundary cases, so the
    // non-strict bounds predict properties the oracles refute.
    VerifyOptions options = only("li_adjacency:0,main1_adjacency");
    options.tol = 10.0;
    EnumerationSource source(3, 5);
    const auto r = verify(source, options);
    REQUIRE(r.counters.inconsistent > 0);
    CHECK(r.counterexamples.size() == r.counters.inconsistent);
    for (const auto& ce : r.counterexamples) {
        const TheoremVerdict again = replay(ce, options.tol);
        REQUIRE(same_verdict(again, ce.verdict));
        CHECK(ce.verdict.predicted == true);
        CHECK(ce.verdict.oracle_truth == false);
    }
}

TEST_CASE("random source is reproducible")
{
    auto draw = [](std::uint64_t seed) {
        RandomGraphSource source(12, 20, seed);
        std::vector<std::string> codes;
        while (auto g = source.next()) {
            codes.push_back(emit_graph6(*g));
        }
        return codes;
    };
    CHECK(draw(1) == draw(1));
    CHECK(draw(1) != draw(2));
    CHECK(draw(1).size() == 20);
    CHECK_THROWS_AS(RandomGraphSource(0, 1, 1), std::invalid_argument);
}

TEST_CASE("extremal_report")
{
    const auto k33 = extremal_report(3, 1);
    CHECK(k33.mu1 == doctest::Approx(6.0));
    CHECK_FALSE(k33.property_holds);
    CHECK(k33.row.graph6 == emit_graph6(complete_bipartite(3, 3)));

    const auto k23 = extremal_report(2, 0);
    CHECK(k23.mu1 == doctest::Approx(5.0));
    CHECK_FALSE(k23.property_holds);

    const auto k24 = extremal_report(2, -1);
    CHECK(k24.mu1 == doctest::Approx(6.0));
    CHECK_FALSE(k24.property_holds);

    for (int k = 1; k <= 6; ++k) {
        for (int s = -1; s <= 1; ++s) {
            const auto r = extremal_report(k, s);
            CHECK(std::abs(r.mu1 - r.expected_mu1) <= 1e-9);
            CHECK(std::abs(r.mu1 - r.bound) <= 1e-9);
        }
    }
    CHECK_THROWS((void)extremal_report(0, 0));
    CHECK_THROWS((void)extremal_report(3, 2));
}

TEST_CASE("command line exit codes")
{
    const auto out = temp_path("out.csv");
    const auto input = temp_path("in.g6");
    const std::string quiet = " 2>/dev/null >/dev/null";

    CHECK(run_cli("verify --n-max 4 --out \"" + out.string() + "\"" + quiet) == 0);
    {
        std::ifstream report(out);
        std::size_t lines = 0;
        for (std::string line; std::getline(report, line);) {
            ++lines;
        }
        CHECK(lines == 1 + 1 + 1 + 4 + 38);
    }

    {
        std::ofstream file(input);
        file << "C~\nD?\nBw\n";
    }
    CHECK(run_cli("stream --file \"" + input.string() + "\"" + quiet) == 2);
    CHECK(run_cli("stream --skip-bad --file \"" + input.string() + "\"" + quiet) == 0);

    CHECK(run_cli("check Dhc" + quiet) == 0);
    CHECK(run_cli("check 'D?'" + quiet) == 2);
    CHECK(run_cli("extremal --k 3 --s 1" + quiet) == 0);
    CHECK(run_cli("sample --n 12 --count 5 --seed 3 --theorems li_adjacency:-1" + quiet) == 0);
    CHECK(run_cli("verify --n-max 8" + quiet) == 2);
    CHECK(run_cli("verify --n-max 4 --theorems nonsense" + quiet) == 2);

    // A huge tolerance forces contradicted predictions.
    CHECK(run_cli("verify --n-max 5 --theorems li_adjacency:0" + quiet, "SPECTROHAM_EPS=10") == 1);
    CHECK(run_cli("verify --n-max 4" + quiet, "SPECTROHAM_EPS=-1") == 2);

    std::filesystem::remove(out);
    std::filesystem::remove(input);
}
