#include "spectroham/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

namespace spectroham {

namespace {

std::string format_real(double x)
{
    if (std::isnan(x)) {
        return "nan";
    }
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.12g", x);
    return buffer;
}

std::string json_real(double x)
{
    return std::isnan(x) ? "null" : format_real(x);
}

std::string_view json_bool(bool b)
{
    return b ? "true" : "false";
}

std::string json_optional(const std::optional<bool>& b)
{
    return b ? std::string(json_bool(*b)) : "null";
}

std::string csv_optional(const std::optional<bool>& b)
{
    return b ? (*b ? "1" : "0") : "-";
}

std::string json_string(std::string_view text)
{
    std::string out = "\"";
    for (char c : text) {
        if (c == '"' || c == '\\') {
            out += '\\';
        }
        out += c;
    }
    return out + '"';
}

std::string_view trim(std::string_view text)
{
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) {
        text.remove_prefix(1);
    }
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) {
        text.remove_suffix(1);
    }
    return text;
}

Counters tally(const TheoremVerdict& v)
{
    Counters c;
    c.applicable = v.applicability ? 1 : 0;
    c.predicted = v.predicted.value_or(false) ? 1 : 0;
    c.boundary = v.hypothesis == Hypothesis::boundary ? 1 : 0;
    c.inconsistent = v.consistent ? 0 : 1;
    return c;
}

}  // namespace

ConnectedGraphEnumerator::ConnectedGraphEnumerator(int n) : n_(n)
{
    if (n < 1 || n > kMaxEnumerationOrder) {
        throw std::invalid_argument("internal enumeration supports 1 <= n <= " +
                                    std::to_string(kMaxEnumerationOrder) +
                                    "; stream graph6 files for larger orders");
    }
    for (Vertex v = 1; v < n; ++v) {
        for (Vertex u = 0; u < v; ++u) {
            pairs_.emplace_back(u, v);
        }
    }
    limit_ = std::uint64_t{1} << pairs_.size();
}

std::optional<Graph> ConnectedGraphEnumerator::next()
{
    while (counter_ < limit_) {
        const std::uint64_t subset = counter_++;
        GraphBuilder builder(n_);
        for (std::size_t i = 0; i < pairs_.size(); ++i) {
            if ((subset >> i) & 1U) {
                builder.add_edge(pairs_[i].first, pairs_[i].second);
            }
        }
        Graph g = builder.build();
        if (is_connected(g)) {
            return g;
        }
    }
    return std::nullopt;
}

EnumerationSource::EnumerationSource(int n_min, int n_max)
    : n_(n_min), n_max_(n_max), current_(n_min)
{
    if (n_max < n_min) {
        throw std::invalid_argument("empty order range");
    }
    ConnectedGraphEnumerator check(n_max);
}

std::optional<Graph> EnumerationSource::next()
{
    while (true) {
        if (auto g = current_.next()) {
            return g;
        }
        if (n_ == n_max_) {
            return std::nullopt;
        }
        current_ = ConnectedGraphEnumerator(++n_);
    }
}

Graph6Reader::Graph6Reader(std::istream& in, bool skip_bad) : in_(in), skip_bad_(skip_bad) {}

std::optional<Graph> Graph6Reader::next()
{
    std::string line;
    while (std::getline(in_, line)) {
        ++line_;
        std::string_view record = trim(line);
        if (line_ == 1 && record.starts_with(">>graph6<<")) {
            record.remove_prefix(10);
        }
        if (record.empty()) {
            continue;
        }
        try {
            return parse_graph6(record);
        } catch (const Graph6Error& e) {
            if (!skip_bad_) {
                throw StreamError(line_, e.what());
            }
            ++skipped_;
        }
    }
    if (in_.bad()) {
        throw StreamError(line_, "read error");
    }
    return std::nullopt;
}

RandomGraphSource::RandomGraphSource(int n, std::size_t count, std::uint64_t seed)
    : n_(n), remaining_(count), rng_(seed)
{
    if (n < 1 || n > kMaxOrder) {
        throw std::invalid_argument("random graph order must be in 1..62, got " +
                                    std::to_string(n));
    }
}

std::optional<Graph> RandomGraphSource::next()
{
    if (remaining_ == 0) {
        return std::nullopt;
    }
    --remaining_;
    GraphBuilder builder(n_);
    std::uint64_t bits = 0;
    int available = 0;
    for (Vertex v = 1; v < n_; ++v) {
        for (Vertex u = 0; u < v; ++u) {
            if (available == 0) {
                bits = rng_();
                available = 64;
            }
            if (bits & 1U) {
                builder.add_edge(u, v);
            }
            bits >>= 1;
            --available;
        }
    }
    return builder.build();
}

ReportRow make_row(const GraphFacts& facts, std::span<const TheoremQuery> queries, double tol)
{
    ReportRow row{
        .graph6 = emit_graph6(facts.graph),
        .n = facts.invariants.n,
        .delta = facts.invariants.min_degree,
        .kappa = facts.invariants.connectivity,
        .alpha = facts.invariants.independence_number,
        .lambda1 = facts.spectrum.lambda1,
        .lambdaN = facts.spectrum.lambdaN,
        .mu1 = facts.spectrum.mu1,
        .profile = facts.profile,
        .verdicts = {},
    };
    row.verdicts.reserve(queries.size());
    for (const auto& q : queries) {
        row.verdicts.push_back(evaluate(facts, q, tol));
    }
    return row;
}

std::string csv_header(std::span<const TheoremQuery> queries)
{
    std::string out =
        "graph6,n,delta,kappa,alpha,lambda1,lambdaN,mu1,traceable,hamiltonian,"
        "homogeneously_traceable,hamiltonian_connected";
    for (const auto& q : queries) {
        out += ',';
        out += label(q);
    }
    return out;
}

// Verdict cells: hypothesis|bound|observed|excluded|applicable|predicted|oracle|consistent
std::string to_csv(const ReportRow& row)
{
    std::ostringstream out;
    out << row.graph6 << ',' << row.n << ',' << row.delta << ',' << row.kappa << ',' << row.alpha
        << ',' << format_real(row.lambda1) << ',' << format_real(row.lambdaN) << ','
        << format_real(row.mu1) << ',' << row.profile.traceable << ',' << row.profile.hamiltonian
        << ',' << row.profile.homogeneously_traceable << ','
        << row.profile.hamiltonian_connected;
    for (const auto& v : row.verdicts) {
        out << ',' << to_string(v.hypothesis) << '|' << format_real(v.bound_value) << '|'
            << format_real(v.observed_value) << '|' << v.excluded_extremal << '|'
            << v.applicability << '|' << csv_optional(v.predicted) << '|'
            << csv_optional(v.oracle_truth) << '|' << v.consistent;
    }
    return out.str();
}

std::string to_jsonl(const ReportRow& row)
{
    std::ostringstream out;
    out << "{\"graph6\":" << json_string(row.graph6) << ",\"n\":" << row.n
        << ",\"delta\":" << row.delta << ",\"kappa\":" << row.kappa << ",\"alpha\":" << row.alpha
        << ",\"lambda1\":" << json_real(row.lambda1) << ",\"lambdaN\":" << json_real(row.lambdaN)
        << ",\"mu1\":" << json_real(row.mu1) << ",\"profile\":{\"traceable\":"
        << json_bool(row.profile.traceable) << ",\"hamiltonian\":"
        << json_bool(row.profile.hamiltonian) << ",\"homogeneously_traceable\":"
        << json_bool(row.profile.homogeneously_traceable) << ",\"hamiltonian_connected\":"
        << json_bool(row.profile.hamiltonian_connected) << "},\"verdicts\":[";
    for (std::size_t i = 0; i < row.verdicts.size(); ++i) {
        const auto& v = row.verdicts[i];
        out << (i ? "," : "") << "{\"theorem\":" << json_string(to_string(v.query.theorem))
            << ",\"s\":" << (v.query.s ? std::to_string(*v.query.s) : "null")
            << ",\"k\":" << (v.query.k ? std::to_string(*v.query.k) : "null")
            << ",\"hypothesis\":" << json_string(to_string(v.hypothesis))
            << ",\"bound\":" << json_real(v.bound_value)
            << ",\"observed\":" << json_real(v.observed_value)
            << ",\"excluded_extremal\":" << json_bool(v.excluded_extremal)
            << ",\"applicable\":" << json_bool(v.applicability)
            << ",\"predicted\":" << json_optional(v.predicted)
            << ",\"oracle\":" << json_optional(v.oracle_truth)
            << ",\"consistent\":" << json_bool(v.consistent) << '}';
    }
    out << "]}";
    return out.str();
}

std::vector<TheoremQuery> parse_theorem_list(std::string_view text)
{
    std::vector<TheoremQuery> queries;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const std::string_view item = trim(text.substr(0, comma));
        text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
        if (item.empty()) {
            continue;
        }
        if (item == "all") {
            const auto all = all_queries();
            queries.insert(queries.end(), all.begin(), all.end());
            continue;
        }
        const auto colon = item.find(':');
        const std::string name(item.substr(0, colon));
        const auto id = parse_theorem_id(name);
        if (!id) {
            throw std::invalid_argument("unknown theorem '" + name + "'");
        }
        if (colon == std::string_view::npos) {
            const auto s_values = valid_s_values(*id);
            if (s_values.empty()) {
                queries.push_back({*id, std::nullopt, std::nullopt});
            }
            for (int s : s_values) {
                queries.push_back({*id, s, std::nullopt});
            }
            continue;
        }
        const std::string s_text(item.substr(colon + 1));
        std::size_t used = 0;
        int s = 0;
        try {
            s = std::stoi(s_text, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != s_text.size()) {
            throw std::invalid_argument("bad s value '" + s_text + "' for " + name);
        }
        TheoremQuery query{*id, s, std::nullopt};
        validate(query);
        queries.push_back(query);
    }
    if (queries.empty()) {
        throw std::invalid_argument("no theorems selected");
    }
    return queries;
}

Counters& Counters::operator+=(const Counters& other)
{
    scanned += other.scanned;
    applicable += other.applicable;
    predicted += other.predicted;
    boundary += other.boundary;
    inconsistent += other.inconsistent;
    return *this;
}

VerificationResult verify(GraphSource& source, const VerifyOptions& options, std::ostream* report)
{
    for (const auto& q : options.queries) {
        validate(q);
    }
    if (report != nullptr && options.format == ReportFormat::csv) {
        *report << csv_header(options.queries) << '\n';
    }

    VerificationResult result;
    std::vector<Graph> batch;
    std::vector<std::optional<ReportRow>> rows;
    const unsigned jobs = std::max(1U, options.jobs);
    const std::size_t batch_size = std::max<std::size_t>(1, options.batch_size);

    auto process = [&](std::size_t i) -> std::optional<ReportRow> {
        const Graph& g = batch[i];
        if (options.min_kappa > 0 && connectivity(g) < options.min_kappa) {
            return std::nullopt;
        }
        return make_row(analyze(g), options.queries, options.tol);
    };

    bool exhausted = false;
    while (!exhausted) {
        batch.clear();
        while (batch.size() < batch_size) {
            auto g = source.next();
            if (!g) {
                exhausted = true;
                break;
            }
            if (g->order() >= options.n_min && g->order() <= options.n_max) {
                batch.push_back(std::move(*g));
            }
        }
        rows.assign(batch.size(), std::nullopt);

        // Workers claim indices from a shared counter; each row lands in its
        // own slot, so the write-out below is in input order.
        std::atomic<std::size_t> cursor{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto work = [&] {
            try {
                for (std::size_t i; (i = cursor.fetch_add(1)) < batch.size();) {
                    rows[i] = process(i);
                }
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                cursor = batch.size();
            }
        };
        {
            std::vector<std::jthread> helpers;
            for (unsigned t = 1; t < jobs && t < batch.size(); ++t) {
                helpers.emplace_back(work);
            }
            work();
        }
        if (failure) {
            std::rethrow_exception(failure);
        }

        for (auto& row : rows) {
            if (!row) {
                continue;
            }
            ++result.counters.scanned;
            for (const auto& v : row->verdicts) {
                const Counters c = tally(v);
                result.counters += c;
                result.per_theorem[label(v.query)] += c;
                if (!v.consistent) {
                    result.counterexamples.push_back({row->graph6, v});
                }
            }
            if (report != nullptr) {
                *report << (options.format == ReportFormat::csv ? to_csv(*row) : to_jsonl(*row))
                        << '\n';
            }
        }
    }
    result.skipped_records = source.skipped();
    return result;
}

TheoremVerdict replay(const Counterexample& counterexample, double tol)
{
    return evaluate(analyze(parse_graph6(counterexample.graph6)), counterexample.verdict.query,
                    tol);
}

bool same_verdict(const TheoremVerdict& a, const TheoremVerdict& b)
{
    auto same_real = [](double x, double y) {
        return (std::isnan(x) && std::isnan(y)) || x == y;
    };
    return a.query == b.query && a.hypothesis == b.hypothesis &&
           same_real(a.bound_value, b.bound_value) &&
           same_real(a.observed_value, b.observed_value) &&
           a.excluded_extremal == b.excluded_extremal && a.applicability == b.applicability &&
           a.predicted == b.predicted && a.oracle_truth == b.oracle_truth &&
           a.consistent == b.consistent;
}

ExtremalReport extremal_report(int k, int s, double tol)
{
    if (k < 1 || s < -1 || s > 1) {
        throw std::invalid_argument("extremal report needs k >= 1 and s in {-1, 0, 1}");
    }
    const Graph g = complete_bipartite(k, k - s + 1);
    const GraphFacts facts = analyze(g);
    const int n = g.order();
    const int delta = facts.invariants.min_degree;
    const int denominator = n - k + s - 1;

    const auto queries = all_queries();
    ExtremalReport report{
        .row = make_row(facts, queries, tol),
        .mu1 = facts.spectrum.mu1,
        .expected_mu1 = 2.0 * k - s + 1,
        .bound = double(n * delta) / double(denominator),
        .property_holds = false,
    };
    switch (s) {
    case 1:
        report.property_holds = facts.profile.hamiltonian_connected;
        break;
    case 0:
        report.property_holds = facts.profile.hamiltonian;
        break;
    default:
        report.property_holds = facts.profile.traceable;
        break;
    }

    const std::string name =
        "K_{" + std::to_string(k) + "," + std::to_string(k - s + 1) + "}";
    if (std::abs(report.mu1 - report.expected_mu1) > tol) {
        throw std::logic_error(name + ": mu1 = " + format_real(report.mu1) + ", expected " +
                               format_real(report.expected_mu1));
    }
    if (std::abs(report.mu1 * denominator - double(n * delta)) > tol) {
        throw std::logic_error(name + ": mu1 * (n-k+s-1) = " +
                               format_real(report.mu1 * denominator) + " differs from n*delta = " +
                               std::to_string(n * delta));
    }
    if (n >= 3 && report.property_holds) {
        throw std::logic_error(name + " unexpectedly has the property for s = " +
                               std::to_string(s));
    }
    return report;
}

}  // namespace spectroham
