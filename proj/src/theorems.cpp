#include "spectroham/theorems.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace spectroham {

namespace {

constexpr std::array kTheoremNames{
    std::pair{TheoremId::li_adjacency, std::string_view{"li_adjacency"}},
    std::pair{TheoremId::main1_adjacency, std::string_view{"main1_adjacency"}},
    std::pair{TheoremId::main2_cone, std::string_view{"main2_cone"}},
    std::pair{TheoremId::main3_laplacian, std::string_view{"main3_laplacian"}},
    std::pair{TheoremId::dirac_ore, std::string_view{"dirac_ore"}},
    std::pair{TheoremId::chvatal_erdos, std::string_view{"chvatal_erdos"}},
    std::pair{TheoremId::anderson_morley, std::string_view{"anderson_morley"}},
};

constexpr double kUndefined = std::numeric_limits<double>::quiet_NaN();

Property property_for(int s)
{
    switch (s) {
    case 1:
        return Property::hamiltonian_connected;
    case 0:
        return Property::hamiltonian;
    default:
        return Property::traceable;
    }
}

bool has_property(const HamiltonianProfile& p, Property property)
{
    switch (property) {
    case Property::traceable:
        return p.traceable;
    case Property::hamiltonian:
        return p.hamiltonian;
    case Property::homogeneously_traceable:
        return p.homogeneously_traceable;
    case Property::hamiltonian_connected:
        return p.hamiltonian_connected;
    }
    return false;
}

Hypothesis compare_upper(double observed, double bound, double tol)
{
    if (std::isnan(bound)) {
        return Hypothesis::fails;
    }
    if (std::abs(observed - bound) <= tol) {
        return Hypothesis::boundary;
    }
    return observed < bound ? Hypothesis::holds : Hypothesis::fails;
}

bool is_parts(const std::optional<BipartiteParts>& parts, int a, int b)
{
    return parts.has_value() && *parts == BipartiteParts{std::min(a, b), std::max(a, b)};
}

/// Common shape of the sufficient conditions: a non-strict (or strict) upper
/// bound and one guaranteed property. With an exclusion clause the theorem is
/// an "iff G is not the extremal graph", so a satisfied bound on the extremal
/// graph predicts the property is absent.
void settle(TheoremVerdict& v, bool strict, bool has_exclusion, Property property,
            const HamiltonianProfile& profile)
{
    v.oracle_truth = has_property(profile, property);
    const bool satisfied = strict ? v.hypothesis == Hypothesis::holds
                                  : v.hypothesis != Hypothesis::fails;
    if (v.applicability && satisfied) {
        v.predicted = !(has_exclusion && v.excluded_extremal);
    }
    v.consistent = !v.predicted.has_value() || *v.predicted == *v.oracle_truth;
}

}  // namespace

std::string_view to_string(TheoremId id)
{
    for (auto [key, name] : kTheoremNames) {
        if (key == id) {
            return name;
        }
    }
    return "unknown";
}

std::string_view to_string(Hypothesis h)
{
    switch (h) {
    case Hypothesis::holds:
        return "holds";
    case Hypothesis::boundary:
        return "boundary";
    case Hypothesis::fails:
        return "fails";
    }
    return "unknown";
}

std::string_view to_string(Property p)
{
    switch (p) {
    case Property::traceable:
        return "traceable";
    case Property::hamiltonian:
        return "hamiltonian";
    case Property::homogeneously_traceable:
        return "homogeneously_traceable";
    case Property::hamiltonian_connected:
        return "hamiltonian_connected";
    }
    return "unknown";
}

std::optional<TheoremId> parse_theorem_id(std::string_view name)
{
    for (auto [key, text] : kTheoremNames) {
        if (text == name) {
            return key;
        }
    }
    return std::nullopt;
}

std::vector<int> valid_s_values(TheoremId id)
{
    switch (id) {
    case TheoremId::li_adjacency:
        return {0, -1};
    case TheoremId::main1_adjacency:
        return {1};
    case TheoremId::main3_laplacian:
    case TheoremId::dirac_ore:
    case TheoremId::chvatal_erdos:
        return {1, 0, -1};
    case TheoremId::main2_cone:
    case TheoremId::anderson_morley:
        return {};
    }
    return {};
}

void validate(const TheoremQuery& query)
{
    const auto allowed = valid_s_values(query.theorem);
    const std::string name(to_string(query.theorem));
    if (allowed.empty()) {
        if (query.s.has_value()) {
            throw std::invalid_argument(name + " takes no s parameter");
        }
    } else if (!query.s.has_value() ||
               std::find(allowed.begin(), allowed.end(), *query.s) == allowed.end()) {
        throw std::invalid_argument("invalid s for " + name);
    }
    if (query.k.has_value() &&
        (query.theorem == TheoremId::li_adjacency || query.theorem == TheoremId::dirac_ore ||
         query.theorem == TheoremId::anderson_morley)) {
        throw std::invalid_argument(name + " takes no k parameter");
    }
}

std::string label(const TheoremQuery& query)
{
    std::string out(to_string(query.theorem));
    std::string params;
    if (query.s) {
        params += "s=" + std::to_string(*query.s);
    }
    if (query.k) {
        params += (params.empty() ? "" : ";") + std::string("k=") + std::to_string(*query.k);
    }
    if (!params.empty()) {
        out += "(" + params + ")";
    }
    return out;
}

std::vector<TheoremQuery> all_queries()
{
    std::vector<TheoremQuery> queries;
    for (auto [id, name] : kTheoremNames) {
        const auto s_values = valid_s_values(id);
        if (s_values.empty()) {
            queries.push_back({id, std::nullopt, std::nullopt});
        }
        for (int s : s_values) {
            queries.push_back({id, s, std::nullopt});
        }
    }
    return queries;
}

GraphFacts analyze(const Graph& g)
{
    return GraphFacts{
        .graph = g,
        .invariants = invariants(g),
        .spectrum = spectral_summary(g),
        .cone_lambda1 = symmetric_eigenvalues(adjacency_matrix(cone(g)))(0),
        .profile = hamiltonian_profile(g),
        .bipartite_parts = is_complete_bipartite(g),
        .complement_connected = is_connected(complement(g)),
    };
}

TheoremVerdict evaluate(const GraphFacts& facts, const TheoremQuery& query, double tol)
{
    validate(query);
    const auto& inv = facts.invariants;
    const int n = inv.n;
    const int delta = inv.min_degree;
    const int kappa = inv.connectivity;
    const int k = query.k.value_or(kappa);
    const int s = query.s.value_or(0);
    // Every spectral and structural condition is stated for connected,
    // k-connected graphs of order at least 3.
    const bool k_connected = inv.is_connected && k >= 1 && k <= kappa && n >= 3;

    TheoremVerdict v;
    v.query = query;

    switch (query.theorem) {
    case TheoremId::li_adjacency: {
        const int denominator = n - kappa + s - 1;
        v.bound_value = denominator > 0
                            ? delta * std::sqrt(double(kappa - s + 1) / double(denominator))
                            : kUndefined;
        v.observed_value = facts.spectrum.lambda1;
        v.hypothesis = compare_upper(v.observed_value, v.bound_value, tol);
        v.applicability = inv.is_connected && n >= 3 && denominator > 0 && (s != -1 || n >= 12);
        v.excluded_extremal = is_parts(facts.bipartite_parts, kappa, kappa - s + 1);
        settle(v, false, true, property_for(s), facts.profile);
        break;
    }
    case TheoremId::main1_adjacency: {
        const int denominator = n - k;
        v.bound_value =
            denominator > 0 ? delta * std::sqrt(double(k) / double(denominator)) : kUndefined;
        v.observed_value = facts.spectrum.lambda1;
        v.hypothesis = compare_upper(v.observed_value, v.bound_value, tol);
        v.applicability = k_connected && denominator > 0;
        v.excluded_extremal = is_parts(facts.bipartite_parts, k, k);
        settle(v, false, true, Property::hamiltonian_connected, facts.profile);
        break;
    }
    case TheoremId::main2_cone: {
        const int denominator = n - k;
        v.bound_value = denominator > 0
                            ? (delta + 1) * std::sqrt(double(k + 1) / double(denominator))
                            : kUndefined;
        v.observed_value = facts.cone_lambda1;
        v.hypothesis = compare_upper(v.observed_value, v.bound_value, tol);
        v.applicability = k_connected && denominator > 0;
        settle(v, false, false, Property::homogeneously_traceable, facts.profile);
        break;
    }
    case TheoremId::main3_laplacian: {
        const int denominator = n - k + s - 1;
        v.bound_value = denominator > 0 ? double(n * delta) / double(denominator) : kUndefined;
        v.observed_value = facts.spectrum.mu1;
        v.hypothesis = compare_upper(v.observed_value, v.bound_value, tol);
        v.applicability = k_connected && denominator > 0;
        // Reported for the sharpness cases; the strict inequality already
        // keeps K_{k,k-s+1} (which sits on the bound) from being predicted.
        v.excluded_extremal = is_parts(facts.bipartite_parts, k, k - s + 1);
        settle(v, true, false, property_for(s), facts.profile);
        break;
    }
    case TheoremId::dirac_ore: {
        v.bound_value = (n + s) / 2.0;
        v.observed_value = delta;
        const int twice = 2 * delta;
        v.hypothesis = twice > n + s    ? Hypothesis::holds
                       : twice == n + s ? Hypothesis::boundary
                                        : Hypothesis::fails;
        v.applicability = n >= 3;
        settle(v, false, false, property_for(s), facts.profile);
        break;
    }
    case TheoremId::chvatal_erdos: {
        const int alpha = inv.independence_number;
        v.bound_value = k - s;
        v.observed_value = alpha;
        v.hypothesis = alpha < k - s    ? Hypothesis::holds
                       : alpha == k - s ? Hypothesis::boundary
                                        : Hypothesis::fails;
        v.applicability = k_connected;
        settle(v, false, false, property_for(s), facts.profile);
        break;
    }
    case TheoremId::anderson_morley: {
        v.bound_value = n;
        v.observed_value = facts.spectrum.mu1;
        v.hypothesis = compare_upper(v.observed_value, v.bound_value, tol);
        v.applicability = n >= 2;
        if (v.applicability) {
            // An equivalence: predicts mu1 = n exactly when the complement
            // is disconnected.
            v.predicted = !facts.complement_connected;
            v.oracle_truth = v.hypothesis == Hypothesis::boundary;
            v.consistent = *v.predicted == *v.oracle_truth && v.hypothesis != Hypothesis::fails;
        }
        break;
    }
    }
    return v;
}

TheoremVerdict check_li_adjacency(const Graph& g, int s)
{
    return evaluate(analyze(g), {TheoremId::li_adjacency, s, std::nullopt});
}

TheoremVerdict check_main1_adjacency(const Graph& g, std::optional<int> k)
{
    return evaluate(analyze(g), {TheoremId::main1_adjacency, 1, k});
}

TheoremVerdict check_main2_cone(const Graph& g, std::optional<int> k)
{
    return evaluate(analyze(g), {TheoremId::main2_cone, std::nullopt, k});
}

TheoremVerdict check_main3_laplacian(const Graph& g, int s, std::optional<int> k)
{
    return evaluate(analyze(g), {TheoremId::main3_laplacian, s, k});
}

TheoremVerdict check_dirac_ore(const Graph& g, int s)
{
    return evaluate(analyze(g), {TheoremId::dirac_ore, s, std::nullopt});
}

TheoremVerdict check_chvatal_erdos(const Graph& g, int s, std::optional<int> k)
{
    return evaluate(analyze(g), {TheoremId::chvatal_erdos, s, k});
}

AndersonMorleyReport check_anderson_morley(const Graph& g, double tol)
{
    if (g.order() < 2) {
        throw std::invalid_argument("Laplacian radius bound needs at least 2 vertices");
    }
    const double mu1 = spectral_summary(g).mu1;
    return {
        .mu1 = mu1,
        .n = g.order(),
        .equality = std::abs(mu1 - g.order()) <= tol,
        .complement_disconnected = !is_connected(complement(g)),
    };
}

}  // namespace spectroham
