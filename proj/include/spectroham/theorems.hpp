#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spectroham/graph.hpp"
#include "spectroham/hamilton.hpp"
#include "spectroham/invariants.hpp"
#include "spectroham/spectra.hpp"

namespace spectroham {

enum class TheoremId {
    li_adjacency,     // lambda1 <= delta sqrt((kappa-s+1)/(n-kappa+s-1)), s in {0,-1}
    main1_adjacency,  // lambda1 <= delta sqrt(k/(n-k)) => Hamiltonian-connected unless K_{k,k}
    main2_cone,       // lambda1(K_1 join G) <= (delta+1) sqrt((k+1)/(n-k)) => homogeneously traceable
    main3_laplacian,  // mu1 < n delta/(n-k+s-1), s in {1,0,-1}
    dirac_ore,        // delta >= (n+s)/2
    chvatal_erdos,    // alpha <= k-s
    anderson_morley,  // mu1 <= n, equality iff complement disconnected
};

enum class Hypothesis { holds, boundary, fails };

/// The Hamiltonian property guaranteed for a given s: 1 -> Hamiltonian-connected,
/// 0 -> Hamiltonian, -1 -> traceable.
enum class Property { traceable, hamiltonian, homogeneously_traceable, hamiltonian_connected };

std::string_view to_string(TheoremId id);
std::string_view to_string(Hypothesis h);
std::string_view to_string(Property p);
std::optional<TheoremId> parse_theorem_id(std::string_view name);

/// Values of s the theorem is stated for; empty when it takes no s.
std::vector<int> valid_s_values(TheoremId id);

struct TheoremQuery {
    TheoremId theorem;
    std::optional<int> s;
    std::optional<int> k;  // connectivity lower bound; kappa(G) when empty

    friend bool operator==(const TheoremQuery&, const TheoremQuery&) = default;
};

/// Throws std::invalid_argument if s is not valid for the theorem.
void validate(const TheoremQuery& query);

/// Stable display label, e.g. "main3_laplacian(s=0)" or "main2_cone(k=2)".
std::string label(const TheoremQuery& query);

/// Every theorem with every valid s, k defaulted.
std::vector<TheoremQuery> all_queries();

struct TheoremVerdict {
    TheoremQuery query;
    Hypothesis hypothesis = Hypothesis::fails;
    double bound_value = 0.0;  // NaN when the bound's denominator is not positive
    double observed_value = 0.0;
    bool excluded_extremal = false;
    bool applicability = false;
    std::optional<bool> predicted;     // true: property guaranteed; false: guaranteed absent
    std::optional<bool> oracle_truth;
    bool consistent = true;

    friend bool operator==(const TheoremVerdict&, const TheoremVerdict&) = default;
};

/// Everything the evaluators need about one graph, computed once.
struct GraphFacts {
    Graph graph;
    GraphInvariants invariants;
    SpectralSummary spectrum;
    double cone_lambda1;
    HamiltonianProfile profile;
    std::optional<BipartiteParts> bipartite_parts;
    bool complement_connected;
};

GraphFacts analyze(const Graph& g);

TheoremVerdict evaluate(const GraphFacts& facts, const TheoremQuery& query, double tol = eps());

TheoremVerdict check_li_adjacency(const Graph& g, int s);
TheoremVerdict check_main1_adjacency(const Graph& g, std::optional<int> k = std::nullopt);
TheoremVerdict check_main2_cone(const Graph& g, std::optional<int> k = std::nullopt);
TheoremVerdict check_main3_laplacian(const Graph& g, int s, std::optional<int> k = std::nullopt);
TheoremVerdict check_dirac_ore(const Graph& g, int s);
TheoremVerdict check_chvatal_erdos(const Graph& g, int s, std::optional<int> k = std::nullopt);

struct AndersonMorleyReport {
    double mu1;
    int n;
    bool equality;  // |mu1 - n| <= eps
    bool complement_disconnected;
};

/// Requires n >= 2.
AndersonMorleyReport check_anderson_morley(const Graph& g, double tol = eps());

}  // namespace spectroham
