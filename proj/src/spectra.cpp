#include "spectroham/spectra.hpp"

namespace spectroham {

SpectralSummary spectral_summary(const Graph& g)
{
    const auto adjacency = jacobi_eigenvalues(adjacency_matrix(g));
    const auto laplacian = jacobi_eigenvalues(laplacian_matrix(g));
    return {
        .lambda1 = adjacency.values(0),
        .lambdaN = adjacency.values(adjacency.values.size() - 1),
        .mu1 = laplacian.values(0),
        .tolerance = std::max(adjacency.off_diagonal_norm, laplacian.off_diagonal_norm),
    };
}

void validate_partition(Eigen::Index n, std::span<const VertexSet> partition)
{
    if (partition.empty()) {
        throw std::invalid_argument("partition has no blocks");
    }
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    Eigen::Index covered = 0;
    for (std::size_t i = 0; i < partition.size(); ++i) {
        if (partition[i].empty()) {
            throw std::invalid_argument("partition block " + std::to_string(i) + " is empty");
        }
        for (Vertex v : partition[i]) {
            if (v >= n) {
                throw std::invalid_argument("partition block " + std::to_string(i) +
                                            " contains out-of-range index " + std::to_string(v));
            }
            if (seen[static_cast<std::size_t>(v)]) {
                throw std::invalid_argument("partition blocks overlap at index " +
                                            std::to_string(v));
            }
            seen[static_cast<std::size_t>(v)] = true;
            ++covered;
        }
    }
    if (covered != n) {
        throw std::invalid_argument("partition covers " + std::to_string(covered) + " of " +
                                    std::to_string(n) + " indices");
    }
}

InterlacingReport check_interlacing(std::span<const double> outer, std::span<const double> inner,
                                    double tol)
{
    const std::size_t n = outer.size();
    const std::size_t m = inner.size();
    if (m == 0 || m >= n) {
        throw std::invalid_argument("interlacing needs 0 < len(inner) < len(outer), got " +
                                    std::to_string(m) + " and " + std::to_string(n));
    }
    auto non_increasing = [](std::span<const double> s) {
        return std::is_sorted(s.begin(), s.end(), std::greater<>());
    };
    if (!non_increasing(outer) || !non_increasing(inner)) {
        throw std::invalid_argument("interlacing inputs must be sorted non-increasing");
    }

    InterlacingReport report{
        .outer = {outer.begin(), outer.end()},
        .inner = {inner.begin(), inner.end()},
        .holds = false,
        .tight = false,
        .worst_violation = -std::numeric_limits<double>::infinity(),
    };
    for (std::size_t i = 0; i < m; ++i) {
        report.worst_violation =
            std::max({report.worst_violation, inner[i] - outer[i], outer[n - m + i] - inner[i]});
    }
    report.holds = report.worst_violation <= tol;

    // Tight: some split point k with eta_i = theta_i for i < k and
    // eta_i = theta_{n-m+i} for i >= k.
    for (std::size_t k = 0; k <= m && !report.tight; ++k) {
        bool matches = true;
        for (std::size_t i = 0; i < m && matches; ++i) {
            const double target = i < k ? outer[i] : outer[n - m + i];
            matches = std::abs(inner[i] - target) <= tol;
        }
        report.tight = matches;
    }
    return report;
}

}  // namespace spectroham
