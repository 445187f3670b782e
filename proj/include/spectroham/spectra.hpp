#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "spectroham/graph.hpp"
#include "spectroham/tolerance.hpp"

namespace spectroham {

template <typename Scalar = double>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar = double>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

template <typename Scalar = double>
Matrix<Scalar> adjacency_matrix(const Graph& g)
{
    const int n = g.order();
    Matrix<Scalar> a = Matrix<Scalar>::Zero(n, n);
    for (auto [u, v] : g.edges()) {
        a(u, v) = a(v, u) = Scalar(1);
    }
    return a;
}

/// D - A.
template <typename Scalar = double>
Matrix<Scalar> laplacian_matrix(const Graph& g)
{
    Matrix<Scalar> l = -adjacency_matrix<Scalar>(g);
    for (Vertex v = 0; v < g.order(); ++v) {
        l(v, v) = Scalar(g.degree(v));
    }
    return l;
}

template <typename Scalar>
struct EigenvalueResult {
    Vector<Scalar> values;     // non-increasing
    Scalar off_diagonal_norm;  // Frobenius norm left off the diagonal; bounds each eigenvalue error
    int sweeps;
};

/// Eigenvalues of a dense symmetric matrix by cyclic Jacobi rotations.
///
/// Sweeps over every (p, q) pair above the diagonal and annihilates the
/// entry with a plane rotation. Stops once the off-diagonal Frobenius norm
/// drops below 1e-12 * (1 + ||M||_F); throws ConvergenceError after
/// max_sweeps. Input must be symmetric to 1e-12 relative to its largest entry.
template <typename Derived>
EigenvalueResult<typename Derived::Scalar> jacobi_eigenvalues(
    const Eigen::MatrixBase<Derived>& matrix, int max_sweeps = 100)
{
    using Scalar = typename Derived::Scalar;
    using Index = Eigen::Index;

    if (matrix.rows() != matrix.cols() || matrix.rows() == 0) {
        throw std::invalid_argument("eigenvalues need a nonempty square matrix");
    }
    Matrix<Scalar> a = matrix;
    const Scalar scale = std::max(Scalar(1), a.cwiseAbs().maxCoeff());
    if ((a - a.transpose()).cwiseAbs().maxCoeff() > Scalar(1e-12) * scale) {
        throw std::invalid_argument("matrix is not symmetric");
    }
    a = (a + a.transpose()) / Scalar(2);

    const Index n = a.rows();
    const Scalar relative =
        std::max(Scalar(1e-12), Scalar(16) * std::numeric_limits<Scalar>::epsilon());
    const Scalar threshold = relative * (Scalar(1) + a.norm());
    // Summed directly: ||A||^2 - ||diag||^2 cancels to noise near convergence.
    auto off_norm = [&] {
        Scalar sum(0);
        for (Index j = 0; j < n; ++j) {
            for (Index i = 0; i < n; ++i) {
                if (i != j) {
                    sum += a(i, j) * a(i, j);
                }
            }
        }
        return std::sqrt(sum);
    };

    int sweeps = 0;
    Scalar off = off_norm();
    while (off >= threshold) {
        if (sweeps == max_sweeps) {
            throw ConvergenceError("Jacobi eigenvalue iteration did not converge in " +
                                   std::to_string(max_sweeps) + " sweeps");
        }
        for (Index p = 0; p < n - 1; ++p) {
            for (Index q = p + 1; q < n; ++q) {
                if (a(p, q) == Scalar(0)) {
                    continue;
                }
                Eigen::JacobiRotation<Scalar> rotation;
                rotation.makeJacobi(a, p, q);
                a.applyOnTheLeft(p, q, rotation.adjoint());
                a.applyOnTheRight(p, q, rotation);
                a(p, q) = a(q, p) = Scalar(0);
            }
        }
        ++sweeps;
        off = off_norm();
    }

    Vector<Scalar> values = a.diagonal();
    std::sort(values.data(), values.data() + values.size(), std::greater<Scalar>());
    return {std::move(values), off, sweeps};
}

template <typename Derived>
Vector<typename Derived::Scalar> symmetric_eigenvalues(const Eigen::MatrixBase<Derived>& matrix)
{
    return jacobi_eigenvalues(matrix).values;
}

struct SpectralSummary {
    double lambda1;    // spectral radius of A
    double lambdaN;    // smallest eigenvalue of A
    double mu1;        // largest eigenvalue of L = D - A
    double tolerance;  // worst residual off-diagonal norm of the two solves
};

SpectralSummary spectral_summary(const Graph& g);

/// Throws std::invalid_argument unless the blocks are nonempty, disjoint and
/// cover 0..n-1.
void validate_partition(Eigen::Index n, std::span<const VertexSet> partition);

template <typename Scalar>
struct QuotientMatrix {
    Matrix<Scalar> entries;  // entries(i, j) = average row sum of block (i, j)
    std::vector<VertexSet> partition;

    [[nodiscard]] Eigen::Index blocks() const noexcept { return entries.rows(); }
};

namespace detail {

template <typename Derived>
Matrix<typename Derived::Scalar> block_sums(const Eigen::MatrixBase<Derived>& matrix,
                                            std::span<const VertexSet> partition)
{
    using Scalar = typename Derived::Scalar;
    const auto m = static_cast<Eigen::Index>(partition.size());
    Matrix<Scalar> sums = Matrix<Scalar>::Zero(m, m);
    for (Eigen::Index i = 0; i < m; ++i) {
        for (Eigen::Index j = 0; j < m; ++j) {
            for (Vertex r : partition[static_cast<std::size_t>(i)]) {
                for (Vertex c : partition[static_cast<std::size_t>(j)]) {
                    sums(i, j) += matrix(r, c);
                }
            }
        }
    }
    return sums;
}

}  // namespace detail

template <typename Derived>
QuotientMatrix<typename Derived::Scalar> quotient_matrix(const Eigen::MatrixBase<Derived>& matrix,
                                                         std::span<const VertexSet> partition)
{
    using Scalar = typename Derived::Scalar;
    if (matrix.rows() != matrix.cols()) {
        throw std::invalid_argument("quotient matrix needs a square matrix");
    }
    validate_partition(matrix.rows(), partition);
    Matrix<Scalar> entries = detail::block_sums(matrix, partition);
    for (Eigen::Index i = 0; i < entries.rows(); ++i) {
        entries.row(i) /= Scalar(partition[static_cast<std::size_t>(i)].size());
    }
    return {std::move(entries), std::vector<VertexSet>(partition.begin(), partition.end())};
}

/// Eigenvalues of a quotient matrix, non-increasing. R = S^-1 B with B
/// symmetric and S the block sizes, so R is similar to the symmetric
/// S^{1/2} R S^{-1/2} and that is what gets diagonalized.
template <typename Scalar>
Vector<Scalar> quotient_eigenvalues(const QuotientMatrix<Scalar>& q)
{
    const Eigen::Index m = q.blocks();
    Vector<Scalar> root(m);
    for (Eigen::Index i = 0; i < m; ++i) {
        root(i) = std::sqrt(Scalar(q.partition[static_cast<std::size_t>(i)].size()));
    }
    Matrix<Scalar> symmetric = root.asDiagonal() * q.entries * root.cwiseInverse().asDiagonal();
    symmetric = (symmetric + symmetric.transpose()) / Scalar(2);
    return symmetric_eigenvalues(symmetric);
}

/// Closed-form eigenvalue pair of a 2x2 matrix with real spectrum, larger first.
template <typename Derived>
std::pair<typename Derived::Scalar, typename Derived::Scalar> eigenvalues_2x2(
    const Eigen::MatrixBase<Derived>& r)
{
    using Scalar = typename Derived::Scalar;
    if (r.rows() != 2 || r.cols() != 2) {
        throw std::invalid_argument("expected a 2x2 matrix");
    }
    const Scalar half_trace = (r(0, 0) + r(1, 1)) / Scalar(2);
    const Scalar det = r(0, 0) * r(1, 1) - r(0, 1) * r(1, 0);
    Scalar disc = half_trace * half_trace - det;
    const Scalar slack = Scalar(1e-12) * std::max(Scalar(1), half_trace * half_trace + std::abs(det));
    if (disc < -slack) {
        throw std::domain_error("2x2 matrix has complex eigenvalues");
    }
    disc = std::sqrt(std::max(Scalar(0), disc));
    return {half_trace + disc, half_trace - disc};
}

template <typename Scalar>
std::pair<Scalar, Scalar> quotient_eigenvalues_2x2(const QuotientMatrix<Scalar>& q)
{
    if (q.blocks() != 2) {
        throw std::invalid_argument("closed-form quotient eigenvalues need exactly 2 blocks, got " +
                                    std::to_string(q.blocks()));
    }
    return eigenvalues_2x2(q.entries);
}

/// Every block of the partitioned matrix has constant row sums (within tol).
template <typename Derived>
bool is_equitable(const Eigen::MatrixBase<Derived>& matrix, std::span<const VertexSet> partition,
                  typename Derived::Scalar tol = typename Derived::Scalar(kDefaultEps))
{
    using Scalar = typename Derived::Scalar;
    validate_partition(matrix.rows(), partition);
    for (const VertexSet& rows : partition) {
        for (const VertexSet& cols : partition) {
            Scalar lo = std::numeric_limits<Scalar>::max();
            Scalar hi = std::numeric_limits<Scalar>::lowest();
            for (Vertex r : rows) {
                Scalar sum = 0;
                for (Vertex c : cols) {
                    sum += matrix(r, c);
                }
                lo = std::min(lo, sum);
                hi = std::max(hi, sum);
            }
            if (hi - lo > tol) {
                return false;
            }
        }
    }
    return true;
}

struct InterlacingReport {
    std::vector<double> outer;  // theta, length n
    std::vector<double> inner;  // eta, length m < n
    bool holds;
    bool tight;
    /// max_i max(eta_i - theta_i, theta_{n-m+i} - eta_i); <= 0 for strict interlacing.
    double worst_violation;
};

/// Both sequences must be non-increasing, with 0 < inner.size() < outer.size().
InterlacingReport check_interlacing(std::span<const double> outer, std::span<const double> inner,
                                    double tol = kDefaultEps);

inline std::span<const double> as_span(const Vector<double>& v)
{
    return {v.data(), static_cast<std::size_t>(v.size())};
}

}  // namespace spectroham
