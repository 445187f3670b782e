#include "spectroham/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace spectroham {

namespace {

void check_order(int n)
{
    if (n < 1 || n > kMaxOrder) {
        throw std::invalid_argument("graph order must be in [1, " + std::to_string(kMaxOrder) +
                                    "], got " + std::to_string(n));
    }
}

}  // namespace

VertexSet::VertexSet(std::initializer_list<Vertex> members)
    : VertexSet(std::vector<Vertex>(members))
{
}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members))
{
    std::sort(members_.begin(), members_.end());
    if (!members_.empty() && members_.front() < 0) {
        throw std::invalid_argument("vertex set contains a negative index");
    }
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
        throw std::invalid_argument("vertex set contains a repeated vertex");
    }
}

VertexSet VertexSet::from_mask(VertexMask mask)
{
    std::vector<Vertex> members;
    for (; mask != 0; mask &= mask - 1) {
        members.push_back(std::countr_zero(mask));
    }
    return VertexSet(std::move(members));
}

bool VertexSet::contains(Vertex v) const noexcept
{
    return std::binary_search(members_.begin(), members_.end(), v);
}

Graph::Graph(int n)
{
    check_order(n);
    rows_.assign(static_cast<std::size_t>(n), 0);
}

Graph::Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges)
{
    GraphBuilder builder(n);
    for (auto [u, v] : edges) {
        builder.add_edge(u, v);
    }
    *this = builder.build();
}

Graph::Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges)
    : Graph(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size()))
{
}

int Graph::edge_count() const noexcept
{
    int sum = 0;
    for (VertexMask row : rows_) {
        sum += std::popcount(row);
    }
    return sum / 2;
}

std::vector<int> Graph::degrees() const
{
    std::vector<int> result;
    result.reserve(rows_.size());
    for (VertexMask row : rows_) {
        result.push_back(std::popcount(row));
    }
    return result;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const
{
    std::vector<std::pair<Vertex, Vertex>> result;
    for (Vertex v = 0; v < order(); ++v) {
        for (Vertex u = 0; u < v; ++u) {
            if (adjacent(u, v)) {
                result.emplace_back(u, v);
            }
        }
    }
    return result;
}

VertexMask Graph::all_vertices() const noexcept
{
    return (VertexMask{1} << order()) - 1;
}

GraphBuilder::GraphBuilder(int n)
{
    check_order(n);
    rows_.assign(static_cast<std::size_t>(n), 0);
}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v)
{
    const int n = order();
    if (u < 0 || v < 0 || u >= n || v >= n) {
        throw std::out_of_range("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                ") outside vertex range of order " + std::to_string(n));
    }
    if (u == v) {
        throw std::invalid_argument("loops are not allowed (vertex " + std::to_string(u) + ")");
    }
    rows_[static_cast<std::size_t>(u)] |= VertexMask{1} << v;
    rows_[static_cast<std::size_t>(v)] |= VertexMask{1} << u;
    return *this;
}

bool GraphBuilder::adjacent(Vertex u, Vertex v) const noexcept
{
    return (rows_[static_cast<std::size_t>(u)] >> v) & 1U;
}

Graph GraphBuilder::build() const
{
    Graph g;
    g.rows_ = rows_;
    return g;
}

Graph empty_graph(int n)
{
    return Graph(n);
}

Graph complete_graph(int n)
{
    return complement(Graph(n));
}

Graph path_graph(int n)
{
    GraphBuilder b(n);
    for (Vertex v = 0; v + 1 < n; ++v) {
        b.add_edge(v, v + 1);
    }
    return b.build();
}

Graph cycle_graph(int n)
{
    if (n < 3) {
        throw std::invalid_argument("a cycle needs at least 3 vertices");
    }
    GraphBuilder b(n);
    for (Vertex v = 0; v < n; ++v) {
        b.add_edge(v, (v + 1) % n);
    }
    return b.build();
}

Graph star_graph(int leaves)
{
    return complete_bipartite(1, leaves);
}

Graph petersen_graph()
{
    GraphBuilder b(10);
    for (Vertex v = 0; v < 5; ++v) {
        b.add_edge(v, (v + 1) % 5);          // outer cycle
        b.add_edge(v, v + 5);                // spokes
        b.add_edge(5 + v, 5 + (v + 2) % 5);  // inner pentagram
    }
    return b.build();
}

Graph complete_bipartite(int a, int b)
{
    if (a < 1 || b < 1) {
        throw std::invalid_argument("complete bipartite parts must be nonempty, got (" +
                                    std::to_string(a) + ", " + std::to_string(b) + ")");
    }
    return join(Graph(a), Graph(b));
}

Graph join(const Graph& g, const Graph& h)
{
    const int ng = g.order();
    GraphBuilder b(ng + h.order());
    for (auto [u, v] : g.edges()) {
        b.add_edge(u, v);
    }
    for (auto [u, v] : h.edges()) {
        b.add_edge(ng + u, ng + v);
    }
    for (Vertex u = 0; u < ng; ++u) {
        for (Vertex v = 0; v < h.order(); ++v) {
            b.add_edge(u, ng + v);
        }
    }
    return b.build();
}

Graph cone(const Graph& g)
{
    return join(g, Graph(1));
}

Graph complement(const Graph& g)
{
    GraphBuilder b(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        for (Vertex u = 0; u < v; ++u) {
            if (!g.adjacent(u, v)) {
                b.add_edge(u, v);
            }
        }
    }
    return b.build();
}

Graph disjoint_union(const Graph& g, const Graph& h)
{
    const int ng = g.order();
    GraphBuilder b(ng + h.order());
    for (auto [u, v] : g.edges()) {
        b.add_edge(u, v);
    }
    for (auto [u, v] : h.edges()) {
        b.add_edge(ng + u, ng + v);
    }
    return b.build();
}

Graph relabel(const Graph& g, std::span<const Vertex> perm)
{
    const int n = g.order();
    if (static_cast<int>(perm.size()) != n) {
        throw std::invalid_argument("permutation length does not match graph order");
    }
    VertexMask seen = 0;
    for (Vertex p : perm) {
        if (p < 0 || p >= n || ((seen >> p) & 1U)) {
            throw std::invalid_argument("relabel argument is not a permutation");
        }
        seen |= VertexMask{1} << p;
    }
    GraphBuilder b(n);
    for (auto [u, v] : g.edges()) {
        b.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    }
    return b.build();
}

}  // namespace spectroham
