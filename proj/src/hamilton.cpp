#include "spectroham/hamilton.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <stdexcept>
#include <string>

namespace spectroham {

namespace {

VertexMask bit(Vertex v)
{
    return VertexMask{1} << v;
}

/// Depth-first search for a path that starts at a fixed vertex, visits every
/// vertex once and ends somewhere in `ends`.
class PathSearch {
public:
    PathSearch(const Graph& g, VertexMask ends) : g_(g), ends_(ends) {}

    bool from(Vertex start) { return extend(start, bit(start)); }

private:
    bool extend(Vertex current, VertexMask visited)
    {
        const VertexMask unvisited = g_.all_vertices() & ~visited;
        if (unvisited == 0) {
            return (ends_ & bit(current)) != 0;
        }
        if (!feasible(current, unvisited)) {
            return false;
        }

        std::array<Vertex, kMaxOrder> next{};
        std::array<int, kMaxOrder> weight{};
        int count = 0;
        for (VertexMask c = g_.neighbors(current) & unvisited; c != 0; c &= c - 1) {
            const Vertex w = std::countr_zero(c);
            next[static_cast<std::size_t>(count)] = w;
            weight[static_cast<std::size_t>(w)] = std::popcount(g_.neighbors(w) & unvisited);
            ++count;
        }
        std::stable_sort(next.begin(), next.begin() + count, [&](Vertex a, Vertex b) {
            return weight[static_cast<std::size_t>(a)] < weight[static_cast<std::size_t>(b)];
        });
        for (int i = 0; i < count; ++i) {
            const Vertex w = next[static_cast<std::size_t>(i)];
            if (extend(w, visited | bit(w))) {
                return true;
            }
        }
        return false;
    }

    // The rest of the path lives in unvisited + current. Every unvisited vertex
    // needs two path neighbours there unless it is the final vertex, at most
    // one vertex can be final, and the region must be connected.
    bool feasible(Vertex current, VertexMask unvisited) const
    {
        const VertexMask region = unvisited | bit(current);
        int forced_ends = 0;
        for (VertexMask u = unvisited; u != 0; u &= u - 1) {
            const Vertex w = std::countr_zero(u);
            const int available = std::popcount(g_.neighbors(w) & region);
            if (available == 0) {
                return false;
            }
            if (available == 1) {
                if ((ends_ & bit(w)) == 0 || ++forced_ends > 1) {
                    return false;
                }
            }
        }

        VertexMask seen = bit(current);
        VertexMask frontier = seen;
        while (frontier != 0) {
            VertexMask reach = 0;
            for (VertexMask f = frontier; f != 0; f &= f - 1) {
                reach |= g_.neighbors(std::countr_zero(f));
            }
            frontier = reach & region & ~seen;
            seen |= frontier;
        }
        return seen == region;
    }

    const Graph& g_;
    VertexMask ends_;
};

void check_vertex(const Graph& g, Vertex v)
{
    if (v < 0 || v >= g.order()) {
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    }
}

}  // namespace

bool has_hamiltonian_path_between(const Graph& g, Vertex u, Vertex v)
{
    check_vertex(g, u);
    check_vertex(g, v);
    if (u == v) {
        throw std::invalid_argument("Hamiltonian path endpoints must differ");
    }
    return PathSearch(g, bit(v)).from(u);
}

bool has_hamiltonian_path_from(const Graph& g, Vertex start)
{
    check_vertex(g, start);
    return PathSearch(g, g.all_vertices()).from(start);
}

bool is_hamiltonian(const Graph& g)
{
    if (g.order() < 3) {
        return false;
    }
    return PathSearch(g, g.neighbors(0)).from(0);
}

bool is_traceable(const Graph& g)
{
    for (Vertex v = 0; v < g.order(); ++v) {
        if (has_hamiltonian_path_from(g, v)) {
            return true;
        }
    }
    return false;
}

bool is_homogeneously_traceable(const Graph& g)
{
    for (Vertex v = 0; v < g.order(); ++v) {
        if (!has_hamiltonian_path_from(g, v)) {
            return false;
        }
    }
    return true;
}

bool is_hamiltonian_connected(const Graph& g)
{
    for (Vertex u = 0; u < g.order(); ++u) {
        for (Vertex v = u + 1; v < g.order(); ++v) {
            if (!has_hamiltonian_path_between(g, u, v)) {
                return false;
            }
        }
    }
    return true;
}

HamiltonianProfile hamiltonian_profile(const Graph& g)
{
    HamiltonianProfile p{
        .traceable = is_traceable(g),
        .hamiltonian = is_hamiltonian(g),
        .homogeneously_traceable = is_homogeneously_traceable(g),
        .hamiltonian_connected = is_hamiltonian_connected(g),
    };
    assert(!p.hamiltonian_connected || p.hamiltonian || g.order() < 3);
    assert(!p.hamiltonian || p.homogeneously_traceable);
    assert(!p.homogeneously_traceable || p.traceable);
    return p;
}

}  // namespace spectroham
