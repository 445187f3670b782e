#include "spectroham/invariants.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <limits>
#include <numeric>
#include <vector>

namespace spectroham {

namespace {

VertexMask bit(Vertex v)
{
    return VertexMask{1} << v;
}

VertexMask reachable_from(const Graph& g, Vertex start, VertexMask allowed)
{
    VertexMask seen = bit(start);
    VertexMask frontier = seen;
    while (frontier != 0) {
        VertexMask next = 0;
        for (VertexMask f = frontier; f != 0; f &= f - 1) {
            next |= g.neighbors(std::countr_zero(f));
        }
        frontier = next & allowed & ~seen;
        seen |= frontier;
    }
    return seen;
}

// Residual network of the vertex-split digraph: node 2v is v_in, 2v+1 is v_out.
class SplitNetwork {
public:
    SplitNetwork(const Graph& g, Vertex s, Vertex t)
        : size_(2 * g.order()), capacity_(static_cast<std::size_t>(size_ * size_), 0)
    {
        const int n = g.order();
        for (Vertex v = 0; v < n; ++v) {
            cap(in(v), out(v)) = (v == s || v == t) ? n : 1;
            for (VertexMask nb = g.neighbors(v); nb != 0; nb &= nb - 1) {
                cap(out(v), in(std::countr_zero(nb))) = n;
            }
        }
        source_ = out(s);
        sink_ = in(t);
    }

    // One BFS augmentation; every augmenting path carries exactly one unit
    // because interior vertices have capacity 1.
    bool augment()
    {
        std::vector<int> parent(static_cast<std::size_t>(size_), -1);
        std::vector<int> queue{source_};
        parent[static_cast<std::size_t>(source_)] = source_;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int u = queue[head];
            for (int w = 0; w < size_; ++w) {
                if (parent[static_cast<std::size_t>(w)] < 0 && cap(u, w) > 0) {
                    parent[static_cast<std::size_t>(w)] = u;
                    if (w == sink_) {
                        for (int x = sink_; x != source_; x = parent[static_cast<std::size_t>(x)]) {
                            const int p = parent[static_cast<std::size_t>(x)];
                            --cap(p, x);
                            ++cap(x, p);
                        }
                        return true;
                    }
                    queue.push_back(w);
                }
            }
        }
        return false;
    }

private:
    static int in(Vertex v) { return 2 * v; }
    static int out(Vertex v) { return 2 * v + 1; }
    int& cap(int u, int w) { return capacity_[static_cast<std::size_t>(u * size_ + w)]; }

    int size_;
    std::vector<int> capacity_;
    int source_ = 0;
    int sink_ = 0;
};

class IndependentSetSearch {
public:
    explicit IndependentSetSearch(const Graph& g) : n_(g.order())
    {
        // Relabel by descending degree in the complement, where the search
        // looks for a maximum clique.
        std::vector<Vertex> order(static_cast<std::size_t>(n_));
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](Vertex x, Vertex y) { return g.degree(x) < g.degree(y); });
        std::vector<int> position(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) {
            position[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
        }
        for (int i = 0; i < n_; ++i) {
            VertexMask row = 0;
            for (VertexMask nb = g.neighbors(order[static_cast<std::size_t>(i)]); nb != 0;
                 nb &= nb - 1) {
                row |= bit(position[static_cast<std::size_t>(std::countr_zero(nb))]);
            }
            complement_[static_cast<std::size_t>(i)] = ~row & g.all_vertices() & ~bit(i);
        }
    }

    int run()
    {
        best_ = 0;
        expand((VertexMask{1} << n_) - 1, 0);
        return best_;
    }

private:
    void expand(VertexMask candidates, int size)
    {
        std::array<Vertex, 64> order{};
        std::array<int, 64> bound{};
        int count = 0;

        // Greedy colouring of the complement: each colour class is a clique
        // of the original graph and contributes at most one vertex.
        VertexMask uncoloured = candidates;
        for (int colour = 1; uncoloured != 0; ++colour) {
            VertexMask available = uncoloured;
            while (available != 0) {
                const Vertex v = std::countr_zero(available);
                available &= ~bit(v) & ~complement_[static_cast<std::size_t>(v)];
                uncoloured &= ~bit(v);
                order[static_cast<std::size_t>(count)] = v;
                bound[static_cast<std::size_t>(count)] = colour;
                ++count;
            }
        }

        for (int i = count - 1; i >= 0; --i) {
            if (size + bound[static_cast<std::size_t>(i)] <= best_) {
                return;
            }
            const Vertex v = order[static_cast<std::size_t>(i)];
            const VertexMask next = candidates & complement_[static_cast<std::size_t>(v)];
            if (next == 0) {
                best_ = std::max(best_, size + 1);
            } else {
                expand(next, size + 1);
            }
            candidates &= ~bit(v);
        }
    }

    int n_;
    int best_ = 0;
    std::array<VertexMask, kMaxOrder> complement_{};
};

}  // namespace

int min_degree(const Graph& g)
{
    const auto degrees = g.degrees();
    return *std::min_element(degrees.begin(), degrees.end());
}

bool is_connected(const Graph& g)
{
    return reachable_from(g, 0, g.all_vertices()) == g.all_vertices();
}

int local_connectivity(const Graph& g, Vertex s, Vertex t, int limit)
{
    assert(s != t && !g.adjacent(s, t));
    SplitNetwork network(g, s, t);
    int flow = 0;
    while (flow < limit && network.augment()) {
        ++flow;
    }
    return flow;
}

int connectivity(const Graph& g)
{
    const int n = g.order();
    if (!is_connected(g)) {
        return 0;
    }
    int best = n - 1;
    for (Vertex s = 0; s < n; ++s) {
        for (Vertex t = s + 1; t < n; ++t) {
            if (!g.adjacent(s, t)) {
                best = std::min(best, local_connectivity(g, s, t, best));
            }
        }
    }
    return best;
}

int independence_number(const Graph& g)
{
    return IndependentSetSearch(g).run();
}

std::optional<BipartiteParts> is_complete_bipartite(const Graph& g)
{
    if (g.order() < 2 || !is_connected(g)) {
        return std::nullopt;
    }
    // Breadth-first 2-colouring; side[v] in {0, 1}.
    std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
    std::vector<Vertex> queue{0};
    side[0] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex u = queue[head];
        for (VertexMask nb = g.neighbors(u); nb != 0; nb &= nb - 1) {
            const Vertex w = std::countr_zero(nb);
            auto& sw = side[static_cast<std::size_t>(w)];
            if (sw < 0) {
                sw = 1 - side[static_cast<std::size_t>(u)];
                queue.push_back(w);
            } else if (sw == side[static_cast<std::size_t>(u)]) {
                return std::nullopt;
            }
        }
    }
    const int a = static_cast<int>(std::count(side.begin(), side.end(), 0));
    const int b = g.order() - a;
    if (g.edge_count() != a * b) {
        return std::nullopt;
    }
    return BipartiteParts{std::min(a, b), std::max(a, b)};
}

GraphInvariants invariants(const Graph& g)
{
    GraphInvariants result{
        .n = g.order(),
        .min_degree = min_degree(g),
        .connectivity = connectivity(g),
        .independence_number = independence_number(g),
        .is_connected = is_connected(g),
    };
    assert(result.connectivity <= result.min_degree);
    return result;
}

}  // namespace spectroham
