#include "spectroham/graph6.hpp"

#include <vector>

namespace spectroham {

namespace {

constexpr int kOffset = 63;
constexpr int kMaxByte = 126;

std::size_t body_length(int n)
{
    const auto bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
    return (bits + 5) / 6;
}

}  // namespace

Graph parse_graph6(std::string_view text)
{
    if (text.empty()) {
        throw Graph6Error(Graph6Errc::empty_input, "empty graph6 record");
    }
    for (std::size_t i = 0; i < text.size(); ++i) {
        const auto byte = static_cast<unsigned char>(text[i]);
        if (byte < kOffset || byte > kMaxByte) {
            throw Graph6Error(Graph6Errc::invalid_byte,
                              "invalid graph6 byte " + std::to_string(byte) + " at offset " +
                                  std::to_string(i));
        }
    }

    const int n = static_cast<unsigned char>(text[0]) - kOffset;
    if (n == kMaxByte - kOffset) {
        throw Graph6Error(Graph6Errc::unsupported_size,
                          "graph6 records with more than 62 vertices are not supported");
    }
    if (n == 0) {
        throw Graph6Error(Graph6Errc::unsupported_size, "graph6 record has zero vertices");
    }

    const std::string_view body = text.substr(1);
    const std::size_t expected = body_length(n);
    if (body.size() < expected) {
        throw Graph6Error(Graph6Errc::bad_length,
                          "graph6 body has " + std::to_string(body.size()) + " bytes, expected " +
                              std::to_string(expected) + " for n=" + std::to_string(n));
    }
    if (body.size() > expected) {
        throw Graph6Error(Graph6Errc::trailing_data,
                          "graph6 record has " + std::to_string(body.size() - expected) +
                              " trailing bytes");
    }

    GraphBuilder builder(n);
    std::size_t bit = 0;
    auto next_bit = [&] {
        const int value = static_cast<unsigned char>(body[bit / 6]) - kOffset;
        const bool set = (value >> (5 - bit % 6)) & 1;
        ++bit;
        return set;
    };
    for (Vertex v = 1; v < n; ++v) {
        for (Vertex u = 0; u < v; ++u) {
            if (next_bit()) {
                builder.add_edge(u, v);
            }
        }
    }
    while (bit < expected * 6) {
        if (next_bit()) {
            throw Graph6Error(Graph6Errc::nonzero_padding, "graph6 padding bits are not zero");
        }
    }
    return builder.build();
}

std::string emit_graph6(const Graph& g)
{
    const int n = g.order();
    if (n > kMaxOrder) {
        throw Graph6Error(Graph6Errc::unsupported_size,
                          "cannot encode graphs with more than 62 vertices");
    }
    std::vector<int> body(body_length(n), 0);
    std::size_t bit = 0;
    for (Vertex v = 1; v < n; ++v) {
        for (Vertex u = 0; u < v; ++u, ++bit) {
            if (g.adjacent(u, v)) {
                body[bit / 6] |= 1 << (5 - bit % 6);
            }
        }
    }

    std::string out(1, static_cast<char>(kOffset + n));
    for (int value : body) {
        out += static_cast<char>(kOffset + value);
    }
    return out;
}

}  // namespace spectroham
