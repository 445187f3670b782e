#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "spectroham/graph.hpp"

namespace spectroham {

enum class Graph6Errc {
    empty_input,
    invalid_byte,      // byte outside [63, 126]
    bad_length,        // body shorter than the size field requires
    trailing_data,     // bytes after the body
    nonzero_padding,   // unused low bits of the last body byte are set
    unsupported_size,  // multi-byte size field (n > 62) or n = 0
};

class Graph6Error : public std::runtime_error {
public:
    Graph6Error(Graph6Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    [[nodiscard]] Graph6Errc code() const noexcept { return code_; }

private:
    Graph6Errc code_;
};

/// Decodes one graph6 record (no trailing newline).
[[nodiscard]] Graph parse_graph6(std::string_view text);

/// Encodes g; the upper triangle is written column by column, 6 bits per byte.
[[nodiscard]] std::string emit_graph6(const Graph& g);

}  // namespace spectroham
