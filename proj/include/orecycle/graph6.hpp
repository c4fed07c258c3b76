#pragma once

// graph6 codec (short form, order <= 62) and the plain edge-list format.

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "orecycle/graph.hpp"

namespace orecycle {

inline constexpr int kGraph6MaxOrder = 62;
inline constexpr std::string_view kGraph6Header = ">>graph6<<";

enum class Graph6ErrorKind {
    empty_input,
    bad_character,     // outside 63..126
    extended_size,     // '~' size prefix (order > 62)
    truncated,         // fewer data characters than the order requires
    trailing_data,     // more data characters than the order requires
    nonzero_padding,
    order_too_large,   // encoder only
};

class Graph6Error : public std::runtime_error {
public:
    Graph6Error(Graph6ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Graph6ErrorKind kind() const noexcept { return kind_; }

private:
    Graph6ErrorKind kind_;
};

// Adjacency bits are read column by column: (0,1), (0,2), (1,2), (0,3), ...
Graph graph6_decode(std::string_view s);
std::string graph6_encode(const Graph& g);

// Reads one graph6 string per non-blank line; trailing '\r' is ignored.
std::vector<Graph> read_graph6_lines(std::istream& in);

// "n m" on the first line, then m lines "u v" (0-based).
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace orecycle
