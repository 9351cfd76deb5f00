#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "ramseykit/colouring.hpp"
#include "ramseykit/graph.hpp"

namespace ramsey {

/// A parsed graph file: first line `N M r`, then M lines `u v c` with
/// 0-based endpoints. r = 0 marks an uncoloured file, in which case every
/// c must be -1; r >= 1 requires a total colouring with colours in [0, r).
struct GraphFile {
    Graph graph{0};
    std::optional<EdgeColouring> colouring;
};

GraphFile read_graph(std::istream& in);
GraphFile read_graph_file(const std::string& path);

void write_graph(std::ostream& out, const Graph& g);
void write_graph(std::ostream& out, const Graph& g, const EdgeColouring& c);
void write_graph_file(const std::string& path, const Graph& g, const EdgeColouring* c = nullptr);

} // namespace ramsey
