#include "ramseykit/io.hpp"

#include <fstream>
#include <sstream>

#include "ramseykit/errors.hpp"

namespace ramsey {

GraphFile read_graph(std::istream& in) {
    long long n = -1, m = -1, r = -1;
    if (!(in >> n >> m >> r)) throw ParseError("missing or malformed header line (want: N M r)");
    if (n < 0 || n > 255) throw ParseError("vertex count out of range");
    if (m < 0) throw ParseError("negative edge count");
    if (r < 0 || r > 120) throw ParseError("colour count out of range");

    std::vector<Edge> edges;
    std::vector<int> cols;
    edges.reserve(m);
    cols.reserve(m);
    for (long long i = 0; i < m; ++i) {
        long long u, v, c;
        if (!(in >> u >> v >> c)) throw ParseError("edge line " + std::to_string(i) + " malformed");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError("edge endpoint out of range on line " + std::to_string(i));
        if (u == v) throw ParseError("self-loop rejected on line " + std::to_string(i));
        if (r == 0) {
            if (c != -1) throw ParseError("coloured edge in an uncoloured file (r = 0)");
        } else if (c < 0 || c >= r) {
            throw ParseError("edge colour out of range on line " + std::to_string(i));
        }
        edges.push_back(make_edge(static_cast<int>(u), static_cast<int>(v)));
        cols.push_back(static_cast<int>(c));
    }

    GraphFile out;
    try {
        out.graph = Graph::from_edges(static_cast<int>(n), edges);
    } catch (const PreconditionError& e) {
        throw ParseError(e.what()); // duplicate edges
    }
    if (r > 0) {
        EdgeColouring col(static_cast<int>(n), static_cast<int>(r));
        for (std::size_t i = 0; i < edges.size(); ++i)
            col.set(edges[i].first, edges[i].second, cols[i]);
        out.colouring = std::move(col);
    }
    return out;
}

GraphFile read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file: " + path);
    return read_graph(in);
}

static void write_lines(std::ostream& out, const Graph& g, const EdgeColouring* c) {
    out << g.vertex_count() << ' ' << g.edge_count() << ' '
        << (c != nullptr ? c->colour_count() : 0) << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << ' ' << (c != nullptr ? c->colour(u, v) : -1) << '\n';
}

void write_graph(std::ostream& out, const Graph& g) { write_lines(out, g, nullptr); }

void write_graph(std::ostream& out, const Graph& g, const EdgeColouring& c) {
    write_lines(out, g, &c);
}

void write_graph_file(const std::string& path, const Graph& g, const EdgeColouring* c) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open file for writing: " + path);
    write_lines(out, g, c);
}

} // namespace ramsey
