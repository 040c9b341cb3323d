#include "dirac/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

#include "dirac/errors.hpp"

namespace dirac {

Graph Graph::from_edges(int vertex_count, std::vector<std::pair<int, int>> edges) {
    if (vertex_count < 0)
        throw input_error("negative vertex count");
    for (auto& [i, j] : edges) {
        if (i == j)
            throw input_error("self-loop at vertex " + std::to_string(i));
        if (i > j)
            std::swap(i, j);
        if (i < 0 || j >= vertex_count)
            throw input_error("edge endpoint out of range: (" + std::to_string(i) +
                              ", " + std::to_string(j) + ")");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw input_error("duplicate edge");

    Graph g;
    g.vertex_count_ = vertex_count;
    g.edges_ = std::move(edges);
    g.adjacency_.assign(vertex_count, {});
    for (const auto& [i, j] : g.edges_) {
        g.adjacency_[i].push_back(j);
        g.adjacency_[j].push_back(i);
    }
    for (auto& nbrs : g.adjacency_)
        std::sort(nbrs.begin(), nbrs.end());
    return g;
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 0 || v >= vertex_count_)
        throw input_error("vertex out of range: " + std::to_string(v));
    return adjacency_[v];
}

bool Graph::has_edge(int i, int j) const {
    if (i < 0 || i >= vertex_count_ || j < 0 || j >= vertex_count_)
        return false;
    const auto& nbrs = adjacency_[i];
    return std::binary_search(nbrs.begin(), nbrs.end(), j);
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

int Graph::max_degree() const {
    int d = 0;
    for (const auto& nbrs : adjacency_)
        d = std::max(d, static_cast<int>(nbrs.size()));
    return d;
}

bool Graph::is_connected() const {
    if (vertex_count_ <= 1)
        return true;
    std::vector<char> seen(vertex_count_, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adjacency_[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == vertex_count_;
}

InducedSubgraph induced_subgraph(const Graph& g, std::vector<int> vertices) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    std::vector<int> position(g.vertex_count(), -1);
    for (std::size_t k = 0; k < vertices.size(); ++k) {
        if (vertices[k] < 0 || vertices[k] >= g.vertex_count())
            throw input_error("subgraph vertex out of range");
        position[vertices[k]] = static_cast<int>(k);
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& [i, j] : g.edges())
        if (position[i] >= 0 && position[j] >= 0)
            edges.emplace_back(position[i], position[j]);
    return {Graph::from_edges(static_cast<int>(vertices.size()), std::move(edges)),
            std::move(vertices)};
}

InducedSubgraph unit_sphere(const Graph& g, int x) {
    return induced_subgraph(g, g.neighbors(x));
}

namespace {

Graph from_pairs(int n, std::initializer_list<std::pair<int, int>> e) {
    return Graph::from_edges(n, std::vector<std::pair<int, int>>(e));
}

Graph make_complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            edges.emplace_back(i, j);
    return Graph::from_edges(n, std::move(edges));
}

Graph make_cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, std::move(edges));
}

// n leaves 0..n-1 around center n.
Graph make_star(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        edges.emplace_back(i, n);
    return Graph::from_edges(n + 1, std::move(edges));
}

// n vertices, n-1 edges.
Graph make_path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, std::move(edges));
}

// Rim cycle 0..n-1 plus hub n.
Graph make_wheel(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(i, (i + 1) % n);
        edges.emplace_back(i, n);
    }
    return Graph::from_edges(n + 1, std::move(edges));
}

// Antipodal pairs (i, i+3) are the only non-edges.
Graph make_octahedron() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            if (j - i != 3)
                edges.emplace_back(i, j);
    return Graph::from_edges(6, std::move(edges));
}

// 3-cube: vertices are bit strings, edges flip one bit.
Graph make_cube() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 8; ++i)
        for (int b = 0; b < 3; ++b)
            if (int j = i ^ (1 << b); j > i)
                edges.emplace_back(i, j);
    return Graph::from_edges(8, std::move(edges));
}

// Poles 0 and 11, upper ring 1..5, lower ring 6..10.
Graph make_icosahedron() {
    std::vector<std::pair<int, int>> edges;
    for (int k = 0; k < 5; ++k) {
        int a = 1 + k, a1 = 1 + (k + 1) % 5;
        int b = 6 + k, b1 = 6 + (k + 1) % 5;
        edges.emplace_back(0, a);
        edges.emplace_back(11, b);
        edges.emplace_back(a, a1);
        edges.emplace_back(b, b1);
        edges.emplace_back(a, b);
        edges.emplace_back(a, b1);
    }
    return Graph::from_edges(12, std::move(edges));
}

// LCF notation [10, 7, 4, -4, -7, 10, -4, 7, -7, 4]^2.
Graph make_dodecahedron() {
    static const int lcf[10] = {10, 7, 4, -4, -7, 10, -4, 7, -7, 4};
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 20; ++i) {
        edges.emplace_back(i, (i + 1) % 20);
        int j = ((i + lcf[i % 10]) % 20 + 20) % 20;
        if (i < j)
            edges.emplace_back(i, j);
    }
    return Graph::from_edges(20, std::move(edges));
}

// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
Graph make_petersen() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
        edges.emplace_back(i, i + 5);
    }
    return Graph::from_edges(10, std::move(edges));
}

}  // namespace

const std::vector<std::string>& generator_names() {
    static const std::vector<std::string> names = {
        "complete", "cycle",      "star",         "path",        "wheel",
        "tetrahedron", "cube",    "octahedron",   "dodecahedron", "icosahedron",
        "petersen"};
    return names;
}

int default_generator_size(const std::string& name) {
    if (name == "complete" || name == "star" || name == "path" || name == "wheel")
        return 5;
    if (name == "cycle")
        return 6;
    return 0;
}

Graph generate(const std::string& name, std::optional<int> n) {
    auto need = [&](int minimum) {
        int value = n.value_or(default_generator_size(name));
        if (value < minimum)
            throw input_error("generator '" + name + "' needs n >= " +
                              std::to_string(minimum));
        return value;
    };
    if (name == "complete")
        return make_complete(need(1));
    if (name == "cycle")
        return make_cycle(need(3));
    if (name == "star")
        return make_star(need(1));
    if (name == "path")
        return make_path(need(1));
    if (name == "wheel")
        return make_wheel(need(3));
    if (n.has_value())
        throw input_error("generator '" + name + "' takes no size parameter");
    if (name == "tetrahedron")
        return make_complete(4);
    if (name == "cube")
        return make_cube();
    if (name == "octahedron")
        return make_octahedron();
    if (name == "dodecahedron")
        return make_dodecahedron();
    if (name == "icosahedron")
        return make_icosahedron();
    if (name == "petersen")
        return make_petersen();
    throw input_error("unknown generator '" + name + "'");
}

Graph random_graph(int n, double p, std::uint64_t seed) {
    if (n < 0 || p < 0.0 || p > 1.0)
        throw input_error("random_graph: need n >= 0 and p in [0, 1]");
    std::mt19937_64 rng(seed);
    // Threshold comparison against raw engine output keeps the stream
    // identical across standard library implementations.
    const double scaled = std::ldexp(p, 64);
    const std::uint64_t threshold =
        scaled >= 18446744073709551615.0
            ? std::numeric_limits<std::uint64_t>::max()
            : static_cast<std::uint64_t>(scaled);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const std::uint64_t draw = rng();
            if (p >= 1.0 || draw < threshold)
                edges.emplace_back(i, j);
        }
    return Graph::from_edges(n, std::move(edges));
}

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    long vertex_count = -1;
    std::vector<std::pair<int, int>> edges;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.resize(hash);
        std::istringstream fields(line);
        if (vertex_count < 0) {
            if (!(fields >> vertex_count) || vertex_count < 0)
                throw input_error("line " + std::to_string(line_no) +
                                  ": expected vertex count");
            std::string rest;
            if (fields >> rest)
                throw input_error("line " + std::to_string(line_no) +
                                  ": trailing tokens after vertex count");
            continue;
        }
        std::string first;
        if (!(fields >> first))
            continue;  // blank or comment-only line
        long i, j;
        std::string rest;
        std::istringstream edge_fields(line);
        if (!(edge_fields >> i >> j) || (edge_fields >> rest))
            throw input_error("line " + std::to_string(line_no) + ": malformed edge");
        if (i == j)
            throw input_error("line " + std::to_string(line_no) + ": self-loop");
        if (i < 0 || j < 0 || i >= vertex_count || j >= vertex_count)
            throw input_error("line " + std::to_string(line_no) +
                              ": vertex id out of range");
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
    if (vertex_count < 0)
        throw input_error("empty graph file: missing vertex count");
    return Graph::from_edges(static_cast<int>(vertex_count), std::move(edges));
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << '\n';
    for (const auto& [i, j] : g.edges())
        out << i << ' ' << j << '\n';
    return out.str();
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw input_error("cannot open graph file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_graph(buffer.str());
}

}  // namespace dirac
