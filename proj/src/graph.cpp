#include "domreconf/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "domreconf/errors.hpp"

namespace domreconf {

Graph::Graph(int order) {
    if (order < 0) throw GraphError("negative vertex count");
    adjacency_.resize(static_cast<std::size_t>(order));
    closed_.reserve(static_cast<std::size_t>(order));
    for (Vertex v = 0; v < order; ++v) closed_.push_back(VertexSet(static_cast<std::size_t>(order), {v}));
}

Graph::Graph(int order, std::span<const Edge> edges) : Graph(order) {
    for (const Edge& e : edges) add_edge(e.u, e.v);
}

Graph::Graph(int order, std::initializer_list<Edge> edges)
    : Graph(order, std::span<const Edge>(edges.begin(), edges.size())) {}

void Graph::check_vertex(Vertex v) const {
    if (v < 0 || v >= order()) {
        throw GraphError("vertex " + std::to_string(v) + " out of range 0.." + std::to_string(order() - 1));
    }
}

void Graph::add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    auto& nu = adjacency_[static_cast<std::size_t>(u)];
    auto pos = std::lower_bound(nu.begin(), nu.end(), v);
    if (pos != nu.end() && *pos == v) {
        throw GraphError("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    nu.insert(pos, v);
    auto& nv = adjacency_[static_cast<std::size_t>(v)];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    closed_[static_cast<std::size_t>(u)].insert(v);
    closed_[static_cast<std::size_t>(v)].insert(u);
    ++edge_count_;
}

void Graph::remove_edge(Vertex u, Vertex v) {
    if (!adjacent(u, v)) throw GraphError("no edge " + std::to_string(u) + "-" + std::to_string(v));
    auto& nu = adjacency_[static_cast<std::size_t>(u)];
    nu.erase(std::lower_bound(nu.begin(), nu.end(), v));
    auto& nv = adjacency_[static_cast<std::size_t>(v)];
    nv.erase(std::lower_bound(nv.begin(), nv.end(), u));
    closed_[static_cast<std::size_t>(u)].erase(v);
    closed_[static_cast<std::size_t>(v)].erase(u);
    --edge_count_;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& nu = adjacency_[static_cast<std::size_t>(u)];
    return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u) {
        for (Vertex v : adjacency_[static_cast<std::size_t>(u)]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

long long to_int(std::string_view tok, std::size_t line_no) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw ParseError(line_no, "expected integer, got '" + std::string(tok) + "'");
    }
    return value;
}

} // namespace

Graph parse_graph(std::string_view text) {
    Graph g;
    bool have_header = false;
    long long declared_edges = 0;
    std::size_t line_no = 0;
    std::size_t last_line = 0;
    while (!text.empty()) {
        auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        auto tok = split_ws(line);
        if (tok.empty() || tok[0] == "c") continue;
        last_line = line_no;
        if (tok[0] == "p") {
            if (have_header) throw ParseError(line_no, "second header line");
            if (tok.size() != 4 || tok[1] != "ds") throw ParseError(line_no, "header must be 'p ds <n> <edges>'");
            long long n = to_int(tok[2], line_no);
            declared_edges = to_int(tok[3], line_no);
            if (n < 0 || declared_edges < 0) throw ParseError(line_no, "negative count in header");
            g = Graph(static_cast<int>(n));
            have_header = true;
        } else if (tok[0] == "e") {
            if (tok.size() != 3) throw ParseError(line_no, "edge line must be 'e <u> <v>'");
            long long u = to_int(tok[1], line_no);
            long long v = to_int(tok[2], line_no);
            if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
            if (!have_header) throw ParseError(line_no, "edge before header");
            if (u < 1 || v < 1 || u > g.order() || v > g.order()) {
                throw ParseError(line_no, "vertex id out of range 1.." + std::to_string(g.order()));
            }
            if (g.adjacent(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1))) {
                throw ParseError(line_no, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
            }
            g.add_edge(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
        } else {
            throw ParseError(line_no, "unknown line type '" + std::string(tok[0]) + "'");
        }
    }
    if (!have_header) throw ParseError(line_no, "missing 'p ds' header");
    if (static_cast<long long>(g.edge_count()) != declared_edges) {
        throw ParseError(last_line, "header declares " + std::to_string(declared_edges) + " edges, found " +
                                        std::to_string(g.edge_count()));
    }
    return g;
}

std::string serialize_graph(const Graph& g, std::span<const std::string> comments) {
    std::ostringstream out;
    for (const auto& c : comments) out << "c " << c << '\n';
    out << "p ds " << g.order() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
    return out.str();
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open graph file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

} // namespace domreconf
