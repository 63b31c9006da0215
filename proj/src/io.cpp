#include "qchrom/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "qchrom/errors.hpp"

namespace qchrom {

using nlohmann::json;

Graph read_dimacs(std::istream& in) {
    std::string line;
    int n = -1;
    long long m_declared = -1;
    std::vector<std::pair<int, int>> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank line
        if (tag == "c") continue;
        if (tag == "p") {
            std::string kind;
            if (!(ls >> kind >> n >> m_declared) || kind != "edge")
                throw InvalidInput("dimacs line " + std::to_string(lineno) +
                                   ": expected 'p edge <n> <m>'");
            if (n <= 0) throw InvalidInput("dimacs: empty graph (n=0) is rejected");
            continue;
        }
        if (tag == "e") {
            if (n < 0) throw InvalidInput("dimacs: 'e' line before 'p' line");
            int u, v;
            if (!(ls >> u >> v))
                throw InvalidInput("dimacs line " + std::to_string(lineno) + ": bad edge");
            if (u < 1 || v < 1 || u > n || v > n)
                throw InvalidInput("dimacs line " + std::to_string(lineno) +
                                   ": endpoint out of range (1-indexed)");
            edges.emplace_back(u - 1, v - 1);
            continue;
        }
        throw InvalidInput("dimacs line " + std::to_string(lineno) + ": unknown tag '" +
                           tag + "'");
    }
    if (n < 0) throw InvalidInput("dimacs: missing 'p edge' line");
    return Graph(n, std::move(edges));
}

void write_dimacs(std::ostream& out, const Graph& g) {
    out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << (u + 1) << " " << (v + 1) << "\n";
}

Graph graph_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("graph json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw InvalidInput("graph json needs fields 'n' and 'edges'");
    int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw InvalidInput("graph json: bad edge entry");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph(n, std::move(edges));
}

std::string graph_to_json_text(const Graph& g) {
    json j;
    j["n"] = g.vertex_count();
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back(json::array({u, v}));
    j["edges"] = std::move(edges);
    return j.dump();
}

std::string read_stream(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw InvalidInput("cannot open file: " + path);
    return read_stream(f);
}

Graph read_graph_auto(std::istream& in) {
    std::string text = read_stream(in);
    std::size_t i = text.find_first_not_of(" \t\r\n");
    if (i == std::string::npos) throw InvalidInput("empty graph input");
    if (text[i] == '{') return graph_from_json_text(text);
    std::istringstream ss(text);
    return read_dimacs(ss);
}

Graph load_graph_file(const std::string& path) {
    std::istringstream ss(read_file(path));
    return read_graph_auto(ss);
}

ClassicalColouring colouring_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("colouring json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("c") || !j.contains("colours"))
        throw InvalidInput("colouring json needs fields 'c' and 'colours'");
    ClassicalColouring col;
    col.c = j.at("c").get<int>();
    if (col.c <= 0) throw InvalidInput("colouring json: c must be positive");
    const int base = j.value("base", 0);
    for (const auto& x : j.at("colours")) {
        const int shifted = x.get<int>() - base;
        if (shifted < 0 || shifted >= col.c)
            throw InvalidInput("colouring json: colour " + std::to_string(x.get<int>()) +
                               " outside " + std::to_string(base) + ".." +
                               std::to_string(base + col.c - 1));
        col.colour.push_back(shifted);
    }
    return col;
}

std::string colouring_to_json_text(const ClassicalColouring& col) {
    json j;
    j["c"] = col.c;
    j["colours"] = col.colour;
    return j.dump();
}

ClassicalColouring load_colouring_file(const std::string& path) {
    return colouring_from_json_text(read_file(path));
}

}  // namespace qchrom
