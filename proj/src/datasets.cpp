#include "qchrom/datasets.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "qchrom/errors.hpp"
#include "qchrom/io.hpp"

namespace qchrom {

#ifndef QCHROM_DATA_DIR
#define QCHROM_DATA_DIR "data"
#endif

std::string data_dir() {
    if (const char* env = std::getenv("QCHROM_DATA_DIR")) return env;
    return QCHROM_DATA_DIR;
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 0x100000001b3ull;
    }
    return h;
}

namespace {

std::map<std::string, std::uint64_t> read_manifest(const std::string& dir) {
    std::ifstream in(dir + "/MANIFEST");
    if (!in) throw InvalidInput("cannot open " + dir + "/MANIFEST");
    std::map<std::string, std::uint64_t> entries;
    std::string name, hex;
    while (in >> name >> hex) entries[name] = std::stoull(hex, nullptr, 16);
    return entries;
}

}  // namespace

std::string load_checked_data_file(const std::string& name) {
    const std::string dir = data_dir();
    auto manifest = read_manifest(dir);
    auto it = manifest.find(name);
    if (it == manifest.end())
        throw InvalidInput("data file not listed in MANIFEST: " + name);
    std::string content = read_file(dir + "/" + name);
    std::uint64_t got = fnv1a64(content);
    if (got != it->second) {
        std::ostringstream msg;
        msg << "checksum mismatch for " << name << ": manifest says " << std::hex
            << it->second << ", file hashes to " << got;
        throw InvalidInput(msg.str());
    }
    return content;
}

std::pair<Graph, VectorRep> g18_dataset() {
    std::istringstream edges(load_checked_data_file("g18_edges.dimacs"));
    Graph g = read_dimacs(edges);
    VectorRep rep = vectors_from_json_text(load_checked_data_file("g18_vectors.json"));
    if (rep.count() != g.vertex_count())
        throw InvalidInput("g18 dataset inconsistent: vector count != vertex count");
    return {std::move(g), std::move(rep)};
}

ClassicalColouring dim4_published_colouring() {
    return colouring_from_json_text(load_checked_data_file("dim4_colouring.json"));
}

}  // namespace qchrom
