#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "qchrom/graph.hpp"
#include "qchrom/vecrep.hpp"

namespace qchrom {

// Checked-in datasets live under the data directory (compiled-in source path,
// override with QCHROM_DATA_DIR in the environment). Every file is verified
// against the fnv1a-64 checksum in data/MANIFEST at load time so silent edits
// show up as hard errors.

std::string data_dir();
std::uint64_t fnv1a64(const std::string& bytes);
// returns the file content after checking its manifest entry
std::string load_checked_data_file(const std::string& name);

// the 18-vertex, 44-edge separation example with its R^4 representation
std::pair<Graph, VectorRep> g18_dataset();

// the published proper 4-colouring of fourth_roots_dim4_graph()
ClassicalColouring dim4_published_colouring();

}  // namespace qchrom
