#ifndef BCOLAB_IO_HPP
#define BCOLAB_IO_HPP

#include <string>
#include <utility>
#include <vector>

#include "bcolab/b_coloring.hpp"
#include "bcolab/circulating_orientation.hpp"
#include "bcolab/graph.hpp"
#include "bcolab/path_decomposition.hpp"
#include "bcolab/reduction.hpp"

// Plain-text formats. Lines are LF-terminated, tokens space-separated,
// `c` starts a comment line, vertices are 1-indexed on disk. Writers
// renumber vertices to 1..n by ascending id; companion files (pd,
// coloring, orientation, order) take the graph so they renumber the
// same way. Parsers throw ParseError with a line reference.

namespace bcolab {

/// Throws ParseError when the file cannot be read.
std::string read_text_file(const std::string& path);
/// Throws PreconditionError when the file cannot be written.
void write_text_file(const std::string& path, const std::string& text);

enum class FileKind { CircOri, BCol, Pd, Orientation, Coloring, RoleMap, Order, Unknown };

/// Kind of the first non-comment line.
FileKind sniff_kind(const std::string& text);

// header `p circori <n> <m>`, then m lines `e <u> <v> <w>`
CircOriInstance parse_circori(const std::string& text);
std::string serialize_circori(const CircOriInstance& inst);

// header `p bcol <n> <m> <k>`, then m lines `e <u> <v>`
BColInstance parse_bcol(const std::string& text);
std::string serialize_bcol(const BColInstance& inst);

// header `s pd <d> <maxbagsize> <n>`, then d lines `b <idx> <v...>`
PathDecomposition parse_pd(const std::string& text);
std::string serialize_pd(const PathDecomposition& pd, const Graph& g);

// m lines `a <tail> <head>`
std::vector<Arc> parse_orientation(const std::string& text);
std::string serialize_orientation(const Orientation& o, const Graph& g);

// n lines `v <vertex> <color>`
Coloring parse_coloring(const std::string& text);
std::string serialize_coloring(const Coloring& c, const Graph& g);

// n lines `o <vertex>`, one per vertex, in order
LinearOrder parse_order(const std::string& text);
std::string serialize_order(const LinearOrder& order, const Graph& g);

// one line per H-vertex `n <id> <role-tokens>`, e.g. `n 17 L 2 1 3`
// for the third L-vertex of edge 2 at endpoint 1
std::vector<std::pair<VertexId, VertexRole>> parse_rolemap(const std::string& text);
std::string serialize_rolemap(const ReducedInstance& red);

/// Rebuilds a reduced instance from its bcol/rolemap pair: the source
/// instance is decoded from the role tokens, the construction is re-run
/// on it, and both files are checked against the result. Semantic
/// mismatches throw PreconditionError.
ReducedInstance reduced_from_files(const std::string& bcol_text, const std::string& rolemap_text);

} // namespace bcolab

#endif
