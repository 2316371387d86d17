#pragma once

// Text formats.
//
// Vector set:
//   # optional comment lines
//   dim <n>
//   <n space-separated non-negative integers>   one line per vector
//
// Graph: a vector-set section, one blank line, then one edge per line as
//   <x1>,<x2>,... -- <y1>,<y2>,...
// Landmarks are implicit (the zero-holder of each coordinate).

#include <string>
#include <string_view>
#include <vector>

#include "metrel/core.hpp"

namespace metrel::io {

// Throw FormatError on malformed input.
VectorSet parse_vector_set(std::string_view text);
LabeledGraph parse_graph(std::string_view text);

// Vectors in lexicographic order; each comment becomes a '# ' line.
std::string format_vector_set(const VectorSet& s, const std::vector<std::string>& comments = {});
std::string format_graph(const LabeledGraph& g, const std::vector<std::string>& comments = {});

// Nodes labeled with their coordinates; landmarks drawn double-circled.
std::string to_dot(const LabeledGraph& g, std::string_view name = "realization");

// Whole file; throws Error if it cannot be read.
std::string read_file(const std::string& path);

}  // namespace metrel::io
