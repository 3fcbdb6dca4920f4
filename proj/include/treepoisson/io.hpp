#pragma once

#include <iosfwd>
#include <string>

#include "treepoisson/poisson.hpp"

namespace treepoisson {

// %.17g — round-trip exact for doubles.
std::string format_double(double x);

// "re,im" or just "re".
Complex parse_complex_pair(const std::string& text);

// Tree file:    TREE <n> <D>      then n-1 lines "<child> <parent>",
//               child ids 1..n-1 in increasing order.
// Measure file: MEASURE <D>       then one line "<leaf> <re> <im>" per
//               depth-D leaf in increasing leaf id order.
// Vfun file:    VFUN <n>          then "<vertex> <re> <im>" for 0..n-1.
// All writers emit LF line endings and 17 significant digits; parsers are
// strict, so write-then-read is the identity on files.

void write_tree(std::ostream& out, const Tree& tree);
Tree read_tree(std::istream& in);
void write_measure(std::ostream& out, const BoundaryMeasure& mu);
BoundaryMeasure read_measure(std::istream& in, const Tree& tree);
void write_vertex_function(std::ostream& out, const VertexFunction& f);
VertexFunction read_vertex_function(std::istream& in, const Tree& tree);

Tree read_tree_file(const std::string& path);
void write_tree_file(const std::string& path, const Tree& tree);
BoundaryMeasure read_measure_file(const std::string& path, const Tree& tree);
void write_measure_file(const std::string& path, const BoundaryMeasure& mu);
VertexFunction read_vertex_function_file(const std::string& path, const Tree& tree);
void write_vertex_function_file(const std::string& path, const VertexFunction& f);

// Writes through <path>.tmp and renames, so failed runs leave no partial file.
void write_text_file_atomic(const std::string& path, const std::string& content);

}  // namespace treepoisson
