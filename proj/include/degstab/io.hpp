#pragma once

#include <istream>
#include <string>

#include "degstab/hypergraph.hpp"
#include "degstab/pattern.hpp"

namespace degstab {

// Hypergraph text format:
//   r n m
//   m lines of r distinct 0-based vertex indices
// Pattern text format:
//   r ell m
//   m lines of r labels in [1, ell]; a repeated label is a multiplicity
// Blank lines and everything after '#' are ignored. Errors are ParseError
// with kind ParseError, IndexOutOfRange or DuplicateEdge and the 1-based
// line number.

Hypergraph parse_hypergraph(std::istream& in);
Hypergraph parse_hypergraph(const std::string& text);
std::string serialize(const Hypergraph& h);

Pattern parse_pattern(std::istream& in);
Pattern parse_pattern(const std::string& text);
std::string serialize(const Pattern& p);

/// "-" reads standard input.
Hypergraph read_hypergraph_file(const std::string& path);
Pattern read_pattern_file(const std::string& path);

}  // namespace degstab
