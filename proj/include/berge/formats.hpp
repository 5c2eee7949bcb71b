// formats.hpp
// Line-oriented text formats. Lines starting with '#' are comments.
//
//   .hg   "n m", then m lines of ascending vertex indices (one edge each)
//   .big  "|X| |Y|", then |X| lines of ascending Y-neighbour indices
//   .bkf  "k p", then p lines "edge u v", sorted by edge index
//   .bar  "delta |A| |B|", a line of A, a line of B (combined indices),
//         then one line per component "odd|even size v..."
//
// Serialisation is byte-deterministic; parse(serialize(x)) == x.

#pragma once

#include "berge/hypergraph.hpp"
#include "berge/incidence.hpp"
#include "berge/parity_criterion.hpp"

#include <string>

namespace berge {

std::string serialize_hypergraph(const Hypergraph& h);
Hypergraph parse_hypergraph(const std::string& text);

std::string serialize_bipartite(const BipartiteGraph& g);
BipartiteGraph parse_bipartite(const std::string& text);

std::string serialize_certificate(const BergeFactorCertificate& cert);
BergeFactorCertificate parse_certificate(const std::string& text);

std::string serialize_barrier(const Barrier& b);
Barrier parse_barrier(const std::string& text);

/// Whole-file helpers; throw FormatError when the file cannot be read or
/// written.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace berge
