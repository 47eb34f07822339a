#pragma once

#include <string>

#include "coverdepth/graph.hpp"
#include "coverdepth/ideal.hpp"
#include "coverdepth/layered.hpp"

namespace coverdepth {

// Text formats. Blank lines and lines starting with '#' are ignored unless
// noted otherwise. Every parser throws ParseError on malformed input and
// InputError when the parsed value violates a structural rule.

// Graph:
//   n 4
//   1 2
//   2 3
std::string format_graph(const Graph& g);
Graph parse_graph(const std::string& text);

// Clique partition: one block per line, vertices separated by spaces.
std::string format_partition(const CliquePartition& pi);
CliquePartition parse_partition(const std::string& text);

// Monomials are space-separated powers such as "x1^2 x3" or "x_2_1 x_3_2";
// "1" is the empty product.
std::string format_monomial(const VariableSpace& space, const Monomial& m);

// Ideal: an optional ring header followed by the generator list.
//   # ring: x1 x2
//   (x1^2, x1 x2, x2^2)
// "(0)" is the zero ideal and "(1)" the unit ideal. The parentheses are
// optional and generators may also be separated by newlines. Without a
// header the ring is x1..xN for simple variables, or the variables that
// occur when some of them are layered.
std::string format_ideal(const MonomialIdeal& ideal);
MonomialIdeal parse_ideal(const std::string& text);

// Layered graph:
//   n 2 k 2
//   1_1 2_1
//   1_1 2_2
std::string format_layered_graph(const LayeredGraph& lg);
LayeredGraph parse_layered_graph(const std::string& text);

// Reads a whole file; throws ParseError when it cannot be opened.
std::string read_text_file(const std::string& path);

}  // namespace coverdepth
