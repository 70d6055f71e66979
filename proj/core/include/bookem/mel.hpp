#pragma once

#include <string>
#include <string_view>
#include <utility>

#include "bookem/book.hpp"
#include "bookem/multigraph.hpp"

namespace bookem {

struct ParseError : GraphError {
    ParseError(std::string msg, int line_no)
        : GraphError(msg + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
    int line;
};

// MEL ("multigraph edge list") text format:
//   optional '#' comment lines and blank lines anywhere
//   header line:  n m
//   then m lines: u v          (0-based; duplicates are parallel edges)
// Loops are invalid. write_mel emits the canonical bytes: header plus one
// line per edge in id order, no comments.
Multigraph read_mel(std::string_view text);
std::string write_mel(const Multigraph& g);

// Embedding text format:
//   order: v0 v1 ... v(n-1)
//   page 0: u-v u-v#1 ...
//   page 1: ...
// Edge tokens use the stored endpoint order; the k-th parallel copy of a pair
// (k >= 1, by edge id) carries the suffix #k, the first copy none. Pages are
// written in index order, each edge list sorted by id. Edges missing from
// every page line read back as uncolored.
std::string write_embedding(const Multigraph& g, const CyclicOrder& omega, const PageColoring& c);
std::pair<CyclicOrder, PageColoring> read_embedding(std::string_view text, const Multigraph& g);

}  // namespace bookem
