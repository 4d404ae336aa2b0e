#pragma once

#include "uindex/corpus.hpp"

#include <array>
#include <iosfwd>
#include <string>

namespace uindex::table1 {

/// One demo paper with its target citation mix.
struct Row {
    std::string paper_id;
    int total = 0;
    int independent = 0;
    int self_cites = 0;
    int authors = 0;
};

/// The six bundled demo papers: citation mixes chosen to contrast honest
/// and gamed citation profiles (single author vs large groups, moderate vs
/// extreme self-citation).
const std::array<Row, 6>& rows();

/// Synthetic corpus realizing rows(): each demo paper receives exactly its
/// target mix of independent and self citations from generated citing
/// papers. Deterministic.
Corpus corpus();

/// Prints the demo table: one line per row with total, I, S, N and the
/// u score rounded half-up to one decimal.
void print(std::ostream& out);

} // namespace uindex::table1
