#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "kiss/arrangement.hpp"
#include "kiss/cloud.hpp"
#include "kiss/vectors.hpp"

namespace kiss {

/// Undirected graph over vector indices, bit-packed adjacency rows.
/// Vertex i of a graph built from a vector list is that list's i-th entry;
/// the graph itself stores no vector data. No self-loops; always symmetric.
class CompatGraph {
public:
    explicit CompatGraph(std::size_t n);

    std::size_t size() const { return n_; }
    std::size_t words() const { return words_; }
    std::size_t edge_count() const;

    void add_edge(std::size_t i, std::size_t j);
    bool adjacent(std::size_t i, std::size_t j) const {
        return (rows_[i * words_ + (j >> 6)] >> (j & 63)) & 1u;
    }
    std::size_t degree(std::size_t i) const;

    /// Start of vertex i's packed adjacency row (words() words).
    const std::uint64_t* row(std::size_t i) const { return rows_.data() + i * words_; }

    /// Same graph with vertices relabelled: vertex i of the result is old
    /// vertex perm[i].
    CompatGraph permuted(const std::vector<std::size_t>& perm) const;

    /// "p edge n m" header plus one "e i j" line per edge, 1-based.
    void write_dimacs(std::ostream& os) const;
    /// n lines of n '0'/'1' characters.
    void write_adjacency_matrix(std::ostream& os) const;
    /// One "i j" line per edge, 0-based, i < j.
    void write_edge_list(std::ostream& os) const;

private:
    std::size_t n_;
    std::size_t words_;
    std::vector<std::uint64_t> rows_;
};

/// Compatibility graph over explicit vectors: edge iff the exact inner
/// product is <= 1/2. Throws NonUnitVector / DuplicateVector on bad input.
CompatGraph build_graph(const std::vector<ExplicitVector>& vectors);

/// Compatibility graph over cloud members via exact span inner products.
/// Members are unit and distinct by construction; both are still asserted.
CompatGraph build_graph(const Cloud& cloud);

} // namespace kiss
