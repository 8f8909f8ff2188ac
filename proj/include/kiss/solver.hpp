#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "kiss/arrangement.hpp"
#include "kiss/cloud.hpp"
#include "kiss/graph.hpp"

namespace kiss {

struct CliqueReport {
    std::size_t omega = 0;
    /// Sorted vertex-index lists, sorted lexicographically overall. One
    /// witness in single mode, every maximum clique in enumeration mode,
    /// empty only for the empty graph.
    std::vector<std::vector<std::size_t>> witnesses;
    /// Search-tree nodes expanded; identical for every thread count.
    unsigned long long node_count = 0;
};

/// Maximum clique size with one witness. Branch and bound over bit-packed
/// candidate sets with greedy-coloring bounds; vertices are ordered by
/// descending degree before the search, so the result is a deterministic
/// function of the graph.
CliqueReport max_clique(const CompatGraph& g, unsigned threads = 1);

/// All maximum cliques. Same search with strict pruning so ties survive.
/// Parallel runs split the top-level branches across threads; each branch
/// keeps a private bound seeded by the greedy clique, which makes the
/// report (witnesses and node_count) independent of the schedule.
CliqueReport all_max_cliques(const CompatGraph& g, unsigned threads = 1);

/// Exhaustive subset-enumeration oracle. Throws TooLarge when n > 24.
CliqueReport brute_force_max_cliques(const CompatGraph& g);

/// Rechecks every witness against the graph: correct size, pairwise
/// adjacent. Throws std::logic_error on any discrepancy. Runs implicitly at
/// the end of every solve; exposed for external certification.
void verify_witnesses(const CompatGraph& g, const CliqueReport& rep);

/// Basis rows plus the materialized witness members, as one arrangement in
/// the basis' coordinate dimension. Rechecks that the witness is a clique
/// and that every member is compatible with every basis row; throws
/// IncompatibleWithBasis (with the exact value) otherwise, and
/// ConstructionMismatch if a witness member has no explicit form.
Arrangement assemble_arrangement(const CompatGraph& g, const std::vector<std::size_t>& witness,
                                 const Cloud& cloud);

/// The witness subset of an explicit vector set (no basis rows).
Arrangement assemble_arrangement(const CompatGraph& g, const std::vector<std::size_t>& witness,
                                 const Arrangement& source);

/// Implied kissing lower bound: "tau(k) >= d + w = d+w" when d basis rows
/// join the clique, "tau(k) >= w" for a precomputed vector set (d = 0).
std::string bound_statement(std::size_t ambient_dim, std::size_t span_dim,
                            std::size_t clique_size);

} // namespace kiss
