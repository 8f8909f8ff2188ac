#include "kiss/graph.hpp"

#include <bit>
#include <ostream>
#include <string>

#include "kiss/errors.hpp"

namespace kiss {

CompatGraph::CompatGraph(std::size_t n)
    : n_(n), words_((n + 63) / 64), rows_(n * words_, 0) {}

void CompatGraph::add_edge(std::size_t i, std::size_t j) {
    if (i == j) return;
    rows_[i * words_ + (j >> 6)] |= std::uint64_t(1) << (j & 63);
    rows_[j * words_ + (i >> 6)] |= std::uint64_t(1) << (i & 63);
}

std::size_t CompatGraph::degree(std::size_t i) const {
    std::size_t d = 0;
    for (std::size_t w = 0; w < words_; ++w) d += std::popcount(rows_[i * words_ + w]);
    return d;
}

std::size_t CompatGraph::edge_count() const {
    std::size_t total = 0;
    for (std::size_t i = 0; i < n_; ++i) total += degree(i);
    return total / 2;
}

CompatGraph CompatGraph::permuted(const std::vector<std::size_t>& perm) const {
    CompatGraph out(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if (adjacent(perm[i], perm[j])) out.add_edge(i, j);
    return out;
}

void CompatGraph::write_dimacs(std::ostream& os) const {
    os << "p edge " << n_ << " " << edge_count() << "\n";
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if (adjacent(i, j)) os << "e " << i + 1 << " " << j + 1 << "\n";
}

void CompatGraph::write_adjacency_matrix(std::ostream& os) const {
    for (std::size_t i = 0; i < n_; ++i) {
        std::string line(n_, '0');
        for (std::size_t j = 0; j < n_; ++j)
            if (adjacent(i, j)) line[j] = '1';
        os << line << "\n";
    }
}

void CompatGraph::write_edge_list(std::ostream& os) const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if (adjacent(i, j)) os << i << " " << j << "\n";
}

namespace {

const Rational& half() {
    static const Rational h(1, 2);
    return h;
}

} // namespace

CompatGraph build_graph(const std::vector<ExplicitVector>& vectors) {
    const std::size_t n = vectors.size();
    for (std::size_t i = 0; i < n; ++i)
        if (!vectors[i].is_unit())
            throw NonUnitVector("vector " + std::to_string(i) + " is not unit: " +
                                vectors[i].str());
    CompatGraph g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (same_real_vector(vectors[i], vectors[j]))
                throw DuplicateVector("vectors " + std::to_string(i) + " and " +
                                      std::to_string(j) + " coincide");
            if (compare(inner_product(vectors[i], vectors[j]), half()) !=
                std::strong_ordering::greater)
                g.add_edge(i, j);
        }
    return g;
}

CompatGraph build_graph(const Cloud& cloud) {
    const std::size_t n = cloud.size();
    const Basis& basis = cloud.basis();
    for (std::size_t i = 0; i < n; ++i) {
        const Surd self = span_inner_product(cloud[i], cloud[i], basis);
        if (!(self == Surd(Rational(1))))
            throw NonUnitVector("cloud member " + std::to_string(i) + " is not unit");
    }
    CompatGraph g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            // Distinct (t, s) pairs denote distinct vectors within one basis
            // context; coincidence would mean equal tuples and signs.
            if (cloud[i].t == cloud[j].t && cloud[i].s == cloud[j].s)
                throw DuplicateVector("cloud members " + std::to_string(i) + " and " +
                                      std::to_string(j) + " coincide");
            if (compare(span_inner_product(cloud[i], cloud[j], basis), half()) !=
                std::strong_ordering::greater)
                g.add_edge(i, j);
        }
    return g;
}

} // namespace kiss
