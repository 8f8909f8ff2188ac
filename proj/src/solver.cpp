#include "kiss/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "kiss/errors.hpp"

namespace kiss {
namespace {

using Words = std::vector<std::uint64_t>;

bool test_bit(const Words& w, std::size_t j) { return (w[j >> 6] >> (j & 63)) & 1u; }
void clear_bit(Words& w, std::size_t j) { w[j >> 6] &= ~(std::uint64_t(1) << (j & 63)); }

bool empty_set(const Words& w) {
    for (auto x : w)
        if (x) return false;
    return true;
}

int first_bit(const Words& w) {
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i]) return int(i * 64 + std::countr_zero(w[i]));
    return -1;
}

void and_rows(Words& dst, const Words& a, const std::uint64_t* b) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = a[i] & b[i];
}

void andnot_row(Words& dst, const std::uint64_t* b) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] &= ~b[i];
}

Words full_set(std::size_t n, std::size_t words) {
    Words w(words, ~std::uint64_t(0));
    if (n & 63) w[words - 1] = (std::uint64_t(1) << (n & 63)) - 1;
    return w;
}

/// The input graph with vertices relabelled by descending degree (ties by
/// ascending original index). Fixing this order before the search makes
/// everything downstream a deterministic function of the graph alone.
struct SearchGraph {
    std::size_t n = 0;
    std::size_t words = 0;
    std::vector<std::uint64_t> adj;
    std::vector<std::size_t> to_old;

    const std::uint64_t* row(std::size_t v) const { return adj.data() + v * words; }
};

SearchGraph reorder_by_degree(const CompatGraph& g) {
    const std::size_t n = g.size();
    SearchGraph sg;
    sg.n = n;
    sg.words = (n + 63) / 64;
    sg.to_old.resize(n);
    std::iota(sg.to_old.begin(), sg.to_old.end(), std::size_t(0));
    std::stable_sort(sg.to_old.begin(), sg.to_old.end(),
                     [&](std::size_t a, std::size_t b) { return g.degree(a) > g.degree(b); });
    sg.adj.assign(n * sg.words, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (g.adjacent(sg.to_old[i], sg.to_old[j]))
                sg.adj[i * sg.words + (j >> 6)] |= std::uint64_t(1) << (j & 63);
    return sg;
}

std::vector<int> greedy_clique(const SearchGraph& sg) {
    std::vector<int> clique;
    Words allowed = full_set(sg.n, sg.words);
    for (std::size_t v = 0; v < sg.n; ++v)
        if (test_bit(allowed, v)) {
            clique.push_back(int(v));
            and_rows(allowed, allowed, sg.row(v));
        }
    return clique;
}

/// Greedy sequential coloring of the candidate set. Emits vertices in
/// color-class construction order (colors nondecreasing); a vertex' color is
/// an upper bound on the largest clique through it inside the set.
void color_sort(const SearchGraph& sg, const Words& P, std::vector<int>& order,
                std::vector<int>& colors) {
    order.clear();
    colors.clear();
    Words uncolored = P;
    Words candidates(sg.words);
    int c = 0;
    while (!empty_set(uncolored)) {
        ++c;
        candidates = uncolored;
        int v;
        while ((v = first_bit(candidates)) >= 0) {
            order.push_back(v);
            colors.push_back(c);
            clear_bit(uncolored, std::size_t(v));
            clear_bit(candidates, std::size_t(v));
            andnot_row(candidates, sg.row(v));
        }
    }
}

struct TaskResult {
    std::size_t omega = 0;
    std::vector<std::vector<int>> found;  // enumeration mode: cliques of size omega
    std::vector<int> best;                // single mode: improvement over the seed, if any
    unsigned long long nodes = 0;
};

/// One branch-and-bound task with a private bound. Enumeration mode prunes
/// strictly (ties must survive) and records cliques at leaves; single mode
/// prunes on <= and keeps one witness.
class Searcher {
public:
    Searcher(const SearchGraph& sg, bool enumerate, std::size_t seed_omega)
        : sg_(sg), enumerate_(enumerate), omega_(seed_omega) {}

    void run(int root_vertex, const Words& candidates) {
        r_.push_back(root_vertex);
        expand(candidates);
    }

    TaskResult take() {
        out_.omega = omega_;
        return std::move(out_);
    }

private:
    void expand(const Words& P) {
        ++out_.nodes;
        if (empty_set(P)) {
            if (r_.size() > omega_) {
                omega_ = r_.size();
                if (enumerate_) {
                    out_.found.clear();
                    out_.found.push_back(r_);
                } else {
                    out_.best = r_;
                }
            } else if (enumerate_ && r_.size() == omega_) {
                out_.found.push_back(r_);
            }
            return;
        }
        std::vector<int> order, colors;
        color_sort(sg_, P, order, colors);
        Words rest = P;
        Words next(sg_.words);
        for (std::size_t i = order.size(); i-- > 0;) {
            const int v = order[i];
            const std::size_t bound = r_.size() + std::size_t(colors[i]);
            if (enumerate_ ? bound < omega_ : bound <= omega_) return;
            r_.push_back(v);
            and_rows(next, rest, sg_.row(v));
            expand(next);
            r_.pop_back();
            clear_bit(rest, std::size_t(v));
        }
    }

    const SearchGraph& sg_;
    const bool enumerate_;
    std::size_t omega_;
    TaskResult out_;
    std::vector<int> r_;
};

std::vector<std::size_t> map_to_original(const std::vector<int>& clique, const SearchGraph& sg) {
    std::vector<std::size_t> out;
    out.reserve(clique.size());
    for (int v : clique) out.push_back(sg.to_old[std::size_t(v)]);
    std::sort(out.begin(), out.end());
    return out;
}

CliqueReport solve(const CompatGraph& g, bool enumerate, unsigned threads) {
    CliqueReport rep;
    const std::size_t n = g.size();
    if (n == 0) return rep;

    const SearchGraph sg = reorder_by_degree(g);
    const std::vector<int> seed = greedy_clique(sg);
    const std::size_t omega0 = seed.size();

    // Top-level branches in processing order (highest color first), each
    // carrying the candidate set it would see in a sequential search.
    std::vector<int> order, colors;
    color_sort(sg, full_set(n, sg.words), order, colors);
    struct Task {
        int v;
        Words candidates;
    };
    std::vector<Task> tasks;
    Words rest = full_set(n, sg.words);
    for (std::size_t i = order.size(); i-- > 0;) {
        const std::size_t bound = std::size_t(colors[i]);
        if (enumerate ? bound < omega0 : bound <= omega0) break;
        Task t;
        t.v = order[i];
        t.candidates.resize(sg.words);
        and_rows(t.candidates, rest, sg.row(std::size_t(order[i])));
        tasks.push_back(std::move(t));
        clear_bit(rest, std::size_t(order[i]));
    }

    // Private bounds per task (seeded by the greedy clique, never shared):
    // every task explores the same tree no matter how tasks are scheduled,
    // so the merged report is identical for every thread count.
    std::vector<TaskResult> results(tasks.size());
    auto run_task = [&](std::size_t k) {
        Searcher s(sg, enumerate, omega0);
        s.run(tasks[k].v, tasks[k].candidates);
        results[k] = s.take();
    };
    const std::size_t worker_count =
        std::min<std::size_t>(std::max(1u, threads), tasks.empty() ? 1 : tasks.size());
    if (worker_count <= 1) {
        for (std::size_t k = 0; k < tasks.size(); ++k) run_task(k);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(worker_count);
        for (std::size_t w = 0; w < worker_count; ++w)
            pool.emplace_back([&] {
                for (;;) {
                    const std::size_t k = next.fetch_add(1);
                    if (k >= tasks.size()) return;
                    run_task(k);
                }
            });
        for (auto& th : pool) th.join();
    }

    rep.node_count = 1;  // root
    for (const auto& r : results) rep.node_count += r.nodes;

    if (!enumerate) {
        std::size_t omega = omega0;
        std::vector<int> best = seed;
        for (const auto& r : results)
            if (r.omega > omega) {
                omega = r.omega;
                best = r.best;
            }
        rep.omega = omega;
        rep.witnesses.push_back(map_to_original(best, sg));
    } else {
        std::size_t omega = omega0;
        for (const auto& r : results) omega = std::max(omega, r.omega);
        for (const auto& r : results)
            if (r.omega == omega)
                for (const auto& clique : r.found)
                    rep.witnesses.push_back(map_to_original(clique, sg));
        if (rep.witnesses.empty()) rep.witnesses.push_back(map_to_original(seed, sg));
        rep.omega = omega;
        std::sort(rep.witnesses.begin(), rep.witnesses.end());
    }
    verify_witnesses(g, rep);
    return rep;
}

} // namespace

void verify_witnesses(const CompatGraph& g, const CliqueReport& rep) {
    for (const auto& w : rep.witnesses) {
        if (w.size() != rep.omega)
            throw std::logic_error("witness size disagrees with omega");
        for (std::size_t i = 0; i < w.size(); ++i)
            for (std::size_t j = i + 1; j < w.size(); ++j)
                if (!g.adjacent(w[i], w[j]))
                    throw std::logic_error("witness fails adjacency recheck");
    }
}

CliqueReport max_clique(const CompatGraph& g, unsigned threads) {
    return solve(g, false, threads);
}

CliqueReport all_max_cliques(const CompatGraph& g, unsigned threads) {
    return solve(g, true, threads);
}

CliqueReport brute_force_max_cliques(const CompatGraph& g) {
    const std::size_t n = g.size();
    if (n > 24) throw TooLarge("brute-force clique oracle limited to 24 vertices");
    CliqueReport rep;
    if (n == 0) return rep;
    std::vector<std::uint32_t> adj(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (g.adjacent(i, j)) adj[i] |= std::uint32_t(1) << j;
    int best = 0;
    std::vector<std::uint32_t> winners;
    const std::uint32_t limit = std::uint32_t(1) << n;
    for (std::uint32_t mask = 1; mask < limit; ++mask) {
        const int size = std::popcount(mask);
        if (size < best) continue;
        bool clique = true;
        for (std::uint32_t m = mask; m; m &= m - 1) {
            const int v = std::countr_zero(m);
            if (mask & ~adj[v] & ~(std::uint32_t(1) << v)) {
                clique = false;
                break;
            }
        }
        if (!clique) continue;
        if (size > best) {
            best = size;
            winners.clear();
        }
        winners.push_back(mask);
    }
    rep.omega = std::size_t(best);
    rep.node_count = limit - 1;
    for (std::uint32_t mask : winners) {
        std::vector<std::size_t> w;
        for (std::uint32_t m = mask; m; m &= m - 1) w.push_back(std::size_t(std::countr_zero(m)));
        rep.witnesses.push_back(std::move(w));
    }
    std::sort(rep.witnesses.begin(), rep.witnesses.end());
    return rep;
}

namespace {

void check_witness_clique(const CompatGraph& g, const std::vector<std::size_t>& witness) {
    for (std::size_t idx : witness)
        if (idx >= g.size()) throw std::invalid_argument("witness index out of range");
    for (std::size_t i = 0; i < witness.size(); ++i)
        for (std::size_t j = i + 1; j < witness.size(); ++j)
            if (!g.adjacent(witness[i], witness[j]))
                throw std::invalid_argument("witness is not a clique");
}

} // namespace

Arrangement assemble_arrangement(const CompatGraph& g, const std::vector<std::size_t>& witness,
                                 const Cloud& cloud) {
    if (g.size() != cloud.size())
        throw std::invalid_argument("graph and cloud sizes disagree");
    check_witness_clique(g, witness);
    const Basis& basis = cloud.basis();
    const Rational half(1, 2);
    std::vector<ExplicitVector> vectors = basis.rows();
    for (std::size_t idx : witness) {
        const SpanVector& u = cloud[idx];
        // <member, B_i> recovers t_i exactly, so compatibility with the
        // basis rows is a bound on the tuple entries.
        for (std::size_t i = 0; i < u.t.size(); ++i)
            if (u.t[i] > half)
                throw IncompatibleWithBasis("cloud member " + std::to_string(idx) +
                                            " vs basis row " + std::to_string(i) +
                                            ": inner product " + u.t[i].str());
        vectors.push_back(materialize_explicit(u, basis));
    }
    return Arrangement(basis.coord_dim(), std::move(vectors));
}

Arrangement assemble_arrangement(const CompatGraph& g, const std::vector<std::size_t>& witness,
                                 const Arrangement& source) {
    if (g.size() != source.size())
        throw std::invalid_argument("graph and vector list sizes disagree");
    check_witness_clique(g, witness);
    std::vector<ExplicitVector> vectors;
    vectors.reserve(witness.size());
    for (std::size_t idx : witness) vectors.push_back(source[idx]);
    return Arrangement(source.dim(), std::move(vectors));
}

std::string bound_statement(std::size_t ambient_dim, std::size_t span_dim,
                            std::size_t clique_size) {
    std::string out = "tau(" + std::to_string(ambient_dim) + ") >= ";
    if (span_dim == 0) return out + std::to_string(clique_size);
    return out + std::to_string(span_dim) + " + " + std::to_string(clique_size) + " = " +
           std::to_string(span_dim + clique_size);
}

} // namespace kiss
