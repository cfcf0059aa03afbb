#ifndef heaps_chromatic_hpp
#define heaps_chromatic_hpp

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "heaps/bijection.hpp"
#include "heaps/checked.hpp"
#include "heaps/error.hpp"
#include "heaps/graph.hpp"
#include "heaps/heap.hpp"
#include "heaps/polynomial.hpp"
#include "heaps/rack.hpp"

namespace heaps {

// Unsigned Stirling numbers of the first kind |s(k, r)| for 0 <= r <= k <= K.
class StirlingTable {
public:
    explicit StirlingTable(std::size_t max_k) : table_(max_k + 1) {
        table_[0] = {1};
        for (std::size_t k = 1; k <= max_k; ++k) {
            table_[k].assign(k + 1, 0);
            for (std::size_t r = 1; r <= k; ++r) {
                std::int64_t stay = r < k ? checked_mul<std::int64_t>(static_cast<std::int64_t>(k - 1), table_[k - 1][r]) : 0;
                table_[k][r] = checked_add(table_[k - 1][r - 1], stay);
            }
        }
    }

    std::size_t max_k() const noexcept { return table_.size() - 1; }

    // |s(k, r)|, zero outside 0 <= r <= k
    std::int64_t unsigned_at(std::size_t k, std::size_t r) const {
        if (k > max_k()) {
            throw std::out_of_range("Stirling table only reaches k = " + std::to_string(max_k()));
        }
        return r <= k ? table_[k][r] : 0;
    }

    // s(k, r) = (-1)^(k-r) |s(k, r)|
    std::int64_t signed_at(std::size_t k, std::size_t r) const {
        return sign_pow(static_cast<std::int64_t>(k) - static_cast<std::int64_t>(r)) * unsigned_at(k, r);
    }

private:
    std::vector<std::vector<std::int64_t>> table_;
};

inline std::int64_t acyclic_orientation_count(const Graph& g, const Limits& limits = {}) {
    std::int64_t count = 0;
    for_each_orientation(g, [&](const Orientation& o) { count += is_acyclic(g, o); }, limits);
    return count;
}

// Acyclic orientations whose only source is v, by brute force.
inline std::int64_t unique_source_count(const Graph& g, Vertex v, const Limits& limits = {}) {
    if (v >= g.size()) {
        throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
    }
    std::int64_t count = 0;
    for_each_orientation(g, [&](const Orientation& o) { count += unique_source_at(g, o, v); }, limits);
    return count;
}

// sums[k] = total number of k-layer racks over all multilinear heaps of g
inline std::vector<std::int64_t> multilinear_rack_sums(const Graph& g, const Limits& limits = {}) {
    std::vector<std::int64_t> sums(g.size() + 1, 0);
    for (const Heap& h : enumerate_multilinear_heaps(g, limits)) {
        auto hist = beta_histogram(h, limits);
        for (std::size_t k = 0; k < hist.size(); ++k) {
            sums[k] = checked_add(sums[k], hist[k]);
        }
    }
    return sums;
}

// Sum over multilinear heaps F and k of beta_F(k) * lambda(lambda-1)...(lambda-k+1) / k!.
// The k! division is exact: racks with k layers are the k! orderings of the
// partitions of V into k independent sets.
inline IntPolynomial chromatic_via_racks(const Graph& g, const Limits& limits = {}) {
    auto sums = multilinear_rack_sums(g, limits);
    IntPolynomial out;
    for (std::size_t k = 0; k < sums.size(); ++k) {
        std::int64_t fact = factorial(static_cast<unsigned>(k));
        if (sums[k] % fact != 0) {
            throw std::logic_error("rack count " + std::to_string(sums[k]) + " with " + std::to_string(k) +
                                   " layers is not divisible by " + std::to_string(k) + "!");
        }
        out += IntPolynomial::falling_factorial(static_cast<unsigned>(k)) * IntPolynomial::constant(sums[k] / fact);
    }
    return out;
}

// Pairs (sigma: V -> {1..lambda}, acyclic orientation) with sigma(u) > sigma(v)
// (strict) or sigma(u) >= sigma(v) (weak) along every arc u -> v.
inline std::int64_t count_compatible_pairs(const Graph& g, std::int64_t lambda, bool strict,
                                           const Limits& limits = {}) {
    if (lambda < 0) {
        throw InvalidArgument("negative number of colours");
    }
    const std::size_t n = g.size();
    std::uint64_t maps = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (__builtin_mul_overflow(maps, static_cast<std::uint64_t>(lambda), &maps)) {
            maps = ~std::uint64_t(0);
            break;
        }
    }
    std::uint64_t space;
    if (g.edge_count() >= 64 || __builtin_mul_overflow(maps, std::uint64_t(1) << g.edge_count(), &space) ||
        space > limits.max_pair_space) {
        throw GuardError(std::to_string(lambda) + "^" + std::to_string(n) + " * 2^" +
                         std::to_string(g.edge_count()) + " pairs exceed the limit of " +
                         std::to_string(limits.max_pair_space));
    }
    std::vector<std::pair<Vertex, Vertex>> arcs(g.edge_count());
    std::vector<std::int64_t> sigma(n, 0);
    std::int64_t count = 0;
    for_each_orientation(g, [&](const Orientation& o) {
        if (!is_acyclic(g, o)) {
            return;
        }
        for (std::size_t i = 0; i < g.edge_count(); ++i) {
            arcs[i] = arc(g, o, i);
        }
        for (std::uint64_t code = 0; code < maps; ++code) {
            std::uint64_t rest = code;
            for (std::size_t i = 0; i < n; ++i) {
                sigma[i] = static_cast<std::int64_t>(rest % static_cast<std::uint64_t>(lambda)) + 1;
                rest /= static_cast<std::uint64_t>(lambda);
            }
            bool ok = true;
            for (auto [from, to] : arcs) {
                if (strict ? sigma[from] <= sigma[to] : sigma[from] < sigma[to]) {
                    ok = false;
                    break;
                }
            }
            count += ok;
        }
    }, limits);
    return count;
}

// Sum over multilinear heaps F and j of b_F(j) * C(lambda, j).
inline std::int64_t chromatic_bar(const Graph& g, std::int64_t lambda, const Limits& limits = {}) {
    if (lambda < 0) {
        throw InvalidArgument("negative number of colours");
    }
    std::int64_t total = 0;
    for (const Heap& h : enumerate_multilinear_heaps(g, limits)) {
        auto hist = factorisation_histogram(h, limits);
        for (std::size_t j = 0; j < hist.size(); ++j) {
            total = checked_add(total, checked_mul(hist[j], binomial(lambda, static_cast<std::int64_t>(j))));
        }
    }
    return total;
}

// Counts built from pi_G(k), the number of partitions of V into k independent
// sets, and the Stirling numbers of the first kind. Both tables are computed
// once per graph.
class CoefficientTables {
public:
    explicit CoefficientTables(const Graph& g, const Limits& limits = {}) : graph_(g), stirling_(g.size()) {
        if (g.size() > limits.max_vertices) {
            throw GuardError(std::to_string(g.size()) + " vertices exceed the limit of " +
                             std::to_string(limits.max_vertices));
        }
        for (std::size_t k = 0; k <= g.size(); ++k) {
            pi_.push_back(count_independent_partitions(g, k));
        }
    }

    const StirlingTable& stirling() const noexcept { return stirling_; }

    std::int64_t pi(std::size_t k) const { return k < pi_.size() ? pi_[k] : 0; }

    // r-keychains of size k: pi_G(k) |s(k, r)|
    std::int64_t keychain_count(std::size_t k, std::size_t r) const {
        if (r > k || k > graph_.size()) {
            throw InvalidArgument("keychain_count needs r <= k <= n");
        }
        return checked_mul(pi(k), stirling_.unsigned_at(k, r));
    }

    // chains (cyclically ordered independent partitions) with k blocks: pi_G(k) (k-1)!
    std::int64_t delta_chains(std::size_t k) const {
        if (k > graph_.size()) {
            throw InvalidArgument("delta_chains needs k <= n");
        }
        if (k == 0) {
            return 0;
        }
        return checked_mul(pi(k), factorial(static_cast<unsigned>(k - 1)));
    }

    // lambda^r coefficient: sum over k of (-1)^(k-r) pi_G(k) |s(k, r)|
    std::int64_t coefficient_a(std::size_t r) const {
        if (r > graph_.size()) {
            throw InvalidArgument("coefficient index " + std::to_string(r) + " exceeds n = " +
                                  std::to_string(graph_.size()));
        }
        std::int64_t total = 0;
        for (std::size_t k = r; k <= graph_.size(); ++k) {
            std::int64_t term = keychain_count(k, r);
            total = checked_add(total, sign_pow(static_cast<std::int64_t>(k - r)) * term);
        }
        return total;
    }

private:
    Graph graph_;
    StirlingTable stirling_;
    std::vector<std::int64_t> pi_;
};

inline std::int64_t coefficient_a(const Graph& g, std::size_t r, const Limits& limits = {}) {
    return CoefficientTables(g, limits).coefficient_a(r);
}

inline std::int64_t keychain_count(const Graph& g, std::size_t k, std::size_t r, const Limits& limits = {}) {
    return CoefficientTables(g, limits).keychain_count(k, r);
}

inline std::int64_t delta_chains(const Graph& g, std::size_t k, const Limits& limits = {}) {
    return CoefficientTables(g, limits).delta_chains(k);
}

// k-layer racks of multilinear heaps whose bottom layer holds the largest vertex.
inline std::int64_t lower_special_rack_count(const Graph& g, std::size_t k, const Limits& limits = {}) {
    std::int64_t count = 0;
    for (const Heap& h : enumerate_multilinear_heaps(g, limits)) {
        for_each_rack(h, [&](const Rack& t) { count += t.layer_count() == k && is_lower_special(t); }, limits);
    }
    return count;
}

namespace detail {

// Per induced block: acyclic orientations with a unique source at the
// block's largest vertex under g's order.
class BlockSourceCounts {
public:
    BlockSourceCounts(const Graph& g, const Limits& limits) : graph_(g), limits_(limits) {}

    std::int64_t operator()(VertexMask block) {
        if (auto it = memo_.find(block); it != memo_.end()) {
            return it->second;
        }
        InducedSubgraph sub = induced_subgraph(graph_, block);
        Vertex top = sub.graph.max_vertex(sub.graph.all_vertices());
        std::int64_t count = unique_source_count(sub.graph, top, limits_);
        memo_.emplace(block, count);
        return count;
    }

private:
    const Graph& graph_;
    Limits limits_;
    std::unordered_map<VertexMask, std::int64_t> memo_;
};

inline void check_vertex_guard(const Graph& g, const Limits& limits) {
    if (g.size() > limits.max_vertices) {
        throw GuardError(std::to_string(g.size()) + " vertices exceed the limit of " +
                         std::to_string(limits.max_vertices));
    }
}

}

// Sum over unordered partitions of V into r nonempty blocks of the product,
// over blocks, of the number of acyclic orientations of the induced subgraph
// with a unique source at the block's largest vertex.
inline std::int64_t theorem61_count(const Graph& g, std::size_t r, const Limits& limits = {}) {
    detail::check_vertex_guard(g, limits);
    if (r > g.size() || (r == 0 && g.size() > 0)) {
        throw InvalidArgument("partition size must satisfy 1 <= r <= n");
    }
    detail::BlockSourceCounts counts(g, limits);
    std::int64_t total = 0;
    for_each_set_partition(
        g.all_vertices(), r, [](VertexMask, Vertex) { return true; },
        [&](std::span<const VertexMask> blocks) {
            std::int64_t product = 1;
            for (VertexMask b : blocks) {
                product = checked_mul(product, counts(b));
                if (product == 0) {
                    break;
                }
            }
            total = checked_add(total, product);
        });
    return total;
}

// Partitions into r blocks where every block admits at least one such
// orientation (existence reading, reported alongside the pair count).
inline std::int64_t theorem61_partition_count(const Graph& g, std::size_t r, const Limits& limits = {}) {
    detail::check_vertex_guard(g, limits);
    if (r > g.size() || (r == 0 && g.size() > 0)) {
        throw InvalidArgument("partition size must satisfy 1 <= r <= n");
    }
    detail::BlockSourceCounts counts(g, limits);
    std::int64_t total = 0;
    for_each_set_partition(
        g.all_vertices(), r, [](VertexMask, Vertex) { return true; },
        [&](std::span<const VertexMask> blocks) {
            bool all = true;
            for (VertexMask b : blocks) {
                all = all && counts(b) > 0;
            }
            total += all;
        });
    return total;
}

}

#endif /* heaps_chromatic_hpp */
