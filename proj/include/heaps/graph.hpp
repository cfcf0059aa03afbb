#ifndef heaps_graph_hpp
#define heaps_graph_hpp

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "heaps/checked.hpp"
#include "heaps/error.hpp"
#include "heaps/polynomial.hpp"

namespace heaps {

using Vertex = std::uint32_t;
// Vertex subsets are bitmasks, which caps graphs at 64 vertices.
using VertexMask = std::uint64_t;

inline constexpr std::size_t kMaxVertices = 64;

inline VertexMask bit(Vertex v) { return VertexMask(1) << v; }

inline std::vector<Vertex> mask_to_vertices(VertexMask mask) {
    std::vector<Vertex> out;
    while (mask) {
        out.push_back(static_cast<Vertex>(std::countr_zero(mask)));
        mask &= mask - 1;
    }
    return out;
}

inline VertexMask vertices_to_mask(std::span<const Vertex> vs) {
    VertexMask out = 0;
    for (Vertex v : vs) {
        out |= bit(v);
    }
    return out;
}

// Work limits for the exhaustive routines. Exceeding one is a GuardError.
struct Limits {
    std::size_t max_vertices = 10;
    // 2^m orientations
    std::size_t max_orientation_bits = 20;
    // lambda^n colourings
    std::uint64_t max_colorings = 10'000'000;
    // lambda^n * 2^m (sigma, orientation) pairs
    std::uint64_t max_pair_space = std::uint64_t(1) << 28;
    // occurrences in a heap whose racks or factorisations are enumerated
    std::size_t max_heap_pieces = 12;
};

struct Edge {
    Vertex u;
    Vertex v;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on 0..n-1 with a total order on its vertices.
// The order defaults to ascending id. Copies share immutable storage.
class Graph {
public:
    Graph() : Graph(0, {}) {}

    // Throws InvalidArgument on loops, duplicates, out-of-range endpoints
    // or an order that is not a permutation of 0..n-1.
    Graph(std::size_t n, std::vector<Edge> edges, std::vector<Vertex> order = {}) {
        if (n > kMaxVertices) {
            throw InvalidArgument("graphs are limited to " + std::to_string(kMaxVertices) + " vertices");
        }
        auto data = std::make_shared<Data>();
        data->n = n;
        data->adjacency.assign(n, 0);
        for (Edge& e : edges) {
            if (e.u >= n || e.v >= n) {
                throw InvalidArgument("edge endpoint out of range");
            }
            if (e.u == e.v) {
                throw InvalidArgument("loop at vertex " + std::to_string(e.u));
            }
            if (e.u > e.v) {
                std::swap(e.u, e.v);
            }
            if (data->adjacency[e.u] & bit(e.v)) {
                throw InvalidArgument("duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
            }
            data->adjacency[e.u] |= bit(e.v);
            data->adjacency[e.v] |= bit(e.u);
        }
        std::sort(edges.begin(), edges.end());
        data->edges = std::move(edges);

        if (order.empty()) {
            order.resize(n);
            std::iota(order.begin(), order.end(), Vertex(0));
        }
        if (order.size() != n) {
            throw InvalidArgument("vertex order has the wrong length");
        }
        data->rank.assign(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            if (order[i] >= n || data->rank[order[i]] != n) {
                throw InvalidArgument("vertex order is not a permutation");
            }
            data->rank[order[i]] = i;
        }
        data->order = std::move(order);
        data_ = std::move(data);
    }

    std::size_t size() const noexcept { return data_->n; }
    std::size_t edge_count() const noexcept { return data_->edges.size(); }
    // sorted, each with u < v
    const std::vector<Edge>& edges() const noexcept { return data_->edges; }
    VertexMask all_vertices() const noexcept {
        return size() == 64 ? ~VertexMask(0) : bit(static_cast<Vertex>(size())) - 1;
    }

    VertexMask neighbors(Vertex v) const { return data_->adjacency.at(v); }
    bool adjacent(Vertex u, Vertex v) const { return neighbors(u) & bit(v); }
    // the dependency relation on pieces: adjacency plus reflexivity
    bool dependent(Vertex u, Vertex v) const { return u == v || adjacent(u, v); }
    VertexMask dependents(Vertex v) const { return neighbors(v) | bit(v); }

    std::optional<std::size_t> edge_index(Vertex u, Vertex v) const {
        if (u > v) {
            std::swap(u, v);
        }
        auto it = std::lower_bound(edges().begin(), edges().end(), Edge{u, v});
        if (it == edges().end() || *it != Edge{u, v}) {
            return std::nullopt;
        }
        return static_cast<std::size_t>(it - edges().begin());
    }

    // position of v in the total order (0 = smallest)
    std::size_t rank(Vertex v) const { return data_->rank.at(v); }
    // vertices listed smallest first
    const std::vector<Vertex>& order() const noexcept { return data_->order; }
    bool precedes(Vertex u, Vertex v) const { return rank(u) < rank(v); }
    bool has_identity_order() const {
        for (std::size_t i = 0; i < size(); ++i) {
            if (data_->order[i] != i) {
                return false;
            }
        }
        return true;
    }

    // largest vertex of a nonempty subset under the total order
    Vertex max_vertex(VertexMask subset) const {
        Vertex best = static_cast<Vertex>(std::countr_zero(subset));
        for (Vertex v : mask_to_vertices(subset)) {
            if (precedes(best, v)) {
                best = v;
            }
        }
        return best;
    }

    Vertex min_vertex(VertexMask subset) const {
        Vertex best = static_cast<Vertex>(std::countr_zero(subset));
        for (Vertex v : mask_to_vertices(subset)) {
            if (precedes(v, best)) {
                best = v;
            }
        }
        return best;
    }

    // same graph, vertices ordered order[0] < order[1] < ...
    Graph with_order(std::vector<Vertex> order) const {
        return Graph(size(), edges(), std::move(order));
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.data_ == b.data_ ||
               (a.data_->n == b.data_->n && a.data_->edges == b.data_->edges && a.data_->order == b.data_->order);
    }

    // edges only, ignoring the vertex order
    bool same_structure(const Graph& other) const {
        return size() == other.size() && edges() == other.edges();
    }

    std::string to_edge_list() const {
        std::string out = std::to_string(size()) + "\n";
        for (const Edge& e : edges()) {
            out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
        }
        return out;
    }

private:
    struct Data {
        std::size_t n = 0;
        std::vector<Edge> edges;
        std::vector<VertexMask> adjacency;
        std::vector<Vertex> order;
        std::vector<std::size_t> rank;
    };

    std::shared_ptr<const Data> data_;
};

namespace detail {

inline std::vector<std::string> split_ws(std::string_view line) {
    std::vector<std::string> out;
    std::istringstream in{std::string(line)};
    std::string tok;
    while (in >> tok) {
        out.push_back(tok);
    }
    return out;
}

inline std::optional<std::uint64_t> parse_uint(const std::string& tok) {
    if (tok.empty() || tok.size() > 18) {
        return std::nullopt;
    }
    std::uint64_t out = 0;
    for (char c : tok) {
        if (c < '0' || c > '9') {
            return std::nullopt;
        }
        out = out * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return out;
}

}

// Edge-list text: '#' comment lines, then n, then one "u v" per line.
// Blank lines are skipped.
inline Graph parse_edge_list(std::string_view text) {
    using Kind = ParseError::Kind;
    std::optional<std::size_t> n;
    std::vector<Edge> edges;
    std::vector<VertexMask> seen;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos || line[first] == '#') {
            continue;
        }
        auto toks = detail::split_ws(line);
        if (!n) {
            auto value = toks.size() == 1 ? detail::parse_uint(toks[0]) : std::nullopt;
            if (!value) {
                throw ParseError(Kind::Malformed, line_no, "expected vertex count, got '" + std::string(line) + "'");
            }
            if (*value > kMaxVertices) {
                throw ParseError(Kind::Malformed, line_no, "vertex count exceeds " + std::to_string(kMaxVertices));
            }
            n = *value;
            seen.assign(*n, 0);
            continue;
        }
        if (toks.size() != 2) {
            throw ParseError(Kind::Malformed, line_no, "expected 'u v', got '" + std::string(line) + "'");
        }
        auto u = detail::parse_uint(toks[0]);
        auto v = detail::parse_uint(toks[1]);
        if (!u || !v) {
            throw ParseError(Kind::Malformed, line_no, "non-numeric vertex in '" + std::string(line) + "'");
        }
        if (*u >= *n || *v >= *n) {
            throw ParseError(Kind::VertexOutOfRange, line_no,
                             "edge " + toks[0] + " " + toks[1] + " with n = " + std::to_string(*n));
        }
        if (*u == *v) {
            throw ParseError(Kind::Loop, line_no, "loop at vertex " + toks[0]);
        }
        if (seen[*u] & bit(static_cast<Vertex>(*v))) {
            throw ParseError(Kind::DuplicateEdge, line_no, "edge " + toks[0] + " " + toks[1]);
        }
        seen[*u] |= bit(static_cast<Vertex>(*v));
        seen[*v] |= bit(static_cast<Vertex>(*u));
        edges.push_back({static_cast<Vertex>(*u), static_cast<Vertex>(*v)});
    }
    if (!n) {
        throw ParseError(Kind::Malformed, 0, "missing vertex count");
    }
    return Graph(*n, std::move(edges));
}

// "p0 p1 ... p(n-1)": p0 is the smallest vertex, p(n-1) the largest
inline std::vector<Vertex> parse_order(std::string_view text, std::size_t n) {
    std::vector<Vertex> order;
    std::vector<bool> used(n, false);
    for (const auto& tok : detail::split_ws(text)) {
        auto v = detail::parse_uint(tok);
        if (!v || *v >= n || used[*v]) {
            throw ParseError(ParseError::Kind::BadOrder, 0, "'" + std::string(text) + "' is not a permutation of 0.." +
                                                                std::to_string(n == 0 ? 0 : n - 1));
        }
        used[*v] = true;
        order.push_back(static_cast<Vertex>(*v));
    }
    if (order.size() != n) {
        throw ParseError(ParseError::Kind::BadOrder, 0, "expected " + std::to_string(n) + " vertices in order");
    }
    return order;
}

struct InducedSubgraph {
    Graph graph;
    // original id of each vertex of graph
    std::vector<Vertex> original;
};

// Vertices keep their relative order, both by id and under g's total order.
inline InducedSubgraph induced_subgraph(const Graph& g, VertexMask vs) {
    if (vs & ~g.all_vertices()) {
        throw InvalidArgument("induced subgraph vertex out of range");
    }
    InducedSubgraph out;
    out.original = mask_to_vertices(vs);
    std::vector<Vertex> local(g.size(), 0);
    for (std::size_t i = 0; i < out.original.size(); ++i) {
        local[out.original[i]] = static_cast<Vertex>(i);
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        if ((vs & bit(e.u)) && (vs & bit(e.v))) {
            edges.push_back({local[e.u], local[e.v]});
        }
    }
    std::vector<Vertex> order;
    for (Vertex v : g.order()) {
        if (vs & bit(v)) {
            order.push_back(local[v]);
        }
    }
    out.graph = Graph(out.original.size(), std::move(edges), std::move(order));
    return out;
}

inline bool is_independent(const Graph& g, VertexMask vs) {
    for (Vertex v : mask_to_vertices(vs)) {
        if (g.neighbors(v) & vs) {
            return false;
        }
    }
    return true;
}

inline bool is_independent(const Graph& g, std::span<const Vertex> vs) {
    for (Vertex v : vs) {
        if (v >= g.size()) {
            throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
        }
    }
    return is_independent(g, vertices_to_mask(vs));
}

// forward[i] means edges()[i].u -> edges()[i].v, otherwise v -> u
struct Orientation {
    std::vector<bool> forward;

    friend bool operator==(const Orientation&, const Orientation&) = default;
    friend auto operator<=>(const Orientation& a, const Orientation& b) {
        return std::lexicographical_compare_three_way(a.forward.begin(), a.forward.end(), b.forward.begin(),
                                                      b.forward.end());
    }
};

inline std::pair<Vertex, Vertex> arc(const Graph& g, const Orientation& o, std::size_t edge) {
    const Edge& e = g.edges()[edge];
    return o.forward[edge] ? std::pair{e.u, e.v} : std::pair{e.v, e.u};
}

inline Orientation orientation_from_arcs(const Graph& g, std::span<const std::pair<Vertex, Vertex>> arcs) {
    Orientation o{std::vector<bool>(g.edge_count(), false)};
    std::vector<bool> covered(g.edge_count(), false);
    for (auto [from, to] : arcs) {
        auto idx = (from < g.size() && to < g.size()) ? g.edge_index(from, to) : std::nullopt;
        if (!idx) {
            throw InvalidArgument("arc " + std::to_string(from) + " > " + std::to_string(to) + " is not an edge");
        }
        if (covered[*idx]) {
            throw InvalidArgument("edge oriented twice");
        }
        covered[*idx] = true;
        o.forward[*idx] = from < to;
    }
    if (std::find(covered.begin(), covered.end(), false) != covered.end()) {
        throw InvalidArgument("orientation does not cover every edge");
    }
    return o;
}

// one "u > v" line per arc, in edge order
inline std::string format_orientation(const Graph& g, const Orientation& o) {
    std::string out;
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        auto [from, to] = arc(g, o, i);
        out += std::to_string(from) + " > " + std::to_string(to) + "\n";
    }
    return out;
}

inline Orientation parse_orientation(const Graph& g, std::string_view text) {
    std::vector<std::pair<Vertex, Vertex>> arcs;
    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        auto toks = detail::split_ws(line);
        if (toks.empty()) {
            continue;
        }
        auto u = toks.size() == 3 ? detail::parse_uint(toks[0]) : std::nullopt;
        auto v = toks.size() == 3 ? detail::parse_uint(toks[2]) : std::nullopt;
        if (!u || !v || toks[1] != ">") {
            throw ParseError(ParseError::Kind::Malformed, line_no, "expected 'u > v', got '" + line + "'");
        }
        if (*u >= g.size() || *v >= g.size()) {
            throw ParseError(ParseError::Kind::VertexOutOfRange, line_no, line);
        }
        arcs.emplace_back(static_cast<Vertex>(*u), static_cast<Vertex>(*v));
    }
    return orientation_from_arcs(g, arcs);
}

// vertices with no incoming arc
inline VertexMask sources(const Graph& g, const Orientation& o) {
    VertexMask has_in = 0;
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        has_in |= bit(arc(g, o, i).second);
    }
    return g.all_vertices() & ~has_in;
}

// Kahn's algorithm
inline bool is_acyclic(const Graph& g, const Orientation& o) {
    std::vector<VertexMask> in(g.size(), 0);
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        auto [from, to] = arc(g, o, i);
        in[to] |= bit(from);
    }
    VertexMask remaining = g.all_vertices();
    bool progress = true;
    while (remaining && progress) {
        progress = false;
        for (Vertex v : mask_to_vertices(remaining)) {
            if ((in[v] & remaining) == 0) {
                remaining &= ~bit(v);
                progress = true;
            }
        }
    }
    return remaining == 0;
}

inline void check_orientation_guard(const Graph& g, const Limits& limits) {
    if (g.edge_count() > limits.max_orientation_bits) {
        throw GuardError("2^" + std::to_string(g.edge_count()) + " orientations exceed the limit of 2^" +
                         std::to_string(limits.max_orientation_bits));
    }
}

// Visits all 2^m orientations; the i-th visited has edge j reversed iff bit j of i is set.
template<class Fn>
void for_each_orientation(const Graph& g, Fn&& fn, const Limits& limits = {}) {
    check_orientation_guard(g, limits);
    const std::size_t m = g.edge_count();
    Orientation o{std::vector<bool>(m, true)};
    for (std::uint64_t code = 0; code < (std::uint64_t(1) << m); ++code) {
        for (std::size_t j = 0; j < m; ++j) {
            o.forward[j] = !((code >> j) & 1);
        }
        fn(static_cast<const Orientation&>(o));
    }
}

inline std::vector<Orientation> enumerate_orientations(const Graph& g, const Limits& limits = {}) {
    std::vector<Orientation> out;
    for_each_orientation(g, [&](const Orientation& o) { out.push_back(o); }, limits);
    return out;
}

inline std::vector<Orientation> acyclic_orientations(const Graph& g, const Limits& limits = {}) {
    std::vector<Orientation> out;
    for_each_orientation(g, [&](const Orientation& o) {
        if (is_acyclic(g, o)) {
            out.push_back(o);
        }
    }, limits);
    return out;
}

// Set partitions of the elements of `universe` into exactly k nonempty blocks,
// visited in restricted-growth-string order (elements taken by ascending id).
// `admits(block, v)` decides whether v may join a block; rejected branches are pruned.
template<class Admits, class Fn>
void for_each_set_partition(VertexMask universe, std::size_t k, Admits&& admits, Fn&& fn) {
    const std::vector<Vertex> elems = mask_to_vertices(universe);
    if (k > elems.size() || (k == 0 && !elems.empty())) {
        return;
    }
    std::vector<VertexMask> blocks;
    blocks.reserve(k);
    auto recurse = [&](auto&& self, std::size_t i) -> void {
        if (elems.size() - i < k - blocks.size()) {
            return;
        }
        if (i == elems.size()) {
            fn(std::span<const VertexMask>(blocks));
            return;
        }
        Vertex v = elems[i];
        for (auto& block : blocks) {
            if (admits(block, v)) {
                block |= bit(v);
                self(self, i + 1);
                block &= ~bit(v);
            }
        }
        if (blocks.size() < k) {
            blocks.push_back(bit(v));
            self(self, i + 1);
            blocks.pop_back();
        }
    };
    recurse(recurse, 0);
}

using SetPartition = std::vector<std::vector<Vertex>>;

// Unordered partitions of V into exactly k nonempty independent sets.
template<class Fn>
void for_each_independent_partition(const Graph& g, std::size_t k, Fn&& fn) {
    for_each_set_partition(
        g.all_vertices(), k, [&](VertexMask block, Vertex v) { return (g.neighbors(v) & block) == 0; },
        std::forward<Fn>(fn));
}

inline std::vector<SetPartition> independent_partitions(const Graph& g, std::size_t k) {
    std::vector<SetPartition> out;
    for_each_independent_partition(g, k, [&](std::span<const VertexMask> blocks) {
        SetPartition p;
        for (VertexMask b : blocks) {
            p.push_back(mask_to_vertices(b));
        }
        out.push_back(std::move(p));
    });
    return out;
}

inline std::int64_t count_independent_partitions(const Graph& g, std::size_t k) {
    std::int64_t count = 0;
    for_each_independent_partition(g, k, [&](std::span<const VertexMask>) { ++count; });
    return count;
}

// Counts all lambda^n maps V -> {1..lambda} that are proper colourings.
inline std::int64_t count_colorings(const Graph& g, std::int64_t lambda, const Limits& limits = {}) {
    if (lambda < 0) {
        throw InvalidArgument("negative number of colours");
    }
    const std::size_t n = g.size();
    if (n == 0) {
        return 1;
    }
    if (lambda == 0) {
        return 0;
    }
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (__builtin_mul_overflow(total, static_cast<std::uint64_t>(lambda), &total) || total > limits.max_colorings) {
            throw GuardError(std::to_string(lambda) + "^" + std::to_string(n) + " colourings exceed the limit of " +
                             std::to_string(limits.max_colorings));
        }
    }
    std::vector<std::int64_t> colour(n, 0);
    std::int64_t count = 0;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t rest = code;
        for (std::size_t i = 0; i < n; ++i) {
            colour[i] = static_cast<std::int64_t>(rest % static_cast<std::uint64_t>(lambda));
            rest /= static_cast<std::uint64_t>(lambda);
        }
        bool proper = true;
        for (const Edge& e : g.edges()) {
            if (colour[e.u] == colour[e.v]) {
                proper = false;
                break;
            }
        }
        count += proper;
    }
    return count;
}

namespace detail {

class DeletionContraction {
public:
    IntPolynomial run(VertexMask alive, std::vector<VertexMask> adjacency) {
        Vertex u = 0;
        VertexMask nbrs = 0;
        for (Vertex v : mask_to_vertices(alive)) {
            if (adjacency[v] & alive) {
                u = v;
                nbrs = adjacency[v] & alive;
                break;
            }
        }
        if (!nbrs) {
            std::vector<std::int64_t> coeffs(std::popcount(alive) + 1, 0);
            coeffs.back() = 1;
            return IntPolynomial(std::move(coeffs));
        }

        std::vector<VertexMask> key(adjacency);
        key.push_back(alive);
        if (auto it = memo_.find(key); it != memo_.end()) {
            return it->second;
        }

        Vertex v = static_cast<Vertex>(std::countr_zero(nbrs));

        std::vector<VertexMask> deleted(adjacency);
        deleted[u] &= ~bit(v);
        deleted[v] &= ~bit(u);

        // merge v into u
        std::vector<VertexMask> contracted(deleted);
        for (Vertex w : mask_to_vertices(contracted[v] & alive)) {
            contracted[w] = (contracted[w] & ~bit(v)) | bit(u);
            contracted[u] |= bit(w);
        }
        contracted[v] = 0;

        IntPolynomial out = run(alive, std::move(deleted)) - run(alive & ~bit(v), std::move(contracted));
        memo_.emplace(std::move(key), out);
        return out;
    }

private:
    std::map<std::vector<VertexMask>, IntPolynomial> memo_;
};

}

// Chromatic polynomial by deletion-contraction, independent of heaps.
inline IntPolynomial chromatic_oracle(const Graph& g, const Limits& limits = {}) {
    if (g.size() > limits.max_vertices) {
        throw GuardError(std::to_string(g.size()) + " vertices exceed the limit of " +
                         std::to_string(limits.max_vertices));
    }
    std::vector<VertexMask> adjacency(g.size());
    for (Vertex v = 0; v < g.size(); ++v) {
        adjacency[v] = g.neighbors(v);
    }
    return detail::DeletionContraction{}.run(g.all_vertices(), std::move(adjacency));
}

}

#endif /* heaps_graph_hpp */
