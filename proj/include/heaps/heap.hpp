#ifndef heaps_heap_hpp
#define heaps_heap_hpp

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "heaps/error.hpp"
#include "heaps/graph.hpp"

namespace heaps {

// A piece of a heap: the index-th occurrence of a vertex, counted from the bottom.
// Occurrences of one vertex are totally ordered since every vertex depends on itself.
struct Occurrence {
    Vertex vertex;
    std::size_t index;

    friend auto operator<=>(const Occurrence&, const Occurrence&) = default;
};

// A heap of pieces over the dependency relation of a graph, stored as its
// geometric (level) representation. Level 0 is the bottom, each level is
// sorted by vertex id. The levels are exactly the Cartier-Foata blocks, so two
// heaps are equal iff their level sequences are.
class Heap {
public:
    Heap() = default;
    explicit Heap(Graph graph) : graph_(std::move(graph)) {}

    // Validates the geometric conditions: no two dependent pieces share a
    // level, and every piece above level 0 rests on a dependent piece.
    static Heap from_levels(Graph graph, std::vector<std::vector<Vertex>> levels) {
        Heap out(std::move(graph));
        const Graph& g = out.graph_;
        VertexMask below = 0;
        for (std::size_t i = 0; i < levels.size(); ++i) {
            auto& level = levels[i];
            if (level.empty()) {
                throw InvalidArgument("empty level " + std::to_string(i));
            }
            std::sort(level.begin(), level.end());
            VertexMask mask = 0;
            for (Vertex v : level) {
                if (v >= g.size()) {
                    throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
                }
                if (g.dependents(v) & mask) {
                    throw InvalidArgument("dependent pieces share level " + std::to_string(i));
                }
                mask |= bit(v);
                if (i > 0 && (g.dependents(v) & below) == 0) {
                    throw InvalidArgument("piece " + std::to_string(v) + " at level " + std::to_string(i) +
                                          " has no dependent piece below it");
                }
            }
            below = mask;
        }
        out.levels_ = std::move(levels);
        return out;
    }

    const Graph& graph() const noexcept { return graph_; }
    const std::vector<std::vector<Vertex>>& levels() const noexcept { return levels_; }
    bool empty() const noexcept { return levels_.empty(); }

    // total number of pieces
    std::size_t size() const noexcept {
        std::size_t n = 0;
        for (const auto& level : levels_) {
            n += level.size();
        }
        return n;
    }

    VertexMask support() const noexcept {
        VertexMask out = 0;
        for (const auto& level : levels_) {
            for (Vertex v : level) {
                out |= bit(v);
            }
        }
        return out;
    }

    std::vector<std::size_t> multiplicities() const {
        std::vector<std::size_t> out(graph_.size(), 0);
        for (const auto& level : levels_) {
            for (Vertex v : level) {
                ++out[v];
            }
        }
        return out;
    }

    // the levels read bottom to top; a word whose heap is this one
    std::vector<Vertex> word() const {
        std::vector<Vertex> out;
        for (const auto& level : levels_) {
            out.insert(out.end(), level.begin(), level.end());
        }
        return out;
    }

    // Heaps are compared by levels only; use heap_equals to also check graphs.
    friend bool operator==(const Heap& a, const Heap& b) { return a.levels_ == b.levels_ && a.graph_ == b.graph_; }
    friend auto operator<=>(const Heap& a, const Heap& b) { return a.levels_ <=> b.levels_; }

private:
    friend Heap heap_from_word(const Graph&, std::span<const Vertex>);

    Graph graph_;
    std::vector<std::vector<Vertex>> levels_;
};

// Drops each letter, left to right, onto the lowest level above every
// dependent piece already placed.
inline Heap heap_from_word(const Graph& g, std::span<const Vertex> word) {
    Heap out(g);
    // one past the highest occupied level of each vertex
    std::vector<std::size_t> top(g.size(), 0);
    for (Vertex v : word) {
        if (v >= g.size()) {
            throw InvalidArgument("vertex " + std::to_string(v) + " out of range for a graph on " +
                                  std::to_string(g.size()) + " vertices");
        }
        std::size_t level = top[v];
        for (Vertex u : mask_to_vertices(g.neighbors(v))) {
            level = std::max(level, top[u]);
        }
        if (level == out.levels_.size()) {
            out.levels_.emplace_back();
        }
        auto& slot = out.levels_[level];
        slot.insert(std::upper_bound(slot.begin(), slot.end(), v), v);
        top[v] = level + 1;
    }
    return out;
}

inline Heap heap_from_word(const Graph& g, std::initializer_list<Vertex> word) {
    return heap_from_word(g, std::span<const Vertex>(word.begin(), word.size()));
}

// Nonempty independent set as a one-level heap.
inline Heap trivial_heap(const Graph& g, VertexMask vs) {
    if (vs == 0 || (vs & ~g.all_vertices()) || !is_independent(g, vs)) {
        throw InvalidArgument("a trivial heap needs a nonempty independent set");
    }
    return heap_from_word(g, mask_to_vertices(vs));
}

inline bool same_graph(const Heap& a, const Heap& b) {
    return a.graph() == b.graph();
}

// a stacked below b
inline Heap multiply(const Heap& a, const Heap& b) {
    if (!same_graph(a, b)) {
        throw GraphMismatch();
    }
    std::vector<Vertex> word = a.word();
    std::vector<Vertex> top = b.word();
    word.insert(word.end(), top.begin(), top.end());
    return heap_from_word(a.graph(), word);
}

inline bool heap_equals(const Heap& a, const Heap& b) {
    if (!same_graph(a, b)) {
        throw GraphMismatch();
    }
    return a.levels() == b.levels();
}

inline std::vector<std::vector<Vertex>> cf_normal_form(const Heap& h) {
    return h.levels();
}

// Pieces of a heap with their levels and strict down-sets, indexed in the
// lexicographic order of the heap (repeatedly take the smallest minimal piece
// under the graph's total order). Index i is the piece's lexicographic number.
class HeapPoset {
public:
    explicit HeapPoset(const Heap& h) {
        const Graph& g = h.graph();
        struct Piece {
            Occurrence occ;
            std::size_t level;
        };
        std::vector<Piece> pieces;
        std::vector<std::size_t> seen(g.size(), 0);
        for (std::size_t lvl = 0; lvl < h.levels().size(); ++lvl) {
            for (Vertex v : h.levels()[lvl]) {
                pieces.push_back({{v, seen[v]++}, lvl});
            }
        }

        std::vector<bool> taken(pieces.size(), false);
        std::vector<std::size_t> order;
        order.reserve(pieces.size());
        for (std::size_t step = 0; step < pieces.size(); ++step) {
            std::size_t best = pieces.size();
            for (std::size_t i = 0; i < pieces.size(); ++i) {
                if (taken[i]) {
                    continue;
                }
                bool minimal = true;
                for (std::size_t j = 0; j < pieces.size() && minimal; ++j) {
                    minimal = taken[j] || pieces[j].level >= pieces[i].level ||
                              !g.dependent(pieces[j].occ.vertex, pieces[i].occ.vertex);
                }
                if (minimal && (best == pieces.size() || g.precedes(pieces[i].occ.vertex, pieces[best].occ.vertex))) {
                    best = i;
                }
            }
            taken[best] = true;
            order.push_back(best);
        }

        for (std::size_t idx : order) {
            occurrences_.push_back(pieces[idx].occ);
            levels_.push_back(pieces[idx].level);
        }
        if (occurrences_.size() > 64) {
            return;
        }
        // dependent pieces at lower levels, closed transitively; a linear
        // extension lists every predecessor first
        below_.assign(occurrences_.size(), 0);
        for (std::size_t y = 0; y < occurrences_.size(); ++y) {
            for (std::size_t x = 0; x < y; ++x) {
                if (levels_[x] < levels_[y] && g.dependent(occurrences_[x].vertex, occurrences_[y].vertex)) {
                    below_[y] |= std::uint64_t(1) << x | below_[x];
                }
            }
        }
    }

    std::size_t size() const noexcept { return occurrences_.size(); }
    const std::vector<Occurrence>& occurrences() const noexcept { return occurrences_; }
    std::size_t level(std::size_t i) const { return levels_.at(i); }
    // bitmask of pieces strictly below piece i (pieces indexed by number)
    // (only available for heaps of at most 64 pieces)
    std::uint64_t below(std::size_t i) const {
        if (below_.size() != occurrences_.size()) {
            throw GuardError("heap order is only tabulated for at most 64 pieces");
        }
        return below_[i];
    }
    bool less(std::size_t x, std::size_t y) const { return (below(y) >> x) & 1; }

    std::size_t number_of(const Occurrence& occ) const {
        auto it = std::find(occurrences_.begin(), occurrences_.end(), occ);
        if (it == occurrences_.end()) {
            throw InvalidArgument("occurrence not in heap");
        }
        return static_cast<std::size_t>(it - occurrences_.begin());
    }

private:
    std::vector<Occurrence> occurrences_;
    std::vector<std::size_t> levels_;
    std::vector<std::uint64_t> below_;
};

inline std::vector<Occurrence> lex_occurrences(const Heap& h) {
    return HeapPoset(h).occurrences();
}

inline std::vector<Vertex> lex_normal_form(const Heap& h) {
    std::vector<Vertex> out;
    for (const Occurrence& occ : lex_occurrences(h)) {
        out.push_back(occ.vertex);
    }
    return out;
}

// nonempty with all pieces at level 0
inline bool is_trivial(const Heap& h) {
    return h.levels().size() == 1;
}

inline bool is_multilinear(const Heap& h) {
    auto counts = h.multiplicities();
    return std::all_of(counts.begin(), counts.end(), [](std::size_t c) { return c == 1; });
}

inline bool is_antipyramid(const Heap& h) {
    return !h.empty() && h.levels().front().size() == 1;
}

// All heaps in which every vertex occurs once, found by deduplicating the
// heaps of all n! permutation words. Sorted by levels.
inline std::vector<Heap> enumerate_multilinear_heaps(const Graph& g, const Limits& limits = {}) {
    if (g.size() > limits.max_vertices) {
        throw GuardError(std::to_string(g.size()) + "! words exceed the limit of " +
                         std::to_string(limits.max_vertices) + "!");
    }
    std::vector<Vertex> word(g.size());
    std::iota(word.begin(), word.end(), Vertex(0));
    std::set<std::vector<std::vector<Vertex>>> seen;
    std::vector<Heap> out;
    do {
        Heap h = heap_from_word(g, word);
        if (seen.insert(h.levels()).second) {
            out.push_back(std::move(h));
        }
    } while (std::next_permutation(word.begin(), word.end()));
    std::sort(out.begin(), out.end());
    return out;
}

// "[0 3][1][2][1]"; the empty heap is "[]"
inline std::string format_heap(const Heap& h) {
    if (h.empty()) {
        return "[]";
    }
    std::string out;
    for (const auto& level : h.levels()) {
        out += "[";
        for (std::size_t i = 0; i < level.size(); ++i) {
            out += (i ? " " : "") + std::to_string(level[i]);
        }
        out += "]";
    }
    return out;
}

inline std::string format_word(std::span<const Vertex> word) {
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        out += (i ? " " : "") + std::to_string(word[i]);
    }
    return out;
}

// whitespace separated vertex ids, e.g. "0 1 3 2 1"
inline std::vector<Vertex> parse_word(std::string_view text) {
    std::vector<Vertex> out;
    for (const auto& tok : detail::split_ws(text)) {
        auto v = detail::parse_uint(tok);
        if (!v || *v >= kMaxVertices) {
            throw ParseError(ParseError::Kind::Malformed, 0, "bad vertex '" + tok + "' in word");
        }
        out.push_back(static_cast<Vertex>(*v));
    }
    return out;
}

}

#endif /* heaps_heap_hpp */
