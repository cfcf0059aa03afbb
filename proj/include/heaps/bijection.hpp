#ifndef heaps_bijection_hpp
#define heaps_bijection_hpp

#include <vector>

#include "heaps/error.hpp"
#include "heaps/graph.hpp"
#include "heaps/heap.hpp"

namespace heaps {

// Multilinear heap -> acyclic orientation: each edge points from the vertex
// that comes first in the lexicographic word to the one that comes later.
inline Orientation phi(const Heap& h) {
    if (!is_multilinear(h)) {
        throw InvalidArgument("phi needs a multilinear heap, got " + format_heap(h));
    }
    const Graph& g = h.graph();
    std::vector<std::size_t> position(g.size());
    auto word = lex_normal_form(h);
    for (std::size_t i = 0; i < word.size(); ++i) {
        position[word[i]] = i;
    }
    Orientation o{std::vector<bool>(g.edge_count())};
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edges()[i];
        o.forward[i] = position[e.u] < position[e.v];
    }
    return o;
}

// Acyclic orientation -> multilinear heap: repeatedly delete the smallest
// source and append it to the word.
inline Heap psi(const Graph& g, const Orientation& o) {
    if (o.forward.size() != g.edge_count()) {
        throw InvalidArgument("orientation does not match the graph");
    }
    std::vector<VertexMask> in(g.size(), 0);
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        auto [from, to] = arc(g, o, i);
        in[to] |= bit(from);
    }
    std::vector<Vertex> word;
    VertexMask remaining = g.all_vertices();
    while (remaining) {
        VertexMask srcs = 0;
        for (Vertex v : mask_to_vertices(remaining)) {
            if ((in[v] & remaining) == 0) {
                srcs |= bit(v);
            }
        }
        if (!srcs) {
            throw InvalidArgument("psi needs an acyclic orientation");
        }
        Vertex v = g.min_vertex(srcs);
        word.push_back(v);
        remaining &= ~bit(v);
    }
    return heap_from_word(g, word);
}

inline bool unique_source_at(const Graph& g, const Orientation& o, Vertex v) {
    return v < g.size() && sources(g, o) == bit(v) && is_acyclic(g, o);
}

}

#endif /* heaps_bijection_hpp */
