#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace heaps;
using namespace heaps::testing;

namespace {

Orientation arcs(const Graph& g, std::vector<std::pair<Vertex, Vertex>> list) {
    return orientation_from_arcs(g, list);
}

}

TEST(Phi, Examples) {
    Graph g = k2();
    EXPECT_EQ(phi(heap_from_word(g, {0, 1})), arcs(g, {{0, 1}}));
    EXPECT_EQ(phi(heap_from_word(g, {1, 0})), arcs(g, {{1, 0}}));
    EXPECT_TRUE(phi(heap_from_word(edgeless(3), {2, 0, 1})).forward.empty());
    EXPECT_THROW(phi(heap_from_word(g, {0})), InvalidArgument);
    EXPECT_THROW(phi(heap_from_word(g, {0, 1, 0})), InvalidArgument);
}

TEST(Psi, Examples) {
    EXPECT_EQ(psi(k2(), arcs(k2(), {{0, 1}})), heap_from_word(k2(), {0, 1}));
    EXPECT_EQ(psi(k3(), arcs(k3(), {{0, 1}, {0, 2}, {1, 2}})), heap_from_word(k3(), {0, 1, 2}));
    Heap trivial = psi(edgeless(3), Orientation{});
    EXPECT_EQ(trivial.levels(), (std::vector<std::vector<Vertex>>{{0, 1, 2}}));
    EXPECT_THROW(psi(k3(), arcs(k3(), {{0, 1}, {1, 2}, {2, 0}})), InvalidArgument);
}

TEST(Psi, UsesVertexOrderForTies) {
    // on the edgeless graph any order gives the same heap; on a path the
    // word changes but not the heap
    Graph g = p4().with_order({3, 2, 1, 0});
    Orientation o = arcs(g, {{0, 1}, {2, 1}, {2, 3}});
    Heap h = psi(g, o);
    EXPECT_EQ(lex_normal_form(h), (std::vector<Vertex>{2, 3, 0, 1}));
    EXPECT_EQ(phi(h), o);
}

TEST(Bijection, InversesOnCorpus) {
    for (const auto& [name, base] : load_corpus()) {
        for (const Graph& g : {base, base.with_order([&] {
                                   auto o = base.order();
                                   std::reverse(o.begin(), o.end());
                                   return o;
                               }())}) {
            auto heaps = enumerate_multilinear_heaps(g);
            std::set<Orientation> images;
            for (const Heap& h : heaps) {
                Orientation o = phi(h);
                EXPECT_TRUE(is_acyclic(g, o)) << name;
                EXPECT_EQ(psi(g, o), h) << name;
                images.insert(o);
            }
            std::size_t acyclic = 0;
            for_each_orientation(g, [&](const Orientation& o) {
                if (oracle::has_cycle(g, o)) {
                    return;
                }
                ++acyclic;
                EXPECT_EQ(phi(psi(g, o)), o) << name;
                EXPECT_TRUE(images.count(o)) << name;
            });
            EXPECT_EQ(heaps.size(), acyclic) << name;
        }
    }
}

TEST(UniqueSourceAt, Examples) {
    Graph g = k3();
    EXPECT_TRUE(unique_source_at(g, arcs(g, {{2, 0}, {2, 1}, {1, 0}}), 2));
    EXPECT_FALSE(unique_source_at(g, arcs(g, {{2, 0}, {2, 1}, {1, 0}}), 1));
    Orientation cycle = arcs(g, {{0, 1}, {1, 2}, {2, 0}});
    for (Vertex v = 0; v < 3; ++v) {
        EXPECT_FALSE(unique_source_at(g, cycle, v));
    }
    EXPECT_TRUE(unique_source_at(k1(), Orientation{}, 0));
}

TEST(Bijection, AntipyramidsHaveUniqueSources) {
    for (const auto& [name, g] : load_corpus()) {
        for (const Heap& h : enumerate_multilinear_heaps(g)) {
            Orientation o = phi(h);
            VertexMask src = sources(g, o);
            EXPECT_EQ(is_antipyramid(h), std::popcount(src) == 1) << name << " " << format_heap(h);
            if (is_antipyramid(h)) {
                EXPECT_TRUE(unique_source_at(g, o, h.levels().front().front())) << name;
            }
        }
    }
}
