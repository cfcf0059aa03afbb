#ifndef heaps_tests_support_hpp
#define heaps_tests_support_hpp

// Fixture graphs, corpus loading, and brute-force oracles that do not share
// code paths with the library routines they check.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "heaps/heaps.hpp"

namespace heaps::testing {

inline Graph make_graph(std::size_t n, std::vector<Edge> edges) {
    return Graph(n, std::move(edges));
}

inline Graph k1() { return make_graph(1, {}); }
inline Graph k2() { return make_graph(2, {{0, 1}}); }
inline Graph k3() { return make_graph(3, {{0, 1}, {1, 2}, {0, 2}}); }
inline Graph p4() { return make_graph(4, {{0, 1}, {1, 2}, {2, 3}}); }
inline Graph edgeless(std::size_t n) { return make_graph(n, {}); }

struct CorpusGraph {
    std::string name;
    Graph graph;
};

inline std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::vector<CorpusGraph> load_corpus() {
    std::vector<CorpusGraph> out;
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(HEAPS_CORPUS_DIR)) {
        if (entry.path().extension() == ".txt") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
        out.push_back({f.stem().string(), parse_edge_list(slurp(f))});
    }
    return out;
}

namespace oracle {

// Acyclicity by depth-first search for a back edge.
inline bool has_cycle(const Graph& g, const Orientation& o) {
    std::vector<std::vector<Vertex>> out(g.size());
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        auto [from, to] = arc(g, o, i);
        out[from].push_back(to);
    }
    std::vector<int> state(g.size(), 0);
    std::function<bool(Vertex)> visit = [&](Vertex v) {
        state[v] = 1;
        for (Vertex w : out[v]) {
            if (state[w] == 1 || (state[w] == 0 && visit(w))) {
                return true;
            }
        }
        state[v] = 2;
        return false;
    };
    for (Vertex v = 0; v < g.size(); ++v) {
        if (state[v] == 0 && visit(v)) {
            return true;
        }
    }
    return false;
}

// All unordered partitions of {0..n-1} into k nonempty blocks, from
// surjective labellings modulo relabelling.
inline std::set<std::set<std::set<Vertex>>> set_partitions(std::size_t n, std::size_t k) {
    std::set<std::set<std::set<Vertex>>> out;
    std::vector<std::size_t> label(n, 0);
    std::function<void(std::size_t)> go = [&](std::size_t i) {
        if (i == n) {
            std::vector<std::set<Vertex>> blocks(k);
            for (std::size_t v = 0; v < n; ++v) {
                blocks[label[v]].insert(static_cast<Vertex>(v));
            }
            if (std::any_of(blocks.begin(), blocks.end(), [](const auto& b) { return b.empty(); })) {
                return;
            }
            out.insert(std::set<std::set<Vertex>>(blocks.begin(), blocks.end()));
            return;
        }
        for (std::size_t c = 0; c < k; ++c) {
            label[i] = c;
            go(i + 1);
        }
    };
    if (k > 0 || n == 0) {
        go(0);
    }
    return out;
}

inline bool block_independent(const Graph& g, const std::set<Vertex>& block) {
    for (Vertex u : block) {
        for (Vertex v : block) {
            if (u < v && g.adjacent(u, v)) {
                return false;
            }
        }
    }
    return true;
}

// Tuples of k nonempty heaps multiplying to h, from every assignment of the
// word's letters to factor indices. With `trivial_only`, factors must be
// single-level heaps (racks).
inline std::set<std::vector<std::vector<std::vector<Vertex>>>> factorisations(const Heap& h, std::size_t k,
                                                                               bool trivial_only) {
    std::set<std::vector<std::vector<std::vector<Vertex>>>> out;
    const Graph& g = h.graph();
    std::vector<Vertex> word = h.word();
    std::vector<std::size_t> label(word.size(), 0);
    std::function<void(std::size_t)> go = [&](std::size_t i) {
        if (i == word.size()) {
            std::vector<std::vector<Vertex>> parts(k);
            for (std::size_t p = 0; p < word.size(); ++p) {
                parts[label[p]].push_back(word[p]);
            }
            std::vector<std::vector<std::vector<Vertex>>> factors;
            std::vector<Vertex> concat;
            for (const auto& part : parts) {
                if (part.empty()) {
                    return;
                }
                Heap f = heap_from_word(g, part);
                if (trivial_only && f.levels().size() != 1) {
                    return;
                }
                factors.push_back(f.levels());
                concat.insert(concat.end(), part.begin(), part.end());
            }
            if (heap_from_word(g, concat).levels() == h.levels()) {
                out.insert(factors);
            }
            return;
        }
        for (std::size_t c = 0; c < k; ++c) {
            label[i] = c;
            go(i + 1);
        }
    };
    if (k > 0) {
        go(0);
    }
    return out;
}

// Words of the commutation class of `word`: closure under swapping adjacent
// independent letters.
inline std::set<std::vector<Vertex>> commutation_class(const Graph& g, std::vector<Vertex> word) {
    std::set<std::vector<Vertex>> seen{word};
    std::vector<std::vector<Vertex>> stack{word};
    while (!stack.empty()) {
        auto w = stack.back();
        stack.pop_back();
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            if (!g.dependent(w[i], w[i + 1])) {
                auto x = w;
                std::swap(x[i], x[i + 1]);
                if (seen.insert(x).second) {
                    stack.push_back(x);
                }
            }
        }
    }
    return seen;
}

}

}

#endif /* heaps_tests_support_hpp */
