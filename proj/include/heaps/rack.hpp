#ifndef heaps_rack_hpp
#define heaps_rack_hpp

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "heaps/checked.hpp"
#include "heaps/error.hpp"
#include "heaps/graph.hpp"
#include "heaps/heap.hpp"

namespace heaps {

using Layers = std::vector<std::vector<Vertex>>;

// A factorisation of a heap into trivial heaps (layers), bottom first.
class Rack {
public:
    // Throws InvalidArgument unless every layer is a nonempty independent set
    // and the layers multiply to the heap.
    Rack(Heap heap, Layers layers) : heap_(std::move(heap)), layers_(std::move(layers)) {
        const Graph& g = heap_.graph();
        std::vector<Vertex> word;
        for (std::size_t i = 0; i < layers_.size(); ++i) {
            auto& layer = layers_[i];
            std::sort(layer.begin(), layer.end());
            if (layer.empty()) {
                throw InvalidArgument("rack layer " + std::to_string(i) + " is empty");
            }
            if (std::adjacent_find(layer.begin(), layer.end()) != layer.end() || !is_independent(g, layer)) {
                throw InvalidArgument("rack layer " + std::to_string(i) + " is not an independent set");
            }
            word.insert(word.end(), layer.begin(), layer.end());
        }
        if (heap_from_word(g, word).levels() != heap_.levels()) {
            throw InvalidArgument("rack layers do not multiply to the heap");
        }
    }

    const Heap& heap() const noexcept { return heap_; }
    const Layers& layers() const noexcept { return layers_; }
    std::size_t layer_count() const noexcept { return layers_.size(); }

    bool lonely(std::size_t layer) const { return layers_.at(layer).size() == 1; }

    friend bool operator==(const Rack& a, const Rack& b) { return a.heap_ == b.heap_ && a.layers_ == b.layers_; }
    friend auto operator<=>(const Rack& a, const Rack& b) {
        if (auto c = a.heap_ <=> b.heap_; c != 0) {
            return c;
        }
        return a.layers_ <=> b.layers_;
    }

private:
    Heap heap_;
    Layers layers_;
};

// A factorisation of a heap into arbitrary nonempty heaps, bottom first.
class LayerFactorisation {
public:
    LayerFactorisation(Heap heap, std::vector<Heap> factors) : heap_(std::move(heap)), factors_(std::move(factors)) {
        Heap product(heap_.graph());
        for (const Heap& f : factors_) {
            if (f.empty()) {
                throw InvalidArgument("empty factor");
            }
            product = multiply(product, f);
        }
        if (product.levels() != heap_.levels()) {
            throw InvalidArgument("factors do not multiply to the heap");
        }
    }

    const Heap& heap() const noexcept { return heap_; }
    const std::vector<Heap>& factors() const noexcept { return factors_; }
    std::size_t factor_count() const noexcept { return factors_.size(); }

private:
    Heap heap_;
    std::vector<Heap> factors_;
};

namespace detail {

using PieceMask = std::uint64_t;

inline void check_piece_guard(const Heap& h, const Limits& limits) {
    if (h.size() > limits.max_heap_pieces) {
        throw GuardError("heap with " + std::to_string(h.size()) + " pieces exceeds the limit of " +
                         std::to_string(limits.max_heap_pieces));
    }
}

inline PieceMask all_pieces(std::size_t n) {
    return n == 64 ? ~PieceMask(0) : (PieceMask(1) << n) - 1;
}

inline PieceMask minimal_pieces(const HeapPoset& poset, PieceMask remaining) {
    PieceMask out = 0;
    for (PieceMask rest = remaining; rest; rest &= rest - 1) {
        std::size_t i = std::countr_zero(rest);
        if ((poset.below(i) & remaining) == 0) {
            out |= PieceMask(1) << i;
        }
    }
    return out;
}

inline bool down_closed(const HeapPoset& poset, PieceMask subset, PieceMask remaining) {
    for (PieceMask rest = subset; rest; rest &= rest - 1) {
        std::size_t i = std::countr_zero(rest);
        if (poset.below(i) & remaining & ~subset) {
            return false;
        }
    }
    return true;
}

inline std::vector<Vertex> piece_vertices(const HeapPoset& poset, PieceMask pieces) {
    std::vector<Vertex> out;
    for (; pieces; pieces &= pieces - 1) {
        out.push_back(poset.occurrences()[std::countr_zero(pieces)].vertex);
    }
    return out;
}

inline void add_shifted(std::vector<std::int64_t>& into, const std::vector<std::int64_t>& from) {
    if (into.size() < from.size() + 1) {
        into.resize(from.size() + 1, 0);
    }
    for (std::size_t k = 0; k < from.size(); ++k) {
        into[k + 1] = checked_add(into[k + 1], from[k]);
    }
}

// Number of ways to peel `remaining` into k successive blocks, by k. A block
// is any nonempty subset accepted by `block_ok`.
template<class BlockOk>
class ChainCounter {
public:
    ChainCounter(const HeapPoset& poset, BlockOk block_ok) : poset_(poset), block_ok_(std::move(block_ok)) {}

    const std::vector<std::int64_t>& count(PieceMask remaining) {
        if (auto it = memo_.find(remaining); it != memo_.end()) {
            return it->second;
        }
        std::vector<std::int64_t> out;
        if (remaining == 0) {
            out = {1};
        } else {
            for (PieceMask s = remaining; s; s = (s - 1) & remaining) {
                if (block_ok_(s, remaining)) {
                    add_shifted(out, count(remaining & ~s));
                }
            }
        }
        return memo_.emplace(remaining, std::move(out)).first->second;
    }

private:
    const HeapPoset& poset_;
    BlockOk block_ok_;
    std::unordered_map<PieceMask, std::vector<std::int64_t>> memo_;
};

}

// beta[k] = number of racks of h with k layers (beta of the empty heap is {1})
inline std::vector<std::int64_t> beta_histogram(const Heap& h, const Limits& limits = {}) {
    detail::check_piece_guard(h, limits);
    HeapPoset poset(h);
    auto block_ok = [&](detail::PieceMask s, detail::PieceMask remaining) {
        return (s & ~detail::minimal_pieces(poset, remaining)) == 0;
    };
    detail::ChainCounter counter(poset, block_ok);
    return counter.count(detail::all_pieces(poset.size()));
}

// b[k] = number of layer factorisations of h with k factors; a factor is a
// nonempty down-set of what is left of the heap
inline std::vector<std::int64_t> factorisation_histogram(const Heap& h, const Limits& limits = {}) {
    detail::check_piece_guard(h, limits);
    HeapPoset poset(h);
    auto block_ok = [&](detail::PieceMask s, detail::PieceMask remaining) {
        return detail::down_closed(poset, s, remaining);
    };
    detail::ChainCounter counter(poset, block_ok);
    return counter.count(detail::all_pieces(poset.size()));
}

inline std::int64_t beta(const Heap& h, std::size_t k, const Limits& limits = {}) {
    auto hist = beta_histogram(h, limits);
    return k < hist.size() ? hist[k] : 0;
}

inline std::int64_t b_count(const Heap& h, std::size_t k, const Limits& limits = {}) {
    auto hist = factorisation_histogram(h, limits);
    return k < hist.size() ? hist[k] : 0;
}

// Every rack of h exactly once. The first layer ranges over the nonempty
// subsets of the minimal pieces of what remains.
template<class Fn>
void for_each_rack(const Heap& h, Fn&& fn, const Limits& limits = {}) {
    detail::check_piece_guard(h, limits);
    HeapPoset poset(h);
    Layers layers;
    auto recurse = [&](auto&& self, detail::PieceMask remaining) -> void {
        if (remaining == 0) {
            fn(Rack(h, layers));
            return;
        }
        detail::PieceMask minimal = detail::minimal_pieces(poset, remaining);
        // ascending subsets of the minimal pieces
        for (detail::PieceMask s = minimal & (0 - minimal); s; s = (s - minimal) & minimal) {
            layers.push_back(detail::piece_vertices(poset, s));
            self(self, remaining & ~s);
            layers.pop_back();
        }
    };
    recurse(recurse, detail::all_pieces(poset.size()));
}

inline std::vector<Rack> enumerate_racks(const Heap& h, const Limits& limits = {}) {
    std::vector<Rack> out;
    for_each_rack(h, [&](Rack r) { out.push_back(std::move(r)); }, limits);
    return out;
}

// Every layer factorisation: chains of order ideals, factor j = I_j minus I_(j-1).
inline std::vector<LayerFactorisation> enumerate_layer_factorisations(const Heap& h, const Limits& limits = {}) {
    detail::check_piece_guard(h, limits);
    HeapPoset poset(h);
    std::vector<LayerFactorisation> out;
    std::vector<Heap> factors;
    auto recurse = [&](auto&& self, detail::PieceMask remaining) -> void {
        if (remaining == 0) {
            out.emplace_back(h, factors);
            return;
        }
        for (detail::PieceMask s = remaining & (0 - remaining); s; s = (s - remaining) & remaining) {
            if (detail::down_closed(poset, s, remaining)) {
                // pieces in lexicographic order form a word for the factor
                factors.push_back(heap_from_word(h.graph(), detail::piece_vertices(poset, s)));
                self(self, remaining & ~s);
                factors.pop_back();
            }
        }
    };
    recurse(recurse, detail::all_pieces(poset.size()));
    return out;
}

// One singleton layer per piece, following the lexicographic normal form.
inline Rack lexicographic_rack(const Heap& h) {
    if (h.empty()) {
        throw InvalidArgument("the empty heap has no lexicographic rack");
    }
    Layers layers;
    for (Vertex v : lex_normal_form(h)) {
        layers.push_back({v});
    }
    return Rack(h, std::move(layers));
}

// The heap occurrence of the i-th piece of a layer: same vertex, counted
// over strictly lower layers.
inline std::vector<std::vector<Occurrence>> rack_occurrences(const Rack& t) {
    std::vector<std::size_t> seen(t.heap().graph().size(), 0);
    std::vector<std::vector<Occurrence>> out;
    for (const auto& layer : t.layers()) {
        auto& row = out.emplace_back();
        for (Vertex v : layer) {
            row.push_back({v, seen[v]++});
        }
    }
    return out;
}

namespace detail {

inline std::vector<std::vector<std::size_t>> occurrence_numbers(const Rack& t, const HeapPoset& poset) {
    std::vector<std::vector<std::size_t>> out;
    for (const auto& row : rack_occurrences(t)) {
        auto& nums = out.emplace_back();
        for (const Occurrence& occ : row) {
            nums.push_back(poset.number_of(occ));
        }
    }
    return out;
}

}

// Lexicographic number (0-based) of every rack piece, laid out like the layers.
inline std::vector<std::vector<std::size_t>> occurrence_numbers(const Rack& t) {
    return detail::occurrence_numbers(t, HeapPoset(t.heap()));
}

struct TransferPiece {
    Occurrence occurrence;
    std::size_t number;
    std::size_t layer;
    bool lonely;

    friend bool operator==(const TransferPiece&, const TransferPiece&) = default;
};

// The smallest-numbered piece that is either not lonely, or lonely in a
// layer whose index differs from its number. None for the lexicographic rack.
inline std::optional<TransferPiece> transfer_piece(const Rack& t) {
    auto numbers = occurrence_numbers(t);
    auto occs = rack_occurrences(t);
    std::optional<TransferPiece> best;
    for (std::size_t j = 0; j < numbers.size(); ++j) {
        bool lonely = numbers[j].size() == 1;
        for (std::size_t i = 0; i < numbers[j].size(); ++i) {
            std::size_t num = numbers[j][i];
            if (lonely && num == j) {
                continue;
            }
            if (best && best->number == num) {
                throw std::logic_error("two rack pieces share a lexicographic number");
            }
            if (!best || num < best->number) {
                best = TransferPiece{occs[j][i], num, j, lonely};
            }
        }
    }
    return best;
}

// One step of the heaps-and-racks involution. A lonely transfer piece joins
// the layer below it; any other transfer piece moves into a new singleton
// layer directly above its old one.
inline Rack involute(const Rack& t) {
    auto tp = transfer_piece(t);
    if (!tp) {
        return t;
    }
    Layers layers = t.layers();
    const Vertex v = tp->occurrence.vertex;
    if (tp->lonely) {
        if (tp->layer == 0) {
            throw std::logic_error("lonely transfer piece in the bottom layer");
        }
        auto& below = layers[tp->layer - 1];
        below.insert(std::upper_bound(below.begin(), below.end(), v), v);
        layers.erase(layers.begin() + static_cast<std::ptrdiff_t>(tp->layer));
    } else {
        auto& from = layers[tp->layer];
        from.erase(std::find(from.begin(), from.end(), v));
        layers.insert(layers.begin() + static_cast<std::ptrdiff_t>(tp->layer) + 1, std::vector<Vertex>{v});
    }
    // Rack's constructor re-checks that the result is a rack of the same heap
    return Rack(t.heap(), std::move(layers));
}

// the largest vertex of the heap (under the graph's order) lies in the bottom layer
inline bool is_lower_special(const Rack& t) {
    if (t.layers().empty()) {
        return false;
    }
    const Graph& g = t.heap().graph();
    Vertex top = g.max_vertex(t.heap().support());
    const auto& bottom = t.layers().front();
    return std::find(bottom.begin(), bottom.end(), top) != bottom.end();
}

// "0 3 | 1 | 2 | 1"
inline std::string format_rack(const Layers& layers) {
    std::string out;
    for (std::size_t i = 0; i < layers.size(); ++i) {
        out += (i ? " | " : "") + format_word(layers[i]);
    }
    return out;
}

inline std::string format_rack(const Rack& t) {
    return format_rack(t.layers());
}

inline Layers parse_rack(std::string_view text) {
    Layers out;
    if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) {
        return out;
    }
    std::size_t pos = 0;
    while (true) {
        std::size_t bar = text.find('|', pos);
        std::string_view part = text.substr(pos, bar == std::string_view::npos ? std::string_view::npos : bar - pos);
        out.push_back(parse_word(part));
        if (out.back().empty()) {
            throw ParseError(ParseError::Kind::Malformed, 0, "empty layer in rack '" + std::string(text) + "'");
        }
        if (bar == std::string_view::npos) {
            break;
        }
        pos = bar + 1;
    }
    return out;
}

}

#endif /* heaps_rack_hpp */
