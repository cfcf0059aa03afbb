// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "support.hpp"

using namespace heaps;
using namespace heaps::testing;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::string note;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            note = what;
        }
    }
};

int failures = 0;

void criterion(const std::string& name, double budget_seconds, const std::function<void(Outcome&)>& body) {
    Outcome out;
    auto start = Clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.ok = false;
        out.note = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (out.ok && secs > budget_seconds) {
        out.ok = false;
        out.note = "took " + std::to_string(secs) + " s, budget " + std::to_string(budget_seconds) + " s";
    }
    failures += !out.ok;
    std::printf("%s  %-28s %9.3f s  %s\n", out.ok ? "PASS" : "FAIL", name.c_str(), secs, out.note.c_str());
    std::fflush(stdout);
}

std::int64_t sign(std::int64_t exp) {
    return exp % 2 ? -1 : 1;
}

// 200 random heaps from words of length <= 8 over corpus graphs, none multilinear
std::vector<Heap> random_heaps(const std::vector<CorpusGraph>& corpus) {
    std::mt19937 rng(20240611);
    std::vector<Heap> out;
    while (out.size() < 200) {
        const Graph& g = corpus[std::uniform_int_distribution<std::size_t>(0, corpus.size() - 1)(rng)].graph;
        std::vector<Vertex> word(std::uniform_int_distribution<std::size_t>(1, 8)(rng));
        for (auto& v : word) {
            v = std::uniform_int_distribution<Vertex>(0, static_cast<Vertex>(g.size() - 1))(rng);
        }
        Heap h = heap_from_word(g, word);
        if (!is_multilinear(h)) {
            out.push_back(std::move(h));
        }
    }
    return out;
}

int run_cli(const std::string& args, std::string& output) {
    std::string cmd = std::string(HEAPS_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    std::array<char, 4096> buf;
    output.clear();
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) {
        output.append(buf.data(), n);
    }
    int status = pclose(pipe);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}

int main() {
    const auto corpus = load_corpus();
    std::printf("corpus: %zu graphs\n", corpus.size());

    criterion("worked-example", 0.001, [&](Outcome& o) {
        Graph g = p4();
        Heap h = heap_from_word(g, {0, 1, 3, 2, 1});
        o.require(cf_normal_form(h) == std::vector<std::vector<Vertex>>{{0, 3}, {1}, {2}, {1}}, "CF blocks");
        o.require(lex_normal_form(h) == std::vector<Vertex>{0, 1, 3, 2, 1}, "lex normal form");
        o.require(lexicographic_rack(h).layers() == Layers{{0}, {1}, {3}, {2}, {1}}, "lexicographic rack");
    });

    std::vector<Heap> heaps;
    for (const auto& c : corpus) {
        for (Heap& h : enumerate_multilinear_heaps(c.graph)) {
            heaps.push_back(std::move(h));
        }
    }
    const std::size_t multilinear_count = heaps.size();
    for (Heap& h : random_heaps(corpus)) {
        heaps.push_back(std::move(h));
    }

    criterion("involution", 60.0, [&](Outcome& o) {
        std::size_t racks = 0;
        for (const Heap& h : heaps) {
            std::size_t fixed = 0;
            Rack lex = lexicographic_rack(h);
            for_each_rack(h, [&](const Rack& t) {
                ++racks;
                Rack image = involute(t);
                o.require(involute(image) == t, "f(f(T)) != T for " + format_heap(h) + " / " + format_rack(t));
                if (image == t) {
                    ++fixed;
                    o.require(t == lex, "non-lexicographic fixed point " + format_rack(t));
                } else {
                    std::size_t a = t.layer_count(), b = image.layer_count();
                    o.require((a > b ? a - b : b - a) == 1, "layer count step for " + format_rack(t));
                }
            });
            o.require(fixed == 1, "fixed points != 1 for " + format_heap(h));
        }
        o.note = o.ok ? std::to_string(multilinear_count) + " multilinear + " +
                            std::to_string(heaps.size() - multilinear_count) + " random heaps, " +
                            std::to_string(racks) + " racks"
                      : o.note;
    });

    criterion("signed-rack-sum", 60.0, [&](Outcome& o) {
        for (const Heap& h : heaps) {
            o.require(signed_rack_sum_holds(h), "fails for " + format_heap(h));
        }
    });

    criterion("orientation-bijection", 60.0, [&](Outcome& o) {
        for (const auto& [name, g] : corpus) {
            auto ml = enumerate_multilinear_heaps(g);
            std::size_t acyclic = 0;
            for (const Heap& h : ml) {
                o.require(psi(g, phi(h)) == h, name + ": psi(phi(F)) != F for " + format_heap(h));
            }
            for_each_orientation(g, [&](const Orientation& ori) {
                if (oracle::has_cycle(g, ori)) {
                    return;
                }
                ++acyclic;
                o.require(phi(psi(g, ori)) == ori, name + ": phi(psi(O)) != O");
            });
            o.require(ml.size() == acyclic, name + ": |M(G)| != |A(G)|");
        }
    });

    criterion("racks-vs-oracle", 60.0, [&](Outcome& o) {
        for (const auto& [name, g] : corpus) {
            IntPolynomial racks = chromatic_via_racks(g);
            IntPolynomial dc = chromatic_oracle(g);
            o.require(racks == dc, name + ": " + racks.to_string() + " vs " + dc.to_string());
            for (std::int64_t lambda = 0; lambda <= 3; ++lambda) {
                std::int64_t count = count_colorings(g, lambda);
                o.require(racks.evaluate(lambda) == count && dc.evaluate(lambda) == count,
                          name + ": colouring count at " + std::to_string(lambda));
            }
        }
    });

    criterion("acyclic-count-at-minus-one", 60.0, [&](Outcome& o) {
        for (const auto& [name, g] : corpus) {
            std::int64_t lhs = sign(static_cast<std::int64_t>(g.size())) * chromatic_via_racks(g).evaluate(-1);
            std::int64_t brute = 0;
            for_each_orientation(g, [&](const Orientation& ori) { brute += !oracle::has_cycle(g, ori); });
            o.require(lhs == brute, name + ": " + std::to_string(lhs) + " vs " + std::to_string(brute));
        }
    });

    criterion("reciprocity", 120.0, [&](Outcome& o) {
        std::size_t skipped = 0;
        for (const auto& [name, g] : corpus) {
            IntPolynomial chi = chromatic_via_racks(g);
            std::int64_t s = sign(static_cast<std::int64_t>(g.size()));
            for (std::int64_t lambda = 0; lambda <= 4; ++lambda) {
                std::int64_t bar = chromatic_bar(g, lambda);
                o.require(bar == s * chi.evaluate(-lambda), name + ": bar vs P(-λ) at " + std::to_string(lambda));
                try {
                    std::int64_t weak = count_compatible_pairs(g, lambda, false);
                    o.require(bar == weak, name + ": bar vs weak pairs at " + std::to_string(lambda));
                } catch (const GuardError&) {
                    ++skipped;
                }
            }
        }
        o.note = o.ok ? std::to_string(skipped) + " (graph, λ) pair counts over the guard" : o.note;
    });

    criterion("coefficients", 120.0, [&](Outcome& o) {
        std::mt19937 rng(61);
        for (const auto& [name, g] : corpus) {
            IntPolynomial chi = chromatic_oracle(g);
            CoefficientTables t(g);
            auto sums = multilinear_rack_sums(g);
            for (std::size_t r = 0; r <= g.size(); ++r) {
                o.require(t.coefficient_a(r) == chi.coeff(r), name + ": a_" + std::to_string(r));
                o.require(sums[r] == factorial(static_cast<unsigned>(r)) * t.pi(r),
                          name + ": rack sum vs k! pi(k) at " + std::to_string(r));
            }
            std::vector<Graph> orders{g};
            auto perm = g.order();
            for (int i = 0; i < 5; ++i) {
                std::shuffle(perm.begin(), perm.end(), rng);
                orders.push_back(g.with_order(perm));
            }
            for (const Graph& og : orders) {
                std::string where = name + " order " + format_word(og.order());
                for (std::size_t r = 1; r <= g.size(); ++r) {
                    o.require(sign(static_cast<std::int64_t>(g.size() - r)) * t.coefficient_a(r) ==
                                  theorem61_count(og, r),
                              where + ": unique-source partitions at r=" + std::to_string(r));
                }
                for (std::size_t k = 1; k <= g.size(); ++k) {
                    o.require(t.delta_chains(k) == lower_special_rack_count(og, k),
                              where + ": chains vs lower-special at k=" + std::to_string(k));
                }
                Vertex top = og.max_vertex(og.all_vertices());
                o.require(std::abs(t.coefficient_a(1)) == unique_source_count(og, top),
                          where + ": |a_1| vs unique sources at " + std::to_string(top));
            }
        }
    });

    criterion("cli-verify", 300.0, [&](Outcome& o) {
        std::string out;
        for (const auto& c : corpus) {
            int code = run_cli("verify " + std::string(HEAPS_CORPUS_DIR) + "/" + c.name + ".txt", out);
            o.require(code == 0, c.name + ": verify exited " + std::to_string(code));
        }
        std::string expect = std::string(HEAPS_DATA_DIR) + "/expected/p4.json";
        int good = run_cli("verify " + std::string(HEAPS_CORPUS_DIR) + "/p4.txt --expect " + expect, out);
        o.require(good == 0, "p4 against its expected polynomial exited " + std::to_string(good));

        // the same fixture with one edge moved (2-3 -> 0-2)
        std::string corrupt = (std::filesystem::temp_directory_path() / "heaps_acceptance_p4_corrupt.txt").string();
        std::ofstream(corrupt) << "# p4 with a corrupted edge\n4\n0 1\n1 2\n0 2\n";
        int bad = run_cli("verify " + corrupt + " --expect " + expect, out);
        o.require(bad == 1, "corrupted fixture exited " + std::to_string(bad));
        o.require(out.find("witness: graph n=4") != std::string::npos, "no witness in failure report");
    });

    std::printf("%s\n", failures ? "ACCEPTANCE FAILED" : "all acceptance criteria pass");
    return failures ? 1 : 0;
}
