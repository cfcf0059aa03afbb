#ifndef heaps_verify_hpp
#define heaps_verify_hpp

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "heaps/bijection.hpp"
#include "heaps/chromatic.hpp"
#include "heaps/graph.hpp"
#include "heaps/heap.hpp"
#include "heaps/polynomial.hpp"
#include "heaps/rack.hpp"

namespace heaps {

enum class CheckStatus { Pass, Fail, Skip, Info };

inline const char* status_name(CheckStatus s) {
    switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skip: return "SKIP";
    case CheckStatus::Info: return "INFO";
    }
    return "?";
}

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
    // first (smallest) object violating the identity, empty on success
    std::string witness;
};

struct VerifyOptions {
    Limits limits;
    std::int64_t lambda_max = 4;
    // compared against both chromatic polynomial routes when set
    std::optional<IntPolynomial> expected;
    // extra random vertex orders for the order-dependent identities
    std::size_t order_sweeps = 5;
    std::uint64_t seed = 0x5eed;
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    bool passed() const {
        return std::none_of(checks.begin(), checks.end(),
                            [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
    }
};

inline std::string describe_graph(const Graph& g) {
    std::string out = "graph n=" + std::to_string(g.size()) + " edges={";
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        out += (i ? "," : "") + std::to_string(g.edges()[i].u) + "-" + std::to_string(g.edges()[i].v);
    }
    out += "}";
    if (!g.has_identity_order()) {
        out += " order=" + format_word(g.order());
    }
    return out;
}

inline std::string describe_orientation(const Graph& g, const Orientation& o) {
    std::string out;
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        auto [from, to] = arc(g, o, i);
        out += (i ? ", " : "") + std::to_string(from) + ">" + std::to_string(to);
    }
    return "orientation {" + out + "}";
}

// Per-rack involution properties for one heap: f(f(T)) = T, exactly one
// fixed point which is the lexicographic rack, the layer count moves by one
// off the fixed point, and lower-special racks stay lower-special.
// Returns a description of the first violation.
inline std::optional<std::string> check_involution_on_heap(const Heap& h, const Limits& limits = {}) {
    std::optional<std::string> failure;
    std::size_t fixed = 0;
    const std::optional<Rack> lex = h.empty() ? std::nullopt : std::optional<Rack>(lexicographic_rack(h));
    for_each_rack(h, [&](const Rack& t) {
        if (failure) {
            return;
        }
        auto where = [&](const std::string& what) {
            return what + ": heap " + format_heap(h) + " rack " + format_rack(t);
        };
        Rack image = involute(t);
        if (involute(image) != t) {
            failure = where("f(f(T)) != T");
        } else if (image == t) {
            ++fixed;
            if (lex ? t != *lex : t.layer_count() != 0) {
                failure = where("fixed point is not the lexicographic rack");
            }
        } else if (image.layer_count() + 1 != t.layer_count() && t.layer_count() + 1 != image.layer_count()) {
            failure = where("layer count changed by other than one");
        } else if (is_lower_special(t) && !is_lower_special(image)) {
            failure = where("lower-special rack mapped to " + format_rack(image));
        }
    }, limits);
    if (!failure && !h.empty() && fixed != 1) {
        failure = std::to_string(fixed) + " fixed points: heap " + format_heap(h);
    }
    return failure;
}

// sum_k (-1)^k beta(k) == (-1)^|F|
inline bool signed_rack_sum_holds(const Heap& h, const Limits& limits = {}) {
    auto hist = beta_histogram(h, limits);
    std::int64_t sum = 0;
    for (std::size_t k = 0; k < hist.size(); ++k) {
        sum += sign_pow(static_cast<std::int64_t>(k)) * hist[k];
    }
    return sum == sign_pow(static_cast<std::int64_t>(h.size()));
}

namespace detail {

inline std::string first_difference(const IntPolynomial& a, const IntPolynomial& b) {
    std::size_t top = std::max(a.coeffs().size(), b.coeffs().size());
    for (std::size_t d = 0; d < top; ++d) {
        if (a.coeff(d) != b.coeff(d)) {
            return "coefficient of λ^" + std::to_string(d) + ": " + std::to_string(a.coeff(d)) + " vs " +
                   std::to_string(b.coeff(d));
        }
    }
    return "";
}

class Checker {
public:
    Checker(const Graph& g, VerifyReport& report) : graph_(g), report_(report) {}

    // Runs body; a GuardError turns the check into SKIP, any other failure
    // into FAIL with the thrown message.
    void run(const std::string& name, const std::function<void(CheckResult&)>& body) {
        CheckResult result{name, CheckStatus::Pass, "", ""};
        try {
            body(result);
        } catch (const GuardError& e) {
            result.status = CheckStatus::Skip;
            result.detail = e.what();
        } catch (const std::exception& e) {
            result.status = CheckStatus::Fail;
            result.detail = e.what();
            result.witness = describe_graph(graph_);
        }
        report_.checks.push_back(std::move(result));
    }

    void fail(CheckResult& r, std::string detail, std::string witness = "") {
        if (r.status == CheckStatus::Fail) {
            return;
        }
        r.status = CheckStatus::Fail;
        r.detail = std::move(detail);
        r.witness = describe_graph(graph_) + (witness.empty() ? "" : "; " + witness);
    }

private:
    const Graph& graph_;
    VerifyReport& report_;
};

}

// Runs every identity on one graph, under its own vertex order plus
// options.order_sweeps random orders for the order-dependent ones.
inline VerifyReport verify_graph(const Graph& g, const VerifyOptions& options = {}) {
    VerifyReport report;
    detail::Checker check(g, report);
    const Limits& limits = options.limits;
    const std::int64_t n = static_cast<std::int64_t>(g.size());

    std::optional<IntPolynomial> oracle;
    std::optional<IntPolynomial> via_racks;
    try {
        oracle = chromatic_oracle(g, limits);
    } catch (const GuardError&) {
    }
    try {
        via_racks = chromatic_via_racks(g, limits);
    } catch (const GuardError&) {
    }
    auto need = [](const std::optional<IntPolynomial>& p, const char* what) -> const IntPolynomial& {
        if (!p) {
            throw GuardError(std::string(what) + " is beyond the size limits");
        }
        return *p;
    };

    check.run("oracle-vs-colorings", [&](CheckResult& r) {
        const auto& chi = need(oracle, "deletion-contraction polynomial");
        for (std::int64_t lambda = 0; lambda <= options.lambda_max; ++lambda) {
            std::int64_t count = count_colorings(g, lambda, limits);
            if (chi.evaluate(lambda) != count) {
                check.fail(r, "P(" + std::to_string(lambda) + ") = " + std::to_string(chi.evaluate(lambda)) +
                                  " but " + std::to_string(count) + " proper colourings");
            }
        }
        r.detail = r.detail.empty() ? "λ = 0.." + std::to_string(options.lambda_max) : r.detail;
    });

    check.run("racks-vs-oracle", [&](CheckResult& r) {
        const auto& a = need(via_racks, "rack expansion");
        const auto& b = need(oracle, "deletion-contraction polynomial");
        if (a != b) {
            check.fail(r, "rack expansion " + a.to_string() + " vs oracle " + b.to_string(),
                       detail::first_difference(a, b));
        } else {
            r.detail = a.to_string();
        }
    });

    if (options.expected) {
        check.run("expected-polynomial", [&](CheckResult& r) {
            for (const auto* p : {&via_racks, &oracle}) {
                const auto& computed = need(*p, "chromatic polynomial");
                if (computed != *options.expected) {
                    check.fail(r, "expected " + options.expected->to_string() + " but computed " + computed.to_string(),
                               detail::first_difference(*options.expected, computed));
                }
            }
        });
    }

    std::vector<Heap> multilinear;
    std::vector<Orientation> acyclic;
    check.run("orientation-heap-bijection", [&](CheckResult& r) {
        multilinear = enumerate_multilinear_heaps(g, limits);
        acyclic = acyclic_orientations(g, limits);
        for (const Heap& h : multilinear) {
            Orientation o = phi(h);
            if (!is_acyclic(g, o)) {
                check.fail(r, "phi gave a cyclic orientation", "heap " + format_heap(h));
            } else if (psi(g, o) != h) {
                check.fail(r, "psi(phi(F)) != F", "heap " + format_heap(h));
            }
        }
        for (const Orientation& o : acyclic) {
            if (phi(psi(g, o)) != o) {
                check.fail(r, "phi(psi(O)) != O", describe_orientation(g, o));
            }
        }
        if (multilinear.size() != acyclic.size()) {
            check.fail(r, std::to_string(multilinear.size()) + " multilinear heaps vs " +
                              std::to_string(acyclic.size()) + " acyclic orientations");
        }
        r.detail = r.detail.empty() ? std::to_string(acyclic.size()) + " acyclic orientations" : r.detail;
    });

    check.run("involution", [&](CheckResult& r) {
        for (const Heap& h : enumerate_multilinear_heaps(g, limits)) {
            if (auto failure = check_involution_on_heap(h, limits)) {
                check.fail(r, "involution property violated", *failure);
                return;
            }
        }
    });

    check.run("signed-rack-sum", [&](CheckResult& r) {
        for (const Heap& h : enumerate_multilinear_heaps(g, limits)) {
            if (!signed_rack_sum_holds(h, limits)) {
                check.fail(r, "sum of (-1)^k beta(k) != (-1)^|F|", "heap " + format_heap(h));
                return;
            }
        }
    });

    check.run("acyclic-orientations-at-minus-one", [&](CheckResult& r) {
        const auto& chi = need(via_racks, "rack expansion");
        std::int64_t lhs = sign_pow(n) * chi.evaluate(-1);
        std::int64_t count = acyclic_orientation_count(g, limits);
        r.detail = "(-1)^n P(-1) = " + std::to_string(lhs) + ", |A(G)| = " + std::to_string(count);
        if (lhs != count) {
            check.fail(r, r.detail);
        }
    });

    check.run("strict-pairs", [&](CheckResult& r) {
        const auto& chi = need(oracle, "deletion-contraction polynomial");
        for (std::int64_t lambda = 0; lambda <= std::min<std::int64_t>(3, options.lambda_max); ++lambda) {
            std::int64_t pairs = count_compatible_pairs(g, lambda, true, limits);
            if (pairs != chi.evaluate(lambda)) {
                check.fail(r, "λ = " + std::to_string(lambda) + ": " + std::to_string(pairs) + " strict pairs vs P = " +
                                  std::to_string(chi.evaluate(lambda)));
            }
        }
    });

    check.run("reciprocity", [&](CheckResult& r) {
        const auto& chi = need(via_racks, "rack expansion");
        for (std::int64_t lambda = 0; lambda <= options.lambda_max; ++lambda) {
            std::int64_t bar = chromatic_bar(g, lambda, limits);
            std::int64_t rhs = sign_pow(n) * chi.evaluate(-lambda);
            if (bar != rhs) {
                check.fail(r, "λ = " + std::to_string(lambda) + ": factorisation sum " + std::to_string(bar) +
                                  " vs (-1)^n P(-λ) = " + std::to_string(rhs));
            }
        }
    });

    check.run("weak-pairs", [&](CheckResult& r) {
        for (std::int64_t lambda = 0; lambda <= options.lambda_max; ++lambda) {
            std::int64_t bar = chromatic_bar(g, lambda, limits);
            std::int64_t pairs = count_compatible_pairs(g, lambda, false, limits);
            if (bar != pairs) {
                check.fail(r, "λ = " + std::to_string(lambda) + ": factorisation sum " + std::to_string(bar) + " vs " +
                                  std::to_string(pairs) + " weak pairs");
            }
        }
    });

    std::optional<CoefficientTables> tables;
    check.run("rack-partition-bridge", [&](CheckResult& r) {
        tables.emplace(g, limits);
        auto sums = multilinear_rack_sums(g, limits);
        for (std::size_t k = 0; k <= g.size(); ++k) {
            std::int64_t rhs = checked_mul(factorial(static_cast<unsigned>(k)), tables->pi(k));
            if (sums[k] != rhs) {
                check.fail(r, "k = " + std::to_string(k) + ": " + std::to_string(sums[k]) + " racks vs k! pi(k) = " +
                                  std::to_string(rhs));
            }
        }
    });

    check.run("coefficients", [&](CheckResult& r) {
        const auto& chi = need(oracle, "deletion-contraction polynomial");
        CoefficientTables t(g, limits);
        for (std::size_t rr = 0; rr <= g.size(); ++rr) {
            if (t.coefficient_a(rr) != chi.coeff(rr)) {
                check.fail(r, "a_" + std::to_string(rr) + " = " + std::to_string(t.coefficient_a(rr)) +
                                  " vs oracle " + std::to_string(chi.coeff(rr)));
            }
        }
    });

    check.run("sign-alternation", [&](CheckResult& r) {
        const auto& chi = need(oracle, "deletion-contraction polynomial");
        for (std::size_t rr = 0; rr <= g.size(); ++rr) {
            if (sign_pow(n - static_cast<std::int64_t>(rr)) * chi.coeff(rr) < 0) {
                check.fail(r, "a_" + std::to_string(rr) + " = " + std::to_string(chi.coeff(rr)) + " has the wrong sign");
            }
        }
    });

    // the graph's own order first, then seeded random ones
    std::vector<Graph> orders{g};
    {
        std::mt19937_64 rng(options.seed);
        std::vector<Vertex> perm(g.order());
        for (std::size_t i = 0; i < options.order_sweeps; ++i) {
            std::shuffle(perm.begin(), perm.end(), rng);
            orders.push_back(g.with_order(perm));
        }
    }

    check.run("unique-source-partitions", [&](CheckResult& r) {
        CoefficientTables t(g, limits);
        for (const Graph& og : orders) {
            for (std::size_t rr = 1; rr <= g.size(); ++rr) {
                std::int64_t lhs = sign_pow(n - static_cast<std::int64_t>(rr)) * t.coefficient_a(rr);
                std::int64_t count = theorem61_count(og, rr, limits);
                if (lhs != count) {
                    check.fail(r, "r = " + std::to_string(rr) + ": |a_r| = " + std::to_string(lhs) + " vs " +
                                      std::to_string(count) + " partition/orientation pairs",
                               "order " + format_word(og.order()));
                }
            }
        }
    });

    check.run("unique-source-partition-existence", [&](CheckResult& r) {
        r.status = CheckStatus::Info;
        for (std::size_t rr = 1; rr <= g.size(); ++rr) {
            r.detail += (rr > 1 ? ", " : "") + std::string("r=") + std::to_string(rr) + ": pairs " +
                        std::to_string(theorem61_count(g, rr, limits)) + " partitions " +
                        std::to_string(theorem61_partition_count(g, rr, limits));
        }
    });

    check.run("chains-vs-lower-special", [&](CheckResult& r) {
        CoefficientTables t(g, limits);
        for (const Graph& og : orders) {
            for (std::size_t k = 1; k <= g.size(); ++k) {
                std::int64_t chains = t.delta_chains(k);
                std::int64_t racks = lower_special_rack_count(og, k, limits);
                if (chains != racks) {
                    check.fail(r, "k = " + std::to_string(k) + ": " + std::to_string(chains) + " chains vs " +
                                      std::to_string(racks) + " lower-special racks",
                               "order " + format_word(og.order()));
                }
            }
        }
    });

    check.run("unique-source-linear-coefficient", [&](CheckResult& r) {
        if (g.size() == 0) {
            r.detail = "no vertices";
            return;
        }
        const auto& chi = need(oracle, "deletion-contraction polynomial");
        std::int64_t a1 = chi.coeff(1) < 0 ? -chi.coeff(1) : chi.coeff(1);
        for (const Graph& og : orders) {
            Vertex top = og.max_vertex(og.all_vertices());
            std::int64_t count = unique_source_count(og, top, limits);
            if (count != a1) {
                check.fail(r, "|a_1| = " + std::to_string(a1) + " vs " + std::to_string(count) +
                                  " orientations with unique source " + std::to_string(top),
                           "order " + format_word(og.order()));
            }
        }
        r.detail = r.detail.empty() ? "|a_1| = " + std::to_string(a1) : r.detail;
    });

    return report;
}

inline std::string format_report(const VerifyReport& report) {
    std::string out;
    for (const auto& c : report.checks) {
        out += std::string(status_name(c.status)) + "  " + c.name;
        if (!c.detail.empty()) {
            out += "  (" + c.detail + ")";
        }
        out += "\n";
        if (!c.witness.empty()) {
            out += "      witness: " + c.witness + "\n";
        }
    }
    return out;
}

inline nlohmann::json report_to_json(const VerifyReport& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : report.checks) {
        nlohmann::json j{{"name", c.name}, {"status", status_name(c.status)}, {"detail", c.detail}};
        if (!c.witness.empty()) {
            j["witness"] = c.witness;
        }
        checks.push_back(std::move(j));
    }
    return nlohmann::json{{"passed", report.passed()}, {"checks", std::move(checks)}};
}

}

#endif /* heaps_verify_hpp */
