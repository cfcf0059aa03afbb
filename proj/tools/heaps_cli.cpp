// Command-line front end: chromatic | orientations | racks | involute | coeffs | verify

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "heaps/heaps.hpp"

namespace {

using namespace heaps;
using nlohmann::json;

enum ExitCode : int {
    kOk = 0,
    kVerifyFailed = 1,
    kParseError = 2,
    kGuardError = 3,
    kInvalidArgument = 4,
};

// thrown for a bad --heap / --rack value so it maps to its own exit code
struct BadHeapArgument : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    bool json = false;
    std::string order;
    std::int64_t lambda_max = 4;
    std::size_t max_n = Limits{}.max_vertices;
    std::string file;
    std::string heap_word;
    std::string rack_text;
    std::string expect_path;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(ParseError::Kind::Malformed, 0, "cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Graph load_graph(const Options& opts) {
    Graph g = parse_edge_list(read_file(opts.file));
    if (!opts.order.empty()) {
        g = g.with_order(parse_order(opts.order, g.size()));
    }
    return g;
}

Limits limits_from(const Options& opts) {
    Limits limits;
    limits.max_vertices = opts.max_n;
    return limits;
}

Heap load_heap(const Graph& g, const std::string& text) {
    try {
        return heap_from_word(g, parse_word(text));
    } catch (const Error& e) {
        throw BadHeapArgument(std::string("invalid --heap: ") + e.what());
    }
}

Rack load_rack(const Heap& h, const std::string& text) {
    try {
        return Rack(h, parse_rack(text));
    } catch (const Error& e) {
        throw BadHeapArgument(std::string("invalid --rack: ") + e.what());
    }
}

json transfer_json(const std::optional<TransferPiece>& tp) {
    if (!tp) {
        return nullptr;
    }
    return json{{"vertex", tp->occurrence.vertex},
                {"occurrence", tp->occurrence.index},
                {"number", tp->number},
                {"layer", tp->layer},
                {"lonely", tp->lonely}};
}

std::string transfer_text(const std::optional<TransferPiece>& tp) {
    if (!tp) {
        return "none (fixed point)";
    }
    return "vertex " + std::to_string(tp->occurrence.vertex) + ", occurrence " +
           std::to_string(tp->occurrence.index) + ", number " + std::to_string(tp->number) + ", layer " +
           std::to_string(tp->layer) + (tp->lonely ? ", lonely" : "");
}

int cmd_chromatic(const Options& opts) {
    Graph g = load_graph(opts);
    IntPolynomial chi = chromatic_via_racks(g, limits_from(opts));
    if (opts.json) {
        std::cout << chi.to_json().dump() << "\n";
    } else {
        std::cout << "chromatic polynomial: " << chi << "\n";
        std::cout << "coefficients:";
        for (auto c : chi.coeffs()) {
            std::cout << " " << c;
        }
        std::cout << "\n";
    }
    return kOk;
}

int cmd_orientations(const Options& opts) {
    Graph g = load_graph(opts);
    Limits limits = limits_from(opts);
    std::int64_t total = acyclic_orientation_count(g, limits);
    std::vector<std::int64_t> unique(g.size());
    for (Vertex v = 0; v < g.size(); ++v) {
        unique[v] = unique_source_count(g, v, limits);
    }
    if (opts.json) {
        std::cout << json{{"acyclic_orientations", total}, {"unique_source", unique}}.dump() << "\n";
    } else {
        std::cout << "acyclic orientations: " << total << "\n";
        for (Vertex v = 0; v < g.size(); ++v) {
            std::cout << "unique source at " << v << ": " << unique[v] << "\n";
        }
    }
    return kOk;
}

int cmd_racks(const Options& opts) {
    Graph g = load_graph(opts);
    Limits limits = limits_from(opts);
    Heap h = load_heap(g, opts.heap_word);
    auto racks = enumerate_racks(h, limits);
    auto hist = beta_histogram(h, limits);

    json rows = json::array();
    std::ostringstream text;
    text << "heap: " << format_heap(h) << "\n";
    for (const Rack& t : racks) {
        Rack image = involute(t);
        bool fixed = image == t;
        rows.push_back({{"rack", format_rack(t)},
                        {"layers", t.layer_count()},
                        {"image", format_rack(image)},
                        {"fixed", fixed}});
        text << format_rack(t) << "  (" << t.layer_count() << " layers)  ->  " << format_rack(image)
             << (fixed ? "  [fixed point]" : "") << "\n";
    }
    text << "beta:";
    for (std::size_t k = 1; k < hist.size(); ++k) {
        text << " " << k << ":" << hist[k];
    }
    text << "\n";
    if (opts.json) {
        std::cout << json{{"heap", format_heap(h)}, {"racks", rows}, {"beta", hist}}.dump() << "\n";
    } else {
        std::cout << text.str();
    }
    return kOk;
}

int cmd_involute(const Options& opts) {
    Graph g = load_graph(opts);
    Heap h = load_heap(g, opts.heap_word);
    Rack t = load_rack(h, opts.rack_text);
    auto tp = transfer_piece(t);
    Rack image = involute(t);
    if (opts.json) {
        std::cout << json{{"heap", format_heap(h)},
                          {"rack", format_rack(t)},
                          {"transfer_piece", transfer_json(tp)},
                          {"result", format_rack(image)}}
                         .dump()
                  << "\n";
    } else {
        std::cout << "heap: " << format_heap(h) << "\n"
                  << "rack: " << format_rack(t) << "\n"
                  << "transfer piece: " << transfer_text(tp) << "\n"
                  << "result: " << format_rack(image) << "\n";
    }
    return kOk;
}

int cmd_coeffs(const Options& opts) {
    Graph g = load_graph(opts);
    Limits limits = limits_from(opts);
    CoefficientTables tables(g, limits);
    IntPolynomial oracle = chromatic_oracle(g, limits);
    json rows = json::array();
    std::ostringstream text;
    text << "r\ta_r\toracle\tpairs\n";
    for (std::size_t r = 0; r <= g.size(); ++r) {
        std::int64_t a = tables.coefficient_a(r);
        json pairs = nullptr;
        std::string pairs_text = "-";
        if (r >= 1 || g.size() == 0) {
            std::int64_t count = theorem61_count(g, r, limits);
            pairs = count;
            pairs_text = std::to_string(count);
        }
        rows.push_back({{"r", r}, {"a_r", a}, {"oracle", oracle.coeff(r)}, {"unique_source_pairs", pairs}});
        text << r << "\t" << a << "\t" << oracle.coeff(r) << "\t" << pairs_text << "\n";
    }
    if (opts.json) {
        std::cout << json{{"coefficients", rows}}.dump() << "\n";
    } else {
        std::cout << text.str();
    }
    return kOk;
}

int cmd_verify(const Options& opts) {
    Graph g = load_graph(opts);
    VerifyOptions vo;
    vo.limits = limits_from(opts);
    vo.lambda_max = opts.lambda_max;
    if (!opts.expect_path.empty()) {
        vo.expected = IntPolynomial::parse_json(read_file(opts.expect_path));
    }
    VerifyReport report = verify_graph(g, vo);
    if (opts.json) {
        std::cout << report_to_json(report).dump() << "\n";
    } else {
        std::cout << format_report(report);
        std::cout << (report.passed() ? "all identities hold\n" : "verification FAILED\n");
    }
    return report.passed() ? kOk : kVerifyFailed;
}

}

int main(int argc, char** argv) {
    CLI::App app{"Heaps of pieces, racks and chromatic polynomial identities"};
    app.require_subcommand(1);
    Options opts;
    app.add_flag("--json", opts.json, "Machine-readable JSON output");
    app.add_option("--order", opts.order, "Total order on vertices, smallest first: \"p0 p1 ... p(n-1)\"");
    app.add_option("--lambda-max", opts.lambda_max, "Largest lambda checked by verify")->check(CLI::Range(0, 64));
    app.add_option("--max-n", opts.max_n, "Vertex limit for exhaustive routines")->check(CLI::Range(0, 64));

    auto add = [&](const char* name, const char* help) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("file", opts.file, "Edge-list file")->required();
        return sub;
    };
    auto* chromatic = add("chromatic", "Chromatic polynomial from racks of multilinear heaps");
    auto* orientations = add("orientations", "Acyclic orientation and unique-source counts");
    auto* racks = add("racks", "All racks of a heap with beta histogram and involution pairing");
    racks->add_option("--heap", opts.heap_word, "Heap as a word, e.g. \"0 1 3 2 1\"")->required();
    auto* involute_cmd = add("involute", "One step of the heaps-and-racks involution");
    involute_cmd->add_option("--heap", opts.heap_word, "Heap as a word")->required();
    involute_cmd->add_option("--rack", opts.rack_text, "Rack layers, e.g. \"0 3 | 1 | 2 | 1\"")->required();
    auto* coeffs = add("coeffs", "Coefficients from independent partitions, the oracle, and unique-source pairs");
    auto* verify = add("verify", "Check every identity on a graph");
    verify->add_option("--expect", opts.expect_path, "Expected polynomial JSON file {\"coeffs\": [...]}");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kParseError;
    }

    try {
        if (*chromatic) return cmd_chromatic(opts);
        if (*orientations) return cmd_orientations(opts);
        if (*racks) return cmd_racks(opts);
        if (*involute_cmd) return cmd_involute(opts);
        if (*coeffs) return cmd_coeffs(opts);
        if (*verify) return cmd_verify(opts);
    } catch (const BadHeapArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalidArgument;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParseError;
    } catch (const GuardError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kGuardError;
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalidArgument;
    } catch (const OverflowError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kGuardError;
    }
    return kParseError;
}
