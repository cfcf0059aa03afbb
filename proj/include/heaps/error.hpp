#ifndef heaps_error_hpp
#define heaps_error_hpp

#include <cstddef>
#include <stdexcept>
#include <string>

namespace heaps {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Edge-list, word, rack, order and polynomial text that cannot be read.
class ParseError : public Error {
public:
    enum class Kind { Malformed, VertexOutOfRange, Loop, DuplicateEdge, BadOrder };

    ParseError(Kind kind, std::size_t line, const std::string& what)
        : Error(describe(kind, line, what)), kind_(kind), line_(line) {}

    Kind kind() const noexcept { return kind_; }
    // 1-based line in the source text, 0 when not line oriented
    std::size_t line() const noexcept { return line_; }

private:
    static std::string describe(Kind kind, std::size_t line, const std::string& what) {
        static const char* names[] = {"malformed input", "vertex out of range", "loop",
                                      "duplicate edge", "invalid vertex order"};
        std::string msg = names[static_cast<int>(kind)];
        if (line != 0) {
            msg += " at line " + std::to_string(line);
        }
        return msg + ": " + what;
    }

    Kind kind_;
    std::size_t line_;
};

// A brute-force routine was asked for more work than its configured limit.
class GuardError : public Error {
public:
    using Error::Error;
};

// Heap/rack arguments that are not what the operation requires: a vertex
// outside the graph, layers that do not multiply to the heap, a heap that
// is not multilinear, a cyclic orientation handed to psi, ...
class InvalidArgument : public Error {
public:
    using Error::Error;
};

// Two heaps built over different graphs were combined.
class GraphMismatch : public InvalidArgument {
public:
    GraphMismatch() : InvalidArgument("heaps are over different graphs") {}
};

class OverflowError : public Error {
public:
    using Error::Error;
};

}

#endif /* heaps_error_hpp */
