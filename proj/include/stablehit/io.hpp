#pragma once

#include <stablehit/errors.hpp>
#include <stablehit/graph.hpp>

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace stablehit
{
    enum class ParseErrorKind
    {
        missing_header,
        malformed_header,
        duplicate_header,
        malformed_line,
        endpoint_out_of_range,
        self_loop,
        malformed_block
    };

    auto to_string(ParseErrorKind kind) -> std::string_view;

    class ParseError : public InputError
    {
    public:
        ParseError(ParseErrorKind kind, int line, const std::string & detail);

        auto kind() const -> ParseErrorKind { return _kind; }
        /// 1-based; 0 when the error is not tied to a line.
        auto line() const -> int { return _line; }

    private:
        ParseErrorKind _kind;
        int _line;
    };

    /// A DIMACS graph plus any blocks carried as `c block ...` comment lines.
    struct DimacsDocument
    {
        Graph graph;
        std::vector<VertexSet> blocks;
    };

    auto parse_dimacs(std::istream & in) -> Graph;
    auto parse_dimacs(std::string_view text) -> Graph;
    auto read_dimacs_document(std::istream & in) -> DimacsDocument;

    /// Canonical form: header, then edges u < v sorted, 1-based, one per line.
    auto emit_dimacs(const Graph & g) -> std::string;

    /// Canonical DIMACS with the partition embedded as `c block` lines after
    /// the header, so a single stream carries a whole ISR instance.
    auto emit_dimacs_with_blocks(const PartitionedGraph & pg) -> std::string;

    /// One block per line, space-separated 1-based ids. Blank lines skipped.
    auto parse_partition(std::istream & in, int n) -> std::vector<VertexSet>;
    auto parse_partition(std::string_view text, int n) -> std::vector<VertexSet>;
    auto emit_partition(const std::vector<VertexSet> & blocks) -> std::string;

    /// Graphviz rendering; blocks, when given, become clusters.
    auto to_dot(const Graph & g, const std::vector<VertexSet> & blocks = {}) -> std::string;
}
