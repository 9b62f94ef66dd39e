#include <stablehit/io.hpp>

#include <charconv>
#include <sstream>

namespace stablehit
{
    namespace
    {
        auto tokenize(std::string_view line) -> std::vector<std::string_view>
        {
            std::vector<std::string_view> result;
            std::size_t i = 0;
            while (i < line.size()) {
                while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
                    ++i;
                auto start = i;
                while (i < line.size() && ! (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
                    ++i;
                if (i > start)
                    result.push_back(line.substr(start, i - start));
            }
            return result;
        }

        auto parse_int(std::string_view token) -> std::optional<long long>
        {
            long long value = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec != std::errc{} || ptr != token.data() + token.size())
                return std::nullopt;
            return value;
        }

        auto parse_block_ids(const std::vector<std::string_view> & tokens, std::size_t from, int n, int line_no)
            -> VertexSet
        {
            VertexSet block;
            for (auto i = from; i < tokens.size(); ++i) {
                auto id = parse_int(tokens[i]);
                if (! id)
                    throw ParseError(ParseErrorKind::malformed_block, line_no, "bad vertex id '" + std::string(tokens[i]) + "'");
                if (*id < 1 || *id > n)
                    throw ParseError(ParseErrorKind::endpoint_out_of_range, line_no,
                            "vertex " + std::to_string(*id) + " outside 1.." + std::to_string(n));
                block.push_back(Vertex(*id - 1));
            }
            if (block.empty())
                throw ParseError(ParseErrorKind::malformed_block, line_no, "empty block");
            return block;
        }
    }

    auto to_string(ParseErrorKind kind) -> std::string_view
    {
        switch (kind) {
            case ParseErrorKind::missing_header: return "missing header";
            case ParseErrorKind::malformed_header: return "malformed header";
            case ParseErrorKind::duplicate_header: return "duplicate header";
            case ParseErrorKind::malformed_line: return "malformed line";
            case ParseErrorKind::endpoint_out_of_range: return "endpoint out of range";
            case ParseErrorKind::self_loop: return "self-loop";
            case ParseErrorKind::malformed_block: return "malformed block";
        }
        return "unknown";
    }

    ParseError::ParseError(ParseErrorKind kind, int line, const std::string & detail) :
        InputError((line > 0 ? "line " + std::to_string(line) + ": " : std::string{})
                + std::string(to_string(kind)) + ": " + detail),
        _kind(kind),
        _line(line)
    {
    }

    auto read_dimacs_document(std::istream & in) -> DimacsDocument
    {
        std::optional<Graph> graph;
        std::vector<VertexSet> blocks;
        std::string line;
        int line_no = 0;

        while (std::getline(in, line)) {
            ++line_no;
            auto tokens = tokenize(line);
            if (tokens.empty())
                continue;
            if (tokens[0] == "c") {
                if (tokens.size() >= 2 && tokens[1] == "block") {
                    if (! graph)
                        throw ParseError(ParseErrorKind::missing_header, line_no, "block line before 'p edge' header");
                    blocks.push_back(parse_block_ids(tokens, 2, graph->size(), line_no));
                }
                continue;
            }
            if (tokens[0] == "p") {
                if (graph)
                    throw ParseError(ParseErrorKind::duplicate_header, line_no, "second 'p' line");
                if (tokens.size() != 4 || (tokens[1] != "edge" && tokens[1] != "col"))
                    throw ParseError(ParseErrorKind::malformed_header, line_no, "expected 'p edge <n> <m>'");
                auto n = parse_int(tokens[2]);
                auto m = parse_int(tokens[3]);
                if (! n || ! m || *n < 0 || *m < 0 || *n > 10'000'000)
                    throw ParseError(ParseErrorKind::malformed_header, line_no, "bad vertex or edge count");
                graph.emplace(int(*n));
                continue;
            }
            if (tokens[0] == "e") {
                if (! graph)
                    throw ParseError(ParseErrorKind::missing_header, line_no, "edge line before 'p edge' header");
                if (tokens.size() != 3)
                    throw ParseError(ParseErrorKind::malformed_line, line_no, "expected 'e <u> <v>'");
                auto u = parse_int(tokens[1]);
                auto v = parse_int(tokens[2]);
                if (! u || ! v)
                    throw ParseError(ParseErrorKind::malformed_line, line_no, "non-integer endpoint");
                for (auto x : {*u, *v})
                    if (x < 1 || x > graph->size())
                        throw ParseError(ParseErrorKind::endpoint_out_of_range, line_no,
                                "endpoint " + std::to_string(x) + " outside 1.." + std::to_string(graph->size()));
                if (*u == *v)
                    throw ParseError(ParseErrorKind::self_loop, line_no, "edge " + std::to_string(*u) + " " + std::to_string(*v));
                graph->add_edge(Vertex(*u - 1), Vertex(*v - 1));
                continue;
            }
            throw ParseError(ParseErrorKind::malformed_line, line_no, "unknown line type '" + std::string(tokens[0]) + "'");
        }

        if (! graph)
            throw ParseError(ParseErrorKind::missing_header, 0, "no 'p edge' line found");

        return DimacsDocument{std::move(*graph), std::move(blocks)};
    }

    auto parse_dimacs(std::istream & in) -> Graph
    {
        return read_dimacs_document(in).graph;
    }

    auto parse_dimacs(std::string_view text) -> Graph
    {
        std::istringstream in{std::string(text)};
        return parse_dimacs(in);
    }

    namespace
    {
        auto emit_edges(const Graph & g, std::string & out) -> void
        {
            for (auto [u, v] : g.edges())
                out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
        }

        auto header(const Graph & g) -> std::string
        {
            return "p edge " + std::to_string(g.size()) + " " + std::to_string(g.edge_count()) + "\n";
        }
    }

    auto emit_dimacs(const Graph & g) -> std::string
    {
        auto out = header(g);
        emit_edges(g, out);
        return out;
    }

    auto emit_dimacs_with_blocks(const PartitionedGraph & pg) -> std::string
    {
        auto out = header(pg.graph());
        for (auto & b : pg.blocks()) {
            out += "c block";
            for (auto v : b)
                out += " " + std::to_string(v + 1);
            out += "\n";
        }
        emit_edges(pg.graph(), out);
        return out;
    }

    auto parse_partition(std::istream & in, int n) -> std::vector<VertexSet>
    {
        std::vector<VertexSet> result;
        std::string line;
        int line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            auto tokens = tokenize(line);
            if (tokens.empty() || tokens.front().front() == '#')
                continue;
            result.push_back(parse_block_ids(tokens, 0, n, line_no));
        }
        return result;
    }

    auto parse_partition(std::string_view text, int n) -> std::vector<VertexSet>
    {
        std::istringstream in{std::string(text)};
        return parse_partition(in, n);
    }

    auto emit_partition(const std::vector<VertexSet> & blocks) -> std::string
    {
        std::string out;
        for (auto & b : blocks) {
            for (std::size_t i = 0; i < b.size(); ++i)
                out += (i ? " " : "") + std::to_string(b[i] + 1);
            out += "\n";
        }
        return out;
    }

    auto to_dot(const Graph & g, const std::vector<VertexSet> & blocks) -> std::string
    {
        std::string out = "graph G {\n";
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            out += "  subgraph cluster_" + std::to_string(i + 1) + " {\n    label=\"V" + std::to_string(i + 1) + "\";\n";
            for (auto v : blocks[i])
                out += "    " + std::to_string(v + 1) + ";\n";
            out += "  }\n";
        }
        if (blocks.empty())
            for (Vertex v = 0; v < g.size(); ++v)
                out += "  " + std::to_string(v + 1) + ";\n";
        for (auto [u, v] : g.edges())
            out += "  " + std::to_string(u + 1) + " -- " + std::to_string(v + 1) + ";\n";
        out += "}\n";
        return out;
    }
}
