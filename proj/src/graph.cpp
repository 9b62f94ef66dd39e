#include <stablehit/graph.hpp>
#include <stablehit/errors.hpp>

#include <algorithm>
#include <string>

namespace stablehit
{
    Graph::Graph(int n) :
        _n(n)
    {
        if (n < 0)
            throw InputError("negative vertex count");
        _rows.assign(n, Bitset(n));
        _neighbours.resize(n);
    }

    Graph::Graph(int n, std::span<const Edge> edges) :
        Graph(n)
    {
        for (auto [u, v] : edges)
            add_edge(u, v);
    }

    auto Graph::check_vertex(Vertex v) const -> void
    {
        if (v < 0 || v >= _n)
            throw InputError("vertex " + std::to_string(v) + " out of range [0, " + std::to_string(_n) + ")");
    }

    auto Graph::add_edge(Vertex u, Vertex v) -> void
    {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            throw InputError("self-loop on vertex " + std::to_string(u));
        if (_rows[u].test(v))
            return;
        _rows[u].set(v);
        _rows[v].set(u);
        _neighbours[u].insert(std::upper_bound(_neighbours[u].begin(), _neighbours[u].end(), v), v);
        _neighbours[v].insert(std::upper_bound(_neighbours[v].begin(), _neighbours[v].end(), u), u);
    }

    auto Graph::max_degree() const -> int
    {
        int result = 0;
        for (Vertex v = 0; v < _n; ++v)
            result = std::max(result, degree(v));
        return result;
    }

    auto Graph::edge_count() const -> int
    {
        int total = 0;
        for (Vertex v = 0; v < _n; ++v)
            total += degree(v);
        return total / 2;
    }

    auto Graph::edges() const -> std::vector<Edge>
    {
        std::vector<Edge> result;
        for (Vertex u = 0; u < _n; ++u)
            for (auto v : _neighbours[u])
                if (u < v)
                    result.emplace_back(u, v);
        return result;
    }

    auto Graph::is_stable(std::span<const Vertex> s) const -> bool
    {
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j)
                if (adjacent(s[i], s[j]))
                    return false;
        return true;
    }

    auto Graph::is_clique(std::span<const Vertex> s) const -> bool
    {
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j)
                if (s[i] == s[j] || ! adjacent(s[i], s[j]))
                    return false;
        return true;
    }

    auto Graph::induced(std::span<const Vertex> keep) const -> Graph
    {
        std::vector<int> index(_n, -1);
        for (std::size_t i = 0; i < keep.size(); ++i) {
            check_vertex(keep[i]);
            index[keep[i]] = int(i);
        }
        Graph result(int(keep.size()));
        for (std::size_t i = 0; i < keep.size(); ++i)
            for (auto w : _neighbours[keep[i]])
                if (index[w] > int(i))
                    result.add_edge(int(i), index[w]);
        return result;
    }

    auto Graph::to_bitset(std::span<const Vertex> s) const -> Bitset
    {
        Bitset result(_n);
        for (auto v : s) {
            check_vertex(v);
            result.set(v);
        }
        return result;
    }

    PartitionedGraph::PartitionedGraph(Graph graph, std::vector<VertexSet> blocks) :
        _graph(std::move(graph)),
        _blocks(std::move(blocks)),
        _block_of(_graph.size(), -1)
    {
        for (std::size_t i = 0; i < _blocks.size(); ++i) {
            auto & b = _blocks[i];
            if (b.empty())
                throw InputError("block " + std::to_string(i + 1) + " is empty");
            std::sort(b.begin(), b.end());
            for (auto v : b) {
                if (v < 0 || v >= _graph.size())
                    throw InputError("block " + std::to_string(i + 1) + " names vertex " + std::to_string(v + 1)
                            + " outside the graph");
                if (_block_of[v] != -1)
                    throw InputError("vertex " + std::to_string(v + 1) + " appears in blocks "
                            + std::to_string(_block_of[v] + 1) + " and " + std::to_string(i + 1));
                _block_of[v] = int(i);
            }
        }
        for (Vertex v = 0; v < _graph.size(); ++v)
            if (_block_of[v] == -1)
                throw InputError("vertex " + std::to_string(v + 1) + " is not covered by any block");
    }

    auto PartitionedGraph::cross_degree(Vertex v) const -> int
    {
        int result = 0;
        for (auto w : _graph.neighbours(v))
            if (_block_of[w] != _block_of[v])
                ++result;
        return result;
    }

    auto sorted_unique(VertexSet s) -> VertexSet
    {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        return s;
    }
}
