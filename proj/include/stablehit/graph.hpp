#pragma once

#include <stablehit/bitset.hpp>

#include <span>
#include <utility>
#include <vector>

namespace stablehit
{
    using Vertex = int;

    /// Sorted ascending, no duplicates.
    using VertexSet = std::vector<Vertex>;

    using Edge = std::pair<Vertex, Vertex>;

    /**
     * Undirected simple graph on vertices 0..n-1. Holds both a bitset row and
     * a sorted neighbour list per vertex; add_edge keeps them in sync and
     * rejects loops and out-of-range ids, so adjacency is always symmetric.
     */
    class Graph
    {
    public:
        Graph() = default;
        explicit Graph(int n);
        Graph(int n, std::span<const Edge> edges);

        auto size() const -> int { return _n; }

        /// Idempotent for an existing edge.
        auto add_edge(Vertex u, Vertex v) -> void;

        auto adjacent(Vertex u, Vertex v) const -> bool { return _rows[u].test(v); }
        auto row(Vertex v) const -> const Bitset & { return _rows[v]; }
        auto neighbours(Vertex v) const -> std::span<const Vertex> { return _neighbours[v]; }
        auto degree(Vertex v) const -> int { return int(_neighbours[v].size()); }

        /// 0 for the empty graph.
        auto max_degree() const -> int;
        auto edge_count() const -> int;

        /// Each edge once with u < v, lexicographically sorted.
        auto edges() const -> std::vector<Edge>;

        auto is_stable(std::span<const Vertex> s) const -> bool;
        auto is_clique(std::span<const Vertex> s) const -> bool;

        /// Subgraph induced on `keep` (sorted); vertex keep[i] becomes i.
        auto induced(std::span<const Vertex> keep) const -> Graph;

        auto to_bitset(std::span<const Vertex> s) const -> Bitset;

        friend auto operator==(const Graph & a, const Graph & b) -> bool
        {
            return a._n == b._n && a._rows == b._rows;
        }

    private:
        auto check_vertex(Vertex v) const -> void;

        int _n = 0;
        std::vector<Bitset> _rows;
        std::vector<std::vector<Vertex>> _neighbours;
    };

    /**
     * A graph with an ordered partition of its vertices into nonempty blocks.
     * The constructor validates disjointness and exact cover; whether blocks
     * are stable sets or cliques is left to the consumer.
     */
    class PartitionedGraph
    {
    public:
        PartitionedGraph(Graph graph, std::vector<VertexSet> blocks);

        auto graph() const -> const Graph & { return _graph; }
        auto blocks() const -> const std::vector<VertexSet> & { return _blocks; }
        auto block(int i) const -> const VertexSet & { return _blocks[i]; }
        auto block_count() const -> int { return int(_blocks.size()); }
        auto block_of(Vertex v) const -> int { return _block_of[v]; }

        /// Neighbours of v lying in a block other than v's own.
        auto cross_degree(Vertex v) const -> int;

    private:
        Graph _graph;
        std::vector<VertexSet> _blocks;
        std::vector<int> _block_of;
    };

    auto sorted_unique(VertexSet s) -> VertexSet;
}
