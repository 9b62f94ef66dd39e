#include <stablehit/generators.hpp>
#include <stablehit/errors.hpp>
#include <stablehit/prng.hpp>

#include <algorithm>
#include <string>

namespace stablehit
{
    auto gen_blown_up_cycle(int cycle_len, int k) -> Graph
    {
        if (cycle_len < 3)
            throw InputError("cycle length must be at least 3, got " + std::to_string(cycle_len));
        if (k < 1)
            throw InputError("clique size must be at least 1, got " + std::to_string(k));

        Graph g(cycle_len * k);
        for (int c = 0; c < cycle_len; ++c) {
            int next = (c + 1) % cycle_len;
            for (int i = 0; i < k; ++i) {
                for (int j = i + 1; j < k; ++j)
                    g.add_edge(c * k + i, c * k + j);
                for (int j = 0; j < k; ++j)
                    g.add_edge(c * k + i, next * k + j);
            }
        }
        return g;
    }

    auto gen_haxell_gadget() -> PartitionedGraph
    {
        Graph g(12);
        std::vector<VertexSet> blocks{{0, 1, 2, 3}};
        for (int i = 0; i < 4; ++i) {
            Vertex b0 = 4 + 2 * i, b1 = 5 + 2 * i;
            blocks.push_back({b0, b1});
            g.add_edge(i, b0);
            g.add_edge(i, b1);
        }
        return PartitionedGraph(std::move(g), std::move(blocks));
    }

    auto gen_random(int n, double edge_prob, std::uint64_t seed) -> Graph
    {
        if (n < 0)
            throw InputError("vertex count must be non-negative");
        if (! (edge_prob >= 0.0 && edge_prob <= 1.0))
            throw InputError("edge probability must lie in [0, 1]");

        SplitMix64 rng(seed);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.unit() < edge_prob)
                    g.add_edge(u, v);
        return g;
    }

    auto gen_linked_cliques(int q, int t, bool matching) -> Graph
    {
        if (q < 2 || t < 2)
            throw InputError("linked cliques need q >= 2 and t >= 2");

        Graph g(q * t);
        for (int c = 0; c < t; ++c)
            for (int i = 0; i < q; ++i)
                for (int j = i + 1; j < q; ++j)
                    g.add_edge(c * q + i, c * q + j);

        if (matching)
            for (int c = 0; c < t; ++c) {
                if (c + 1 == t && t % 2 == 1)
                    break;
                int next = (c + 1) % t;
                for (int i = c % 2; i < q; i += 2)
                    g.add_edge(c * q + i, next * q + i);
            }
        return g;
    }

    namespace
    {
        auto check_partition_params(int r, int max_block, double edge_prob) -> void
        {
            if (r < 1)
                throw InputError("need at least one block");
            if (max_block < 1)
                throw InputError("block size bound must be positive");
            if (! (edge_prob >= 0.0 && edge_prob <= 1.0))
                throw InputError("edge probability must lie in [0, 1]");
        }

        auto layout_blocks(const std::vector<int> & sizes) -> std::vector<VertexSet>
        {
            std::vector<VertexSet> blocks;
            Vertex next = 0;
            for (auto s : sizes) {
                VertexSet b;
                for (int i = 0; i < s; ++i)
                    b.push_back(next++);
                blocks.push_back(std::move(b));
            }
            return blocks;
        }
    }

    auto gen_random_lopsided(int r, int k, int max_block, double edge_prob, std::uint64_t seed) -> PartitionedGraph
    {
        check_partition_params(r, max_block, edge_prob);
        if (k < 1 || max_block < k + 1)
            throw InputError("lopsided instances need k >= 1 and max_block > k");

        SplitMix64 rng(seed);
        std::vector<int> sizes;
        for (int i = 0; i < r; ++i)
            sizes.push_back(rng.between(k + 1, max_block));
        auto blocks = layout_blocks(sizes);
        int n = blocks.empty() ? 0 : blocks.back().back() + 1;

        std::vector<int> block_of(n), cap(n), degree(n, 0);
        for (int i = 0; i < r; ++i)
            for (auto v : blocks[i]) {
                block_of[v] = i;
                cap[v] = std::min(k, sizes[i] - k);
            }

        std::vector<Edge> pairs;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (block_of[u] != block_of[v])
                    pairs.emplace_back(u, v);
        rng.shuffle(pairs);

        Graph g(n);
        for (auto [u, v] : pairs)
            if (degree[u] < cap[u] && degree[v] < cap[v] && rng.unit() < edge_prob) {
                g.add_edge(u, v);
                ++degree[u];
                ++degree[v];
            }
        return PartitionedGraph(std::move(g), std::move(blocks));
    }

    auto gen_random_partitioned(int r, int max_block, double edge_prob, std::uint64_t seed) -> PartitionedGraph
    {
        check_partition_params(r, max_block, edge_prob);

        SplitMix64 rng(seed);
        std::vector<int> sizes;
        for (int i = 0; i < r; ++i)
            sizes.push_back(rng.between(1, max_block));
        auto blocks = layout_blocks(sizes);
        int n = blocks.back().back() + 1;

        std::vector<int> block_of(n);
        for (int i = 0; i < r; ++i)
            for (auto v : blocks[i])
                block_of[v] = i;

        Graph g(n);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (block_of[u] != block_of[v] && rng.unit() < edge_prob)
                    g.add_edge(u, v);
        return PartitionedGraph(std::move(g), std::move(blocks));
    }
}
