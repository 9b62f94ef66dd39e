#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace oracle
{
    auto all_subsets_maximum_cliques(const Graph & g) -> std::vector<VertexSet>
    {
        int n = g.size();
        std::vector<std::uint32_t> adj(n, 0);
        for (auto [u, v] : g.edges()) {
            adj[u] |= 1u << v;
            adj[v] |= 1u << u;
        }
        int best = 0;
        std::vector<std::uint32_t> found;
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            bool clique = true;
            for (int v = 0; v < n && clique; ++v)
                if ((mask >> v) & 1)
                    clique = (mask & ~(1u << v) & ~adj[v]) == 0;
            if (! clique)
                continue;
            int size = std::popcount(mask);
            if (size > best) {
                best = size;
                found.clear();
            }
            if (size == best)
                found.push_back(mask);
        }
        std::vector<VertexSet> result;
        for (auto mask : found) {
            VertexSet s;
            for (int v = 0; v < n; ++v)
                if ((mask >> v) & 1)
                    s.push_back(v);
            result.push_back(s);
        }
        std::sort(result.begin(), result.end());
        return result;
    }

    auto max_degree(const Graph & g) -> int
    {
        std::vector<int> deg(g.size(), 0);
        for (auto [u, v] : g.edges()) {
            ++deg[u];
            ++deg[v];
        }
        return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
    }

    auto transversal_count(const PartitionedGraph & pg) -> long long
    {
        long long total = 1;
        for (auto & b : pg.blocks())
            total *= (long long)b.size();
        return total;
    }

    namespace
    {
        auto odometer(const PartitionedGraph & pg, const std::vector<int> & blocks, std::optional<Vertex> pinned)
            -> std::optional<std::vector<Vertex>>
        {
            auto & g = pg.graph();
            std::vector<std::size_t> digit(blocks.size(), 0);
            while (true) {
                std::vector<Vertex> pick;
                for (std::size_t i = 0; i < blocks.size(); ++i)
                    pick.push_back(pg.block(blocks[i])[digit[i]]);
                bool ok = ! pinned || std::find(pick.begin(), pick.end(), *pinned) != pick.end();
                for (std::size_t i = 0; i < pick.size() && ok; ++i)
                    for (std::size_t j = i + 1; j < pick.size() && ok; ++j)
                        ok = ! g.adjacent(pick[i], pick[j]);
                if (ok)
                    return pick;

                std::size_t pos = 0;
                while (pos < blocks.size()) {
                    if (++digit[pos] < pg.block(blocks[pos]).size())
                        break;
                    digit[pos] = 0;
                    ++pos;
                }
                if (pos == blocks.size())
                    return std::nullopt;
            }
        }
    }

    auto cartesian_isr(const PartitionedGraph & pg, std::optional<Vertex> pinned) -> std::optional<std::vector<Vertex>>
    {
        std::vector<int> all(pg.block_count());
        for (int i = 0; i < pg.block_count(); ++i)
            all[i] = i;
        return odometer(pg, all, pinned);
    }

    auto cartesian_isr_on(const PartitionedGraph & pg, const std::vector<int> & blocks) -> bool
    {
        if (blocks.empty())
            return true;
        return odometer(pg, blocks, std::nullopt).has_value();
    }

    auto all_subsets_hitting(const Graph & g, const std::vector<VertexSet> & cliques) -> std::optional<VertexSet>
    {
        int n = g.size();
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            bool stable = true;
            for (auto [u, v] : g.edges())
                if (((mask >> u) & 1) && ((mask >> v) & 1)) {
                    stable = false;
                    break;
                }
            if (! stable)
                continue;
            bool hits = std::all_of(cliques.begin(), cliques.end(), [&](const VertexSet & c) {
                return std::any_of(c.begin(), c.end(), [&](Vertex v) { return (mask >> v) & 1; });
            });
            if (hits) {
                VertexSet s;
                for (int v = 0; v < n; ++v)
                    if ((mask >> v) & 1)
                        s.push_back(v);
                return s;
            }
        }
        return std::nullopt;
    }

    auto union_size(const std::vector<VertexSet> & sets) -> int
    {
        std::set<Vertex> all;
        for (auto & s : sets)
            all.insert(s.begin(), s.end());
        return int(all.size());
    }

    auto intersection_size(const std::vector<VertexSet> & sets) -> int
    {
        if (sets.empty())
            return 0;
        int count = 0;
        for (auto v : sets.front())
            if (std::all_of(sets.begin(), sets.end(),
                        [&](const VertexSet & s) { return std::find(s.begin(), s.end(), v) != s.end(); }))
                ++count;
        return count;
    }
}
