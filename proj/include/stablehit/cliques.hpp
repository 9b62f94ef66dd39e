#pragma once

#include <stablehit/graph.hpp>

#include <span>
#include <vector>

namespace stablehit
{
    inline constexpr long long default_clique_node_budget = 10'000'000;

    /// Every maximum clique of a graph, each sorted, the list sorted
    /// lexicographically.
    struct CliqueSet
    {
        std::vector<VertexSet> cliques;
        int omega = 0;
    };

    /// One connected component of the clique intersection graph, with the
    /// union (d_set) and mutual intersection (f_set) of its cliques.
    struct CliqueComponent
    {
        std::vector<int> clique_indices;
        VertexSet d_set;
        VertexSet f_set;
    };

    /**
     * Exact enumeration by Bron-Kerbosch with Tomita pivoting on bitsets,
     * pruning branches that cannot reach the best size found so far. Pivot:
     * the vertex of P u X with most neighbours in P, lowest id on ties.
     * Throws InputError on the empty graph and BudgetExceeded once more than
     * node_budget recursive calls have been made.
     */
    auto maximum_cliques(const Graph & g, long long node_budget = default_clique_node_budget) -> CliqueSet;

    /// Vertex i is cs.cliques[i]; i ~ j iff the cliques share a vertex.
    auto clique_graph(const CliqueSet & cs) -> Graph;

    /// Ordered by smallest clique index.
    auto components(const CliqueSet & cs, const Graph & cg) -> std::vector<CliqueComponent>;
    auto components(const CliqueSet & cs) -> std::vector<CliqueComponent>;

    /// Integer form of omega > (2/3)(Delta + 1).
    constexpr auto hypothesis_met(int omega, int delta) -> bool
    {
        return 3 * omega > 2 * (delta + 1);
    }

    struct HajnalReport
    {
        int lhs = 0;     ///< |intersection| + |union|
        int rhs = 0;     ///< 2 * omega
        bool holds = false;
    };

    auto check_hajnal(const CliqueComponent & comp, const CliqueSet & cs) -> HajnalReport;

    /// Same check over an arbitrary nonempty sub-collection of cs.cliques.
    auto check_hajnal(std::span<const int> clique_indices, const CliqueSet & cs) -> HajnalReport;

    struct KostochkaReport
    {
        int component = 0;
        int f_size = 0;
        int bound = 0;   ///< 2 * omega - (Delta + 1)
        bool holds = false;
        bool hypothesis_met = false;
    };

    auto check_kostochka(const Graph & g, const CliqueSet & cs, std::span<const CliqueComponent> comps)
        -> std::vector<KostochkaReport>;

    auto set_union(std::span<const VertexSet> sets) -> VertexSet;
    auto set_intersection(std::span<const VertexSet> sets) -> VertexSet;
}
