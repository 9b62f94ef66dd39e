#pragma once

#include <stablehit/graph.hpp>

#include <cstdint>

namespace stablehit
{
    /// Each vertex of a cycle of length cycle_len replaced by a clique of size
    /// k, consecutive cliques completely joined. Clique i holds vertices
    /// i*k .. i*k+k-1. For cycle_len = 5: omega = 2k, Delta = 3k-1.
    auto gen_blown_up_cycle(int cycle_len, int k) -> Graph;

    /// Blocks (4,2,2,2,2): vertex i of the first block is joined to both
    /// vertices of block i+1. Every vertex has degree half its block size and
    /// no ISR exists.
    auto gen_haxell_gadget() -> PartitionedGraph;

    /// Each pair u < v, in lexicographic order, becomes an edge iff the next
    /// SplitMix64 unit() draw is < edge_prob.
    auto gen_random(int n, double edge_prob, std::uint64_t seed) -> Graph;

    /**
     * t disjoint copies of K_q; clique c holds vertices c*q .. c*q+q-1. With
     * `matching`, for each c the vertices at positions i = c (mod 2) are
     * joined to the same position in clique c+1 (cyclically when t is even),
     * so every vertex gets at most one cross edge and Delta = q. For t = 2
     * this is a perfect matching between the two cliques.
     */
    auto gen_linked_cliques(int q, int t, bool matching) -> Graph;

    /**
     * Random partitioned graph with stable blocks satisfying the lopsided
     * cap min{k, |V_i| - k} on every vertex's cross degree. Block sizes are
     * drawn from [k+1, max_block]; cross pairs are visited in shuffled order
     * and kept with probability edge_prob while both endpoints are under cap.
     */
    auto gen_random_lopsided(int r, int k, int max_block, double edge_prob, std::uint64_t seed) -> PartitionedGraph;

    /// Random partitioned graph with stable blocks of size 1..max_block and
    /// cross-block edges kept with probability edge_prob. No degree caps.
    auto gen_random_partitioned(int r, int max_block, double edge_prob, std::uint64_t seed) -> PartitionedGraph;
}
