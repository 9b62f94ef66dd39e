#pragma once

#include <stablehit/cliques.hpp>
#include <stablehit/graph.hpp>
#include <stablehit/isr.hpp>

#include <optional>
#include <string>
#include <vector>

namespace stablehit
{
    enum class HittingStatus
    {
        found_under_hypothesis,
        found_without_hypothesis,
        none_exists_proven,
        unknown,
        /// The ISR route failed although omega > (2/3)(Delta + 1), or a
        /// returned set did not verify. Always a bug.
        internal_error
    };

    auto to_string(HittingStatus status) -> std::string;

    /**
     * Per-component checks of the inequalities the existence argument relies
     * on, with t = (Delta + 1) / 3 and every comparison multiplied through by
     * 3 so it stays in integers:
     *   |F_i| > t,  |F_i| + |D_i| > 4t,
     *   every v in F_i has fewer than min{t, |F_i| - t} neighbours in the
     *   other F_j.
     */
    struct ProofStepCheck
    {
        int component = 0;
        int f_size = 0;
        int d_size = 0;
        int max_cross_degree = 0;
        bool f_exceeds_third = false;
        bool f_plus_d_exceeds_four_thirds = false;
        bool cross_degree_below_caps = false;

        auto all_hold() const -> bool
        {
            return f_exceeds_third && f_plus_d_exceeds_four_thirds && cross_degree_below_caps;
        }
    };

    struct HittingReport
    {
        int n = 0;
        int omega = 0;
        int delta = 0;
        bool hypothesis_met = false;
        int clique_count = 0;
        std::vector<CliqueComponent> components;
        std::vector<ProofStepCheck> proof_checks;
        std::optional<int> chosen_k;
        std::optional<VertexSet> stable_set;
        HittingStatus status = HittingStatus::unknown;
        /// "isr", "brute_force" or "none".
        std::string route = "none";
        bool budget_exhausted = false;
        std::string note;
    };

    struct HittingOptions
    {
        long long clique_node_budget = default_clique_node_budget;
        long long isr_node_budget = default_isr_node_budget;
        int brute_force_limit = 20;
        long long brute_force_budget = 50'000'000;
    };

    auto hitting_stable_set(const Graph & g, const HittingOptions & options = {}) -> HittingReport;

    /// Smallest k >= 1 for which the F-blocks satisfy the lopsided cap on
    /// cross-F degrees; nullopt if no k works or some F_i is empty.
    auto choose_k(std::span<const CliqueComponent> components, const Graph & g) -> std::optional<int>;

    auto proof_step_checks(std::span<const CliqueComponent> components, const Graph & g) -> std::vector<ProofStepCheck>;

    struct HittingCheck
    {
        bool holds = false;
        bool stable = false;
        std::optional<Edge> internal_edge;
        std::vector<VertexSet> missed;   ///< at most 10
    };

    auto verify_hitting(const Graph & g, const VertexSet & s) -> HittingCheck;
    auto verify_hitting(const Graph & g, const CliqueSet & cs, const VertexSet & s) -> HittingCheck;

    /**
     * Smallest stable set meeting every maximum clique, by iterative
     * deepening: branch on the vertices of the first clique not yet met.
     * nullopt proves that none exists. Throws InputError above `limit`
     * vertices and BudgetExceeded past `node_budget`.
     */
    auto brute_force_hitting(const Graph & g, int limit = 20, long long node_budget = 50'000'000)
        -> std::optional<VertexSet>;
    auto brute_force_hitting(const Graph & g, const CliqueSet & cs, int limit = 20, long long node_budget = 50'000'000)
        -> std::optional<VertexSet>;
}
