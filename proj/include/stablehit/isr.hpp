#pragma once

#include <stablehit/graph.hpp>

#include <optional>
#include <string>
#include <vector>

namespace stablehit
{
    inline constexpr long long default_isr_node_budget = 50'000'000;

    /// Independent system of representatives: picks[i] is the vertex chosen
    /// from block i, and the picks are pairwise non-adjacent.
    struct Isr
    {
        std::vector<Vertex> picks;

        friend auto operator==(const Isr &, const Isr &) -> bool = default;
    };

    auto is_isr(const PartitionedGraph & pg, const Isr & isr) -> bool;

    /// Stable, and no two members share a block. When `within` is given,
    /// every member must also lie in one of those blocks.
    auto is_partial_isr(const PartitionedGraph & pg, const VertexSet & s,
            const std::vector<int> * within = nullptr) -> bool;

    struct LopsidedViolation
    {
        Vertex vertex;
        int out_degree;
        int cap;
    };

    /**
     * Checks that every vertex of block V_i has at most min{k, |V_i| - k}
     * neighbours outside V_i. Only cross-block neighbours are counted, so the
     * same check serves clique blocks and stable blocks. A block smaller
     * than k has a negative cap and reports every one of its vertices.
     */
    struct LopsidedReport
    {
        bool holds = true;
        std::vector<LopsidedViolation> violations;
    };

    auto lopsided_check(const PartitionedGraph & pg, int k) -> LopsidedReport;

    /**
     * Complete backtracking search for an ISR, optionally through `pinned`.
     * Blocks are taken in ascending size order (ties by index, the pinned
     * block counting as size one), vertices in id order, with forward
     * checking on the remaining blocks. Returns nullopt only when no ISR
     * exists; throws BudgetExceeded otherwise.
     */
    auto find_isr_exact(const PartitionedGraph & pg, std::optional<Vertex> pinned = std::nullopt,
            long long node_budget = default_isr_node_budget) -> std::optional<Isr>;

    /// As find_isr_exact, restricted to the listed blocks. picks[i] is -1 for
    /// blocks outside `use_blocks`.
    auto find_isr_exact_on(const PartitionedGraph & pg, const std::vector<int> & use_blocks,
            std::optional<Vertex> pinned = std::nullopt, long long node_budget = default_isr_node_budget)
        -> std::optional<Isr>;

    /**
     * Witness that no ISR passes through `pinned`, in the form produced by
     * the augmentation argument: j_set never contains pinned's block, x_set
     * and y_set are disjoint stable sets inside V_J u {pinned}, y_set is a
     * partial ISR of V_J, each y has exactly one neighbour in x_set, pinned
     * is in x_set, and x_set u y_set totally dominates V_J u {pinned}.
     */
    struct DominationCertificate
    {
        std::vector<int> j_set;
        VertexSet x_set;
        VertexSet y_set;
        Vertex pinned = -1;

        friend auto operator==(const DominationCertificate &, const DominationCertificate &) -> bool = default;
    };

    struct CertificateCheck
    {
        bool in_scope = false;              ///< J excludes pinned's block; X, Y inside V_J u {pinned}
        bool disjoint_stable_sets = false;  ///< condition 1
        bool y_partial_isr = false;         ///< condition 2
        bool y_unique_x_neighbour = false;  ///< condition 3
        bool pinned_in_x = false;           ///< condition 4
        bool total_domination = false;
        std::vector<Vertex> undominated;

        auto valid() const -> bool
        {
            return in_scope && disjoint_stable_sets && y_partial_isr && y_unique_x_neighbour && pinned_in_x
                && total_domination;
        }
    };

    auto verify_certificate(const PartitionedGraph & pg, const DominationCertificate & cert) -> CertificateCheck;

    /**
     * Exhaustive certificate search. J ranges over subsets of the blocks
     * other than pinned's, by size then lexicographically; for each J, Y
     * ranges over nonempty partial ISRs of V_J and then X over sets
     * containing pinned, both by size then lexicographically. Returns the
     * first valid certificate or nullopt. Throws BudgetExceeded.
     */
    auto find_certificate_exact(const PartitionedGraph & pg, Vertex pinned,
            long long node_budget = default_isr_node_budget) -> std::optional<DominationCertificate>;

    /// Degree-sum bookkeeping behind the lopsided existence argument. Uses
    /// cross-block degrees, which equal degrees when blocks are stable.
    struct BoundAudit
    {
        int k = 0;
        int j_size = 0;
        long long x_degree_sum = 0;
        long long x_cap = 0;            ///< k * |J|
        long long y_degree_sum = 0;
        long long y_cap = 0;            ///< sum over J of (|V_i| - k)
        long long block_size_sum = 0;   ///< |V_J|
        long long dominated_count = 0;  ///< |V_J| + 1, vertices that need a neighbour in D
        bool lopsided_holds = false;
        bool x_within_cap = false;
        bool y_within_cap = false;
        bool degree_sum_within_blocks = false;    ///< x + y sums <= |V_J|
        bool degree_sum_allows_domination = false; ///< x + y sums >= |V_J| + 1

        auto gap() const -> long long { return block_size_sum - (x_degree_sum + y_degree_sum); }
    };

    auto theorem4_bound_audit(const PartitionedGraph & pg, int k, const DominationCertificate & cert) -> BoundAudit;

    /// How each round re-solves for the ISR of the non-pinned blocks.
    enum class Minimization
    {
        /// Branch and bound to a true minimum of |R n N(x_i)| under the
        /// frozen constraints. Certificates then prove non-existence.
        exact,
        /// Keep the previous ISR whenever it is still admissible. Exercises
        /// the exchange step; certificates remain valid but are not proofs.
        lazy
    };

    struct AugmentationRound
    {
        Vertex x;
        VertexSet y_prime;
        std::vector<Vertex> isr;   ///< R_i, -1 at pinned's block
    };

    struct AugmentationState
    {
        std::vector<Vertex> x_list;
        VertexSet y_accum;
        std::vector<Vertex> current_isr;
        std::vector<VertexSet> y_prime_history;
    };

    struct TraceEvent
    {
        enum class Kind { round, exchange, isr, certificate };
        Kind kind;
        int index;                  ///< 0-based round index
        Vertex x;
        VertexSet y_prime;
        std::vector<Vertex> isr;
        Vertex removed = -1;        ///< exchange only
    };

    struct AugmentResult
    {
        enum class Kind { isr, certificate, budget_exhausted };
        Kind kind;
        std::optional<Isr> isr;
        std::optional<DominationCertificate> certificate;
        AugmentationState state;
        std::vector<TraceEvent> trace;
        long long steps = 0;
    };

    /**
     * Runs the augmentation argument for an ISR through `pinned`: starting
     * from x_1 = pinned, repeatedly re-solve for an ISR R of the other blocks
     * that keeps R n N(x_l) = Y'_l frozen for earlier rounds while
     * minimising Y'_i = R n N(x_i), then pick the lowest-id x_{i+1} in the
     * blocks hit by Y_i with no neighbour in X_i u Y_i. Ends with an ISR
     * (Y'_1 empty), a certificate (no x_{i+1}), or budget exhaustion.
     * Throws InputError if the other blocks admit no ISR at all.
     */
    auto find_isr_augmenting(const PartitionedGraph & pg, Vertex pinned, long long step_budget,
            Minimization mode = Minimization::exact) -> AugmentResult;

    auto to_string(AugmentResult::Kind kind) -> std::string;
}
