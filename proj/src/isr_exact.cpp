#include <stablehit/isr.hpp>
#include <stablehit/errors.hpp>

#include <algorithm>
#include <numeric>

namespace stablehit
{
    auto is_isr(const PartitionedGraph & pg, const Isr & isr) -> bool
    {
        if (int(isr.picks.size()) != pg.block_count())
            return false;
        for (int i = 0; i < pg.block_count(); ++i) {
            auto v = isr.picks[i];
            if (v < 0 || v >= pg.graph().size() || pg.block_of(v) != i)
                return false;
        }
        return pg.graph().is_stable(isr.picks);
    }

    auto is_partial_isr(const PartitionedGraph & pg, const VertexSet & s, const std::vector<int> * within) -> bool
    {
        std::vector<bool> used(pg.block_count(), false);
        for (auto v : s) {
            if (v < 0 || v >= pg.graph().size())
                return false;
            auto b = pg.block_of(v);
            if (used[b])
                return false;
            if (within && std::find(within->begin(), within->end(), b) == within->end())
                return false;
            used[b] = true;
        }
        return pg.graph().is_stable(s);
    }

    auto lopsided_check(const PartitionedGraph & pg, int k) -> LopsidedReport
    {
        if (k < 1)
            throw InputError("k must be at least 1");

        LopsidedReport report;
        for (int i = 0; i < pg.block_count(); ++i) {
            int size = int(pg.block(i).size());
            int cap = std::min(k, size - k);
            for (auto v : pg.block(i)) {
                int out = pg.cross_degree(v);
                if (out > cap || size < k)
                    report.violations.push_back({v, out, cap});
            }
        }
        report.holds = report.violations.empty();
        return report;
    }

    namespace
    {
        class IsrSearch
        {
        public:
            IsrSearch(const PartitionedGraph & pg, std::vector<int> order, std::optional<Vertex> pinned, long long budget) :
                _pg(pg),
                _order(std::move(order)),
                _pinned(pinned),
                _budget(budget),
                _picks(pg.block_count(), -1)
            {
                auto & g = pg.graph();
                for (auto b : _order) {
                    VertexSet candidates = pg.block(b);
                    if (pinned && pg.block_of(*pinned) == b)
                        candidates = {*pinned};
                    _candidates.push_back(g.to_bitset(candidates));
                }
            }

            auto run() -> std::optional<Isr>
            {
                Bitset forbidden(_pg.graph().size());
                if (! search(0, forbidden))
                    return std::nullopt;
                return Isr{_picks};
            }

        private:
            auto search(std::size_t depth, const Bitset & forbidden) -> bool
            {
                if (++_nodes > _budget)
                    throw BudgetExceeded("ISR search exceeded node budget of " + std::to_string(_budget));
                if (depth == _order.size())
                    return true;

                auto & cands = _candidates[depth];
                for (Vertex v = cands.first(); v != -1; v = cands.next(v)) {
                    if (forbidden.test(v))
                        continue;
                    Bitset next_forbidden = forbidden;
                    next_forbidden.union_with(_pg.graph().row(v));

                    bool wiped_out = false;
                    for (auto d = depth + 1; d < _order.size() && ! wiped_out; ++d)
                        wiped_out = _candidates[d].is_subset_of(next_forbidden);
                    if (wiped_out)
                        continue;

                    _picks[_order[depth]] = v;
                    if (search(depth + 1, next_forbidden))
                        return true;
                    _picks[_order[depth]] = -1;
                }
                return false;
            }

            const PartitionedGraph & _pg;
            std::vector<int> _order;
            std::optional<Vertex> _pinned;
            long long _budget;
            long long _nodes = 0;
            std::vector<Bitset> _candidates;
            std::vector<Vertex> _picks;
        };
    }

    auto find_isr_exact_on(const PartitionedGraph & pg, const std::vector<int> & use_blocks,
            std::optional<Vertex> pinned, long long node_budget) -> std::optional<Isr>
    {
        if (pinned) {
            if (*pinned < 0 || *pinned >= pg.graph().size())
                throw InputError("pinned vertex out of range");
            if (std::find(use_blocks.begin(), use_blocks.end(), pg.block_of(*pinned)) == use_blocks.end())
                throw InputError("pinned vertex lies outside the requested blocks");
        }

        auto effective_size = [&](int b) {
            return (pinned && pg.block_of(*pinned) == b) ? 1 : int(pg.block(b).size());
        };
        auto order = use_blocks;
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return std::pair(effective_size(a), a) < std::pair(effective_size(b), b);
        });

        return IsrSearch(pg, std::move(order), pinned, node_budget).run();
    }

    auto find_isr_exact(const PartitionedGraph & pg, std::optional<Vertex> pinned, long long node_budget)
        -> std::optional<Isr>
    {
        std::vector<int> all(pg.block_count());
        std::iota(all.begin(), all.end(), 0);
        return find_isr_exact_on(pg, all, pinned, node_budget);
    }
}
