#include <stablehit/isr.hpp>
#include <stablehit/errors.hpp>

#include <algorithm>
#include <limits>

namespace stablehit
{
    namespace
    {
        struct Frozen
        {
            Vertex x;
            VertexSet y_prime;
        };

        class StepCounter
        {
        public:
            explicit StepCounter(long long budget) :
                _budget(budget)
            {
            }

            auto tick() -> void
            {
                if (++_steps > _budget)
                    throw BudgetExceeded("augmentation exceeded step budget of " + std::to_string(_budget));
            }

            auto steps() const -> long long { return _steps; }

        private:
            long long _budget;
            long long _steps = 0;
        };

        /// Branch and bound for an ISR of the non-pinned blocks with
        /// R n N(x_l) = Y'_l for every frozen round, minimising |R n N(target)|.
        class ConstrainedMinimizer
        {
        public:
            ConstrainedMinimizer(const PartitionedGraph & pg, const std::vector<int> & blocks,
                    const std::vector<Frozen> & frozen, Vertex target, StepCounter & counter) :
                _pg(pg),
                _g(pg.graph()),
                _target_row(pg.graph().row(target)),
                _counter(counter),
                _picks(pg.block_count(), -1)
            {
                Bitset allowed(_g.size());
                for (auto b : blocks)
                    for (auto v : pg.block(b))
                        allowed.set(v);
                std::vector<Vertex> forced(pg.block_count(), -1);
                for (auto & f : frozen) {
                    for (auto v : _g.neighbours(f.x))
                        if (! std::binary_search(f.y_prime.begin(), f.y_prime.end(), v))
                            allowed.reset(v);
                    for (auto v : f.y_prime)
                        forced[pg.block_of(v)] = v;
                }

                std::vector<std::pair<int, int>> by_size;
                std::vector<Bitset> cands(pg.block_count());
                for (auto b : blocks) {
                    Bitset c(_g.size());
                    if (forced[b] != -1) {
                        if (allowed.test(forced[b]))
                            c.set(forced[b]);
                    }
                    else
                        for (auto v : pg.block(b))
                            if (allowed.test(v))
                                c.set(v);
                    by_size.emplace_back(c.count(), b);
                    cands[b] = std::move(c);
                }
                std::sort(by_size.begin(), by_size.end());
                for (auto [_, b] : by_size) {
                    _order.push_back(b);
                    _candidates.push_back(std::move(cands[b]));
                }
            }

            auto admissible(const std::vector<Vertex> & picks) const -> bool
            {
                Bitset chosen(_g.size());
                for (std::size_t d = 0; d < _order.size(); ++d) {
                    auto v = picks[_order[d]];
                    if (v == -1 || ! _candidates[d].test(v))
                        return false;
                    chosen.set(v);
                }
                for (auto v = chosen.first(); v != -1; v = chosen.next(v))
                    if (_g.row(v).intersects(chosen))
                        return false;
                return true;
            }

            auto cost(const std::vector<Vertex> & picks) const -> int
            {
                int c = 0;
                for (auto b : _order)
                    if (picks[b] != -1 && _target_row.test(picks[b]))
                        ++c;
                return c;
            }

            auto run(const std::vector<Vertex> & incumbent) -> std::optional<std::vector<Vertex>>
            {
                if (admissible(incumbent)) {
                    _best = incumbent;
                    _best_cost = cost(incumbent);
                }
                if (_best_cost > 0)
                    search(0, Bitset(_g.size()), 0);
                if (_best_cost == std::numeric_limits<int>::max())
                    return std::nullopt;
                return _best;
            }

        private:
            auto lower_bound(std::size_t depth, const Bitset & forbidden) const -> int
            {
                int forced_hits = 0;
                for (auto d = depth; d < _order.size(); ++d) {
                    Bitset open = _candidates[d];
                    open.intersect_with_complement(forbidden);
                    if (open.is_subset_of(_target_row))
                        ++forced_hits;
                }
                return forced_hits;
            }

            auto search(std::size_t depth, const Bitset & forbidden, int cost) -> void
            {
                _counter.tick();
                if (cost + lower_bound(depth, forbidden) >= _best_cost)
                    return;
                if (depth == _order.size()) {
                    _best = _picks;
                    _best_cost = cost;
                    return;
                }

                auto & cands = _candidates[depth];
                for (int pass = 0; pass < 2 && _best_cost > 0; ++pass)
                    for (Vertex v = cands.first(); v != -1 && _best_cost > 0; v = cands.next(v)) {
                        bool hits = _target_row.test(v);
                        if (hits != (pass == 1) || forbidden.test(v))
                            continue;
                        Bitset next_forbidden = forbidden;
                        next_forbidden.union_with(_g.row(v));
                        bool wiped_out = false;
                        for (auto d = depth + 1; d < _order.size() && ! wiped_out; ++d)
                            wiped_out = _candidates[d].is_subset_of(next_forbidden);
                        if (wiped_out)
                            continue;
                        _picks[_order[depth]] = v;
                        search(depth + 1, next_forbidden, cost + (hits ? 1 : 0));
                        _picks[_order[depth]] = -1;
                    }
            }

            const PartitionedGraph & _pg;
            const Graph & _g;
            const Bitset & _target_row;
            StepCounter & _counter;
            std::vector<int> _order;
            std::vector<Bitset> _candidates;
            std::vector<Vertex> _picks;
            std::vector<Vertex> _best;
            int _best_cost = std::numeric_limits<int>::max();
        };

        auto neighbours_among(const Graph & g, Vertex x, const std::vector<Vertex> & picks) -> VertexSet
        {
            VertexSet result;
            for (auto v : picks)
                if (v != -1 && g.adjacent(x, v))
                    result.push_back(v);
            return sorted_unique(std::move(result));
        }
    }

    auto to_string(AugmentResult::Kind kind) -> std::string
    {
        switch (kind) {
            case AugmentResult::Kind::isr: return "isr";
            case AugmentResult::Kind::certificate: return "certificate";
            case AugmentResult::Kind::budget_exhausted: return "budget_exhausted";
        }
        return "unknown";
    }

    auto find_isr_augmenting(const PartitionedGraph & pg, Vertex pinned, long long step_budget, Minimization mode)
        -> AugmentResult
    {
        auto & g = pg.graph();
        if (pinned < 0 || pinned >= g.size())
            throw InputError("pinned vertex out of range");

        // the pinned block plays the role of the last block throughout
        int pinned_block = pg.block_of(pinned);
        std::vector<int> others;
        for (int b = 0; b < pg.block_count(); ++b)
            if (b != pinned_block)
                others.push_back(b);

        AugmentResult result{AugmentResult::Kind::budget_exhausted, {}, {}, {}, {}, 0};
        StepCounter counter(step_budget);

        std::vector<AugmentationRound> rounds;
        Vertex x = pinned;
        std::vector<Vertex> current(pg.block_count(), -1);

        auto frozen_from = [&]() {
            std::vector<Frozen> frozen;
            for (auto & r : rounds)
                frozen.push_back({r.x, r.y_prime});
            return frozen;
        };

        auto resolve = [&](const std::vector<Vertex> & incumbent) {
            if (mode == Minimization::lazy)
                return incumbent;
            auto frozen = frozen_from();
            auto best = ConstrainedMinimizer(pg, others, frozen, x, counter).run(incumbent);
            if (! best)
                throw InvariantViolation("no admissible ISR although the previous one should qualify");
            return *best;
        };

        auto fill_state = [&]() {
            AugmentationState s;
            for (auto & r : rounds) {
                s.x_list.push_back(r.x);
                s.y_prime_history.push_back(r.y_prime);
                s.y_accum.insert(s.y_accum.end(), r.y_prime.begin(), r.y_prime.end());
            }
            if (s.x_list.empty() || s.x_list.back() != x)
                s.x_list.push_back(x);
            s.y_accum = sorted_unique(std::move(s.y_accum));
            s.current_isr = current;
            return s;
        };

        try {
            auto initial = find_isr_exact_on(pg, others, std::nullopt, step_budget);
            if (! initial)
                throw InputError("the blocks other than the pinned vertex's admit no ISR");
            current = initial->picks;
            current = resolve(current);

            while (true) {
                counter.tick();
                auto y_prime = neighbours_among(g, x, current);

                if (y_prime.empty()) {
                    if (rounds.empty()) {
                        Isr isr{current};
                        isr.picks[pinned_block] = pinned;
                        if (! is_isr(pg, isr))
                            throw InvariantViolation("augmentation produced an invalid ISR");
                        result.trace.push_back({TraceEvent::Kind::isr, 0, x, {}, isr.picks});
                        result.kind = AugmentResult::Kind::isr;
                        result.isr = std::move(isr);
                        break;
                    }

                    // x is a non-neighbour of everything frozen; swapping it in
                    // shrinks the Y' of the round that owns its block
                    int b = pg.block_of(x);
                    Vertex y = current[b];
                    int owner = -1;
                    for (std::size_t j = 0; j < rounds.size() && owner == -1; ++j)
                        if (std::binary_search(rounds[j].y_prime.begin(), rounds[j].y_prime.end(), y))
                            owner = int(j);
                    if (owner == -1)
                        throw InvariantViolation("exchange vertex is not frozen by any earlier round");

                    current[b] = x;
                    result.trace.push_back({TraceEvent::Kind::exchange, owner, x, {}, current, y});
                    x = rounds[owner].x;
                    rounds.resize(owner);
                    current = resolve(current);
                    continue;
                }

                rounds.push_back({x, y_prime, current});
                result.trace.push_back({TraceEvent::Kind::round, int(rounds.size()) - 1, x, y_prime, current});

                VertexSet xs, ys;
                for (auto & r : rounds) {
                    xs.push_back(r.x);
                    ys.insert(ys.end(), r.y_prime.begin(), r.y_prime.end());
                }
                xs = sorted_unique(std::move(xs));
                ys = sorted_unique(std::move(ys));
                auto d_bits = g.to_bitset(xs);
                d_bits.union_with(g.to_bitset(ys));

                std::vector<int> j_set;
                for (auto v : ys)
                    j_set.push_back(pg.block_of(v));
                std::sort(j_set.begin(), j_set.end());
                j_set.erase(std::unique(j_set.begin(), j_set.end()), j_set.end());

                Vertex next = -1;
                VertexSet scope;
                for (auto blk : j_set)
                    scope.insert(scope.end(), pg.block(blk).begin(), pg.block(blk).end());
                std::sort(scope.begin(), scope.end());
                for (auto v : scope)
                    if (! d_bits.test(v) && ! g.row(v).intersects(d_bits)) {
                        next = v;
                        break;
                    }

                if (next == -1) {
                    DominationCertificate cert{j_set, xs, ys, pinned};
                    if (! verify_certificate(pg, cert).valid())
                        throw InvariantViolation("augmentation produced an invalid certificate");
                    result.trace.push_back({TraceEvent::Kind::certificate, int(rounds.size()) - 1, x, {}, current});
                    result.kind = AugmentResult::Kind::certificate;
                    result.certificate = std::move(cert);
                    break;
                }

                x = next;
                current = resolve(current);
            }
        }
        catch (const BudgetExceeded &) {
            result.kind = AugmentResult::Kind::budget_exhausted;
        }

        result.state = fill_state();
        result.steps = counter.steps();
        return result;
    }
}
