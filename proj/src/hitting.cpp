#include <stablehit/hitting.hpp>
#include <stablehit/errors.hpp>

#include <algorithm>
#include <limits>

namespace stablehit
{
    auto to_string(HittingStatus status) -> std::string
    {
        switch (status) {
            case HittingStatus::found_under_hypothesis: return "FOUND_UNDER_HYPOTHESIS";
            case HittingStatus::found_without_hypothesis: return "FOUND_WITHOUT_HYPOTHESIS";
            case HittingStatus::none_exists_proven: return "NONE_EXISTS_PROVEN";
            case HittingStatus::unknown: return "UNKNOWN";
            case HittingStatus::internal_error: return "INTERNAL_ERROR";
        }
        return "UNKNOWN";
    }

    namespace
    {
        /// For each vertex of each F_i, its neighbours in the other F_j.
        auto cross_f_degrees(std::span<const CliqueComponent> components, const Graph & g) -> std::vector<std::vector<int>>
        {
            std::vector<int> owner(g.size(), -1);
            for (std::size_t i = 0; i < components.size(); ++i)
                for (auto v : components[i].f_set)
                    owner[v] = int(i);

            std::vector<std::vector<int>> result(components.size());
            for (std::size_t i = 0; i < components.size(); ++i)
                for (auto v : components[i].f_set) {
                    int c = 0;
                    for (auto w : g.neighbours(v))
                        if (owner[w] != -1 && owner[w] != int(i))
                            ++c;
                    result[i].push_back(c);
                }
            return result;
        }
    }

    auto choose_k(std::span<const CliqueComponent> components, const Graph & g) -> std::optional<int>
    {
        if (components.empty())
            return std::nullopt;
        int smallest = std::numeric_limits<int>::max();
        for (auto & c : components) {
            if (c.f_set.empty())
                return std::nullopt;
            smallest = std::min(smallest, int(c.f_set.size()));
        }

        auto cross = cross_f_degrees(components, g);
        for (int k = 1; k <= smallest; ++k) {
            bool ok = true;
            for (std::size_t i = 0; i < components.size() && ok; ++i) {
                int size = int(components[i].f_set.size());
                for (auto c : cross[i])
                    if (c > std::min(k, size - k)) {
                        ok = false;
                        break;
                    }
            }
            if (ok)
                return k;
        }
        return std::nullopt;
    }

    auto proof_step_checks(std::span<const CliqueComponent> components, const Graph & g) -> std::vector<ProofStepCheck>
    {
        long long delta_plus_one = g.max_degree() + 1;
        auto cross = cross_f_degrees(components, g);
        std::vector<ProofStepCheck> result;
        for (std::size_t i = 0; i < components.size(); ++i) {
            ProofStepCheck check;
            check.component = int(i);
            check.f_size = int(components[i].f_set.size());
            check.d_size = int(components[i].d_set.size());
            for (auto c : cross[i])
                check.max_cross_degree = std::max(check.max_cross_degree, c);

            long long f = check.f_size, d = check.d_size;
            check.f_exceeds_third = 3 * f > delta_plus_one;
            check.f_plus_d_exceeds_four_thirds = 3 * (f + d) > 4 * delta_plus_one;
            check.cross_degree_below_caps = std::all_of(cross[i].begin(), cross[i].end(), [&](long long c) {
                return 3 * c < delta_plus_one && 3 * c < 3 * f - delta_plus_one;
            });
            result.push_back(check);
        }
        return result;
    }

    auto verify_hitting(const Graph & g, const CliqueSet & cs, const VertexSet & s) -> HittingCheck
    {
        for (auto v : s)
            if (v < 0 || v >= g.size())
                throw InputError("vertex " + std::to_string(v + 1) + " is not in the graph");

        HittingCheck check;
        check.stable = true;
        for (std::size_t i = 0; i < s.size() && check.stable; ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j)
                if (g.adjacent(s[i], s[j])) {
                    check.stable = false;
                    check.internal_edge = Edge{std::min(s[i], s[j]), std::max(s[i], s[j])};
                    break;
                }

        auto bits = g.to_bitset(s);
        bool all_met = true;
        for (auto & c : cs.cliques)
            if (std::none_of(c.begin(), c.end(), [&](Vertex v) { return bits.test(v); })) {
                all_met = false;
                if (check.missed.size() < 10)
                    check.missed.push_back(c);
            }
        check.holds = check.stable && all_met;
        return check;
    }

    auto verify_hitting(const Graph & g, const VertexSet & s) -> HittingCheck
    {
        return verify_hitting(g, maximum_cliques(g), s);
    }

    namespace
    {
        class HittingSearch
        {
        public:
            HittingSearch(const Graph & g, const CliqueSet & cs, long long budget) :
                _g(g),
                _budget(budget)
            {
                for (auto & c : cs.cliques)
                    _cliques.push_back(g.to_bitset(c));
            }

            auto run() -> std::optional<VertexSet>
            {
                for (std::size_t depth = 1; depth <= _cliques.size(); ++depth) {
                    VertexSet chosen;
                    if (search(depth, chosen, Bitset(_g.size()), Bitset(_g.size())))
                        return sorted_unique(chosen);
                }
                return std::nullopt;
            }

        private:
            auto search(std::size_t depth, VertexSet & chosen, const Bitset & chosen_bits, const Bitset & blocked) -> bool
            {
                if (++_nodes > _budget)
                    throw BudgetExceeded("hitting set search exceeded node budget of " + std::to_string(_budget));

                const Bitset * unmet = nullptr;
                for (auto & c : _cliques)
                    if (! c.intersects(chosen_bits)) {
                        unmet = &c;
                        break;
                    }
                if (! unmet)
                    return true;
                if (chosen.size() == depth)
                    return false;

                for (Vertex v = unmet->first(); v != -1; v = unmet->next(v)) {
                    if (blocked.test(v))
                        continue;
                    Bitset next_chosen = chosen_bits, next_blocked = blocked;
                    next_chosen.set(v);
                    next_blocked.union_with(_g.row(v));
                    chosen.push_back(v);
                    if (search(depth, chosen, next_chosen, next_blocked))
                        return true;
                    chosen.pop_back();
                }
                return false;
            }

            const Graph & _g;
            long long _budget;
            long long _nodes = 0;
            std::vector<Bitset> _cliques;
        };
    }

    auto brute_force_hitting(const Graph & g, const CliqueSet & cs, int limit, long long node_budget)
        -> std::optional<VertexSet>
    {
        if (g.size() > limit)
            throw InputError("brute-force hitting search is limited to " + std::to_string(limit) + " vertices, graph has "
                    + std::to_string(g.size()));
        return HittingSearch(g, cs, node_budget).run();
    }

    auto brute_force_hitting(const Graph & g, int limit, long long node_budget) -> std::optional<VertexSet>
    {
        if (g.size() > limit)
            throw InputError("brute-force hitting search is limited to " + std::to_string(limit) + " vertices, graph has "
                    + std::to_string(g.size()));
        return brute_force_hitting(g, maximum_cliques(g), limit, node_budget);
    }

    namespace
    {
        auto fall_back(const Graph & g, const CliqueSet & cs, const HittingOptions & options, HittingReport & report) -> void
        {
            if (g.size() > options.brute_force_limit) {
                report.status = HittingStatus::unknown;
                report.note += "graph too large for exhaustive fallback; ";
                return;
            }
            report.route = "brute_force";
            auto s = brute_force_hitting(g, cs, options.brute_force_limit, options.brute_force_budget);
            if (! s) {
                if (report.hypothesis_met) {
                    report.status = HittingStatus::internal_error;
                    report.note += "exhaustive search found no hitting stable set under the hypothesis; ";
                }
                else
                    report.status = HittingStatus::none_exists_proven;
                return;
            }
            report.stable_set = std::move(*s);
            report.status = report.hypothesis_met ? HittingStatus::found_under_hypothesis
                                                  : HittingStatus::found_without_hypothesis;
        }
    }

    auto hitting_stable_set(const Graph & g, const HittingOptions & options) -> HittingReport
    {
        if (g.size() == 0)
            throw InputError("hitting set pipeline needs at least one vertex");

        HittingReport report;
        report.n = g.size();
        report.delta = g.max_degree();

        try {
            auto cs = maximum_cliques(g, options.clique_node_budget);
            report.omega = cs.omega;
            report.clique_count = int(cs.cliques.size());
            report.hypothesis_met = hypothesis_met(cs.omega, report.delta);
            report.components = components(cs);
            report.proof_checks = proof_step_checks(report.components, g);
            report.chosen_k = choose_k(report.components, g);

            if (report.hypothesis_met)
                for (auto & c : report.proof_checks)
                    if (! c.all_hold()) {
                        report.status = HittingStatus::internal_error;
                        report.note += "proof-step inequality failed on component " + std::to_string(c.component + 1) + "; ";
                        return report;
                    }

            bool degenerate = std::any_of(report.components.begin(), report.components.end(),
                    [](const CliqueComponent & c) { return c.f_set.empty(); });
            if (degenerate) {
                if (report.hypothesis_met) {
                    report.status = HittingStatus::internal_error;
                    report.note += "empty clique intersection under the hypothesis; ";
                    return report;
                }
                report.note += "some component has empty clique intersection; ";
                fall_back(g, cs, options, report);
            }
            else {
                VertexSet keep;
                for (auto & c : report.components)
                    keep.insert(keep.end(), c.f_set.begin(), c.f_set.end());
                keep = sorted_unique(std::move(keep));
                std::vector<int> index(g.size(), -1);
                for (std::size_t i = 0; i < keep.size(); ++i)
                    index[keep[i]] = int(i);

                std::vector<VertexSet> blocks;
                for (auto & c : report.components) {
                    VertexSet b;
                    for (auto v : c.f_set)
                        b.push_back(index[v]);
                    blocks.push_back(std::move(b));
                }
                PartitionedGraph h(g.induced(keep), std::move(blocks));

                report.route = "isr";
                if (auto isr = find_isr_exact(h, std::nullopt, options.isr_node_budget)) {
                    VertexSet s;
                    for (auto v : isr->picks)
                        s.push_back(keep[v]);
                    report.stable_set = sorted_unique(std::move(s));
                    report.status = report.hypothesis_met ? HittingStatus::found_under_hypothesis
                                                          : HittingStatus::found_without_hypothesis;
                }
                else if (report.hypothesis_met) {
                    report.status = HittingStatus::internal_error;
                    report.note += "no ISR of the clique intersections although the hypothesis holds; ";
                    return report;
                }
                else {
                    report.note += "clique intersections admit no ISR; ";
                    fall_back(g, cs, options, report);
                }
            }

            if (report.stable_set && ! verify_hitting(g, cs, *report.stable_set).holds) {
                report.status = HittingStatus::internal_error;
                report.note += "returned set failed verification; ";
            }
        }
        catch (const BudgetExceeded & e) {
            report.status = HittingStatus::unknown;
            report.budget_exhausted = true;
            report.note += std::string(e.what()) + "; ";
        }

        if (! report.note.empty())
            report.note.erase(report.note.size() - 2);
        return report;
    }
}
