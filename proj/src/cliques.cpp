#include <stablehit/cliques.hpp>
#include <stablehit/errors.hpp>

#include <algorithm>
#include <iterator>

namespace stablehit
{
    namespace
    {
        class MaximumCliqueSearch
        {
        public:
            MaximumCliqueSearch(const Graph & g, long long budget) :
                _g(g),
                _budget(budget)
            {
            }

            auto run() -> std::vector<VertexSet>
            {
                Bitset p(_g.size()), x(_g.size());
                for (Vertex v = 0; v < _g.size(); ++v)
                    p.set(v);
                VertexSet r;
                expand(r, p, x);
                return std::move(_found);
            }

        private:
            auto pivot(const Bitset & p, const Bitset & x) const -> Vertex
            {
                Vertex best = -1;
                int best_count = -1;
                // lowest id wins ties, so scan P u X in id order
                Bitset px = p;
                px.union_with(x);
                for (Vertex u = px.first(); u != -1; u = px.next(u)) {
                    int c = p.intersection_count(_g.row(u));
                    if (c > best_count) {
                        best = u;
                        best_count = c;
                    }
                }
                return best;
            }

            auto expand(VertexSet & r, Bitset & p, Bitset & x) -> void
            {
                if (++_nodes > _budget)
                    throw BudgetExceeded("maximum clique enumeration exceeded node budget of " + std::to_string(_budget));

                if (int(r.size()) + p.count() < _best)
                    return;

                if (p.empty()) {
                    if (x.empty()) {
                        if (int(r.size()) > _best) {
                            _best = int(r.size());
                            _found.clear();
                        }
                        auto sorted = r;
                        std::sort(sorted.begin(), sorted.end());
                        _found.push_back(std::move(sorted));
                    }
                    return;
                }

                auto u = pivot(p, x);
                Bitset branch = p;
                branch.intersect_with_complement(_g.row(u));

                for (Vertex v = branch.first(); v != -1; v = branch.next(v)) {
                    Bitset new_p = p, new_x = x;
                    new_p.intersect_with(_g.row(v));
                    new_x.intersect_with(_g.row(v));
                    r.push_back(v);
                    expand(r, new_p, new_x);
                    r.pop_back();
                    p.reset(v);
                    x.set(v);
                    if (int(r.size()) + p.count() < _best)
                        return;
                }
            }

            const Graph & _g;
            long long _budget;
            long long _nodes = 0;
            int _best = 0;
            std::vector<VertexSet> _found;
        };
    }

    auto maximum_cliques(const Graph & g, long long node_budget) -> CliqueSet
    {
        if (g.size() == 0)
            throw InputError("maximum clique enumeration needs at least one vertex");

        CliqueSet result;
        result.cliques = MaximumCliqueSearch(g, node_budget).run();
        std::sort(result.cliques.begin(), result.cliques.end());
        result.omega = int(result.cliques.front().size());
        return result;
    }

    auto clique_graph(const CliqueSet & cs) -> Graph
    {
        int m = int(cs.cliques.size());
        Graph cg(m);
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                auto & a = cs.cliques[i];
                auto & b = cs.cliques[j];
                VertexSet common;
                std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
                if (! common.empty())
                    cg.add_edge(i, j);
            }
        return cg;
    }

    auto set_union(std::span<const VertexSet> sets) -> VertexSet
    {
        VertexSet result;
        for (auto & s : sets)
            result.insert(result.end(), s.begin(), s.end());
        return sorted_unique(std::move(result));
    }

    auto set_intersection(std::span<const VertexSet> sets) -> VertexSet
    {
        if (sets.empty())
            return {};
        VertexSet result = sets.front();
        for (std::size_t i = 1; i < sets.size(); ++i) {
            VertexSet next;
            std::set_intersection(result.begin(), result.end(), sets[i].begin(), sets[i].end(), std::back_inserter(next));
            result = std::move(next);
        }
        return result;
    }

    auto components(const CliqueSet & cs, const Graph & cg) -> std::vector<CliqueComponent>
    {
        std::vector<CliqueComponent> result;
        std::vector<bool> seen(cg.size(), false);
        for (int start = 0; start < cg.size(); ++start) {
            if (seen[start])
                continue;
            CliqueComponent comp;
            std::vector<int> stack{start};
            seen[start] = true;
            while (! stack.empty()) {
                int c = stack.back();
                stack.pop_back();
                comp.clique_indices.push_back(c);
                for (auto d : cg.neighbours(c))
                    if (! seen[d]) {
                        seen[d] = true;
                        stack.push_back(d);
                    }
            }
            std::sort(comp.clique_indices.begin(), comp.clique_indices.end());
            std::vector<VertexSet> members;
            for (auto c : comp.clique_indices)
                members.push_back(cs.cliques[c]);
            comp.d_set = set_union(members);
            comp.f_set = set_intersection(members);
            result.push_back(std::move(comp));
        }
        return result;
    }

    auto components(const CliqueSet & cs) -> std::vector<CliqueComponent>
    {
        return components(cs, clique_graph(cs));
    }

    auto check_hajnal(std::span<const int> clique_indices, const CliqueSet & cs) -> HajnalReport
    {
        std::vector<VertexSet> members;
        for (auto c : clique_indices)
            members.push_back(cs.cliques.at(c));
        HajnalReport report;
        report.lhs = int(set_intersection(members).size() + set_union(members).size());
        report.rhs = 2 * cs.omega;
        report.holds = report.lhs >= report.rhs;
        return report;
    }

    auto check_hajnal(const CliqueComponent & comp, const CliqueSet & cs) -> HajnalReport
    {
        HajnalReport report;
        report.lhs = int(comp.f_set.size() + comp.d_set.size());
        report.rhs = 2 * cs.omega;
        report.holds = report.lhs >= report.rhs;
        return report;
    }

    auto check_kostochka(const Graph & g, const CliqueSet & cs, std::span<const CliqueComponent> comps)
        -> std::vector<KostochkaReport>
    {
        int delta = g.max_degree();
        std::vector<KostochkaReport> result;
        for (std::size_t i = 0; i < comps.size(); ++i) {
            KostochkaReport r;
            r.component = int(i);
            r.f_size = int(comps[i].f_set.size());
            r.bound = 2 * cs.omega - (delta + 1);
            r.holds = r.f_size >= r.bound;
            r.hypothesis_met = hypothesis_met(cs.omega, delta);
            result.push_back(r);
        }
        return result;
    }
}
