#include <stablehit/isr.hpp>
#include <stablehit/errors.hpp>

#include <algorithm>
#include <iterator>

namespace stablehit
{
    auto verify_certificate(const PartitionedGraph & pg, const DominationCertificate & cert) -> CertificateCheck
    {
        CertificateCheck check;
        auto & g = pg.graph();
        auto in_range = [&](Vertex v) { return v >= 0 && v < g.size(); };

        if (! in_range(cert.pinned)
                || ! std::all_of(cert.x_set.begin(), cert.x_set.end(), in_range)
                || ! std::all_of(cert.y_set.begin(), cert.y_set.end(), in_range)
                || ! std::all_of(cert.j_set.begin(), cert.j_set.end(), [&](int b) { return b >= 0 && b < pg.block_count(); }))
            return check;

        auto pinned_block = pg.block_of(cert.pinned);
        std::vector<bool> in_j(pg.block_count(), false);
        bool j_ok = true;
        for (auto b : cert.j_set) {
            if (in_j[b] || b == pinned_block)
                j_ok = false;
            in_j[b] = true;
        }
        auto in_scope_vertex = [&](Vertex v) { return v == cert.pinned || in_j[pg.block_of(v)]; };
        check.in_scope = j_ok
            && std::all_of(cert.x_set.begin(), cert.x_set.end(), in_scope_vertex)
            && std::all_of(cert.y_set.begin(), cert.y_set.end(), in_scope_vertex);

        auto x = sorted_unique(cert.x_set);
        auto y = sorted_unique(cert.y_set);
        VertexSet common;
        std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(common));
        check.disjoint_stable_sets = common.empty() && x.size() == cert.x_set.size() && y.size() == cert.y_set.size()
            && g.is_stable(x) && g.is_stable(y);

        check.y_partial_isr = is_partial_isr(pg, y, &cert.j_set);

        auto x_bits = g.to_bitset(x);
        check.y_unique_x_neighbour = std::all_of(y.begin(), y.end(),
                [&](Vertex v) { return g.row(v).intersection_count(x_bits) == 1; });

        check.pinned_in_x = std::binary_search(x.begin(), x.end(), cert.pinned);

        auto d_bits = x_bits;
        d_bits.union_with(g.to_bitset(y));
        VertexSet dominated{cert.pinned};
        for (auto b : cert.j_set)
            dominated.insert(dominated.end(), pg.block(b).begin(), pg.block(b).end());
        for (auto v : sorted_unique(dominated))
            if (! g.row(v).intersects(d_bits))
                check.undominated.push_back(v);
        check.total_domination = check.undominated.empty();

        return check;
    }

    namespace
    {
        class CertificateSearch
        {
        public:
            CertificateSearch(const PartitionedGraph & pg, Vertex pinned, long long budget) :
                _pg(pg),
                _g(pg.graph()),
                _pinned(pinned),
                _budget(budget)
            {
                for (int b = 0; b < pg.block_count(); ++b)
                    if (b != pg.block_of(pinned))
                        _others.push_back(b);
            }

            auto run() -> std::optional<DominationCertificate>
            {
                for (std::size_t size = 1; size <= _others.size(); ++size) {
                    std::vector<int> j;
                    if (auto found = choose_j(0, size, j))
                        return found;
                }
                return std::nullopt;
            }

        private:
            auto tick() -> void
            {
                if (++_nodes > _budget)
                    throw BudgetExceeded("certificate search exceeded node budget of " + std::to_string(_budget));
            }

            auto choose_j(std::size_t from, std::size_t size, std::vector<int> & j) -> std::optional<DominationCertificate>
            {
                tick();
                if (j.size() == size)
                    return try_j(j);
                for (auto i = from; i + (size - j.size()) <= _others.size(); ++i) {
                    j.push_back(_others[i]);
                    if (auto found = choose_j(i + 1, size, j))
                        return found;
                    j.pop_back();
                }
                return std::nullopt;
            }

            auto try_j(const std::vector<int> & j) -> std::optional<DominationCertificate>
            {
                _scope = Bitset(_g.size());
                _scope.set(_pinned);
                for (auto b : j)
                    for (auto v : _pg.block(b))
                        _scope.set(v);

                // some vertex cannot be dominated from inside the scope at all
                for (auto v = _scope.first(); v != -1; v = _scope.next(v))
                    if (! _g.row(v).intersects(_scope))
                        return std::nullopt;

                std::vector<VertexSet> ys;
                VertexSet y;
                collect_partial_isrs(j, 0, y, ys);
                std::sort(ys.begin(), ys.end(), [](const VertexSet & a, const VertexSet & b) {
                    return a.size() != b.size() ? a.size() < b.size() : a < b;
                });

                for (auto & candidate_y : ys) {
                    if (auto x = find_x(candidate_y))
                        return DominationCertificate{j, std::move(*x), candidate_y, _pinned};
                }
                return std::nullopt;
            }

            auto collect_partial_isrs(const std::vector<int> & j, std::size_t idx, VertexSet & y,
                    std::vector<VertexSet> & out) -> void
            {
                tick();
                if (idx == j.size()) {
                    // pinned lies in X, which is stable, so its dominator must be in Y
                    bool hits_pinned = std::any_of(y.begin(), y.end(), [&](Vertex v) { return _g.adjacent(v, _pinned); });
                    if (hits_pinned)
                        out.push_back(sorted_unique(y));
                    return;
                }
                collect_partial_isrs(j, idx + 1, y, out);
                for (auto v : _pg.block(j[idx])) {
                    bool ok = std::none_of(y.begin(), y.end(), [&](Vertex u) { return _g.adjacent(u, v); });
                    if (! ok)
                        continue;
                    y.push_back(v);
                    collect_partial_isrs(j, idx + 1, y, out);
                    y.pop_back();
                }
            }

            auto find_x(const VertexSet & y) -> std::optional<VertexSet>
            {
                _y = y;
                _y_bits = _g.to_bitset(y);
                _x_candidates.clear();
                for (auto v = _scope.first(); v != -1; v = _scope.next(v))
                    if (v != _pinned && ! _y_bits.test(v) && ! _g.adjacent(v, _pinned))
                        _x_candidates.push_back(v);

                _y_hits.assign(y.size(), 0);
                for (std::size_t i = 0; i < y.size(); ++i)
                    if (_g.adjacent(y[i], _pinned))
                        _y_hits[i] = 1;

                for (std::size_t extra = 0; extra < y.size(); ++extra) {
                    VertexSet x{_pinned};
                    if (choose_x(0, extra, x))
                        return sorted_unique(x);
                }
                return std::nullopt;
            }

            auto choose_x(std::size_t from, std::size_t extra, VertexSet & x) -> bool
            {
                tick();
                if (x.size() == extra + 1)
                    return complete(x);
                for (auto i = from; i + (extra + 1 - x.size()) <= _x_candidates.size(); ++i) {
                    auto v = _x_candidates[i];
                    if (std::any_of(x.begin(), x.end(), [&](Vertex u) { return _g.adjacent(u, v); }))
                        continue;
                    bool overloaded = false;
                    for (std::size_t t = 0; t < _y.size(); ++t)
                        if (_g.adjacent(_y[t], v) && _y_hits[t] >= 1)
                            overloaded = true;
                    if (overloaded)
                        continue;

                    for (std::size_t t = 0; t < _y.size(); ++t)
                        if (_g.adjacent(_y[t], v))
                            ++_y_hits[t];
                    x.push_back(v);
                    if (choose_x(i + 1, extra, x))
                        return true;
                    x.pop_back();
                    for (std::size_t t = 0; t < _y.size(); ++t)
                        if (_g.adjacent(_y[t], v))
                            --_y_hits[t];
                }
                return false;
            }

            auto complete(const VertexSet & x) -> bool
            {
                if (std::any_of(_y_hits.begin(), _y_hits.end(), [](int h) { return h != 1; }))
                    return false;
                Bitset d = _g.to_bitset(x);
                d.union_with(_y_bits);
                for (auto v = _scope.first(); v != -1; v = _scope.next(v))
                    if (! _g.row(v).intersects(d))
                        return false;
                return true;
            }

            const PartitionedGraph & _pg;
            const Graph & _g;
            Vertex _pinned;
            long long _budget;
            long long _nodes = 0;
            std::vector<int> _others;

            Bitset _scope;
            VertexSet _y;
            Bitset _y_bits;
            std::vector<int> _y_hits;
            VertexSet _x_candidates;
        };
    }

    auto find_certificate_exact(const PartitionedGraph & pg, Vertex pinned, long long node_budget)
        -> std::optional<DominationCertificate>
    {
        if (pinned < 0 || pinned >= pg.graph().size())
            throw InputError("pinned vertex out of range");
        return CertificateSearch(pg, pinned, node_budget).run();
    }

    auto theorem4_bound_audit(const PartitionedGraph & pg, int k, const DominationCertificate & cert) -> BoundAudit
    {
        BoundAudit audit;
        audit.k = k;
        audit.j_size = int(cert.j_set.size());
        audit.lopsided_holds = lopsided_check(pg, k).holds;

        for (auto v : cert.x_set)
            audit.x_degree_sum += pg.cross_degree(v);
        for (auto v : cert.y_set)
            audit.y_degree_sum += pg.cross_degree(v);
        audit.x_cap = (long long)k * audit.j_size;
        for (auto b : cert.j_set) {
            auto size = (long long)pg.block(b).size();
            audit.y_cap += size - k;
            audit.block_size_sum += size;
        }
        audit.dominated_count = audit.block_size_sum + 1;

        auto total = audit.x_degree_sum + audit.y_degree_sum;
        audit.x_within_cap = audit.x_degree_sum <= audit.x_cap;
        audit.y_within_cap = audit.y_degree_sum <= audit.y_cap;
        audit.degree_sum_within_blocks = total <= audit.block_size_sum;
        audit.degree_sum_allows_domination = total >= audit.dominated_count;
        return audit;
    }
}
