#include <stablehit/json_io.hpp>

namespace stablehit
{
    using nlohmann::json;

    auto to_json_ids(const VertexSet & s) -> json
    {
        auto result = json::array();
        for (auto v : s)
            result.push_back(v + 1);
        return result;
    }

    namespace
    {
        auto picks_json(const std::vector<Vertex> & picks) -> json
        {
            auto result = json::array();
            for (auto v : picks)
                result.push_back(v == -1 ? json(nullptr) : json(v + 1));
            return result;
        }

        auto component_json(int index, const CliqueComponent & c) -> json
        {
            auto cliques = json::array();
            for (auto i : c.clique_indices)
                cliques.push_back(i + 1);
            return {
                {"id", index + 1},
                {"cliques", cliques},
                {"d_set", to_json_ids(c.d_set)},
                {"f_set", to_json_ids(c.f_set)},
                {"d_size", c.d_set.size()},
                {"f_size", c.f_set.size()}
            };
        }
    }

    auto cliques_json(const Graph & g, const CliqueSet & cs, std::span<const CliqueComponent> comps) -> json
    {
        auto cliques = json::array();
        for (auto & c : cs.cliques)
            cliques.push_back(to_json_ids(c));
        auto components = json::array();
        for (std::size_t i = 0; i < comps.size(); ++i)
            components.push_back(component_json(int(i), comps[i]));
        return {
            {"schema", schema::cliques},
            {"n", g.size()},
            {"omega", cs.omega},
            {"delta", g.max_degree()},
            {"cliques", cliques},
            {"components", components}
        };
    }

    auto verify_json(const Graph & g, const CliqueSet & cs, std::span<const CliqueComponent> comps) -> json
    {
        auto delta = g.max_degree();
        auto kostochka = check_kostochka(g, cs, comps);
        auto components = json::array();
        bool hajnal_all = true, kostochka_all = true;
        for (std::size_t i = 0; i < comps.size(); ++i) {
            auto h = check_hajnal(comps[i], cs);
            auto & k = kostochka[i];
            hajnal_all = hajnal_all && h.holds;
            kostochka_all = kostochka_all && k.holds;
            components.push_back({
                {"id", i + 1},
                {"d_size", comps[i].d_set.size()},
                {"f_size", comps[i].f_set.size()},
                {"hajnal", {{"lhs", h.lhs}, {"rhs", h.rhs}, {"holds", h.holds}}},
                {"kostochka", {{"f_size", k.f_size}, {"bound", k.bound}, {"holds", k.holds}}}
            });
        }
        return {
            {"schema", schema::verify},
            {"n", g.size()},
            {"omega", cs.omega},
            {"delta", delta},
            {"hypothesis_met", hypothesis_met(cs.omega, delta)},
            {"hajnal_holds", hajnal_all},
            {"kostochka_holds", kostochka_all},
            {"components", components}
        };
    }

    auto isr_json(const PartitionedGraph & pg, const Isr & isr) -> json
    {
        auto picks = json::object();
        for (int i = 0; i < pg.block_count(); ++i)
            picks[std::to_string(i + 1)] = isr.picks[i] + 1;
        return picks;
    }

    auto certificate_json(const PartitionedGraph & pg, const DominationCertificate & cert) -> json
    {
        auto check = verify_certificate(pg, cert);
        auto j_set = json::array();
        for (auto b : cert.j_set)
            j_set.push_back(b + 1);
        return {
            {"j", j_set},
            {"x", to_json_ids(cert.x_set)},
            {"y", to_json_ids(cert.y_set)},
            {"pinned", cert.pinned + 1},
            {"verification", {
                {"valid", check.valid()},
                {"in_scope", check.in_scope},
                {"disjoint_stable_sets", check.disjoint_stable_sets},
                {"y_partial_isr", check.y_partial_isr},
                {"y_unique_x_neighbour", check.y_unique_x_neighbour},
                {"pinned_in_x", check.pinned_in_x},
                {"total_domination", check.total_domination},
                {"undominated", to_json_ids(check.undominated)}
            }}
        };
    }

    auto certificate_from_json(const json & j) -> DominationCertificate
    {
        DominationCertificate cert;
        for (int b : j.at("j"))
            cert.j_set.push_back(b - 1);
        for (int v : j.at("x"))
            cert.x_set.push_back(v - 1);
        for (int v : j.at("y"))
            cert.y_set.push_back(v - 1);
        cert.pinned = j.at("pinned").get<int>() - 1;
        return cert;
    }

    auto audit_json(const BoundAudit & a) -> json
    {
        return {
            {"k", a.k},
            {"j_size", a.j_size},
            {"x_degree_sum", a.x_degree_sum},
            {"x_cap", a.x_cap},
            {"y_degree_sum", a.y_degree_sum},
            {"y_cap", a.y_cap},
            {"block_size_sum", a.block_size_sum},
            {"dominated_count", a.dominated_count},
            {"gap", a.gap()},
            {"lopsided_holds", a.lopsided_holds},
            {"x_within_cap", a.x_within_cap},
            {"y_within_cap", a.y_within_cap},
            {"degree_sum_within_blocks", a.degree_sum_within_blocks},
            {"degree_sum_allows_domination", a.degree_sum_allows_domination}
        };
    }

    auto trace_json(const std::vector<TraceEvent> & trace) -> json
    {
        auto result = json::array();
        for (auto & e : trace) {
            json entry;
            switch (e.kind) {
                case TraceEvent::Kind::round: entry["event"] = "round"; break;
                case TraceEvent::Kind::exchange: entry["event"] = "exchange"; break;
                case TraceEvent::Kind::isr: entry["event"] = "isr"; break;
                case TraceEvent::Kind::certificate: entry["event"] = "certificate"; break;
            }
            entry["index"] = e.index + 1;
            entry["x"] = e.x + 1;
            entry["y_prime"] = to_json_ids(e.y_prime);
            entry["r"] = picks_json(e.isr);
            if (e.kind == TraceEvent::Kind::exchange)
                entry["removed"] = e.removed + 1;
            result.push_back(std::move(entry));
        }
        return result;
    }

    auto augmentation_json(const PartitionedGraph & pg, const AugmentResult & result, bool with_trace) -> json
    {
        json j = {{"outcome", to_string(result.kind)}, {"steps", result.steps}};
        if (result.isr)
            j["isr"] = isr_json(pg, *result.isr);
        if (result.certificate)
            j["certificate"] = certificate_json(pg, *result.certificate);
        if (result.kind == AugmentResult::Kind::budget_exhausted) {
            auto & s = result.state;
            auto history = json::array();
            for (auto & y : s.y_prime_history)
                history.push_back(to_json_ids(y));
            j["state"] = {
                {"x_list", to_json_ids(s.x_list)},
                {"y_accum", to_json_ids(s.y_accum)},
                {"current_isr", picks_json(s.current_isr)},
                {"y_prime_history", history}
            };
        }
        if (with_trace)
            j["trace"] = trace_json(result.trace);
        return j;
    }

    auto hitting_json(const HittingReport & r) -> json
    {
        auto comps = json::array();
        for (std::size_t i = 0; i < r.components.size(); ++i) {
            auto c = component_json(int(i), r.components[i]);
            if (i < r.proof_checks.size()) {
                auto & p = r.proof_checks[i];
                c["max_cross_f_degree"] = p.max_cross_degree;
                c["proof_checks"] = {
                    {"f_exceeds_third", p.f_exceeds_third},
                    {"f_plus_d_exceeds_four_thirds", p.f_plus_d_exceeds_four_thirds},
                    {"cross_degree_below_caps", p.cross_degree_below_caps}
                };
            }
            comps.push_back(std::move(c));
        }
        return {
            {"schema", schema::hitting},
            {"n", r.n},
            {"omega", r.omega},
            {"delta", r.delta},
            {"hypothesis_met", r.hypothesis_met},
            {"clique_count", r.clique_count},
            {"components", comps},
            {"chosen_k", r.chosen_k ? json(*r.chosen_k) : json(nullptr)},
            {"stable_set", r.stable_set ? to_json_ids(*r.stable_set) : json(nullptr)},
            {"status", to_string(r.status)},
            {"route", r.route},
            {"budget_exhausted", r.budget_exhausted},
            {"note", r.note}
        };
    }
}
