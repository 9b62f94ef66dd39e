#include <stablehit/cli.hpp>
#include <stablehit/cliques.hpp>
#include <stablehit/errors.hpp>
#include <stablehit/generators.hpp>
#include <stablehit/hitting.hpp>
#include <stablehit/io.hpp>
#include <stablehit/isr.hpp>
#include <stablehit/json_io.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace stablehit::cli
{
    namespace
    {
        using nlohmann::json;

        enum class Format { json, text, dot };

        struct RunConfig
        {
            std::string subcommand;
            std::string generator;
            std::string input_path;
            std::string partition_path;
            std::string partition_out;
            Format format = Format::text;
            std::uint64_t seed = 1;
            long long budget = 10'000'000;
            std::optional<int> k_override;
            std::optional<int> pinned_vertex;
            bool trace = false;
            bool exact = false;
            bool augment = false;
            bool certificate = false;

            int cycle_len = 5, k = 1, n = 10, q = 4, t = 2, r = 5, max_block = 6;
            double p = 0.5;
            bool matching = false;
        };

        auto read_input(const RunConfig & cfg, std::istream & in) -> DimacsDocument
        {
            if (cfg.input_path.empty() || cfg.input_path == "-")
                return read_dimacs_document(in);
            std::ifstream file(cfg.input_path);
            if (! file)
                throw InputError("cannot open " + cfg.input_path);
            return read_dimacs_document(file);
        }

        auto write_text_file(const std::string & path, const std::string & text) -> void
        {
            std::ofstream file(path);
            if (! file)
                throw InputError("cannot write " + path);
            file << text;
        }

        auto ids_text(const VertexSet & s) -> std::string
        {
            std::string out = "{";
            for (std::size_t i = 0; i < s.size(); ++i)
                out += (i ? " " : "") + std::to_string(s[i] + 1);
            return out + "}";
        }

        auto run_gen(const RunConfig & cfg, std::ostream & out) -> int
        {
            if (cfg.generator == "haxell-gadget" || cfg.generator == "lopsided") {
                auto pg = cfg.generator == "haxell-gadget"
                    ? gen_haxell_gadget()
                    : gen_random_lopsided(cfg.r, cfg.k, cfg.max_block, cfg.p, cfg.seed);
                if (! cfg.partition_out.empty())
                    write_text_file(cfg.partition_out, emit_partition(pg.blocks()));
                out << (cfg.format == Format::dot ? to_dot(pg.graph(), pg.blocks()) : emit_dimacs_with_blocks(pg));
                return success;
            }

            Graph g;
            if (cfg.generator == "blown-cycle")
                g = gen_blown_up_cycle(cfg.cycle_len, cfg.k);
            else if (cfg.generator == "random")
                g = gen_random(cfg.n, cfg.p, cfg.seed);
            else if (cfg.generator == "linked-cliques")
                g = gen_linked_cliques(cfg.q, cfg.t, cfg.matching);
            else
                throw InputError("unknown generator " + cfg.generator);
            out << (cfg.format == Format::dot ? to_dot(g) : emit_dimacs(g));
            return success;
        }

        auto clique_graph_dot(const CliqueSet & cs, const std::vector<CliqueComponent> & comps) -> std::string
        {
            static const char * palette[] = {"red", "blue", "darkgreen", "orange", "purple", "brown", "cyan", "magenta"};
            std::vector<int> comp_of(cs.cliques.size());
            for (std::size_t i = 0; i < comps.size(); ++i)
                for (auto c : comps[i].clique_indices)
                    comp_of[c] = int(i);
            std::string out = "graph cliques {\n";
            for (std::size_t c = 0; c < cs.cliques.size(); ++c)
                out += "  C" + std::to_string(c + 1) + " [label=\"" + ids_text(cs.cliques[c]) + "\", color="
                    + palette[comp_of[c] % 8] + "];\n";
            for (auto [a, b] : clique_graph(cs).edges())
                out += "  C" + std::to_string(a + 1) + " -- C" + std::to_string(b + 1) + ";\n";
            return out + "}\n";
        }

        auto run_cliques(const RunConfig & cfg, std::istream & in, std::ostream & out) -> int
        {
            auto g = read_input(cfg, in).graph;
            auto cs = maximum_cliques(g, cfg.budget);
            auto comps = components(cs);
            if (cfg.format == Format::json)
                out << cliques_json(g, cs, comps).dump(2) << "\n";
            else if (cfg.format == Format::dot)
                out << clique_graph_dot(cs, comps);
            else {
                out << "omega " << cs.omega << "\ndelta " << g.max_degree() << "\nmaximum cliques " << cs.cliques.size() << "\n";
                for (std::size_t i = 0; i < cs.cliques.size(); ++i)
                    out << "  C" << i + 1 << " " << ids_text(cs.cliques[i]) << "\n";
                out << "components " << comps.size() << "\n";
                for (std::size_t i = 0; i < comps.size(); ++i)
                    out << "  " << i + 1 << ": cliques " << comps[i].clique_indices.size()
                        << " |D| " << comps[i].d_set.size() << " |F| " << comps[i].f_set.size()
                        << " D " << ids_text(comps[i].d_set) << " F " << ids_text(comps[i].f_set) << "\n";
            }
            return success;
        }

        auto run_verify(const RunConfig & cfg, std::istream & in, std::ostream & out) -> int
        {
            auto g = read_input(cfg, in).graph;
            auto cs = maximum_cliques(g, cfg.budget);
            auto comps = components(cs);
            auto report = verify_json(g, cs, comps);
            if (cfg.format == Format::json)
                out << report.dump(2) << "\n";
            else {
                out << "omega " << cs.omega << " delta " << g.max_degree() << " hypothesis "
                    << (report["hypothesis_met"].get<bool>() ? "met" : "not met") << "\n";
                for (auto & c : report["components"])
                    out << "  component " << c["id"] << ": hajnal " << c["hajnal"]["lhs"] << " >= " << c["hajnal"]["rhs"]
                        << (c["hajnal"]["holds"].get<bool>() ? " ok" : " FAILS")
                        << "; kostochka " << c["kostochka"]["f_size"] << " >= " << c["kostochka"]["bound"]
                        << (c["kostochka"]["holds"].get<bool>() ? " ok" : " fails") << "\n";
            }
            bool violation = ! report["hajnal_holds"].get<bool>()
                || (report["hypothesis_met"].get<bool>() && ! report["kostochka_holds"].get<bool>());
            return violation ? internal_violation : success;
        }

        auto run_isr(const RunConfig & cfg, std::istream & in, std::ostream & out) -> int
        {
            auto doc = read_input(cfg, in);
            auto blocks = doc.blocks;
            if (! cfg.partition_path.empty()) {
                std::ifstream file(cfg.partition_path);
                if (! file)
                    throw InputError("cannot open " + cfg.partition_path);
                blocks = parse_partition(file, doc.graph.size());
            }
            if (blocks.empty())
                throw InputError("no partition given: use --partition or 'c block' lines in the input");
            PartitionedGraph pg(std::move(doc.graph), std::move(blocks));

            std::optional<Vertex> pinned;
            if (cfg.pinned_vertex) {
                if (*cfg.pinned_vertex < 1 || *cfg.pinned_vertex > pg.graph().size())
                    throw InputError("--pin must name a vertex in 1.." + std::to_string(pg.graph().size()));
                pinned = *cfg.pinned_vertex - 1;
            }
            bool run_exact = cfg.exact || ! cfg.augment;

            json report = {{"schema", schema::isr}, {"blocks", pg.block_count()},
                {"pinned", pinned ? json(*pinned + 1) : json(nullptr)}};
            std::string text;
            int code = success;

            std::optional<bool> exact_found;
            if (run_exact) {
                auto isr = find_isr_exact(pg, pinned, cfg.budget);
                exact_found = isr.has_value();
                report["exact"] = {{"found", exact_found.value()}, {"isr", isr ? isr_json(pg, *isr) : json(nullptr)}};
                text += "exact: " + std::string(isr ? "ISR" : "NONE");
                if (isr) {
                    text += " ";
                    text += ids_text(sorted_unique(isr->picks));
                }
                text += "\n";
                code = isr ? success : proven_none;
            }

            if (cfg.augment) {
                Vertex pin = pinned ? *pinned : pg.block(pg.block_count() - 1).front();
                auto result = find_isr_augmenting(pg, pin, cfg.budget);
                report["augmenting"] = augmentation_json(pg, result, cfg.trace);
                report["augmenting"]["pinned"] = pin + 1;
                text += "augmenting (pin " + std::to_string(pin + 1) + "): " + to_string(result.kind);
                if (result.isr)
                    text += " " + ids_text(result.isr->picks);
                if (result.certificate)
                    text += " J " + ids_text(result.certificate->j_set) + " X " + ids_text(result.certificate->x_set)
                        + " Y " + ids_text(result.certificate->y_set);
                text += "\n";
                int aug_code = result.kind == AugmentResult::Kind::isr ? success
                    : result.kind == AugmentResult::Kind::certificate ? proven_none : budget_exhausted;
                if (exact_found && pinned && aug_code != budget_exhausted && (aug_code == success) != *exact_found)
                    code = internal_violation;
                else if (! run_exact)
                    code = aug_code;
            }

            if (cfg.certificate) {
                if (! pinned)
                    throw InputError("--certificate needs --pin");
                auto cert = find_certificate_exact(pg, *pinned, cfg.budget);
                report["certificate_search"] = cert ? certificate_json(pg, *cert) : json(nullptr);
                text += "certificate: " + std::string(cert ? "found" : "none") + "\n";
                if (cert && cfg.k_override)
                    report["audit"] = audit_json(theorem4_bound_audit(pg, *cfg.k_override, *cert));
            }

            if (cfg.k_override) {
                auto lop = lopsided_check(pg, *cfg.k_override);
                auto violations = json::array();
                for (auto & v : lop.violations)
                    violations.push_back({{"vertex", v.vertex + 1}, {"out_degree", v.out_degree}, {"cap", v.cap}});
                report["lopsided"] = {{"k", *cfg.k_override}, {"holds", lop.holds}, {"violations", violations}};
                text += "lopsided k=" + std::to_string(*cfg.k_override) + ": " + (lop.holds ? "holds" : "fails") + "\n";
            }

            if (cfg.format == Format::json)
                out << report.dump(2) << "\n";
            else if (cfg.format == Format::dot)
                out << to_dot(pg.graph(), pg.blocks());
            else
                out << text;
            return code;
        }

        auto exit_code_for(const HittingReport & report) -> int
        {
            switch (report.status) {
                case HittingStatus::found_under_hypothesis:
                case HittingStatus::found_without_hypothesis: return success;
                case HittingStatus::none_exists_proven: return proven_none;
                case HittingStatus::unknown: return report.budget_exhausted ? budget_exhausted : hypothesis_unmet_unknown;
                case HittingStatus::internal_error: return internal_violation;
            }
            return internal_violation;
        }

        auto run_hit(const RunConfig & cfg, std::istream & in, std::ostream & out) -> int
        {
            auto g = read_input(cfg, in).graph;
            HittingOptions options;
            options.clique_node_budget = cfg.budget;
            options.isr_node_budget = cfg.budget;
            options.brute_force_budget = cfg.budget;
            auto report = hitting_stable_set(g, options);
            if (cfg.format == Format::json)
                out << hitting_json(report).dump(2) << "\n";
            else {
                out << "status " << to_string(report.status) << "\nomega " << report.omega << "\ndelta " << report.delta
                    << "\nhypothesis " << (report.hypothesis_met ? "met" : "not met") << "\ncomponents "
                    << report.components.size() << "\n";
                if (report.chosen_k)
                    out << "k " << *report.chosen_k << "\n";
                if (report.stable_set)
                    out << "stable set " << ids_text(*report.stable_set) << "\n";
                if (! report.note.empty())
                    out << "note " << report.note << "\n";
            }
            return exit_code_for(report);
        }
    }

    auto run(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err) -> int
    {
        RunConfig cfg;
        CLI::App app{"Stable sets meeting every maximum clique, and independent transversals", "stablehit"};
        app.require_subcommand(1);

        std::string format_name = "text";
        auto add_format = [&](CLI::App * sub) {
            sub->add_option("--format", format_name, "json, text or dot")
                ->check(CLI::IsMember({"json", "text", "dot"}));
        };
        auto add_input = [&](CLI::App * sub) {
            sub->add_option("input", cfg.input_path, "DIMACS file (default: standard input)");
            sub->add_option("--budget", cfg.budget, "search node budget")->check(CLI::PositiveNumber);
        };

        auto gen = app.add_subcommand("gen", "emit a generated instance as DIMACS");
        gen->require_subcommand(1);
        auto blown = gen->add_subcommand("blown-cycle", "cycle with every vertex replaced by a clique");
        blown->add_option("--cycle-len", cfg.cycle_len)->capture_default_str();
        blown->add_option("--k", cfg.k, "clique size")->capture_default_str();
        auto haxell = gen->add_subcommand("haxell-gadget", "(4,2,2,2,2) partitioned graph without ISR");
        haxell->add_option("--partition-out", cfg.partition_out, "also write the partition file here");
        auto random = gen->add_subcommand("random", "seeded random graph");
        random->add_option("--n", cfg.n)->capture_default_str();
        random->add_option("--p", cfg.p)->capture_default_str();
        random->add_option("--seed", cfg.seed)->capture_default_str();
        auto linked = gen->add_subcommand("linked-cliques", "t copies of K_q, optionally matched");
        linked->add_option("--q", cfg.q)->capture_default_str();
        linked->add_option("--t", cfg.t)->capture_default_str();
        linked->add_flag("--matching", cfg.matching);
        auto lop = gen->add_subcommand("lopsided", "random partitioned graph meeting the lopsided degree caps");
        lop->add_option("--r", cfg.r, "number of blocks")->capture_default_str();
        lop->add_option("--k", cfg.k)->capture_default_str();
        lop->add_option("--max-block", cfg.max_block)->capture_default_str();
        lop->add_option("--p", cfg.p)->capture_default_str();
        lop->add_option("--seed", cfg.seed)->capture_default_str();
        lop->add_option("--partition-out", cfg.partition_out, "also write the partition file here");
        for (auto sub : {blown, haxell, random, linked, lop})
            sub->add_option("--format", format_name, "text (DIMACS) or dot")
                ->check(CLI::IsMember({"text", "dot"}));

        auto cliques = app.add_subcommand("cliques", "enumerate maximum cliques and clique-graph components");
        add_input(cliques);
        add_format(cliques);

        auto verify = app.add_subcommand("verify", "check the clique intersection lemmas on a graph");
        add_input(verify);
        add_format(verify);

        auto isr = app.add_subcommand("isr", "search for an independent system of representatives");
        add_input(isr);
        add_format(isr);
        isr->add_option("--partition", cfg.partition_path, "partition file (default: 'c block' lines in the input)");
        isr->add_flag("--exact", cfg.exact, "complete backtracking search (default)");
        isr->add_flag("--augment", cfg.augment, "augmentation procedure with domination certificates");
        isr->add_option("--pin", cfg.pinned_vertex, "1-based vertex the ISR must contain")->check(CLI::PositiveNumber);
        isr->add_flag("--trace", cfg.trace, "include the augmentation trace in JSON output");
        isr->add_flag("--certificate", cfg.certificate, "exhaustive domination-certificate search (needs --pin)");
        isr->add_option("--k", cfg.k_override, "report the lopsided degree condition for this k")->check(CLI::PositiveNumber);

        auto hit = app.add_subcommand("hit", "find a stable set meeting every maximum clique");
        add_input(hit);
        add_format(hit);

        std::vector<std::string> reversed(args.rbegin(), args.rend());
        try {
            app.parse(reversed);
        }
        catch (const CLI::CallForHelp &) {
            out << app.help();
            return success;
        }
        catch (const CLI::ParseError & e) {
            err << "stablehit: " << e.what() << "\n";
            return input_error;
        }
        cfg.format = format_name == "json" ? Format::json : format_name == "dot" ? Format::dot : Format::text;

        try {
            if (gen->parsed()) {
                for (auto sub : gen->get_subcommands())
                    cfg.generator = sub->get_name();
                return run_gen(cfg, out);
            }
            if (cliques->parsed())
                return run_cliques(cfg, in, out);
            if (verify->parsed())
                return run_verify(cfg, in, out);
            if (isr->parsed())
                return run_isr(cfg, in, out);
            if (hit->parsed())
                return run_hit(cfg, in, out);
        }
        catch (const BudgetExceeded & e) {
            err << "stablehit: " << e.what() << "\n";
            return budget_exhausted;
        }
        catch (const InvariantViolation & e) {
            err << "stablehit: internal invariant violated: " << e.what() << "\n";
            return internal_violation;
        }
        catch (const InputError & e) {
            err << "stablehit: " << e.what() << "\n";
            return input_error;
        }
        return input_error;
    }
}
