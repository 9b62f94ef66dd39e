#include <doctest.h>

#include <stablehit/cli.hpp>
#include <stablehit/generators.hpp>
#include <stablehit/io.hpp>

#include <json.hpp>

#include <sstream>

using namespace stablehit;

namespace
{
    struct Run
    {
        int code;
        std::string out;
        std::string err;
    };

    auto invoke(std::vector<std::string> args, const std::string & input = "") -> Run
    {
        std::istringstream in(input);
        std::ostringstream out, err;
        int code = cli::run(args, in, out, err);
        return {code, out.str(), err.str()};
    }
}

TEST_CASE("gen emits canonical DIMACS")
{
    auto r = invoke({"gen", "blown-cycle", "--k", "2"});
    CHECK(r.code == 0);
    CHECK(parse_dimacs(r.out) == gen_blown_up_cycle(5, 2));

    auto linked = invoke({"gen", "linked-cliques", "--q", "4", "--t", "2", "--matching"});
    CHECK(linked.out == emit_dimacs(gen_linked_cliques(4, 2, true)));

    auto a = invoke({"gen", "random", "--n", "12", "--p", "0.3", "--seed", "9"});
    auto b = invoke({"gen", "random", "--n", "12", "--p", "0.3", "--seed", "9"});
    CHECK(a.out == b.out);
    CHECK(parse_dimacs(a.out) == gen_random(12, 0.3, 9));
}

TEST_CASE("tight example through hit")
{
    auto gen = invoke({"gen", "blown-cycle", "--k", "2"});
    auto hit = invoke({"hit", "--format", "json"}, gen.out);
    CHECK(hit.code == 1);
    auto report = nlohmann::json::parse(hit.out);
    CHECK(report["schema"] == "stablehit/hitting-report/1");
    CHECK(report["status"] == "NONE_EXISTS_PROVEN");
    CHECK(report["hypothesis_met"] == false);
}

TEST_CASE("linked cliques through hit")
{
    auto gen = invoke({"gen", "linked-cliques", "--q", "4", "--t", "2", "--matching"});
    auto hit = invoke({"hit", "--format", "json"}, gen.out);
    CHECK(hit.code == 0);
    auto report = nlohmann::json::parse(hit.out);
    CHECK(report["status"] == "FOUND_UNDER_HYPOTHESIS");
    CHECK(report["stable_set"].size() == 2);
    CHECK(report["chosen_k"] == 1);
}

TEST_CASE("gadget through isr")
{
    auto gen = invoke({"gen", "haxell-gadget"});
    auto exact = invoke({"isr", "--exact"}, gen.out);
    CHECK(exact.code == 1);
    CHECK(exact.out == "exact: NONE\n");

    auto aug = invoke({"isr", "--augment", "--pin", "1", "--trace", "--certificate", "--k", "2", "--format", "json"}, gen.out);
    CHECK(aug.code == 1);
    auto report = nlohmann::json::parse(aug.out);
    CHECK(report["schema"] == "stablehit/isr/1");
    CHECK(report["augmenting"]["outcome"] == "certificate");
    CHECK(report["augmenting"]["certificate"]["verification"]["valid"] == true);
    CHECK(report["augmenting"]["trace"].size() >= 2);
    CHECK(report["certificate_search"]["j"] == nlohmann::json::array({2}));
    CHECK(report["lopsided"]["holds"] == false);
    CHECK(report["audit"]["y_within_cap"] == false);
}

TEST_CASE("isr with a partition file argument")
{
    auto pairs = invoke({"isr", "--partition", "/nonexistent/partition"}, "p edge 2 0\n");
    CHECK(pairs.code == 3);

    auto missing = invoke({"isr"}, "p edge 2 0\n");
    CHECK(missing.code == 3);

    auto ok = invoke({"isr", "--format", "json"}, "p edge 3 1\nc block 1 2\nc block 3\ne 1 3\n");
    CHECK(ok.code == 0);
    auto report = nlohmann::json::parse(ok.out);
    CHECK(report["exact"]["isr"]["1"] == 2);
    CHECK(report["exact"]["isr"]["2"] == 3);
}

TEST_CASE("cliques and verify")
{
    auto gen = invoke({"gen", "blown-cycle", "--k", "2"});
    auto cl = invoke({"cliques", "--format", "json"}, gen.out);
    CHECK(cl.code == 0);
    auto report = nlohmann::json::parse(cl.out);
    CHECK(report["omega"] == 4);
    CHECK(report["cliques"].size() == 5);
    CHECK(report["components"][0]["f_size"] == 0);

    auto dot = invoke({"cliques", "--format", "dot"}, gen.out);
    CHECK(dot.out.find("C1 -- C2") != std::string::npos);

    auto ver = invoke({"verify", "--format", "json"}, gen.out);
    CHECK(ver.code == 0);
    auto v = nlohmann::json::parse(ver.out);
    CHECK(v["hajnal_holds"] == true);
    CHECK(v["kostochka_holds"] == false);
    CHECK(v["hypothesis_met"] == false);
}

TEST_CASE("input errors map to exit code 3")
{
    auto bad = invoke({"hit"}, "p edge 3 1\ne 1 9\n");
    CHECK(bad.code == 3);
    CHECK(bad.err.find("line 2") != std::string::npos);
    CHECK(invoke({"frobnicate"}).code == 3);
    CHECK(invoke({"gen", "blown-cycle", "--k", "0"}).code == 3);
    CHECK(invoke({"hit"}, "p edge 0 0\n").code == 3);
}

TEST_CASE("budget exhaustion maps to exit code 4")
{
    auto gen = invoke({"gen", "random", "--n", "40", "--p", "0.5", "--seed", "2"});
    CHECK(invoke({"cliques", "--budget", "3"}, gen.out).code == 4);
    CHECK(invoke({"hit", "--budget", "3"}, gen.out).code == 4);
}
