#pragma once

#include <stablehit/cliques.hpp>
#include <stablehit/hitting.hpp>
#include <stablehit/isr.hpp>

#include <json.hpp>

namespace stablehit
{
    /// All vertex ids and block indices are written 1-based.
    namespace schema
    {
        inline constexpr auto cliques = "stablehit/cliques/1";
        inline constexpr auto verify = "stablehit/verify/1";
        inline constexpr auto isr = "stablehit/isr/1";
        inline constexpr auto hitting = "stablehit/hitting-report/1";
    }

    auto to_json_ids(const VertexSet & s) -> nlohmann::json;

    auto cliques_json(const Graph & g, const CliqueSet & cs, std::span<const CliqueComponent> comps) -> nlohmann::json;

    auto verify_json(const Graph & g, const CliqueSet & cs, std::span<const CliqueComponent> comps) -> nlohmann::json;

    auto isr_json(const PartitionedGraph & pg, const Isr & isr) -> nlohmann::json;

    auto certificate_json(const PartitionedGraph & pg, const DominationCertificate & cert) -> nlohmann::json;

    auto certificate_from_json(const nlohmann::json & j) -> DominationCertificate;

    auto audit_json(const BoundAudit & audit) -> nlohmann::json;

    auto trace_json(const std::vector<TraceEvent> & trace) -> nlohmann::json;

    auto augmentation_json(const PartitionedGraph & pg, const AugmentResult & result, bool with_trace) -> nlohmann::json;

    auto hitting_json(const HittingReport & report) -> nlohmann::json;
}
