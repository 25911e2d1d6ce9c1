#ifndef LSEMID_JSON_IO_HPP
#define LSEMID_JSON_IO_HPP

#include <json.hpp>
#include <optional>
#include <string>

#include "lsemid/identify.hpp"
#include "lsemid/verify.hpp"

namespace lsemid {

// Graph file format: {"p": int, "directed": [[u,v],...], "bidirected": [[u,v],...]},
// 1-based nodes; bidirected pairs accepted in either orientation.
MixedGraph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const MixedGraph& g);
MixedGraph load_graph(const std::string& path);

nlohmann::json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j, const TablePtr& table);

nlohmann::json report_to_json(const IdentificationReport& r, bool emit_formulas = true,
                              const std::optional<VerificationResult>& verification = std::nullopt);
IdentificationReport report_from_json(const nlohmann::json& j);

}  // namespace lsemid

#endif
