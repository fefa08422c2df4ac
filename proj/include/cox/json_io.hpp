#pragma once

#include <string>

#include <json.hpp>

#include "cox/parabolic.hpp"
#include "cox/verify.hpp"

namespace cox {

inline constexpr int kSchemaVersion = 1;

nlohmann::json subset_json(const Graph& g, Subset x);
nlohmann::json word_json(const Group& g, const Element& w);
nlohmann::json component_json(const Graph& g, Subset members, const ComponentType& type);
nlohmann::json analysis_json(const Graph& g, const ParabolicAnalysis& a);
nlohmann::json decomposition_json(const Group& g, const DoubleCosetDecomposition& d);
nlohmann::json descriptor_json(const Group& g, const ParabolicDescriptor& d);
nlohmann::json witness_json(const Group& g, const ConjugationWitness& w);
nlohmann::json report_json(const CheckReport& r);

// { schemaVersion, command, graph, inputs, result }
nlohmann::json envelope(const std::string& command, const std::string& graph,
                        nlohmann::json inputs, nlohmann::json result);

}  // namespace cox
