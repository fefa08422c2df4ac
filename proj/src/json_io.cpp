#include "cox/json_io.hpp"

namespace cox {

using nlohmann::json;

json subset_json(const Graph& g, Subset x) {
  json out = json::array();
  for (int s : x) out.push_back(g.name(s));
  return out;
}

json word_json(const Group& g, const Element& w) { return g.format_word(w); }

json component_json(const Graph& g, Subset members, const ComponentType& type) {
  json out;
  out["generators"] = subset_json(g, members);
  out["type"] = to_string(type);
  out["rank"] = type.rank;
  if (type.order)
    out["order"] = *type.order;
  else
    out["order"] = "inf";
  return out;
}

json analysis_json(const Graph& g, const ParabolicAnalysis& a) {
  json out;
  out["components"] = json::array();
  for (const auto& [members, type] : a.components)
    out["components"].push_back(component_json(g, members, type));
  out["x0"] = subset_json(g, a.x0);
  out["xinf"] = subset_json(g, a.xinf);
  out["yinf"] = subset_json(g, a.yinf);
  out["commensurator"] = subset_json(g, a.commensurator);
  out["selfCommensurating"] = a.self_commensurating;
  return out;
}

json decomposition_json(const Group& g, const DoubleCosetDecomposition& d) {
  return json{{"u", word_json(g, d.u)},
              {"v", word_json(g, d.v)},
              {"uPrime", word_json(g, d.u_prime)}};
}

json descriptor_json(const Group& g, const ParabolicDescriptor& d) {
  return json{{"conjugator", word_json(g, d.conjugator)},
              {"core", subset_json(g.graph(), d.core)}};
}

json witness_json(const Group& g, const ConjugationWitness& w) {
  json steps = json::array();
  for (const auto& step : w.steps)
    steps.push_back(json{{"t", g.graph().name(step.t)},
                         {"x", subset_json(g.graph(), step.x)},
                         {"c", word_json(g, step.c)},
                         {"xNext", subset_json(g.graph(), step.x_next)}});
  return json{{"steps", steps}, {"w", word_json(g, w.w)}};
}

json report_json(const CheckReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures)
    failures.push_back(
        json{{"element", f.element}, {"expected", f.expected}, {"actual", f.actual}});
  json out{{"checkName", r.check_name},
           {"graphName", r.graph_name},
           {"subset", r.subset},
           {"radius", r.radius},
           {"elementsChecked", r.elements_checked},
           {"failures", failures},
           {"negativeControl", r.negative_control},
           {"ok", r.ok()}};
  if (!r.subset2.empty()) out["subset2"] = r.subset2;
  return out;
}

json envelope(const std::string& command, const std::string& graph, json inputs, json result) {
  return json{{"schemaVersion", kSchemaVersion},
              {"command", command},
              {"graph", graph},
              {"inputs", std::move(inputs)},
              {"result", std::move(result)}};
}

}  // namespace cox
