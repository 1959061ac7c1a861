#include "bkp/json_io.hpp"

#include <json.hpp>

namespace bkp {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

std::string poset_to_json(const Poset& p) {
  ordered j;
  j["n"] = p.size();
  j["covers"] = ordered::array();
  for (auto [a, b] : p.covers()) j["covers"].push_back({a, b});
  return j.dump();
}

Poset poset_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParamError(std::string("invalid poset JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    throw ParamError("poset JSON needs an integer field \"n\"");
  int n = j["n"].get<int>();
  std::vector<std::pair<int, int>> covers;
  if (j.contains("covers")) {
    if (!j["covers"].is_array()) throw ParamError("\"covers\" must be an array");
    for (const auto& pair : j["covers"]) {
      if (!pair.is_array() || pair.size() != 2 ||
          !pair[0].is_number_integer() || !pair[1].is_number_integer())
        throw ParamError("each cover must be a pair of integers");
      covers.emplace_back(pair[0].get<int>(), pair[1].get<int>());
    }
  }
  return Poset::from_covers(n, covers);
}

std::string tableau_to_json(const ColumnStrictTableau& t) {
  ordered j;
  j["shape"] = t.shape().parts();
  j["rows"] = t.rows();
  return j.dump();
}

ColumnStrictTableau tableau_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParamError(std::string("invalid tableau JSON: ") + e.what());
  }
  if (!j.contains("rows") || !j["rows"].is_array())
    throw ParamError("tableau JSON needs a \"rows\" array");
  std::vector<std::vector<int>> rows;
  for (const auto& row : j["rows"]) {
    if (!row.is_array()) throw ParamError("each row must be an array");
    rows.push_back(row.get<std::vector<int>>());
  }
  return ColumnStrictTableau::from_rows(std::move(rows));
}

std::string structure_to_json(const Poset& p, const StructureInfo& info) {
  ordered j;
  j["n"] = p.size();
  j["connected"] = info.connected;
  j["height"] = info.height;
  j["width"] = info.width;
  j["is_disjoint_union_of_chains"] = info.is_disjoint_union_of_chains;
  j["is_series_parallel"] = info.is_series_parallel;
  j["component_sizes"] = ordered::array();
  for (const Poset& comp : info.components)
    j["component_sizes"].push_back(comp.size());
  return j.dump();
}

std::string group_report_json(const GroupSummary& g) {
  ordered j;
  j["degree"] = g.degree;
  j["order"] = to_decimal(g.order);
  j["transitive"] = g.transitive;
  j["primitive"] = g.primitive;
  j["two_transitive"] = g.two_transitive;
  j["symmetric"] = g.symmetric;
  j["stab_order"] = to_decimal(g.stab_order);
  return j.dump();
}

std::string relation_report_json(const RelationReport& r,
                                 const LinExtSpace* space) {
  ordered j;
  j["trivial_ti"] = r.trivial_ti;
  j["braid_failures"] = r.braid_failures;
  j["cactus_failures"] = ordered::array();
  for (const CactusFailure& f : r.cactus_failures) {
    ordered jf;
    jf["i"] = f.i;
    jf["j"] = f.j;
    jf["k"] = f.k;
    jf["witness"] = f.witness;
    if (space) jf["witness_word"] = (*space)[f.witness];
    j["cactus_failures"].push_back(std::move(jf));
  }
  j["le_cactus"] = r.le_cactus;
  j["le_symmetric"] = r.le_symmetric;
  j["le_primitive"] = r.le_primitive;
  j["stab_size"] = to_decimal(r.stab_size);
  j["comparability"] = r.comparability;
  return j.dump();
}

std::string extensions_to_json(const LinExtSpace& space) {
  ordered j = ordered::array();
  for (int e = 0; e < space.degree(); ++e) j.push_back(space[e]);
  return j.dump();
}

std::string classification_record_json(const ClassificationRecord& rec) {
  ordered j;
  j["canonical"] = rec.canonical;
  j["n"] = rec.n;
  j["covers"] = ordered::array();
  for (auto [a, b] : rec.poset.covers()) j["covers"].push_back({a, b});
  j["connected"] = rec.connected;
  j["series_parallel"] = rec.series_parallel;
  j["group_computed"] = rec.group_computed;
  if (!rec.group_computed) {
    j["skip_reason"] = rec.skip_reason;
  } else {
    j["report"] = ordered::parse(relation_report_json(rec.report, nullptr));
    j["group"] = ordered::parse(group_report_json(rec.group));
  }
  return j.dump();
}

std::string verify_report_json(const VerifyReport& rep) {
  ordered j;
  j["all_pass"] = rep.all_pass();
  j["total_seconds"] = rep.total_seconds();
  j["items"] = ordered::array();
  for (const VerifyItem& it : rep.items) {
    ordered ji;
    ji["id"] = it.id;
    ji["pass"] = it.pass;
    ji["detail"] = it.detail;
    ji["seconds"] = it.seconds;
    j["items"].push_back(std::move(ji));
  }
  return j.dump(2);
}

}  // namespace bkp
