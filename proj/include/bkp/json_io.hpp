#pragma once

#include <string>

#include "bkp/relations.hpp"
#include "bkp/scan.hpp"
#include "bkp/tableau.hpp"
#include "bkp/verify.hpp"

namespace bkp {

// Poset JSON: {"n": <int>, "covers": [[a,b], ...]}; the reader accepts
// redundant covers, the writer emits the irredundant set in lexicographic
// order. Big integers are serialized as decimal strings throughout.

std::string poset_to_json(const Poset& p);
Poset poset_from_json(const std::string& text);  // RangeError/CycleError/ParamError

std::string tableau_to_json(const ColumnStrictTableau& t);
ColumnStrictTableau tableau_from_json(const std::string& text);

std::string structure_to_json(const Poset& p, const StructureInfo& info);
std::string group_report_json(const GroupSummary& g);
std::string relation_report_json(const RelationReport& r, const LinExtSpace* space);
std::string extensions_to_json(const LinExtSpace& space);
std::string classification_record_json(const ClassificationRecord& rec);
std::string verify_report_json(const VerifyReport& rep);

}  // namespace bkp
