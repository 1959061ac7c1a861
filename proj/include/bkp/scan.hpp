#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bkp/relations.hpp"

namespace bkp {

// One poset per isomorphism class, deterministic order (sorted by canonical
// form). Census is capped at n = 7; throws CapError outside [1, 7].
std::vector<Poset> all_posets(int n);

struct GroupSummary {
  int degree = 0;
  BigInt order;
  bool transitive = false;
  bool primitive = false;
  bool two_transitive = false;
  bool symmetric = false;
  BigInt stab_order;
};

GroupSummary summarize(const PermutationGroup& g);

struct ClassificationRecord {
  std::string canonical;
  Poset poset;
  int n = 0;
  bool connected = false;
  bool series_parallel = false;
  bool group_computed = false;  // false when the degree cap was hit
  std::string skip_reason;
  RelationReport report;  // valid only when group_computed
  GroupSummary group;     // valid only when group_computed
};

struct ScanFilter {
  std::optional<bool> connected;
  std::optional<bool> series_parallel;
  std::optional<bool> le_cactus;
  std::optional<bool> le_symmetric;
  std::optional<bool> le_primitive;
  std::optional<bool> braid;
};

// Classifies every census class of size n, in canonical order. Posets whose
// extension count exceeds the cap are reported with group_computed = false,
// never silently dropped (and never match a group-level filter).
std::vector<ClassificationRecord> classify(int n, const ScanFilter& filter,
                                           int threads = 1, long long cap = -1);

// The 9-element jeu-de-taquin poset on which (t_3 q_59)^2 = 1 fails;
// elements are 0-indexed in display order.
Poset jdt_counterexample();

}  // namespace bkp
