#pragma once

#include <string>
#include <vector>

#include "bkp/bigint.hpp"
#include "bkp/linext.hpp"
#include "bkp/permgroup.hpp"

namespace bkp {

// Generator and evacuation permutations on canonical L(P) indices. Relation
// checks compose these index arrays instead of re-walking extensions.
class BkAction {
 public:
  explicit BkAction(LinExtSpace space);

  const LinExtSpace& space() const { return space_; }
  int degree() const { return space_.degree(); }
  int n() const { return space_.n(); }

  const Permutation& t(int i) const;  // 1 <= i <= n-1
  const Permutation& q(int i) const;  // 0 <= i <= n-1
  Permutation q_jk(int j, int k) const;

 private:
  LinExtSpace space_;
  std::vector<Permutation> t_;  // t_[i-1] is the action of t_i
  std::vector<Permutation> q_;  // q_[i] is the action of q_i
};

struct CactusFailure {
  int i, j, k;
  int witness;  // least extension index moved by (t_i q_jk)^2
  bool operator==(const CactusFailure&) const = default;
};

// {i : t_i = 1}; equals the ordinal split points of the poset.
std::vector<int> trivial_moves(const BkAction& a);
std::vector<int> trivial_moves(const Poset& p);

// Indices i with (t_i t_{i+1})^3 != 1; braid_holds iff the list is empty.
std::vector<int> braid_failures(const BkAction& a);
bool braid_holds(const BkAction& a);
bool braid_holds(const Poset& p);

// All eligible triples 2 <= i+1 < j < k <= n whose cactus relation fails,
// each with its lexicographically least witness.
std::vector<CactusFailure> cactus_failures(const BkAction& a);
std::vector<CactusFailure> cactus_failures(const Poset& p);

bool is_le_cactus(const BkAction& a);
bool is_le_cactus(const Poset& p);
bool is_le_symmetric(const Poset& p);
bool is_le_primitive(const Poset& p);

// |BK_P| / |L(P)|, exact.
BigInt stab_size(const Poset& p);

// max over extensions of #{i : consecutive labels sit on comparable elements}
int comparability(const LinExtSpace& space);
int comparability(const Poset& p);

// Full relation bundle for one poset, including the group-level flags.
struct RelationReport {
  std::vector<int> trivial_ti;
  std::vector<int> braid_failures;
  std::vector<CactusFailure> cactus_failures;
  bool le_cactus = false;
  bool le_symmetric = false;
  bool le_primitive = false;
  BigInt stab_size;
  int comparability = 0;
};

RelationReport relations_report(const Poset& p, long long cap = -1);
RelationReport relations_report(const BkAction& a, const PermutationGroup& g);

// One evaluated law of the numeric-law battery.
struct LawResult {
  std::string name;
  bool applicable = true;
  bool pass = true;
  std::string detail;
};

struct NumericLawsReport {
  std::vector<LawResult> laws;
  bool all_pass() const;
};

// Single-poset laws: dual order equality, stabilizer-value classification,
// comparability bounds, and the 2^c lower bound for indecomposables.
NumericLawsReport check_numeric_laws(const Poset& p);

// Pair laws: ordinal-sum multiplicativity of order and stabilizer size, and
// the disjoint-union order bound.
NumericLawsReport check_numeric_laws(const Poset& p, const Poset& q);

}  // namespace bkp
