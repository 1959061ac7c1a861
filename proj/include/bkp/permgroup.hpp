#pragma once

#include <memory>
#include <string>
#include <vector>

#include "bkp/bigint.hpp"
#include "bkp/linext.hpp"
#include "bkp/permutation.hpp"

namespace bkp {

struct NamedGenerator {
  std::string name;
  Permutation perm;
  bool trivial = false;  // identity generator, retained but flagged
};

namespace detail {
class StabilizerChain;
}

// An exact permutation group. All properties are computed deterministically
// at construction: either a Jordan-certificate giant recognition (the group
// provably contains the alternating group) or a Schreier-Sims stabilizer
// chain. Instances are immutable and safe to query concurrently.
class PermutationGroup {
 public:
  PermutationGroup(int degree, std::vector<NamedGenerator> generators);
  PermutationGroup(const PermutationGroup&);
  PermutationGroup(PermutationGroup&&) noexcept;
  ~PermutationGroup();

  int degree() const { return degree_; }
  const std::vector<NamedGenerator>& generators() const { return gens_; }

  const BigInt& order() const { return order_; }
  bool is_transitive() const { return transitive_; }
  bool is_primitive() const { return primitive_; }
  bool is_2_transitive() const { return two_transitive_; }
  bool is_symmetric() const { return symmetric_; }

  // order/degree by orbit-stabilizer; DivisionError if the division is not
  // exact (only possible for intransitive groups).
  BigInt stabilizer_order() const;

  bool contains(const Permutation& p) const;

  // Group generated by all generators except the named one.
  PermutationGroup subgroup_without(const std::string& name) const;

  enum class OrderMethod { trivial, giant_certificate, schreier_sims };
  OrderMethod order_method() const { return method_; }

 private:
  int degree_ = 0;
  std::vector<NamedGenerator> gens_;
  BigInt order_;
  bool transitive_ = false;
  bool primitive_ = false;
  bool two_transitive_ = false;
  bool symmetric_ = false;
  bool contains_alternating_ = false;
  bool has_odd_generator_ = false;
  OrderMethod method_ = OrderMethod::trivial;
  std::unique_ptr<detail::StabilizerChain> chain_;
};

// Index permutations of t_1..t_{n-1} on canonical L(P) order.
std::vector<Permutation> bk_generator_perms(const LinExtSpace& space);

// The group generated by the BK moves acting on L(P). The Poset overload
// enumerates first and so can throw DegreeCapError.
PermutationGroup bk_group(const LinExtSpace& space);
PermutationGroup bk_group(const Poset& p, long long cap = -1);

}  // namespace bkp
