#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bkp/errors.hpp"

namespace bkp {

// Element subset encoded as a bitmask; posets are capped at 64 elements.
using ElemMask = std::uint64_t;

// A weakly decreasing sequence of positive parts. An empty partition is
// allowed and denotes the empty shape.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  int rows() const { return static_cast<int>(parts_.size()); }
  int sum() const;
  int operator[](int i) const { return parts_[i]; }
  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  bool is_strict() const;
  Partition conjugate() const;

  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

// All partitions of `weight`, parts in weakly decreasing order, emitted in
// reverse lexicographic order ((n), (n-1,1), ...).
std::vector<Partition> all_partitions(int weight);

// Finite poset on elements 0..n-1. Immutable after construction. `covers_`
// is the transitively irredundant cover set, sorted lexicographically; the
// up/down masks hold the reflexive-transitive closure.
class Poset {
 public:
  static constexpr int kMaxElements = 64;

  Poset() = default;  // the empty poset

  // Builds from an arbitrary (possibly redundant) cover list. Throws
  // RangeError on out-of-range ids, CycleError if the relation is cyclic,
  // CapError if n exceeds kMaxElements.
  static Poset from_covers(int n, const std::vector<std::pair<int, int>>& covers);

  int size() const { return n_; }
  bool leq(int a, int b) const { return (up_[a] >> b) & 1u; }
  bool less(int a, int b) const { return a != b && leq(a, b); }
  bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }
  bool incomparable(int a, int b) const { return !comparable(a, b); }

  const std::vector<std::pair<int, int>>& covers() const { return covers_; }

  ElemMask up_set(int a) const { return up_[a]; }      // {b : a <= b}
  ElemMask down_set(int a) const { return down_[a]; }  // {b : b <= a}
  ElemMask all_mask() const {
    return n_ == 64 ? ~ElemMask{0} : ((ElemMask{1} << n_) - 1);
  }

  ElemMask minimal_of(ElemMask subset) const;
  ElemMask maximal_of(ElemMask subset) const;

  bool operator==(const Poset&) const = default;

 private:
  static Poset from_closure(int n, std::vector<ElemMask> up);

  int n_ = 0;
  std::vector<std::pair<int, int>> covers_;
  std::vector<ElemMask> up_, down_;
};

// --- constructors -------------------------------------------------------

Poset chain(int m);
Poset antichain(int m);
Poset dual(const Poset& p);
Poset ordinal_sum(const Poset& p, const Poset& q);
Poset disjoint_union(const Poset& p, const Poset& q);

// Cells of the Young diagram of `shape`, ordered right and down, ids
// assigned row-major. Throws ParamError if the shape is empty.
Poset ferrers(const Partition& shape);

// Shifted diagram {(i,j) : i <= j <= shape_i + i - 1}, 1-based rows, covers
// right and down, ids row-major. Throws StrictnessError unless the parts
// strictly decrease.
Poset shifted_ferrers(const Partition& shape);

// v1 < v2 > v3 < v4 > ... with m elements (m >= 1).
Poset zigzag(int m);

// v1 < ... < v_{a+1} > v_{a+2} > ... > v_{a+b+1} < ... < v_{a+b+c+1};
// a, b, c >= 1, so a+b+c+1 elements.
Poset n_poset(int a, int b, int c);

// Two chains v1<...<va and v_{a+1}<...<v_{a+b} joined by v_{a-1} < v_{a+2};
// a, b >= 2.
Poset m_poset(int a, int b);

// Ordinal sum of k singletons, a two-element antichain, and k singletons.
Poset minuscule_ordinal(int k);

// Relabels: element x of p becomes new_of[x] in the result.
Poset relabel(const Poset& p, const std::vector<int>& new_of);

// --- structural analysis ------------------------------------------------

// Indices i in [1, n-1] such that p splits as an ordinal sum with the lower
// part of size i.
std::vector<int> ordinal_split_points(const Poset& p);

struct PosetDecomposition {
  std::vector<Poset> summands;             // each indecomposable
  std::vector<std::vector<int>> blocks;    // original ids per summand, ascending
};

// Maximal split of p into indecomposable ordinal summands. Requires n >= 1.
PosetDecomposition ordinal_decomposition(const Poset& p);

struct StructureInfo {
  bool connected = true;
  int height = 0;  // longest chain cardinality
  int width = 0;   // largest antichain cardinality
  bool is_disjoint_union_of_chains = true;
  bool is_series_parallel = true;
  std::vector<Poset> components;  // induced, ids ascending within component
};

StructureInfo structure(const Poset& p);

Poset induced_subposet(const Poset& p, ElemMask subset);
Poset induced_subposet(const Poset& p, const std::vector<int>& elems);

// True iff x,z in subset and x <= y <= z imply y in subset.
bool is_convex(const Poset& p, ElemMask subset);

// Every down-closed subset, exactly once, sorted numerically.
std::vector<ElemMask> order_ideals(const Poset& p);

// Invariant-refined brute-force canonical form; equal strings iff isomorphic.
// Throws CapError when p.size() > cap.
std::string canonical_form(const Poset& p, int cap = 8);
bool is_isomorphic(const Poset& p, const Poset& q, int cap = 8);

}  // namespace bkp
