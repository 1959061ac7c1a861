#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "bkp/bigint.hpp"
#include "bkp/poset.hpp"

namespace bkp {

// A linear extension as the word (p_1,...,p_n): word[k] is the element
// carrying label k+1.
using Word = std::vector<int>;

// Cap on |L(P)| for materialized enumeration; env BK_MAX_DEGREE overrides
// the built-in default of 5000.
long long default_degree_cap();

// Exact |L(P)| by dynamic programming over order ideals. Throws CapError if
// the ideal lattice is too large to memoize (happens only well beyond desk
// scale).
BigInt count_linear_extensions(const Poset& p);

// The canonically ordered set L(P): extensions sorted lexicographically by
// word, with constant-time word -> index lookup.
class LinExtSpace {
 public:
  LinExtSpace() = default;
  LinExtSpace(Poset poset, std::vector<Word> exts);

  const Poset& poset() const { return poset_; }
  int n() const { return poset_.size(); }
  int degree() const { return static_cast<int>(exts_.size()); }
  const Word& operator[](int idx) const { return exts_[idx]; }
  const std::vector<Word>& extensions() const { return exts_; }

  // Index of a word in canonical order; throws ComponentError if the word is
  // not a linear extension of the poset.
  int index_of(const Word& w) const;

 private:
  Poset poset_;
  std::vector<Word> exts_;
  std::unordered_map<std::string, int> index_;
};

// Enumerates L(P) in lexicographic order. cap < 0 means default_degree_cap().
// Throws DegreeCapError when |L(P)| exceeds the cap.
LinExtSpace enumerate(const Poset& p, long long cap = -1);

bool is_linear_extension(const Poset& p, const Word& w);

// t_i: swaps word positions i-1, i (labels i, i+1) when the two elements are
// incomparable; identity otherwise. 1 <= i <= n-1.
Word bk_move(const Poset& p, const Word& w, int i);

// Partial promotion (the sliding procedure on the subposet of labels
// 1..i+1); promotion with i = 0 is the identity. 0 <= i <= n-1.
Word promotion(const Poset& p, const Word& w, int i);

// Partial evacuation q_i = d_0 d_1 ... d_i, applied d_i first. 0 <= i <= n-1.
Word evacuation(const Poset& p, const Word& w, int i);

// q_{jk} = q_{k-1} q_{k-j} q_{k-1}, applied q_{k-1} first. 1 <= j < k <= n.
Word q_jk(const Poset& p, const Word& w, int j, int k);

// --- disjoint-union decomposition ----------------------------------------

// Splits an extension of P + Q into collapsed extensions of the parts plus
// the label sets (1-based, ascending).
struct TDecomposition {
  Word ell_p, ell_q;
  std::vector<int> labels_p, labels_q;
};

TDecomposition t_decompose(const Poset& p, const Poset& q, const Word& w);
Word t_recompose(const Poset& p, const Poset& q, const TDecomposition& d);

// --- linear extension graph ------------------------------------------------

struct LinExtGraph {
  struct Edge {
    int u, v;  // canonical indices, u < v
    int t;     // move index
  };
  int vertex_count = 0;
  std::vector<Edge> edges;
};

LinExtGraph linext_graph(const LinExtSpace& space);
std::string export_dot(const LinExtGraph& g, const LinExtSpace& space);

}  // namespace bkp
