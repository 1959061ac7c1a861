#include "bkp/linext.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <limits>
#include <tuple>

namespace bkp {

namespace {

std::string encode_word(const Word& w) {
  std::string s(w.size(), '\0');
  for (std::size_t i = 0; i < w.size(); ++i) s[i] = static_cast<char>(w[i]);
  return s;
}

}  // namespace

long long default_degree_cap() {
  static const long long cap = [] {
    if (const char* env = std::getenv("BK_MAX_DEGREE")) {
      long long v = std::atoll(env);
      if (v >= 1) return v;
    }
    return 5000LL;
  }();
  return cap;
}

BigInt count_linear_extensions(const Poset& p) {
  // f(ideal) = number of ways to finish; grows over the ideal lattice
  std::unordered_map<ElemMask, BigInt> memo;
  constexpr std::size_t kMemoCap = 1u << 22;
  ElemMask all = p.all_mask();
  auto rec = [&](auto&& self, ElemMask ideal) -> const BigInt& {
    auto it = memo.find(ideal);
    if (it != memo.end()) return it->second;
    if (memo.size() >= kMemoCap)
      throw CapError("ideal lattice too large for extension counting");
    BigInt total = 0;
    if (ideal == all) {
      total = 1;
    } else {
      ElemMask next = p.minimal_of(all & ~ideal);
      for (ElemMask m = next; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        total += self(self, ideal | (ElemMask{1} << v));
      }
    }
    return memo.emplace(ideal, std::move(total)).first->second;
  };
  return rec(rec, 0);
}

LinExtSpace::LinExtSpace(Poset poset, std::vector<Word> exts)
    : poset_(std::move(poset)), exts_(std::move(exts)) {
  index_.reserve(exts_.size() * 2);
  for (std::size_t i = 0; i < exts_.size(); ++i)
    index_.emplace(encode_word(exts_[i]), static_cast<int>(i));
}

int LinExtSpace::index_of(const Word& w) const {
  auto it = index_.find(encode_word(w));
  if (it == index_.end())
    throw ComponentError("word is not a linear extension of the poset");
  return it->second;
}

LinExtSpace enumerate(const Poset& p, long long cap) {
  if (cap < 0) cap = default_degree_cap();
  int n = p.size();
  std::vector<Word> out;
  Word word;
  word.reserve(n);
  bool overflow = false;
  ElemMask all = p.all_mask();
  auto rec = [&](auto&& self, ElemMask used) -> void {
    if (overflow) return;
    if (static_cast<int>(word.size()) == n) {
      if (static_cast<long long>(out.size()) >= cap) {
        overflow = true;
        return;
      }
      out.push_back(word);
      return;
    }
    ElemMask avail = p.minimal_of(all & ~used);
    for (ElemMask m = avail; m && !overflow;) {
      int v = std::countr_zero(m);
      m &= m - 1;
      word.push_back(v);
      self(self, used | (ElemMask{1} << v));
      word.pop_back();
    }
  };
  rec(rec, 0);
  if (overflow) {
    long long count = cap + 1;
    bool exact = false;
    try {
      BigInt exact_count = count_linear_extensions(p);
      if (exact_count <= (std::numeric_limits<long long>::max)()) {
        count = static_cast<long long>(exact_count);
        exact = true;
      }
    } catch (const CapError&) {
    }
    throw DegreeCapError("|L(P)| = " + (exact ? std::to_string(count)
                                              : "> " + std::to_string(cap)) +
                             " exceeds the degree cap " + std::to_string(cap),
                         count, exact);
  }
  // minimal-first backtracking already yields lexicographic order
  return LinExtSpace(p, std::move(out));
}

bool is_linear_extension(const Poset& p, const Word& w) {
  int n = p.size();
  if (static_cast<int>(w.size()) != n) return false;
  ElemMask seen = 0;
  for (int k = 0; k < n; ++k) {
    int v = w[k];
    if (v < 0 || v >= n || ((seen >> v) & 1u)) return false;
    // everything below v must already be placed
    if ((p.down_set(v) & ~seen & ~(ElemMask{1} << v)) != 0) return false;
    seen |= ElemMask{1} << v;
  }
  return true;
}

Word bk_move(const Poset& p, const Word& w, int i) {
  int n = p.size();
  if (i < 1 || i > n - 1) throw IndexError("bk move index out of range");
  Word out = w;
  if (p.incomparable(out[i - 1], out[i])) std::swap(out[i - 1], out[i]);
  return out;
}

Word promotion(const Poset& p, const Word& w, int i) {
  int n = p.size();
  if (i < 0 || i > n - 1) throw IndexError("promotion index out of range");
  if (i == 0) return w;
  // labels on the subposet of labels 1..i+1; slide the hole left by label 1
  // down the promotion chain, then close up
  std::vector<int> label(n, 0);
  ElemMask sub = 0;
  for (int pos = 0; pos <= i; ++pos) {
    label[w[pos]] = pos + 1;
    sub |= ElemMask{1} << w[pos];
  }
  int hole = w[0];
  for (;;) {
    // covers of `hole` within the induced subposet, smallest label wins
    int best = -1;
    for (ElemMask m = sub; m;) {
      int e = std::countr_zero(m);
      m &= m - 1;
      if (!p.less(hole, e)) continue;
      if ((p.up_set(hole) & p.down_set(e) & sub & ~(ElemMask{1} << hole) &
           ~(ElemMask{1} << e)) != 0)
        continue;  // not a cover inside the subposet
      if (best < 0 || label[e] < label[best]) best = e;
    }
    if (best < 0) break;  // hole reached a maximal element of the subposet
    label[hole] = label[best];
    hole = best;
  }
  label[hole] = i + 2;
  Word out = w;
  std::vector<std::pair<int, int>> order;  // (label, element)
  for (ElemMask m = sub; m;) {
    int e = std::countr_zero(m);
    m &= m - 1;
    order.emplace_back(label[e], e);
  }
  std::sort(order.begin(), order.end());
  for (int pos = 0; pos <= i; ++pos) out[pos] = order[pos].second;
  return out;
}

Word evacuation(const Poset& p, const Word& w, int i) {
  int n = p.size();
  if (i < 0 || i > n - 1) throw IndexError("evacuation index out of range");
  Word out = w;
  for (int m = i; m >= 0; --m) out = promotion(p, out, m);
  return out;
}

Word q_jk(const Poset& p, const Word& w, int j, int k) {
  int n = p.size();
  if (j < 1 || k <= j || k > n) throw IndexError("q_jk indices out of range");
  Word out = evacuation(p, w, k - 1);
  out = evacuation(p, out, k - j);
  return evacuation(p, out, k - 1);
}

TDecomposition t_decompose(const Poset& p, const Poset& q, const Word& w) {
  Poset un = disjoint_union(p, q);
  if (!is_linear_extension(un, w))
    throw ComponentError("word is not an extension of the disjoint union");
  int m = p.size();
  TDecomposition d;
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    if (w[pos] < m) {
      d.labels_p.push_back(static_cast<int>(pos) + 1);
      d.ell_p.push_back(w[pos]);
    } else {
      d.labels_q.push_back(static_cast<int>(pos) + 1);
      d.ell_q.push_back(w[pos] - m);
    }
  }
  return d;
}

Word t_recompose(const Poset& p, const Poset& q, const TDecomposition& d) {
  int m = p.size(), n = q.size();
  if (static_cast<int>(d.labels_p.size()) != m ||
      static_cast<int>(d.labels_q.size()) != n ||
      d.ell_p.size() != d.labels_p.size() || d.ell_q.size() != d.labels_q.size())
    throw ComponentError("decomposition sizes do not match the posets");
  Word w(m + n, -1);
  for (int idx = 0; idx < m; ++idx) {
    int lab = d.labels_p[idx];
    if (lab < 1 || lab > m + n || w[lab - 1] != -1)
      throw ComponentError("label sets do not partition [1, m+n]");
    w[lab - 1] = d.ell_p[idx];
  }
  for (int idx = 0; idx < n; ++idx) {
    int lab = d.labels_q[idx];
    if (lab < 1 || lab > m + n || w[lab - 1] != -1)
      throw ComponentError("label sets do not partition [1, m+n]");
    w[lab - 1] = d.ell_q[idx] + m;
  }
  if (!is_linear_extension(disjoint_union(p, q), w))
    throw ComponentError("recomposed word is not a linear extension");
  return w;
}

LinExtGraph linext_graph(const LinExtSpace& space) {
  LinExtGraph g;
  g.vertex_count = space.degree();
  int n = space.n();
  for (int e = 0; e < space.degree(); ++e) {
    for (int i = 1; i <= n - 1; ++i) {
      Word moved = bk_move(space.poset(), space[e], i);
      if (moved == space[e]) continue;
      int f = space.index_of(moved);
      if (e < f) g.edges.push_back({e, f, i});
    }
  }
  std::sort(g.edges.begin(), g.edges.end(), [](const auto& a, const auto& b) {
    return std::tie(a.u, a.v, a.t) < std::tie(b.u, b.v, b.t);
  });
  return g;
}

std::string export_dot(const LinExtGraph& g, const LinExtSpace& space) {
  std::string out = "graph linext {\n";
  for (int v = 0; v < g.vertex_count; ++v) {
    out += "  v" + std::to_string(v) + " [label=\"";
    const Word& w = space[v];
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) out += "-";
      out += std::to_string(w[i]);
    }
    out += "\"];\n";
  }
  for (const auto& e : g.edges) {
    out += "  v" + std::to_string(e.u) + " -- v" + std::to_string(e.v) +
           " [label=\"t" + std::to_string(e.t) + "\"];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace bkp
