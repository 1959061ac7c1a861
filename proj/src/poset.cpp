#include "bkp/poset.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

namespace bkp {

namespace {

int popcount(ElemMask m) { return std::popcount(m); }

int lowest_bit(ElemMask m) { return std::countr_zero(m); }

}  // namespace

// --- Partition -----------------------------------------------------------

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw ParamError("partition parts must be positive");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw ParamError("partition parts must weakly decrease");
  }
}

int Partition::sum() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::is_strict() const {
  for (std::size_t i = 0; i + 1 < parts_.size(); ++i)
    if (parts_[i] <= parts_[i + 1]) return false;
  return true;
}

Partition Partition::conjugate() const {
  std::vector<int> out;
  for (int c = 1; !parts_.empty() && c <= parts_[0]; ++c) {
    int cnt = 0;
    for (int part : parts_)
      if (part >= c) ++cnt;
    out.push_back(cnt);
  }
  return Partition(out);
}

std::vector<Partition> all_partitions(int weight) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left, int mx) -> void {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int k = std::min(left, mx); k >= 1; --k) {
      cur.push_back(k);
      self(self, left - k, k);
      cur.pop_back();
    }
  };
  rec(rec, weight, weight);
  return out;
}

// --- Poset construction ---------------------------------------------------

Poset Poset::from_closure(int n, std::vector<ElemMask> up) {
  Poset p;
  p.n_ = n;
  p.up_ = std::move(up);
  p.down_.assign(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if ((p.up_[a] >> b) & 1u) p.down_[b] |= ElemMask{1} << a;
  // irredundant covers: a < b with nothing strictly between
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b || !p.leq(a, b)) continue;
      ElemMask between = p.up_[a] & p.down_[b] & ~(ElemMask{1} << a) &
                         ~(ElemMask{1} << b);
      if (between == 0) p.covers_.emplace_back(a, b);
    }
  }
  std::sort(p.covers_.begin(), p.covers_.end());
  return p;
}

Poset Poset::from_covers(int n, const std::vector<std::pair<int, int>>& covers) {
  if (n < 0) throw RangeError("element count must be non-negative");
  if (n > kMaxElements) throw CapError("posets are capped at 64 elements");
  std::vector<ElemMask> adj(n, 0);
  for (auto [a, b] : covers) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw RangeError("cover id out of range");
    if (a == b) throw CycleError("cover relates an element to itself");
    adj[a] |= ElemMask{1} << b;
  }
  // Kahn toposort for cycle detection
  std::vector<int> indeg(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if ((adj[a] >> b) & 1u) ++indeg[b];
  std::vector<int> stack;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) stack.push_back(v);
  int seen = 0;
  std::vector<int> topo;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    topo.push_back(v);
    ++seen;
    for (ElemMask m = adj[v]; m;) {
      int b = lowest_bit(m);
      m &= m - 1;
      if (--indeg[b] == 0) stack.push_back(b);
    }
  }
  if (seen != n) throw CycleError("cover relation is not acyclic");
  // reflexive-transitive closure in reverse topological order
  std::vector<ElemMask> up(n, 0);
  for (int idx = n - 1; idx >= 0; --idx) {
    int v = topo[idx];
    up[v] = ElemMask{1} << v;
    for (ElemMask m = adj[v]; m;) {
      int b = lowest_bit(m);
      m &= m - 1;
      up[v] |= up[b];
    }
  }
  return from_closure(n, std::move(up));
}

ElemMask Poset::minimal_of(ElemMask subset) const {
  ElemMask out = 0;
  for (ElemMask m = subset; m;) {
    int v = lowest_bit(m);
    m &= m - 1;
    if ((down_[v] & subset & ~(ElemMask{1} << v)) == 0) out |= ElemMask{1} << v;
  }
  return out;
}

ElemMask Poset::maximal_of(ElemMask subset) const {
  ElemMask out = 0;
  for (ElemMask m = subset; m;) {
    int v = lowest_bit(m);
    m &= m - 1;
    if ((up_[v] & subset & ~(ElemMask{1} << v)) == 0) out |= ElemMask{1} << v;
  }
  return out;
}

// --- constructors ---------------------------------------------------------

Poset chain(int m) {
  if (m < 0) throw ParamError("chain length must be non-negative");
  std::vector<std::pair<int, int>> cov;
  for (int i = 0; i + 1 < m; ++i) cov.emplace_back(i, i + 1);
  return Poset::from_covers(m, cov);
}

Poset antichain(int m) {
  if (m < 0) throw ParamError("antichain size must be non-negative");
  return Poset::from_covers(m, {});
}

Poset dual(const Poset& p) {
  std::vector<std::pair<int, int>> cov;
  cov.reserve(p.covers().size());
  for (auto [a, b] : p.covers()) cov.emplace_back(b, a);
  return Poset::from_covers(p.size(), cov);
}

Poset ordinal_sum(const Poset& p, const Poset& q) {
  int m = p.size(), n = q.size();
  std::vector<std::pair<int, int>> cov(p.covers());
  for (auto [a, b] : q.covers()) cov.emplace_back(a + m, b + m);
  // every maximal of p below every minimal of q; closure supplies the rest
  ElemMask pm = p.maximal_of(p.all_mask());
  ElemMask qm = q.minimal_of(q.all_mask());
  for (ElemMask x = pm; x;) {
    int a = std::countr_zero(x);
    x &= x - 1;
    for (ElemMask y = qm; y;) {
      int b = std::countr_zero(y);
      y &= y - 1;
      cov.emplace_back(a, b + m);
    }
  }
  return Poset::from_covers(m + n, cov);
}

Poset disjoint_union(const Poset& p, const Poset& q) {
  int m = p.size();
  std::vector<std::pair<int, int>> cov(p.covers());
  for (auto [a, b] : q.covers()) cov.emplace_back(a + m, b + m);
  return Poset::from_covers(m + q.size(), cov);
}

namespace {

Poset grid_poset(const std::vector<std::pair<int, int>>& cells) {
  std::vector<std::pair<int, int>> cov;
  auto id_of = [&](int r, int c) -> int {
    for (std::size_t k = 0; k < cells.size(); ++k)
      if (cells[k].first == r && cells[k].second == c) return static_cast<int>(k);
    return -1;
  };
  for (std::size_t k = 0; k < cells.size(); ++k) {
    auto [r, c] = cells[k];
    int right = id_of(r, c + 1);
    int down = id_of(r + 1, c);
    if (right >= 0) cov.emplace_back(static_cast<int>(k), right);
    if (down >= 0) cov.emplace_back(static_cast<int>(k), down);
  }
  return Poset::from_covers(static_cast<int>(cells.size()), cov);
}

}  // namespace

Poset ferrers(const Partition& shape) {
  if (shape.empty()) throw ParamError("ferrers shape must be non-empty");
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < shape.rows(); ++r)
    for (int c = 0; c < shape[r]; ++c) cells.emplace_back(r, c);
  return grid_poset(cells);
}

Poset shifted_ferrers(const Partition& shape) {
  if (shape.empty()) throw ParamError("shifted shape must be non-empty");
  if (!shape.is_strict())
    throw StrictnessError("shifted shape must strictly decrease");
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < shape.rows(); ++r)
    for (int c = r; c < shape[r] + r; ++c) cells.emplace_back(r, c);
  return grid_poset(cells);
}

Poset zigzag(int m) {
  if (m < 1) throw ParamError("zigzag needs at least one element");
  std::vector<std::pair<int, int>> cov;
  for (int k = 0; k + 1 < m; ++k) {
    if (k % 2 == 0)
      cov.emplace_back(k, k + 1);
    else
      cov.emplace_back(k + 1, k);
  }
  return Poset::from_covers(m, cov);
}

Poset n_poset(int a, int b, int c) {
  if (a < 1 || b < 1 || c < 1) throw ParamError("n_poset needs a,b,c >= 1");
  std::vector<std::pair<int, int>> cov;
  for (int i = 0; i < a; ++i) cov.emplace_back(i, i + 1);
  for (int i = 0; i < b; ++i) cov.emplace_back(a + i + 1, a + i);
  for (int i = 0; i < c; ++i) cov.emplace_back(a + b + i, a + b + i + 1);
  return Poset::from_covers(a + b + c + 1, cov);
}

Poset m_poset(int a, int b) {
  if (a < 2 || b < 2) throw ParamError("m_poset needs a,b >= 2");
  std::vector<std::pair<int, int>> cov;
  for (int i = 0; i + 1 < a; ++i) cov.emplace_back(i, i + 1);
  for (int i = 0; i + 1 < b; ++i) cov.emplace_back(a + i, a + i + 1);
  cov.emplace_back(a - 2, a + 1);
  return Poset::from_covers(a + b, cov);
}

Poset minuscule_ordinal(int k) {
  if (k < 0) throw ParamError("minuscule_ordinal needs k >= 0");
  Poset p = antichain(0);
  for (int i = 0; i < k; ++i) p = ordinal_sum(p, antichain(1));
  p = ordinal_sum(p, antichain(2));
  for (int i = 0; i < k; ++i) p = ordinal_sum(p, antichain(1));
  return p;
}

Poset relabel(const Poset& p, const std::vector<int>& new_of) {
  std::vector<std::pair<int, int>> cov;
  cov.reserve(p.covers().size());
  for (auto [a, b] : p.covers()) cov.emplace_back(new_of[a], new_of[b]);
  return Poset::from_covers(p.size(), cov);
}

// --- decomposition --------------------------------------------------------

std::vector<int> ordinal_split_points(const Poset& p) {
  int n = p.size();
  std::vector<int> strict_below(n);
  for (int x = 0; x < n; ++x)
    strict_below[x] = popcount(p.down_set(x)) - 1;
  std::vector<int> out;
  for (int i = 1; i < n; ++i) {
    ElemMask lower = 0;
    for (int x = 0; x < n; ++x)
      if (strict_below[x] < i) lower |= ElemMask{1} << x;
    if (popcount(lower) != i) continue;
    bool ok = true;
    for (int x = 0; ok && x < n; ++x) {
      if (!((lower >> x) & 1u)) continue;
      // everything outside `lower` must lie above x
      if ((p.up_set(x) | lower) != p.all_mask()) ok = false;
    }
    if (ok) out.push_back(i);
  }
  return out;
}

PosetDecomposition ordinal_decomposition(const Poset& p) {
  if (p.size() < 1) throw ParamError("decomposition needs a non-empty poset");
  int n = p.size();
  std::vector<int> strict_below(n);
  for (int x = 0; x < n; ++x)
    strict_below[x] = popcount(p.down_set(x)) - 1;
  std::vector<int> cuts = ordinal_split_points(p);
  cuts.push_back(n);
  PosetDecomposition d;
  int prev = 0;
  for (int cut : cuts) {
    std::vector<int> block;
    for (int x = 0; x < n; ++x)
      if (strict_below[x] >= prev && strict_below[x] < cut) block.push_back(x);
    d.summands.push_back(induced_subposet(p, block));
    d.blocks.push_back(std::move(block));
    prev = cut;
  }
  return d;
}

// --- structure ------------------------------------------------------------

namespace {

std::vector<ElemMask> component_masks(const Poset& p) {
  int n = p.size();
  std::vector<ElemMask> comps;
  ElemMask left = p.all_mask();
  while (left) {
    int v = lowest_bit(left);
    ElemMask comp = ElemMask{1} << v;
    for (;;) {
      ElemMask grown = comp;
      for (ElemMask m = comp; m;) {
        int x = lowest_bit(m);
        m &= m - 1;
        grown |= p.up_set(x) | p.down_set(x);
      }
      if (grown == comp) break;
      comp = grown;
    }
    comps.push_back(comp);
    left &= ~comp;
  }
  (void)n;
  return comps;
}

int longest_chain(const Poset& p) {
  int n = p.size();
  std::vector<int> h(n, 0);
  // process by increasing |down| so all predecessors are done first
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return popcount(p.down_set(a)) < popcount(p.down_set(b));
  });
  int best = 0;
  for (int v : order) {
    h[v] = 1;
    for (int u = 0; u < n; ++u)
      if (p.less(u, v)) h[v] = std::max(h[v], h[u] + 1);
    best = std::max(best, h[v]);
  }
  return best;
}

int widest_antichain(const Poset& p, ElemMask candidates) {
  if (candidates == 0) return 0;
  // branch on the candidate with the most comparabilities inside the set;
  // if there are none the whole set is an antichain
  int pivot = -1, pivot_deg = -1;
  for (ElemMask m = candidates; m;) {
    int v = lowest_bit(m);
    m &= m - 1;
    int deg = popcount((p.up_set(v) | p.down_set(v)) & candidates) - 1;
    if (deg > pivot_deg) {
      pivot_deg = deg;
      pivot = v;
    }
  }
  if (pivot_deg == 0) return popcount(candidates);
  int without = widest_antichain(p, candidates & ~(ElemMask{1} << pivot));
  int with_v =
      1 + widest_antichain(p, candidates & ~(p.up_set(pivot) | p.down_set(pivot)));
  return std::max(with_v, without);
}

bool component_is_chain(const Poset& p, ElemMask comp) {
  for (ElemMask m = comp; m;) {
    int a = lowest_bit(m);
    m &= m - 1;
    for (ElemMask m2 = m; m2;) {
      int b = lowest_bit(m2);
      m2 &= m2 - 1;
      if (p.incomparable(a, b)) return false;
    }
  }
  return true;
}

bool series_parallel_rec(const Poset& p) {
  if (p.size() <= 1) return true;
  auto comps = component_masks(p);
  if (comps.size() > 1) {
    for (ElemMask c : comps)
      if (!series_parallel_rec(induced_subposet(p, c))) return false;
    return true;
  }
  PosetDecomposition d = ordinal_decomposition(p);
  if (d.summands.size() < 2) return false;
  for (const Poset& s : d.summands)
    if (!series_parallel_rec(s)) return false;
  return true;
}

}  // namespace

StructureInfo structure(const Poset& p) {
  StructureInfo info;
  auto comps = component_masks(p);
  info.connected = comps.size() <= 1;
  info.height = longest_chain(p);
  info.width = widest_antichain(p, p.all_mask());
  info.is_disjoint_union_of_chains = true;
  for (ElemMask c : comps) {
    info.components.push_back(induced_subposet(p, c));
    if (!component_is_chain(p, c)) info.is_disjoint_union_of_chains = false;
  }
  info.is_series_parallel = series_parallel_rec(p);
  return info;
}

Poset induced_subposet(const Poset& p, ElemMask subset) {
  std::vector<int> elems;
  for (ElemMask m = subset; m;) {
    elems.push_back(lowest_bit(m));
    m &= m - 1;
  }
  return induced_subposet(p, elems);
}

Poset induced_subposet(const Poset& p, const std::vector<int>& elems) {
  int k = static_cast<int>(elems.size());
  std::vector<int> sorted(elems);
  std::sort(sorted.begin(), sorted.end());
  std::vector<ElemMask> up(k, 0);
  for (int a = 0; a < k; ++a) {
    if (sorted[a] < 0 || sorted[a] >= p.size())
      throw RangeError("subset id out of range");
    for (int b = 0; b < k; ++b)
      if (p.leq(sorted[a], sorted[b])) up[a] |= ElemMask{1} << b;
  }
  // route through from_covers so the closure invariant is re-established
  std::vector<std::pair<int, int>> cov;
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (a != b && ((up[a] >> b) & 1u)) cov.emplace_back(a, b);
  return Poset::from_covers(k, cov);
}

bool is_convex(const Poset& p, ElemMask subset) {
  int n = p.size();
  for (int y = 0; y < n; ++y) {
    if ((subset >> y) & 1u) continue;
    bool below = (p.down_set(y) & subset & ~(ElemMask{1} << y)) != 0;
    bool above = (p.up_set(y) & subset & ~(ElemMask{1} << y)) != 0;
    if (below && above) return false;
  }
  return true;
}

std::vector<ElemMask> order_ideals(const Poset& p) {
  std::vector<ElemMask> out{0};
  std::vector<ElemMask> frontier{0};
  // grow by one element at a time; an ideal of size k+1 is an ideal of size
  // k plus a minimal element of the complement
  std::vector<ElemMask> next;
  ElemMask all = p.all_mask();
  while (!frontier.empty()) {
    next.clear();
    for (ElemMask ideal : frontier) {
      ElemMask candidates = p.minimal_of(all & ~ideal);
      for (ElemMask m = candidates; m;) {
        int v = lowest_bit(m);
        m &= m - 1;
        next.push_back(ideal | (ElemMask{1} << v));
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    out.insert(out.end(), next.begin(), next.end());
    frontier = next;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// --- canonical form -------------------------------------------------------

namespace {

// Iso-invariant colors via relation-aware refinement.
std::vector<int> stable_colors(const Poset& p) {
  int n = p.size();
  std::vector<int> color(n, 0);
  for (;;) {
    std::vector<std::vector<long long>> sig(n);
    for (int x = 0; x < n; ++x) {
      sig[x].push_back(color[x]);
      std::vector<long long> rels;
      for (int y = 0; y < n; ++y) {
        if (y == x) continue;
        int rel = p.less(x, y) ? 1 : (p.less(y, x) ? 2 : 0);
        rels.push_back(rel * 1000003LL + color[y]);
      }
      std::sort(rels.begin(), rels.end());
      sig[x].insert(sig[x].end(), rels.begin(), rels.end());
    }
    std::vector<std::vector<long long>> uniq(sig);
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    std::vector<int> next(n);
    for (int x = 0; x < n; ++x)
      next[x] = static_cast<int>(
          std::lower_bound(uniq.begin(), uniq.end(), sig[x]) - uniq.begin());
    if (next == color) return color;
    color = std::move(next);
  }
}

std::uint64_t relation_key(const Poset& p, const std::vector<int>& new_of) {
  int n = p.size();
  std::uint64_t key = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (p.less(a, b)) key |= std::uint64_t{1} << (new_of[a] * n + new_of[b]);
  return key;
}

}  // namespace

std::string canonical_form(const Poset& p, int cap) {
  int n = p.size();
  if (n > cap || n > 8)
    throw CapError("canonical form capped at " + std::to_string(std::min(cap, 8)));
  if (n == 0) return "P0:";
  std::vector<int> color = stable_colors(p);
  // bucket elements by color; canonical labels keep buckets contiguous
  std::vector<std::vector<int>> buckets(*std::max_element(color.begin(), color.end()) + 1);
  for (int x = 0; x < n; ++x) buckets[color[x]].push_back(x);
  std::vector<int> new_of(n);
  std::uint64_t best = ~std::uint64_t{0};
  bool have = false;
  auto rec = [&](auto&& self, std::size_t b, int next_id) -> void {
    if (b == buckets.size()) {
      std::uint64_t key = relation_key(p, new_of);
      if (!have || key < best) {
        best = key;
        have = true;
      }
      return;
    }
    std::vector<int> perm = buckets[b];
    std::sort(perm.begin(), perm.end());
    do {
      for (std::size_t i = 0; i < perm.size(); ++i)
        new_of[perm[i]] = next_id + static_cast<int>(i);
      self(self, b + 1, next_id + static_cast<int>(perm.size()));
    } while (std::next_permutation(perm.begin(), perm.end()));
  };
  rec(rec, 0, 0);
  char buf[32];
  std::snprintf(buf, sizeof buf, "P%d:%016llx", n,
                static_cast<unsigned long long>(best));
  return std::string(buf);
}

bool is_isomorphic(const Poset& p, const Poset& q, int cap) {
  if (p.size() != q.size()) return false;
  return canonical_form(p, cap) == canonical_form(q, cap);
}

}  // namespace bkp
