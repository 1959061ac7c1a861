#include "bkp/permgroup.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace bkp {

namespace detail {

// Deterministic incremental Schreier-Sims with explicit transversals and
// first-moved-point base selection.
class StabilizerChain {
 public:
  StabilizerChain(int degree, const std::vector<Permutation>& gens)
      : degree_(degree) {
    build(gens);
  }

  BigInt order() const {
    BigInt o = 1;
    for (const Level& l : levels_) o *= static_cast<long long>(l.orbit.size());
    return o;
  }

  bool contains(const Permutation& g) const {
    auto [residue, level] = sift(g, 0);
    (void)level;
    return residue.is_identity();
  }

 private:
  struct Level {
    int base_point = 0;
    std::vector<Permutation> gens;
    std::vector<int> orbit;
    std::vector<int> orbit_pos;  // point -> orbit index, -1 outside
    std::vector<Permutation> transversal;      // u[i](base_point) = orbit[i]
    std::vector<Permutation> transversal_inv;
  };

  void recompute_orbit(std::size_t li) {
    Level& l = levels_[li];
    l.orbit.clear();
    l.orbit_pos.assign(degree_, -1);
    l.transversal.clear();
    l.transversal_inv.clear();
    l.orbit.push_back(l.base_point);
    l.orbit_pos[l.base_point] = 0;
    l.transversal.emplace_back(degree_);
    l.transversal_inv.emplace_back(degree_);
    for (std::size_t idx = 0; idx < l.orbit.size(); ++idx) {
      int x = l.orbit[idx];
      for (const Permutation& g : l.gens) {
        int y = g(x);
        if (l.orbit_pos[y] >= 0) continue;
        l.orbit_pos[y] = static_cast<int>(l.orbit.size());
        l.orbit.push_back(y);
        Permutation u = g * l.transversal[idx];
        l.transversal_inv.push_back(u.inverse());
        l.transversal.push_back(std::move(u));
      }
    }
  }

  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t from) const {
    for (std::size_t l = from; l < levels_.size(); ++l) {
      if (g.is_identity()) return {std::move(g), l};
      int beta = g(levels_[l].base_point);
      int pos = levels_[l].orbit_pos[beta];
      if (pos < 0) return {std::move(g), l};
      g = levels_[l].transversal_inv[pos] * g;
    }
    return {std::move(g), levels_.size()};
  }

  void append_level(int base_point) {
    Level l;
    l.base_point = base_point;
    levels_.push_back(std::move(l));
    recompute_orbit(levels_.size() - 1);
  }

  void build(const std::vector<Permutation>& input) {
    std::vector<Permutation> gens;
    for (const Permutation& g : input)
      if (!g.is_identity()) gens.push_back(g);
    if (gens.empty()) return;
    // make sure every generator moves a base point
    std::vector<int> base;
    for (const Permutation& g : gens) {
      bool fixes_all = true;
      for (int b : base)
        if (g(b) != b) {
          fixes_all = false;
          break;
        }
      if (fixes_all) base.push_back(g.first_moved());
    }
    for (std::size_t l = 0; l < base.size(); ++l) {
      Level level;
      level.base_point = base[l];
      for (const Permutation& g : gens) {
        bool fixes_prefix = true;
        for (std::size_t k = 0; k < l; ++k)
          if (g(base[k]) != base[k]) {
            fixes_prefix = false;
            break;
          }
        if (fixes_prefix) level.gens.push_back(g);
      }
      levels_.push_back(std::move(level));
      recompute_orbit(levels_.size() - 1);
    }
    // Sims verification: all Schreier generators of level i must sift to the
    // identity through the deeper chain
    std::size_t i = levels_.size() - 1;
    for (;;) {
      bool found = false;
      Permutation residue;
      std::size_t stuck = 0;
      {
        const Level& lev = levels_[i];
        for (std::size_t idx = 0; idx < lev.orbit.size() && !found; ++idx) {
          for (const Permutation& s : lev.gens) {
            int image = s(lev.orbit[idx]);
            int ipos = lev.orbit_pos[image];
            Permutation schreier =
                lev.transversal_inv[ipos] * (s * lev.transversal[idx]);
            if (schreier.is_identity()) continue;
            auto [r, j] = sift(std::move(schreier), i + 1);
            if (r.is_identity()) continue;
            residue = std::move(r);
            stuck = j;
            found = true;
            break;
          }
        }
      }
      if (found) {
        if (stuck == levels_.size()) append_level(residue.first_moved());
        for (std::size_t l = i + 1; l <= stuck; ++l) {
          levels_[l].gens.push_back(residue);
          recompute_orbit(l);
        }
        i = stuck;
        continue;
      }
      if (i == 0) break;
      --i;
    }
  }

  int degree_;
  std::vector<Level> levels_;
};

}  // namespace detail

namespace {

std::vector<const Permutation*> working_generators(
    const std::vector<NamedGenerator>& gens) {
  std::vector<const Permutation*> out;
  for (const NamedGenerator& g : gens)
    if (!g.trivial) out.push_back(&g.perm);
  return out;
}

int orbit_size(const std::vector<const Permutation*>& gens, int degree,
               int start) {
  std::vector<bool> seen(degree, false);
  std::vector<int> queue{start};
  seen[start] = true;
  int count = 1;
  while (!queue.empty()) {
    int x = queue.back();
    queue.pop_back();
    for (const Permutation* g : gens) {
      int y = (*g)(x);
      if (!seen[y]) {
        seen[y] = true;
        ++count;
        queue.push_back(y);
      }
    }
  }
  return count;
}

// Atkinson's union-find minimal block through {0, beta}: returns true when
// the minimal block system collapses to a single block.
bool minimal_block_is_full(const std::vector<const Permutation*>& gens,
                           int degree, int beta) {
  std::vector<int> parent(degree);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  int merges = 1;
  parent[beta] = 0;
  std::vector<int> queue{beta};
  while (!queue.empty()) {
    int gamma = queue.back();
    queue.pop_back();
    int delta = find(gamma);
    for (const Permutation* g : gens) {
      int a = find((*g)(gamma));
      int b = find((*g)(delta));
      if (a != b) {
        parent[b] = a;
        queue.push_back(b);
        if (++merges == degree - 1) return true;
      }
    }
  }
  return merges == degree - 1;
}

bool pair_orbit_is_full(const std::vector<const Permutation*>& gens,
                        int degree) {
  // orbit of the ordered pair (0,1)
  std::vector<bool> seen(static_cast<std::size_t>(degree) * degree, false);
  auto id = [degree](int x, int y) {
    return static_cast<std::size_t>(x) * degree + y;
  };
  std::vector<std::pair<int, int>> queue{{0, 1}};
  seen[id(0, 1)] = true;
  std::size_t count = 1;
  while (!queue.empty()) {
    auto [x, y] = queue.back();
    queue.pop_back();
    for (const Permutation* g : gens) {
      int gx = (*g)(x), gy = (*g)(y);
      if (!seen[id(gx, gy)]) {
        seen[id(gx, gy)] = true;
        ++count;
        queue.emplace_back(gx, gy);
      }
    }
  }
  return count == static_cast<std::size_t>(degree) * (degree - 1);
}

bool is_prime(int x) {
  if (x < 2) return false;
  for (int d = 2; d * d <= x; ++d)
    if (x % d == 0) return false;
  return true;
}

// Jordan's criterion: a primitive group containing a p-cycle (p prime,
// p <= degree - 3) contains the alternating group. A suitable p-cycle is a
// power of g whenever g has a cycle of prime length p and no other cycle
// length divisible by p.
bool jordan_certificate(const Permutation& g, int degree) {
  std::vector<int> lens = g.cycle_lengths();
  for (int p : lens) {
    if (!is_prime(p) || p > degree - 3) continue;
    int divisible = 0;
    for (int c : lens)
      if (c % p == 0) ++divisible;
    if (divisible == 1) return true;
  }
  return false;
}

struct XorShift64 {
  std::uint64_t state = 0x9E3779B97F4A7C15ull;
  std::uint64_t next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
};

bool find_giant_certificate(const std::vector<const Permutation*>& gens,
                            int degree) {
  constexpr std::size_t kBfsBudget = 4000;
  constexpr int kRandomWords = 2000;
  constexpr int kWordLength = 64;
  // breadth-first over short products
  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> frontier{Permutation(degree)};
  seen.insert(frontier.front());
  while (!frontier.empty() && seen.size() < kBfsBudget) {
    std::vector<Permutation> next;
    for (const Permutation& e : frontier) {
      for (const Permutation* g : gens) {
        Permutation ne = *g * e;
        if (seen.count(ne)) continue;
        if (jordan_certificate(ne, degree)) return true;
        seen.insert(ne);
        next.push_back(std::move(ne));
        if (seen.size() >= kBfsBudget) break;
      }
      if (seen.size() >= kBfsBudget) break;
    }
    frontier = std::move(next);
  }
  // deterministic pseudorandom words
  XorShift64 rng;
  for (int w = 0; w < kRandomWords; ++w) {
    Permutation cur(degree);
    for (int step = 0; step < kWordLength; ++step) {
      cur = *gens[rng.next() % gens.size()] * cur;
      if (step >= 8 && step % 4 == 0 && jordan_certificate(cur, degree))
        return true;
    }
  }
  return false;
}

}  // namespace

PermutationGroup::PermutationGroup(int degree,
                                   std::vector<NamedGenerator> generators)
    : degree_(degree), gens_(std::move(generators)) {
  if (degree_ < 1) throw ParamError("degree must be at least 1");
  for (NamedGenerator& g : gens_) {
    if (g.perm.degree() != degree_)
      throw ParamError("generator degree mismatch");
    g.trivial = g.perm.is_identity();
  }
  auto work = working_generators(gens_);
  for (const Permutation* g : work)
    if (g->is_odd()) has_odd_generator_ = true;

  transitive_ = work.empty() ? degree_ == 1
                             : orbit_size(work, degree_, 0) == degree_;
  if (!transitive_) {
    primitive_ = false;
  } else if (degree_ <= 2) {
    primitive_ = true;  // convention for tiny degrees
  } else {
    primitive_ = true;
    for (int beta = 1; beta < degree_ && primitive_; ++beta)
      if (!minimal_block_is_full(work, degree_, beta)) primitive_ = false;
  }

  if (work.empty()) {
    order_ = 1;
    method_ = OrderMethod::trivial;
    symmetric_ = degree_ <= 1;
    two_transitive_ = transitive_ && degree_ <= 2;
  } else if (degree_ >= 8 && primitive_ && find_giant_certificate(work, degree_)) {
    contains_alternating_ = true;
    method_ = OrderMethod::giant_certificate;
    order_ = factorial(degree_);
    if (!has_odd_generator_) order_ /= 2;
    symmetric_ = has_odd_generator_;
    two_transitive_ = true;
  } else {
    chain_ = std::make_unique<detail::StabilizerChain>(
        degree_, [&] {
          std::vector<Permutation> copy;
          for (const Permutation* g : work) copy.push_back(*g);
          return copy;
        }());
    method_ = OrderMethod::schreier_sims;
    order_ = chain_->order();
    symmetric_ = order_ == factorial(degree_);
    two_transitive_ =
        transitive_ && (degree_ <= 2 || pair_orbit_is_full(work, degree_));
  }
}

PermutationGroup::PermutationGroup(const PermutationGroup& other)
    : degree_(other.degree_),
      gens_(other.gens_),
      order_(other.order_),
      transitive_(other.transitive_),
      primitive_(other.primitive_),
      two_transitive_(other.two_transitive_),
      symmetric_(other.symmetric_),
      contains_alternating_(other.contains_alternating_),
      has_odd_generator_(other.has_odd_generator_),
      method_(other.method_),
      chain_(other.chain_ ? std::make_unique<detail::StabilizerChain>(*other.chain_)
                          : nullptr) {}

PermutationGroup::PermutationGroup(PermutationGroup&&) noexcept = default;
PermutationGroup::~PermutationGroup() = default;

BigInt PermutationGroup::stabilizer_order() const {
  if (order_ % degree_ != 0)
    throw DivisionError("group order is not divisible by the degree");
  return order_ / degree_;
}

bool PermutationGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) throw ParamError("degree mismatch");
  if (method_ == OrderMethod::trivial) return p.is_identity();
  if (contains_alternating_) return has_odd_generator_ || !p.is_odd();
  return chain_->contains(p);
}

PermutationGroup PermutationGroup::subgroup_without(
    const std::string& name) const {
  std::vector<NamedGenerator> rest;
  bool found = false;
  for (const NamedGenerator& g : gens_) {
    if (g.name == name) {
      found = true;
      continue;
    }
    rest.push_back(g);
  }
  if (!found) throw UnknownGeneratorError("no generator named " + name);
  return PermutationGroup(degree_, std::move(rest));
}

std::vector<Permutation> bk_generator_perms(const LinExtSpace& space) {
  int n = space.n();
  int deg = space.degree();
  std::vector<Permutation> out;
  for (int i = 1; i <= n - 1; ++i) {
    std::vector<int> images(deg);
    for (int e = 0; e < deg; ++e)
      images[e] = space.index_of(bk_move(space.poset(), space[e], i));
    out.push_back(Permutation::from_images(std::move(images)));
  }
  return out;
}

PermutationGroup bk_group(const LinExtSpace& space) {
  std::vector<Permutation> perms = bk_generator_perms(space);
  std::vector<NamedGenerator> gens;
  for (std::size_t i = 0; i < perms.size(); ++i)
    gens.push_back({"t" + std::to_string(i + 1), std::move(perms[i]), false});
  return PermutationGroup(space.degree(), std::move(gens));
}

PermutationGroup bk_group(const Poset& p, long long cap) {
  return bk_group(enumerate(p, cap));
}

}  // namespace bkp
