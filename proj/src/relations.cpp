#include "bkp/relations.hpp"

#include <algorithm>

namespace bkp {

BkAction::BkAction(LinExtSpace space) : space_(std::move(space)) {
  t_ = bk_generator_perms(space_);
  int n = space_.n();
  int deg = space_.degree();
  // d_i = t_i d_{i-1}; q_i = q_{i-1} d_i (rightmost factor acts first)
  q_.clear();
  q_.reserve(std::max(n, 1));
  Permutation d(deg);
  q_.emplace_back(deg);  // q_0 = id
  for (int i = 1; i <= n - 1; ++i) {
    d = t_[i - 1] * d;
    q_.push_back(q_.back() * d);
  }
  if (n == 0) q_.clear();
}

const Permutation& BkAction::t(int i) const {
  if (i < 1 || i > n() - 1) throw IndexError("t index out of range");
  return t_[i - 1];
}

const Permutation& BkAction::q(int i) const {
  if (i < 0 || i > n() - 1) throw IndexError("q index out of range");
  return q_[i];
}

Permutation BkAction::q_jk(int j, int k) const {
  if (j < 1 || k <= j || k > n()) throw IndexError("q_jk indices out of range");
  return q(k - 1) * q(k - j) * q(k - 1);
}

std::vector<int> trivial_moves(const BkAction& a) {
  std::vector<int> out;
  for (int i = 1; i <= a.n() - 1; ++i)
    if (a.t(i).is_identity()) out.push_back(i);
  return out;
}

std::vector<int> trivial_moves(const Poset& p) {
  return trivial_moves(BkAction(enumerate(p)));
}

std::vector<int> braid_failures(const BkAction& a) {
  std::vector<int> out;
  for (int i = 1; i + 1 <= a.n() - 1; ++i) {
    Permutation prod = a.t(i) * a.t(i + 1);
    if (!(prod * prod * prod).is_identity()) out.push_back(i);
  }
  return out;
}

bool braid_holds(const BkAction& a) { return braid_failures(a).empty(); }

bool braid_holds(const Poset& p) {
  return braid_holds(BkAction(enumerate(p)));
}

std::vector<CactusFailure> cactus_failures(const BkAction& a) {
  std::vector<CactusFailure> out;
  int n = a.n();
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = i + 2; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        Permutation qjk = a.q_jk(j, k);
        Permutation w = a.t(i) * qjk;
        w = w * w;
        if (w.is_identity()) continue;
        out.push_back({i, j, k, w.first_moved()});
      }
    }
  }
  return out;
}

std::vector<CactusFailure> cactus_failures(const Poset& p) {
  return cactus_failures(BkAction(enumerate(p)));
}

bool is_le_cactus(const BkAction& a) { return cactus_failures(a).empty(); }

bool is_le_cactus(const Poset& p) {
  return is_le_cactus(BkAction(enumerate(p)));
}

bool is_le_symmetric(const Poset& p) { return bk_group(p).is_symmetric(); }

bool is_le_primitive(const Poset& p) { return bk_group(p).is_primitive(); }

BigInt stab_size(const Poset& p) { return bk_group(p).stabilizer_order(); }

int comparability(const LinExtSpace& space) {
  const Poset& p = space.poset();
  int best = 0;
  for (int e = 0; e < space.degree(); ++e) {
    const Word& w = space[e];
    int c = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (p.less(w[i], w[i + 1])) ++c;
    best = std::max(best, c);
  }
  return best;
}

int comparability(const Poset& p) { return comparability(enumerate(p)); }

RelationReport relations_report(const BkAction& a, const PermutationGroup& g) {
  RelationReport r;
  r.trivial_ti = trivial_moves(a);
  r.braid_failures = braid_failures(a);
  r.cactus_failures = cactus_failures(a);
  r.le_cactus = r.cactus_failures.empty();
  r.le_symmetric = g.is_symmetric();
  r.le_primitive = g.is_primitive();
  r.stab_size = g.stabilizer_order();
  r.comparability = comparability(a.space());
  return r;
}

RelationReport relations_report(const Poset& p, long long cap) {
  BkAction a(enumerate(p, cap));
  PermutationGroup g = bk_group(a.space());
  return relations_report(a, g);
}

bool NumericLawsReport::all_pass() const {
  return std::all_of(laws.begin(), laws.end(),
                     [](const LawResult& l) { return !l.applicable || l.pass; });
}

namespace {

LawResult make_law(std::string name, bool pass, std::string detail) {
  LawResult l;
  l.name = std::move(name);
  l.pass = pass;
  l.detail = std::move(detail);
  return l;
}

bool stab_value_allowed(const BigInt& s) {
  if (s == 6 || s == 12 || s == 36) return true;
  if (s % 24 == 0) return true;
  BigInt t = s;
  while (t > 1 && t % 2 == 0) t /= 2;
  return t == 1;  // power of two (including 1)
}

BigInt binomial(int n, int k) {
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

}  // namespace

NumericLawsReport check_numeric_laws(const Poset& p) {
  NumericLawsReport rep;
  PermutationGroup g = bk_group(p);
  PermutationGroup gd = bk_group(dual(p));
  rep.laws.push_back(make_law(
      "dual_order_equal", g.order() == gd.order(),
      to_decimal(g.order()) + " vs " + to_decimal(gd.order())));

  BigInt s = g.stabilizer_order();
  rep.laws.push_back(make_law("stab_value_classification",
                              stab_value_allowed(s), "s = " + to_decimal(s)));

  StructureInfo info = structure(p);
  LinExtSpace space = enumerate(p);
  int c = comparability(space);
  bool bounds = (info.height - 1 <= c) && (c <= p.size() - info.width);
  rep.laws.push_back(make_law(
      "comparability_bounds", bounds,
      "h-1 = " + std::to_string(info.height - 1) + ", c = " + std::to_string(c) +
          ", n-w = " + std::to_string(p.size() - info.width)));

  LawResult two_c;
  two_c.name = "stab_geq_2_pow_c";
  if (p.size() >= 1 && ordinal_split_points(p).empty()) {
    BigInt bound = BigInt(1) << c;
    two_c.pass = s >= bound;
    two_c.detail = "s = " + to_decimal(s) + ", 2^c = " + to_decimal(bound);
  } else {
    two_c.applicable = false;
    two_c.detail = "poset decomposes";
  }
  rep.laws.push_back(std::move(two_c));
  return rep;
}

NumericLawsReport check_numeric_laws(const Poset& p, const Poset& q) {
  NumericLawsReport rep;
  PermutationGroup gp = bk_group(p);
  PermutationGroup gq = bk_group(q);
  PermutationGroup gsum = bk_group(ordinal_sum(p, q));
  rep.laws.push_back(make_law(
      "osum_order_product", gsum.order() == gp.order() * gq.order(),
      to_decimal(gsum.order()) + " vs " +
          to_decimal(gp.order() * gq.order())));
  rep.laws.push_back(
      make_law("osum_stab_product",
               gsum.stabilizer_order() ==
                   gp.stabilizer_order() * gq.stabilizer_order(),
               to_decimal(gsum.stabilizer_order())));

  PermutationGroup gun = bk_group(disjoint_union(p, q));
  int m = p.size(), n = q.size();
  BigInt base = gp.order() * gq.order();
  unsigned expo = static_cast<unsigned>(binomial(m + n, n));
  BigInt bound = boost::multiprecision::pow(base, expo) * factorial(m + n);
  rep.laws.push_back(make_law("disjoint_union_order_bound",
                              gun.order() <= bound,
                              to_decimal(gun.order()) + " <= " +
                                  to_decimal(bound)));
  return rep;
}

}  // namespace bkp
