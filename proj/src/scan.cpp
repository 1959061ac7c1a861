#include "bkp/scan.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <thread>

namespace bkp {

std::vector<Poset> all_posets(int n) {
  if (n < 1 || n > 7) throw CapError("census supports 1 <= n <= 7");
  // grow by attaching a new maximal element above each order ideal, then
  // deduplicate by canonical form
  std::map<std::string, Poset> classes;
  classes.emplace(canonical_form(antichain(1)), antichain(1));
  for (int k = 2; k <= n; ++k) {
    std::map<std::string, Poset> next;
    for (const auto& [form, p] : classes) {
      for (ElemMask ideal : order_ideals(p)) {
        std::vector<std::pair<int, int>> cov(p.covers());
        ElemMask tops = p.maximal_of(ideal);
        for (ElemMask m = tops; m;) {
          int v = std::countr_zero(m);
          m &= m - 1;
          cov.emplace_back(v, k - 1);
        }
        Poset grown = Poset::from_covers(k, cov);
        next.emplace(canonical_form(grown), grown);
      }
    }
    classes = std::move(next);
  }
  std::vector<Poset> out;
  out.reserve(classes.size());
  for (auto& [form, p] : classes) out.push_back(std::move(p));
  return out;
}

GroupSummary summarize(const PermutationGroup& g) {
  GroupSummary s;
  s.degree = g.degree();
  s.order = g.order();
  s.transitive = g.is_transitive();
  s.primitive = g.is_primitive();
  s.two_transitive = g.is_2_transitive();
  s.symmetric = g.is_symmetric();
  s.stab_order = g.stabilizer_order();
  return s;
}

namespace {

ClassificationRecord classify_one(const Poset& p, long long cap) {
  ClassificationRecord rec;
  rec.canonical = canonical_form(p);
  rec.poset = p;
  rec.n = p.size();
  StructureInfo info = structure(p);
  rec.connected = info.connected;
  rec.series_parallel = info.is_series_parallel;
  try {
    LinExtSpace space = enumerate(p, cap);
    BkAction action(std::move(space));
    PermutationGroup g = bk_group(action.space());
    rec.report = relations_report(action, g);
    rec.group = summarize(g);
    rec.group_computed = true;
  } catch (const DegreeCapError& e) {
    rec.group_computed = false;
    rec.skip_reason = e.what();
  }
  return rec;
}

bool matches(const ClassificationRecord& rec, const ScanFilter& f) {
  if (f.connected && *f.connected != rec.connected) return false;
  if (f.series_parallel && *f.series_parallel != rec.series_parallel)
    return false;
  if (f.le_cactus || f.le_symmetric || f.le_primitive || f.braid) {
    if (!rec.group_computed) return false;
    if (f.le_cactus && *f.le_cactus != rec.report.le_cactus) return false;
    if (f.le_symmetric && *f.le_symmetric != rec.report.le_symmetric)
      return false;
    if (f.le_primitive && *f.le_primitive != rec.report.le_primitive)
      return false;
    if (f.braid && *f.braid != rec.report.braid_failures.empty()) return false;
  }
  return true;
}

}  // namespace

std::vector<ClassificationRecord> classify(int n, const ScanFilter& filter,
                                           int threads, long long cap) {
  std::vector<Poset> posets = all_posets(n);
  std::vector<ClassificationRecord> records(posets.size());
  if (threads < 1) threads = 1;
  threads = std::min<int>(threads, static_cast<int>(posets.size()));
  if (threads <= 1) {
    for (std::size_t i = 0; i < posets.size(); ++i)
      records[i] = classify_one(posets[i], cap);
  } else {
    // one record slot per input keeps the merge deterministic
    std::atomic<std::size_t> cursor{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (;;) {
          std::size_t i = cursor.fetch_add(1);
          if (i >= posets.size()) return;
          records[i] = classify_one(posets[i], cap);
        }
      });
    }
    for (auto& th : pool) th.join();
  }
  std::vector<ClassificationRecord> out;
  for (auto& rec : records)
    if (matches(rec, filter)) out.push_back(std::move(rec));
  return out;
}

Poset jdt_counterexample() {
  // covers transcribed with elements named by display label minus one
  std::vector<std::pair<int, int>> cov = {{0, 1}, {1, 2}, {1, 3}, {2, 4},
                                          {3, 6}, {4, 5}, {4, 6}, {4, 7},
                                          {5, 8}, {6, 8}, {7, 8}};
  return Poset::from_covers(9, cov);
}

}  // namespace bkp
