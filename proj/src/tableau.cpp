#include "bkp/tableau.hpp"

#include <algorithm>

namespace bkp {

ColumnStrictTableau ColumnStrictTableau::from_rows(
    std::vector<std::vector<int>> rows) {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].empty()) throw ShapeError("empty tableau row");
    if (r + 1 < rows.size() && rows[r + 1].size() > rows[r].size())
      throw ShapeError("row lengths must weakly decrease");
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (rows[r][c] < 1) throw ShapeError("entries must be positive");
      if (c + 1 < rows[r].size() && rows[r][c] > rows[r][c + 1])
        throw ShapeError("rows must weakly increase");
      if (r + 1 < rows.size() && c < rows[r + 1].size() &&
          rows[r][c] >= rows[r + 1][c])
        throw ShapeError("columns must strictly increase");
    }
  }
  ColumnStrictTableau t;
  t.rows_ = std::move(rows);
  return t;
}

Partition ColumnStrictTableau::shape() const {
  std::vector<int> parts;
  for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
  return Partition(parts);
}

int ColumnStrictTableau::size() const {
  int total = 0;
  for (const auto& row : rows_) total += static_cast<int>(row.size());
  return total;
}

int ColumnStrictTableau::max_entry() const {
  int mx = 0;
  for (const auto& row : rows_)
    for (int x : row) mx = std::max(mx, x);
  return mx;
}

std::vector<int> ColumnStrictTableau::content() const {
  std::vector<int> alpha(max_entry(), 0);
  for (const auto& row : rows_)
    for (int x : row) ++alpha[x - 1];
  return alpha;
}

bool ColumnStrictTableau::is_standard() const {
  std::vector<int> alpha = content();
  return static_cast<int>(alpha.size()) == size() &&
         std::all_of(alpha.begin(), alpha.end(), [](int a) { return a == 1; });
}

ColumnStrictTableau cst_bk_move(const ColumnStrictTableau& t, int i) {
  if (i < 1) throw IndexError("bk move index must be positive");
  std::vector<std::vector<int>> rows = t.rows();
  int nrows = static_cast<int>(rows.size());
  auto entry = [&](int r, int c) -> int {
    if (r < 0 || r >= nrows || c < 0 || c >= static_cast<int>(rows[r].size()))
      return 0;
    return rows[r][c];
  };
  for (int r = 0; r < nrows; ++r) {
    int width = static_cast<int>(rows[r].size());
    // ranges of entry i and i+1 in this row (half-open)
    int i0 = width, i1 = width, j0 = width, j1 = width;
    for (int c = 0; c < width; ++c) {
      if (rows[r][c] == i && i0 == width) i0 = c;
      if (rows[r][c] == i) i1 = c + 1;
      if (rows[r][c] == i + 1 && j0 == width) j0 = c;
      if (rows[r][c] == i + 1) j1 = c + 1;
    }
    // paired i's sit above an i+1 and form a prefix of the i-range; paired
    // (i+1)'s sit below an i and form a suffix of the (i+1)-range
    int paired_i = 0;
    for (int c = i0; c < i1; ++c)
      if (entry(r + 1, c) == i + 1) ++paired_i;
    int free_j = 0;
    for (int c = j0; c < j1; ++c)
      if (entry(r - 1, c) != i) ++free_j;
    int free_i = (i1 > i0 ? i1 - i0 : 0) - paired_i;
    // the free block is contiguous: free i's then free (i+1)'s
    int start = (i1 > i0) ? i0 + paired_i : j0;
    for (int k = 0; k < free_i + free_j; ++k)
      rows[r][start + k] = (k < free_j) ? i : i + 1;
  }
  return ColumnStrictTableau::from_rows(std::move(rows));
}

Word syt_to_linext(const ColumnStrictTableau& t) {
  if (!t.is_standard()) throw NotStandardError("tableau is not standard");
  int n = t.size();
  Word w(n);
  int id = 0;
  for (const auto& row : t.rows()) {
    for (int x : row) w[x - 1] = id++;
  }
  return w;
}

ColumnStrictTableau linext_to_syt(const Word& w, const Partition& shape) {
  if (shape.sum() != static_cast<int>(w.size()))
    throw NotStandardError("word length does not match shape");
  if (!is_linear_extension(ferrers(shape), w))
    throw NotStandardError("word is not an extension of the ferrers poset");
  std::vector<std::vector<int>> rows(shape.rows());
  for (int r = 0; r < shape.rows(); ++r) rows[r].assign(shape[r], 0);
  for (std::size_t k = 0; k < w.size(); ++k) {
    int id = w[k];
    for (int r = 0; r < shape.rows(); ++r) {
      if (id < shape[r]) {
        rows[r][id] = static_cast<int>(k) + 1;
        break;
      }
      id -= shape[r];
    }
  }
  return ColumnStrictTableau::from_rows(std::move(rows));
}

std::vector<ColumnStrictTableau> all_syt(const Partition& shape) {
  std::vector<ColumnStrictTableau> out;
  int n = shape.sum();
  if (n == 0) return out;
  std::vector<std::vector<int>> rows(shape.rows());
  for (int r = 0; r < shape.rows(); ++r) rows[r].assign(shape[r], 0);
  std::vector<int> fill(shape.rows(), 0);  // cells used per row
  auto rec = [&](auto&& self, int next) -> void {
    if (next > n) {
      out.push_back(ColumnStrictTableau::from_rows(rows));
      return;
    }
    for (int r = 0; r < shape.rows(); ++r) {
      int c = fill[r];
      if (c >= shape[r]) continue;
      if (r > 0 && fill[r - 1] <= c) continue;  // cell above must be filled
      rows[r][c] = next;
      ++fill[r];
      self(self, next + 1);
      --fill[r];
    }
  };
  rec(rec, 1);
  return out;
}

std::vector<ColumnStrictTableau> all_cst(const Partition& shape, int max_entry) {
  std::vector<ColumnStrictTableau> out;
  if (shape.empty()) return out;
  std::vector<std::vector<int>> rows(shape.rows());
  for (int r = 0; r < shape.rows(); ++r) rows[r].assign(shape[r], 0);
  // fill cells row-major; the column-strict constraints are local
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < shape.rows(); ++r)
    for (int c = 0; c < shape[r]; ++c) cells.emplace_back(r, c);
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == cells.size()) {
      out.push_back(ColumnStrictTableau::from_rows(rows));
      return;
    }
    auto [r, c] = cells[k];
    int lo = 1;
    if (c > 0) lo = std::max(lo, rows[r][c - 1]);
    if (r > 0) lo = std::max(lo, rows[r - 1][c] + 1);
    for (int v = lo; v <= max_entry; ++v) {
      rows[r][c] = v;
      self(self, k + 1);
    }
    rows[r][c] = 0;
  };
  rec(rec, 0);
  return out;
}

}  // namespace bkp
