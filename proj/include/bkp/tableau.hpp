#pragma once

#include <vector>

#include "bkp/linext.hpp"
#include "bkp/poset.hpp"

namespace bkp {

// A filling of a Young diagram, weakly increasing along rows and strictly
// increasing down columns. Entries are >= 1.
class ColumnStrictTableau {
 public:
  ColumnStrictTableau() = default;

  // Validates shape and strictness; throws ShapeError.
  static ColumnStrictTableau from_rows(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  Partition shape() const;
  int size() const;       // number of cells
  int max_entry() const;  // 0 for the empty tableau

  // content()[i] = multiplicity of entry i+1, up to max_entry.
  std::vector<int> content() const;
  bool is_standard() const;

  bool operator==(const ColumnStrictTableau&) const = default;

 private:
  std::vector<std::vector<int>> rows_;
};

// The Bender-Knuth involution t_i on column-strict tableaux: in every row
// the free i's and free (i+1)'s trade multiplicities; vertically paired
// entries stay fixed. i >= 1.
ColumnStrictTableau cst_bk_move(const ColumnStrictTableau& t, int i);

// Bijection between standard tableaux of shape lambda and linear extensions
// of ferrers(lambda): the cell holding entry k is the element labeled k.
// Both directions throw NotStandardError on invalid input.
Word syt_to_linext(const ColumnStrictTableau& t);
ColumnStrictTableau linext_to_syt(const Word& w, const Partition& shape);

std::vector<ColumnStrictTableau> all_syt(const Partition& shape);

// All column-strict fillings of the shape with entries in [1, max_entry].
std::vector<ColumnStrictTableau> all_cst(const Partition& shape, int max_entry);

}  // namespace bkp
