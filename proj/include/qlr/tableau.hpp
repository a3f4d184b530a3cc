#pragma once

#include <compare>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qlr/partition.hpp"

namespace qlr {

using Word = std::vector<int>;

// Letters are written as digits when all are < 10, else space separated.
std::string word_to_string(std::span<const int> w);
// Accepts "4353" or "4 3 5 3".
Word parse_word(const std::string& s);
// content[k-1] = number of occurrences of k; length is the largest letter.
Composition content(std::span<const int> w);

// Skew tableau in English notation. Row i occupies columns
// inner[i] .. inner[i] + rows[i].size() - 1 (0-based).
struct Tableau {
  std::vector<int> inner;
  std::vector<std::vector<int>> rows;

  Tableau() = default;
  explicit Tableau(std::vector<std::vector<int>> straight_rows);
  Tableau(std::initializer_list<std::vector<int>> rows) : Tableau(std::vector<std::vector<int>>(rows)) {}
  Tableau(std::vector<int> inner_shape, std::vector<std::vector<int>> skew_rows);

  int num_rows() const { return static_cast<int>(rows.size()); }
  int cell_count() const;
  bool empty() const { return cell_count() == 0; }
  int row_end(int r) const { return inner[r] + static_cast<int>(rows[r].size()); }
  std::optional<int> at(int r, int c) const;
  Partition shape() const;
  Partition inner_shape() const;
  bool is_straight() const;

  bool operator==(const Tableau&) const = default;
  auto operator<=>(const Tableau&) const = default;
};

std::string to_string(const Tableau& t);

// Reads rows from the bottom row to the top row, each left to right.
Word row_reading_word(const Tableau& t);
Composition content(const Tableau& t);
bool is_column_strict(const Tableau& t);
bool is_standard(const Tableau& t);
Tableau transpose(const Tableau& t);
// Refills the shape of t with the letters of w in reading order.
Tableau refill(const Tableau& shape_of, std::span<const int> w);
// Cells whose letters lie in [lo, hi], as a skew tableau.
Tableau restrict_letters(const Tableau& t, int lo, int hi);
// Cells with row index >= r0 (first) or < r0 (second), keeping columns.
Tableau rows_from(const Tableau& t, int r0);
Tableau rows_before(const Tableau& t, int r0);
Tableau columns_from(const Tableau& t, int c0);
Tableau columns_before(const Tableau& t, int c0);

// Column-strict tableaux of shape outer/inner and the given content,
// ordered lexicographically on the row-reading word.
std::vector<Tableau> enumerate_cst(const Partition& outer, const Partition& inner, std::span<const int> content);
std::vector<Tableau> enumerate_cst(const Partition& shape, std::span<const int> content);
// All straight-shape column-strict tableaux of the given content.
std::vector<Tableau> all_tableaux_of_content(std::span<const int> content);
std::vector<Tableau> standard_tableaux(int n);

}  // namespace qlr
