#pragma once

#include <span>
#include <vector>

#include "qlr/tableau.hpp"

namespace qlr {

struct Cell {
  int row = 0;  // 0-based
  int col = 0;
  bool operator==(const Cell&) const = default;
  auto operator<=>(const Cell&) const = default;
};

// Straight-shape insertion primitives. Each returns the cell that changed
// the shape (or was vacated).
Cell row_insert(Tableau& t, int x);
Cell column_insert(Tableau& t, int x);
int reverse_row_insert(Tableau& t, Cell corner);
int reverse_column_insert(Tableau& t, Cell corner);
std::vector<Cell> outer_corners(const Tableau& t);

// Schensted tableau by row insertion from the left end of w.
Tableau schensted_p(std::span<const int> w);
// Same tableau computed by column insertion from the right end of w.
Tableau schensted_p_by_columns(std::span<const int> w);
bool knuth_equivalent(std::span<const int> u, std::span<const int> v);

struct TableauPair {
  Tableau p;
  Tableau q;
  bool operator==(const TableauPair&) const = default;
};

// words[k] must be weakly increasing and is recorded by letter k+1;
// p = P(words[last] ... words[1] words[0]).
TableauPair column_rsk(std::span<const Word> words);
// Inverse of column_rsk; num_words may exceed the largest letter of q.
std::vector<Word> column_rsk_inverse(const TableauPair& pq, int num_words);

// ev(T) restricted to [i] has the shape of P(T restricted to [n+1-i, n]).
Tableau evacuation(const Tableau& t, int n);

// P(T_north T_south) with the slice after row r (1-based count of rows kept north).
Tableau h_slice(const Tableau& t, int r);
// P(T_east T_west) with the slice after column c.
Tableau v_slice(const Tableau& t, int c);

// Length of the second row of P(v u).
int overlap(std::span<const int> v, std::span<const int> u);

// Two-row skew tableau: top row starts at column `offset`, bottom row at 0.
struct TwoRow {
  int offset = 0;
  Word top;
  Word bottom;
  bool operator==(const TwoRow&) const = default;
};

// Places top over bottom with the largest number of two-cell columns.
TwoRow max_overlap(std::span<const int> top, std::span<const int> bottom);
bool is_column_strict(const TwoRow& r);
// Jeu de taquin slides until the top row has target_top cells; the first
// entry is the starting state.
std::vector<TwoRow> two_row_slides(const TwoRow& start, int target_top);

}  // namespace qlr
