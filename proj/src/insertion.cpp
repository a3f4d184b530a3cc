#include "qlr/insertion.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace qlr {

namespace {

void require_straight(const Tableau& t) {
  if (!t.is_straight()) throw std::invalid_argument("insertion expects a straight shape");
}

int column_height(const Tableau& t, int c) {
  int h = 0;
  while (h < t.num_rows() && static_cast<int>(t.rows[h].size()) > c) ++h;
  return h;
}

bool is_corner(const Tableau& t, Cell s) {
  if (s.row < 0 || s.row >= t.num_rows()) return false;
  int len = static_cast<int>(t.rows[s.row].size());
  if (len == 0 || s.col != len - 1) return false;
  return s.row + 1 == t.num_rows() || static_cast<int>(t.rows[s.row + 1].size()) < len;
}

void drop_cell(Tableau& t, Cell s) {
  t.rows[s.row].pop_back();
  while (!t.rows.empty() && t.rows.back().empty()) {
    t.rows.pop_back();
    t.inner.pop_back();
  }
}

void add_cell(Tableau& t, Cell s, int x) {
  if (s.row == t.num_rows()) {
    t.rows.emplace_back();
    t.inner.push_back(0);
  }
  if (static_cast<int>(t.rows[s.row].size()) != s.col) throw std::logic_error("cell does not extend the shape");
  t.rows[s.row].push_back(x);
}

}  // namespace

Cell row_insert(Tableau& t, int x) {
  require_straight(t);
  for (int r = 0;; ++r) {
    if (r == t.num_rows()) {
      add_cell(t, {r, 0}, x);
      return {r, 0};
    }
    auto& row = t.rows[r];
    auto it = std::upper_bound(row.begin(), row.end(), x);
    if (it == row.end()) {
      row.push_back(x);
      return {r, static_cast<int>(row.size()) - 1};
    }
    std::swap(*it, x);
  }
}

Cell column_insert(Tableau& t, int x) {
  require_straight(t);
  for (int c = 0;; ++c) {
    int h = column_height(t, c);
    int r = 0;
    while (r < h && t.rows[r][c] < x) ++r;
    if (r == h) {
      add_cell(t, {h, c}, x);
      return {h, c};
    }
    std::swap(t.rows[r][c], x);
  }
}

int reverse_row_insert(Tableau& t, Cell corner) {
  require_straight(t);
  if (!is_corner(t, corner)) throw std::invalid_argument("reverse row insertion needs an outer corner");
  int y = t.rows[corner.row][corner.col];
  drop_cell(t, corner);
  for (int r = corner.row - 1; r >= 0; --r) {
    auto& row = t.rows[r];
    auto it = std::lower_bound(row.begin(), row.end(), y);
    if (it == row.begin()) throw std::logic_error("reverse row insertion found no smaller entry");
    --it;
    std::swap(*it, y);
  }
  return y;
}

int reverse_column_insert(Tableau& t, Cell corner) {
  require_straight(t);
  if (!is_corner(t, corner)) throw std::invalid_argument("reverse column insertion needs an outer corner");
  int y = t.rows[corner.row][corner.col];
  drop_cell(t, corner);
  for (int c = corner.col - 1; c >= 0; --c) {
    int r = column_height(t, c) - 1;
    while (r >= 0 && t.rows[r][c] > y) --r;
    if (r < 0) throw std::logic_error("reverse column insertion found no smaller entry");
    std::swap(t.rows[r][c], y);
  }
  return y;
}

std::vector<Cell> outer_corners(const Tableau& t) {
  std::vector<Cell> out;
  for (int r = 0; r < t.num_rows(); ++r) {
    Cell s{r, static_cast<int>(t.rows[r].size()) - 1};
    if (is_corner(t, s)) out.push_back(s);
  }
  return out;
}

Tableau schensted_p(std::span<const int> w) {
  Tableau t;
  for (int x : w) row_insert(t, x);
  return t;
}

Tableau schensted_p_by_columns(std::span<const int> w) {
  Tableau t;
  for (auto it = w.rbegin(); it != w.rend(); ++it) column_insert(t, *it);
  return t;
}

bool knuth_equivalent(std::span<const int> u, std::span<const int> v) { return schensted_p(u) == schensted_p(v); }

TableauPair column_rsk(std::span<const Word> words) {
  TableauPair pq;
  for (std::size_t k = 0; k < words.size(); ++k) {
    const Word& w = words[k];
    if (!std::is_sorted(w.begin(), w.end())) throw std::invalid_argument("column RSK expects weakly increasing words");
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      Cell s = column_insert(pq.p, *it);
      add_cell(pq.q, s, static_cast<int>(k) + 1);
    }
  }
  return pq;
}

std::vector<Word> column_rsk_inverse(const TableauPair& pq, int num_words) {
  if (pq.p.shape() != pq.q.shape()) throw std::invalid_argument("P and Q shapes differ");
  if (!is_column_strict(pq.p) || !is_column_strict(pq.q)) throw std::invalid_argument("P and Q must be column strict");
  Tableau p = pq.p;
  Tableau q = pq.q;
  std::vector<Word> words(num_words);
  for (int k = num_words; k >= 1; --k) {
    std::vector<Cell> cells;
    for (int r = 0; r < q.num_rows(); ++r)
      for (int c = 0; c < static_cast<int>(q.rows[r].size()); ++c)
        if (q.rows[r][c] == k) cells.push_back({r, c});
        else if (q.rows[r][c] > k) throw std::invalid_argument("Q has a letter beyond the number of words");
    std::sort(cells.begin(), cells.end(), [](Cell a, Cell b) { return a.col > b.col; });
    for (Cell s : cells) {
      if (!is_corner(q, s)) throw std::invalid_argument("Q letters do not form a horizontal strip");
      words[k - 1].push_back(reverse_column_insert(p, s));
      drop_cell(q, s);
    }
    if (!std::is_sorted(words[k - 1].begin(), words[k - 1].end()))
      throw std::logic_error("inverse column RSK produced a decreasing word");
  }
  return words;
}

Tableau evacuation(const Tableau& t, int n) {
  if (!t.is_straight()) throw std::invalid_argument("evacuation expects a straight shape");
  for (int x : row_reading_word(t))
    if (x < 1 || x > n) throw std::invalid_argument("letter outside the alphabet");
  Tableau out;
  Partition prev;
  for (int i = 1; i <= n; ++i) {
    Partition sh = schensted_p(row_reading_word(restrict_letters(t, n + 1 - i, n))).shape();
    for (int r = 0; r < sh.length(); ++r)
      for (int c = prev[r]; c < sh[r]; ++c) add_cell(out, {r, c}, i);
    prev = sh;
  }
  return out;
}

Tableau h_slice(const Tableau& t, int r) {
  Word w = row_reading_word(rows_before(t, r));
  Word s = row_reading_word(rows_from(t, r));
  w.insert(w.end(), s.begin(), s.end());
  return schensted_p(w);
}

Tableau v_slice(const Tableau& t, int c) {
  Word w = row_reading_word(columns_from(t, c));
  Word s = row_reading_word(columns_before(t, c));
  w.insert(w.end(), s.begin(), s.end());
  return schensted_p(w);
}

int overlap(std::span<const int> v, std::span<const int> u) {
  Word w(v.begin(), v.end());
  w.insert(w.end(), u.begin(), u.end());
  Tableau p = schensted_p(w);
  return p.num_rows() > 1 ? static_cast<int>(p.rows[1].size()) : 0;
}

bool is_column_strict(const TwoRow& r) {
  if (!std::is_sorted(r.top.begin(), r.top.end()) || !std::is_sorted(r.bottom.begin(), r.bottom.end())) return false;
  if (r.offset < 0) return false;
  if (r.offset + static_cast<int>(r.top.size()) < static_cast<int>(r.bottom.size())) return false;
  for (int c = r.offset; c < static_cast<int>(r.bottom.size()); ++c)
    if (r.top[c - r.offset] >= r.bottom[c]) return false;
  return true;
}

TwoRow max_overlap(std::span<const int> top, std::span<const int> bottom) {
  int nt = static_cast<int>(top.size());
  int nb = static_cast<int>(bottom.size());
  for (int a = std::max(0, nb - nt);; ++a) {
    TwoRow r{a, Word(top.begin(), top.end()), Word(bottom.begin(), bottom.end())};
    if (is_column_strict(r)) return r;
    if (a > nb) throw std::invalid_argument("rows are not weakly increasing");
  }
}

namespace {

using Grid = std::vector<std::optional<int>>;

struct GridState {
  Grid top;
  Grid bottom;
};

GridState to_grid(const TwoRow& r) {
  int width = std::max(r.offset + static_cast<int>(r.top.size()), static_cast<int>(r.bottom.size())) + 2;
  GridState g{Grid(width), Grid(width)};
  for (std::size_t k = 0; k < r.top.size(); ++k) g.top[r.offset + k] = r.top[k];
  for (std::size_t k = 0; k < r.bottom.size(); ++k) g.bottom[k] = r.bottom[k];
  return g;
}

TwoRow from_grid(const GridState& g) {
  TwoRow r;
  int c = 0;
  while (c < static_cast<int>(g.top.size()) && !g.top[c]) ++c;
  r.offset = c;
  for (; c < static_cast<int>(g.top.size()) && g.top[c]; ++c) r.top.push_back(*g.top[c]);
  for (c = 0; c < static_cast<int>(g.bottom.size()) && g.bottom[c]; ++c) r.bottom.push_back(*g.bottom[c]);
  return r;
}

TwoRow forward_slide(const TwoRow& r) {
  if (r.offset == 0) throw std::logic_error("no inner cell to slide into");
  GridState g = to_grid(r);
  int h = r.offset - 1;
  bool in_top = true;
  for (;;) {
    Grid& row = in_top ? g.top : g.bottom;
    std::optional<int> right = h + 1 < static_cast<int>(row.size()) ? row[h + 1] : std::nullopt;
    std::optional<int> below = in_top ? g.bottom[h] : std::nullopt;
    if (below && (!right || *below <= *right)) {
      g.top[h] = below;
      g.bottom[h].reset();
      in_top = false;
    } else if (right) {
      row[h] = right;
      row[h + 1].reset();
      ++h;
    } else {
      break;
    }
  }
  return from_grid(g);
}

TwoRow backward_slide(const TwoRow& r) {
  int h = static_cast<int>(r.bottom.size());
  if (r.offset + static_cast<int>(r.top.size()) <= h) throw std::logic_error("no outer cell to slide out of");
  GridState g = to_grid(r);
  bool in_top = false;
  for (;;) {
    Grid& row = in_top ? g.top : g.bottom;
    std::optional<int> left = h > 0 ? row[h - 1] : std::nullopt;
    std::optional<int> above = in_top ? std::nullopt : g.top[h];
    if (above && (!left || *above >= *left)) {
      g.bottom[h] = above;
      g.top[h].reset();
      in_top = true;
    } else if (left) {
      row[h] = left;
      row[h - 1].reset();
      --h;
    } else {
      break;
    }
  }
  if (!in_top) throw std::logic_error("backward slide left a hole in the bottom row");
  return from_grid(g);
}

}  // namespace

std::vector<TwoRow> two_row_slides(const TwoRow& start, int target_top) {
  std::vector<TwoRow> states{start};
  while (static_cast<int>(states.back().top.size()) != target_top) {
    const TwoRow& cur = states.back();
    TwoRow next = static_cast<int>(cur.top.size()) < target_top ? forward_slide(cur) : backward_slide(cur);
    if (next.top.size() == cur.top.size()) throw std::logic_error("slide did not move a cell between rows");
    states.push_back(next);
  }
  return states;
}

}  // namespace qlr
