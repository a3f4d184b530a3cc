#include "qlr/tableau.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace qlr {

std::string word_to_string(std::span<const int> w) {
  bool small = std::all_of(w.begin(), w.end(), [](int x) { return x >= 0 && x < 10; });
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!small && i) s += ' ';
    s += std::to_string(w[i]);
  }
  return s;
}

Word parse_word(const std::string& s) {
  Word w;
  bool spaced = s.find(' ') != std::string::npos;
  if (!spaced) {
    for (char ch : s) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) throw std::invalid_argument("bad letter in word: " + s);
      w.push_back(ch - '0');
    }
    return w;
  }
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == ' ') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ') ++j;
    w.push_back(std::stoi(s.substr(i, j - i)));
    i = j;
  }
  return w;
}

Composition content(std::span<const int> w) {
  Composition c;
  for (int x : w) {
    if (x < 1) throw std::invalid_argument("letters must be positive");
    if (static_cast<int>(c.size()) < x) c.resize(x, 0);
    ++c[x - 1];
  }
  return c;
}

Tableau::Tableau(std::vector<std::vector<int>> straight_rows)
    : Tableau(std::vector<int>(straight_rows.size(), 0), std::move(straight_rows)) {}

Tableau::Tableau(std::vector<int> inner_shape, std::vector<std::vector<int>> skew_rows)
    : inner(std::move(inner_shape)), rows(std::move(skew_rows)) {
  if (inner.size() > rows.size()) rows.resize(inner.size());
  inner.resize(rows.size(), 0);
  while (!rows.empty() && rows.back().empty()) {
    rows.pop_back();
    inner.pop_back();
  }
}

int Tableau::cell_count() const {
  int c = 0;
  for (const auto& r : rows) c += static_cast<int>(r.size());
  return c;
}

std::optional<int> Tableau::at(int r, int c) const {
  if (r < 0 || r >= num_rows()) return std::nullopt;
  int k = c - inner[r];
  if (k < 0 || k >= static_cast<int>(rows[r].size())) return std::nullopt;
  return rows[r][k];
}

Partition Tableau::shape() const {
  std::vector<int> s;
  for (int r = 0; r < num_rows(); ++r) s.push_back(row_end(r));
  return Partition(s);
}

Partition Tableau::inner_shape() const { return Partition(inner); }

bool Tableau::is_straight() const {
  return std::all_of(inner.begin(), inner.end(), [](int x) { return x == 0; });
}

std::string to_string(const Tableau& t) {
  std::string s = "[";
  for (int r = 0; r < t.num_rows(); ++r) {
    if (r) s += ",";
    s += "[";
    for (int k = 0; k < t.inner[r]; ++k) s += k ? ",." : ".";
    for (std::size_t k = 0; k < t.rows[r].size(); ++k) {
      if (k || t.inner[r]) s += ",";
      s += std::to_string(t.rows[r][k]);
    }
    s += "]";
  }
  return s + "]";
}

Word row_reading_word(const Tableau& t) {
  Word w;
  for (int r = t.num_rows() - 1; r >= 0; --r) w.insert(w.end(), t.rows[r].begin(), t.rows[r].end());
  return w;
}

Composition content(const Tableau& t) { return content(row_reading_word(t)); }

bool is_column_strict(const Tableau& t) {
  for (int r = 0; r < t.num_rows(); ++r) {
    if (r > 0 && t.inner[r] > t.inner[r - 1]) return false;
    if (r > 0 && t.row_end(r) > t.row_end(r - 1)) return false;
    const auto& row = t.rows[r];
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (row[k] < 1) return false;
      if (k + 1 < row.size() && row[k] > row[k + 1]) return false;
      if (r > 0) {
        auto above = t.at(r - 1, t.inner[r] + static_cast<int>(k));
        if (above && *above >= row[k]) return false;
      }
    }
  }
  return true;
}

bool is_standard(const Tableau& t) {
  if (!is_column_strict(t)) return false;
  auto c = content(t);
  return std::all_of(c.begin(), c.end(), [](int x) { return x == 1; });
}

Tableau transpose(const Tableau& t) {
  if (!t.is_straight()) throw std::invalid_argument("transpose expects a straight shape");
  Partition sh = t.shape();
  std::vector<std::vector<int>> rows(sh.empty() ? 0 : sh[0]);
  for (int r = 0; r < t.num_rows(); ++r)
    for (std::size_t c = 0; c < t.rows[r].size(); ++c) rows[c].push_back(t.rows[r][c]);
  return Tableau(rows);
}

Tableau refill(const Tableau& shape_of, std::span<const int> w) {
  if (static_cast<int>(w.size()) != shape_of.cell_count()) throw std::invalid_argument("word length differs from shape size");
  Tableau out = shape_of;
  std::size_t pos = 0;
  for (int r = out.num_rows() - 1; r >= 0; --r)
    for (auto& x : out.rows[r]) x = w[pos++];
  return out;
}

Tableau restrict_letters(const Tableau& t, int lo, int hi) {
  std::vector<int> inner(t.num_rows(), 0);
  std::vector<std::vector<int>> rows(t.num_rows());
  for (int r = 0; r < t.num_rows(); ++r) {
    inner[r] = t.inner[r];
    for (int x : t.rows[r]) {
      if (x < lo)
        ++inner[r];
      else if (x <= hi)
        rows[r].push_back(x);
    }
  }
  return Tableau(inner, rows);
}

Tableau rows_from(const Tableau& t, int r0) {
  if (r0 >= t.num_rows()) return Tableau();
  return Tableau(std::vector<int>(t.inner.begin() + r0, t.inner.end()),
                 std::vector<std::vector<int>>(t.rows.begin() + r0, t.rows.end()));
}

Tableau rows_before(const Tableau& t, int r0) {
  r0 = std::min(r0, t.num_rows());
  return Tableau(std::vector<int>(t.inner.begin(), t.inner.begin() + r0),
                 std::vector<std::vector<int>>(t.rows.begin(), t.rows.begin() + r0));
}

Tableau columns_from(const Tableau& t, int c0) {
  std::vector<int> inner(t.num_rows());
  std::vector<std::vector<int>> rows(t.num_rows());
  for (int r = 0; r < t.num_rows(); ++r) {
    inner[r] = std::max(t.inner[r], c0);
    for (std::size_t k = 0; k < t.rows[r].size(); ++k)
      if (t.inner[r] + static_cast<int>(k) >= c0) rows[r].push_back(t.rows[r][k]);
  }
  return Tableau(inner, rows);
}

Tableau columns_before(const Tableau& t, int c0) {
  std::vector<int> inner(t.num_rows());
  std::vector<std::vector<int>> rows(t.num_rows());
  for (int r = 0; r < t.num_rows(); ++r) {
    inner[r] = std::min(t.inner[r], c0);
    for (std::size_t k = 0; k < t.rows[r].size(); ++k)
      if (t.inner[r] + static_cast<int>(k) < c0) rows[r].push_back(t.rows[r][k]);
  }
  return Tableau(inner, rows);
}

std::vector<Tableau> enumerate_cst(const Partition& outer, const Partition& inner, std::span<const int> content) {
  std::vector<Tableau> out;
  if (!outer.contains(inner)) return out;
  for (int x : content)
    if (x < 0) return out;
  if (outer.size() - inner.size() != sum(content)) return out;

  const int nrows = outer.length();
  std::vector<int> cur = inner.padded(nrows);
  const std::vector<int> cap = outer.padded(nrows);
  std::vector<std::vector<int>> rows(nrows);

  // Letter k occupies a horizontal strip added to the current shape.
  auto place = [&](auto&& self, std::size_t k) -> void {
    if (k == content.size()) {
      out.emplace_back(inner.padded(nrows), rows);
      return;
    }
    std::vector<int> before = cur;
    auto strip = [&](auto&& strip_self, int r, int left) -> void {
      if (r == nrows) {
        if (left == 0) self(self, k + 1);
        return;
      }
      int hi = cap[r];
      if (r > 0) hi = std::min(hi, before[r - 1]);
      int room_below = 0;
      for (int s = r + 1; s < nrows; ++s) room_below += std::min(cap[s], before[s - 1]) - before[s];
      for (int add = std::min(hi - before[r], left); add >= 0; --add) {
        if (left - add > room_below) break;
        cur[r] = before[r] + add;
        rows[r].insert(rows[r].end(), add, static_cast<int>(k) + 1);
        strip_self(strip_self, r + 1, left - add);
        rows[r].resize(rows[r].size() - add);
        cur[r] = before[r];
      }
    };
    strip(strip, 0, content[k]);
  };
  place(place, 0);

  std::sort(out.begin(), out.end(),
            [](const Tableau& a, const Tableau& b) { return row_reading_word(a) < row_reading_word(b); });
  return out;
}

std::vector<Tableau> enumerate_cst(const Partition& shape, std::span<const int> content) {
  return enumerate_cst(shape, Partition(), content);
}

std::vector<Tableau> all_tableaux_of_content(std::span<const int> content) {
  std::vector<Tableau> out;
  for (const auto& lam : partitions_of(sum(content), static_cast<int>(content.size()))) {
    auto ts = enumerate_cst(lam, content);
    out.insert(out.end(), ts.begin(), ts.end());
  }
  return out;
}

std::vector<Tableau> standard_tableaux(int n) {
  return all_tableaux_of_content(std::vector<int>(n, 1));
}

}  // namespace qlr
