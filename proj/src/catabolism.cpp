#include "qlr/catabolism.hpp"

#include <climits>
#include <stdexcept>

#include "qlr/insertion.hpp"

namespace qlr {

Tableau yamanouchi_block(const RectSequence& r, int i) {
  Weight b = r.block(i);
  if (!is_partition(b)) throw std::invalid_argument("block is not a partition");
  int lo = r.interval(i).first;
  std::vector<std::vector<int>> rows;
  for (std::size_t j = 0; j < b.size(); ++j) rows.emplace_back(b[j], lo + static_cast<int>(j));
  return Tableau(rows);
}

std::optional<Tableau> cat_r1(const Tableau& s, const RectSequence& r) {
  if (r.blocks() == 0) throw std::invalid_argument("empty rectangle sequence");
  auto [lo, hi] = r.interval(0);
  if (restrict_letters(s, INT_MIN, hi) != yamanouchi_block(r, 0)) return std::nullopt;
  return h_slice(restrict_letters(s, hi + 1, INT_MAX), r.eta()[0]);
}

bool is_r_catabolizable(const Tableau& s, const RectSequence& r) {
  if (!s.is_straight() || !is_column_strict(s)) return false;
  Tableau cur = s;
  RectSequence rest = r;
  while (rest.blocks() > 0) {
    auto next = cat_r1(cur, rest);
    if (!next) return false;
    cur = *next;
    rest = rest.tail();
  }
  return cur.empty();
}

std::vector<Tableau> enumerate_ct(const Partition& lambda, const RectSequence& r) {
  std::vector<Tableau> out;
  if (lambda.length() > r.rank()) return out;
  for (int x : r.gamma())
    if (x < 0) throw std::invalid_argument("catabolizable tableaux need a nonnegative gamma");
  for (auto& t : enumerate_cst(lambda, r.gamma()))
    if (is_r_catabolizable(t, r)) out.push_back(std::move(t));
  return out;
}

int d1(const Tableau& s) {
  if (s.empty()) return 0;
  int i = 0;
  while (i < static_cast<int>(s.rows[0].size()) && s.rows[0][i] == i + 1) ++i;
  return i;
}

Tableau cat_op(const Tableau& s) { return h_slice(s, 1); }

Partition cattype(const Tableau& s) {
  if (!s.is_straight() || !is_standard(s)) throw std::invalid_argument("cattype expects a standard tableau");
  const int n = s.cell_count();
  std::vector<int> parts;
  Tableau cur = s;
  int prev = 0;
  while (prev < n) {
    int d = d1(cur);
    if (d <= prev) throw std::logic_error("catabolism made no progress");
    parts.push_back(d - prev);
    prev = d;
    cur = cat_op(cur);
  }
  return Partition(parts);
}

bool contains_z(const Tableau& s, int a, int m) {
  if (m == 0) return true;
  if (s.empty() || static_cast<int>(s.rows[0].size()) < m) return false;
  for (int k = 0; k < m; ++k)
    if (s.rows[0][k] != a + k) return false;
  return true;
}

Tableau cat_m(const Tableau& s, int a, int m) {
  if (!contains_z(s, a, m)) throw std::invalid_argument("tableau does not contain Z_m");
  return h_slice(restrict_letters(s, a + m, INT_MAX), 1);
}

Tableau ccat_m(const Tableau& s, int a, int m) {
  if (!contains_z(s, a, m)) throw std::invalid_argument("tableau does not contain Z_m");
  return v_slice(restrict_letters(s, a + m, INT_MAX), m);
}

namespace {

template <class Step>
bool mu_catabolizable(const Tableau& s, const Partition& mu, Step step) {
  if (!is_standard(s) || !s.is_straight()) throw std::invalid_argument("expects a standard tableau");
  if (mu.size() != s.cell_count()) return false;
  Tableau cur = s;
  int a = 1;
  for (int m : mu.parts()) {
    if (!contains_z(cur, a, m)) return false;
    cur = step(cur, a, m);
    a += m;
  }
  return cur.empty();
}

}  // namespace

bool is_mu_catabolizable(const Tableau& s, const Partition& mu) { return mu_catabolizable(s, mu, cat_m); }

bool is_mu_column_catabolizable(const Tableau& s, const Partition& mu) {
  return mu_catabolizable(s, mu, ccat_m);
}

}  // namespace qlr
