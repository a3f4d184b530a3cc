#include "qlr/cyclage.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "qlr/charge.hpp"
#include "qlr/crystal.hpp"

namespace qlr {

namespace {

std::vector<CyclageEdge> covers_partition_content(const Tableau& t) {
  std::vector<CyclageEdge> out;
  for (Cell corner : outer_corners(t)) {
    Tableau u = t;
    int a = reverse_column_insert(u, corner);
    if (a <= 1) continue;
    Tableau s = u;
    Cell end = row_insert(s, a);
    out.push_back({t, s, corner, a, u, end});
  }
  return out;
}

Composition padded_content(const Tableau& t, std::size_t len) {
  Composition c = content(t);
  if (c.size() > len) throw std::invalid_argument("tableau letters exceed the composition length");
  c.resize(len, 0);
  return c;
}

}  // namespace

int cyclage_grade(const Tableau& t) {
  Composition c = content(t);
  if (is_partition(c)) return cocharge(t);
  auto [sorted, wa] = dominant_sort(c);
  return cocharge(plactic_act(wa.inverse(), t));
}

std::vector<CyclageEdge> cyclage_covers(const Tableau& t) {
  if (!t.is_straight() || !is_column_strict(t)) throw std::invalid_argument("cyclage expects a straight column-strict tableau");
  Composition c = content(t);
  if (is_partition(c)) return covers_partition_content(t);
  auto [sorted, wa] = dominant_sort(c);
  auto edges = covers_partition_content(plactic_act(wa.inverse(), t));
  for (auto& e : edges) {
    e.upper = t;
    e.lower = plactic_act(wa, e.lower);
  }
  return edges;
}

std::optional<CyclageEdge> cocyclage(const Tableau& s, Cell corner) {
  if (!is_partition(content(s))) throw std::invalid_argument("cocyclage expects partition content");
  Tableau u = s;
  int x = reverse_row_insert(u, corner);
  if (x <= 1) return std::nullopt;
  Tableau t = u;
  Cell start = column_insert(t, x);
  return CyclageEdge{t, s, start, x, u, corner};
}

bool row_restricted(const CyclageEdge& e, int r) { return e.start.row + 1 > r; }

bool col_restricted(const CyclageEdge& e, int c) { return e.end.col + 1 > c; }

std::vector<Composition> canonical_chain(std::span<const int> alpha, std::span<const int> beta) {
  std::size_t len = std::max(alpha.size(), beta.size());
  Composition a(alpha.begin(), alpha.end()), b(beta.begin(), beta.end());
  a.resize(len, 0);
  b.resize(len, 0);
  for (int x : a)
    if (x < 0) throw std::invalid_argument("compositions must be nonnegative");
  for (int x : b)
    if (x < 0) throw std::invalid_argument("compositions must be nonnegative");
  if (sum(a) != sum(b) || !composition_dominates(a, b))
    throw std::invalid_argument("embedding needs alpha to dominate beta");

  std::vector<Composition> chain{a};
  auto push = [&](const Composition& c) {
    if (chain.back() != c) chain.push_back(c);
  };
  Composition mu = dominant_sort(a).first;
  const Composition nu = dominant_sort(b).first;
  push(mu);
  while (mu != nu) {
    std::size_t i = 0;
    while (mu[i] <= nu[i]) ++i;
    std::size_t j = i + 1;
    while (mu[j] >= nu[j]) ++j;
    Composition g{mu[i], mu[j]};
    for (std::size_t k = 0; k < len; ++k)
      if (k != i && k != j) g.push_back(mu[k]);
    push(g);
    g[0] -= 1;
    g[1] += 1;
    push(g);
    mu = dominant_sort(g).first;
    push(mu);
  }
  push(b);
  return chain;
}

Tableau theta_along_chain(const Tableau& t, const std::vector<Composition>& chain) {
  if (chain.empty()) throw std::invalid_argument("empty chain");
  const std::size_t len = chain.front().size();
  if (padded_content(t, len) != chain.front()) throw std::invalid_argument("tableau content differs from chain start");
  Tableau cur = t;
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
    const Composition& a = chain[k];
    const Composition& b = chain[k + 1];
    if (b.size() != len) throw std::invalid_argument("chain compositions differ in length");
    auto [as, wa] = dominant_sort(a);
    auto [bs, wb] = dominant_sort(b);
    if (as == bs) {
      cur = plactic_act(wb * wa.inverse(), cur);
      continue;
    }
    bool f1_step = len >= 2 && a[0] > a[1] + 1 && b[0] == a[0] - 1 && b[1] == a[1] + 1 &&
                   std::equal(a.begin() + 2, a.end(), b.begin() + 2);
    if (!f1_step) throw std::invalid_argument("chain step is neither a rearrangement nor an f_1 move");
    auto next = f_op(cur, 1);
    if (!next) throw std::logic_error("f_1 undefined along the chain");
    cur = *next;
  }
  return cur;
}

Tableau theta_embed(std::span<const int> alpha, std::span<const int> beta, const Tableau& t) {
  return theta_along_chain(t, canonical_chain(alpha, beta));
}

Tableau theta_mu(const Partition& mu, const Tableau& t) {
  return theta_embed(mu.parts(), std::vector<int>(mu.size(), 1), t);
}

CyclagePoset cyclage_poset(std::span<const int> alpha) {
  CyclagePoset poset;
  poset.alpha.assign(alpha.begin(), alpha.end());
  auto ts = all_tableaux_of_content(alpha);
  std::vector<std::pair<std::pair<int, Word>, Tableau>> keyed;
  for (auto& t : ts) keyed.push_back({{cyclage_grade(t), row_reading_word(t)}, t});
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::map<Tableau, int> index;
  for (auto& [key, t] : keyed) {
    index[t] = static_cast<int>(poset.vertices.size());
    poset.vertices.push_back(t);
    poset.grade.push_back(key.first);
  }
  std::set<std::pair<int, int>> edges;
  for (std::size_t v = 0; v < poset.vertices.size(); ++v)
    for (const auto& e : cyclage_covers(poset.vertices[v])) {
      auto it = index.find(e.lower);
      if (it == index.end()) throw std::logic_error("cyclage left the vertex set");
      edges.insert({static_cast<int>(v), it->second});
    }
  poset.edges.assign(edges.begin(), edges.end());
  return poset;
}

std::string to_dot(const CyclagePoset& poset) {
  std::string s = "digraph cyclage {\n  node [shape=box];\n";
  for (std::size_t v = 0; v < poset.vertices.size(); ++v)
    s += "  v" + std::to_string(v) + " [label=\"" + word_to_string(row_reading_word(poset.vertices[v])) + " (" +
         std::to_string(poset.grade[v]) + ")\"];\n";
  for (auto [u, l] : poset.edges) s += "  v" + std::to_string(u) + " -> v" + std::to_string(l) + ";\n";
  return s + "}\n";
}

}  // namespace qlr
