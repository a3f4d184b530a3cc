#include "qlr/charge.hpp"

#include <algorithm>
#include <stdexcept>

#include "qlr/crystal.hpp"

namespace qlr {

int charge_standard(std::span<const int> w) {
  int k = static_cast<int>(w.size());
  std::vector<int> pos(k + 1, -1);
  for (int i = 0; i < k; ++i) {
    if (w[i] < 1 || w[i] > k || pos[w[i]] >= 0) throw std::invalid_argument("charge_standard expects a standard word");
    pos[w[i]] = i;
  }
  int index = 0, total = 0;
  for (int i = 2; i <= k; ++i) {
    if (pos[i] > pos[i - 1]) ++index;
    total += index;
  }
  return total;
}

std::vector<StandardSubword> circular_decompose(std::span<const int> w) {
  if (!is_partition(content(w))) throw std::invalid_argument("circular reading needs partition content");
  const int n = static_cast<int>(w.size());
  std::vector<bool> used(n, false);
  std::vector<int> remaining = content(w);
  int left = n;
  std::vector<StandardSubword> out;
  while (left > 0) {
    int k = 0;
    while (k < static_cast<int>(remaining.size()) && remaining[k] > 0) ++k;
    std::vector<std::size_t> picked;
    int at = n;
    for (int letter = 1; letter <= k; ++letter) {
      for (int step = 1; step <= n; ++step) {
        int i = ((at - step) % n + n) % n;
        if (!used[i] && w[i] == letter) {
          at = i;
          break;
        }
      }
      used[at] = true;
      picked.push_back(static_cast<std::size_t>(at));
      --remaining[letter - 1];
    }
    left -= k;
    std::sort(picked.begin(), picked.end());
    StandardSubword sub{picked, {}};
    for (std::size_t i : picked) sub.letters.push_back(w[i]);
    out.push_back(std::move(sub));
  }
  return out;
}

int charge(std::span<const int> w) {
  if (w.empty()) return 0;
  Composition c = content(w);
  if (!is_partition(c)) {
    auto [sorted, wa] = dominant_sort(c);
    return charge(plactic_act(wa.inverse(), w));
  }
  int total = 0;
  for (const auto& sub : circular_decompose(w)) total += charge_standard(sub.letters);
  return total;
}

int charge(const Tableau& t) { return charge(row_reading_word(t)); }

int cocharge(std::span<const int> w) {
  if (w.empty()) return 0;
  Composition c = content(w);
  if (!is_partition(c)) throw std::invalid_argument("cocharge needs partition content");
  return n_stat(Partition(c)) - charge(w);
}

int cocharge(const Tableau& t) { return cocharge(row_reading_word(t)); }

}  // namespace qlr
