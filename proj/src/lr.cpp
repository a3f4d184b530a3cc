#include "qlr/lr.hpp"

#include <mutex>
#include <stdexcept>
#include <tuple>

#include "qlr/tableau.hpp"

namespace qlr {

namespace {

// Fills rows top to bottom, each right to left, which is the order in
// which final subwords of the reading word grow.
struct LatticeFiller {
  std::vector<int> outer, inner;
  std::vector<int> mu;
  std::vector<int> target;  // empty: any content
  std::vector<std::vector<int>> grid;
  std::vector<int> count;
  int max_letter = 0;
  std::map<Partition, std::int64_t>* by_content = nullptr;
  std::int64_t total = 0;

  int mu_at(int i) const { return i >= 1 && i <= static_cast<int>(mu.size()) ? mu[i - 1] : 0; }

  void run(int r, int c) {
    const int nrows = static_cast<int>(outer.size());
    while (r < nrows && c < inner[r]) {
      ++r;
      c = r < nrows ? outer[r] - 1 : 0;
    }
    if (r == nrows) {
      if (by_content) {
        std::vector<int> cont(count.begin() + 1, count.end());
        while (!cont.empty() && cont.back() == 0) cont.pop_back();
        ++(*by_content)[Partition(cont)];
      }
      ++total;
      return;
    }
    int hi = max_letter;
    if (c + 1 < outer[r]) hi = std::min(hi, grid[r][c + 1]);
    int lo = 1;
    if (r > 0 && c >= inner[r - 1] && c < outer[r - 1]) lo = grid[r - 1][c] + 1;
    for (int x = lo; x <= hi; ++x) {
      if (!target.empty() && count[x] >= target[x - 1]) continue;
      if (x >= 2 && mu_at(x) + count[x] + 1 > mu_at(x - 1) + count[x - 1]) continue;
      grid[r][c] = x;
      ++count[x];
      run(r, c - 1);
      --count[x];
    }
  }
};

std::int64_t fill(const Partition& outer, const Partition& inner, std::span<const int> content, const Partition& mu,
                  std::map<Partition, std::int64_t>* by_content) {
  if (!outer.contains(inner)) return 0;
  int cells = outer.size() - inner.size();
  LatticeFiller f;
  f.outer = outer.parts();
  f.inner = inner.padded(outer.length());
  f.mu = mu.parts();
  f.grid.assign(outer.length(), std::vector<int>(outer.empty() ? 0 : outer[0], 0));
  if (by_content) {
    f.max_letter = mu.length() + cells;
  } else {
    if (sum(content) != cells) return 0;
    f.target.assign(content.begin(), content.end());
    for (int x : content)
      if (x < 0) return 0;
    f.max_letter = static_cast<int>(content.size());
  }
  f.count.assign(f.max_letter + 2, 0);
  f.by_content = by_content;
  if (outer.empty()) {
    if (by_content) ++(*by_content)[Partition()];
    return 1;
  }
  f.run(0, outer[0] - 1);
  return f.total;
}

}  // namespace

std::int64_t count_lattice_fillings(const Partition& outer, const Partition& inner, std::span<const int> content,
                                    const Partition& mu) {
  return fill(outer, inner, content, mu, nullptr);
}

std::int64_t lr_coefficient(const Partition& sigma, const Partition& tau, const Partition& lambda,
                            const Partition& mu) {
  if (!lambda.contains(mu)) return 0;
  std::vector<int> diff = lambda.parts();
  for (int i = 0; i < mu.length(); ++i) diff[i] -= mu[i];
  return count_lattice_fillings(sigma, tau, diff, mu);
}

std::int64_t lr(const Partition& lambda, const Partition& mu, const Partition& nu) {
  static std::mutex lock;
  static std::map<std::tuple<Partition, Partition, Partition>, std::int64_t> memo;
  auto key = std::make_tuple(lambda, mu, nu);
  {
    std::lock_guard<std::mutex> g(lock);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  std::int64_t v = count_lattice_fillings(lambda, mu, nu.parts());
  std::lock_guard<std::mutex> g(lock);
  memo.emplace(key, v);
  return v;
}

std::map<Partition, std::int64_t> skew_schur_expansion(const Partition& outer, const Partition& inner) {
  std::map<Partition, std::int64_t> out;
  fill(outer, inner, {}, Partition(), &out);
  return out;
}

std::vector<Partition> partitions_containing(const Partition& inner, int extra, int max_parts) {
  std::vector<Partition> out;
  for (const auto& p : partitions_of(inner.size() + extra, max_parts))
    if (p.contains(inner)) out.push_back(p);
  return out;
}

std::map<Partition, std::int64_t> schur_product(const Partition& a, const Partition& b, int max_parts) {
  std::map<Partition, std::int64_t> out;
  for (const auto& s : partitions_containing(a, b.size(), max_parts)) {
    std::int64_t c = lr(s, a, b);
    if (c) out[s] = c;
  }
  return out;
}

std::int64_t lr_skew_straight(const Partition& sigma, const Partition& alpha, const Partition& inner,
                              const Partition& beta) {
  if (!sigma.contains(beta) || !alpha.contains(inner)) return 0;
  std::int64_t total = 0;
  for (const auto& [nu, c] : skew_schur_expansion(alpha, inner)) total += c * lr(sigma, beta, nu);
  return total;
}

std::int64_t lr_skew_straight_direct(const Partition& sigma, const Partition& alpha, const Partition& inner,
                                     const Partition& beta) {
  return lr_coefficient(sigma, beta, alpha, inner);
}

std::int64_t kostka_number(const Partition& lambda, std::span<const int> content) {
  return static_cast<std::int64_t>(enumerate_cst(lambda, content).size());
}

}  // namespace qlr
