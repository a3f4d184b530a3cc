#include "qlr/crystal.hpp"

#include <stdexcept>

namespace qlr {

namespace {

Word rewrite_unpaired(std::span<const int> w, const RPairing& pr, int new_p) {
  Word out(w.begin(), w.end());
  for (std::size_t k = 0; k < pr.unpaired.size(); ++k)
    out[pr.unpaired[k]] = static_cast<int>(k) < new_p ? pr.r : pr.r + 1;
  return out;
}

int mu_at(std::span<const int> mu, int i) {
  return i >= 1 && i <= static_cast<int>(mu.size()) ? mu[i - 1] : 0;
}

}  // namespace

RPairing r_pairing(std::span<const int> w, int r) {
  if (r < 1) throw std::invalid_argument("r must be positive");
  RPairing pr;
  pr.r = r;
  std::vector<std::size_t> open;
  std::vector<std::size_t> lone_r;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == r + 1) {
      open.push_back(i);
    } else if (w[i] == r) {
      if (open.empty()) {
        lone_r.push_back(i);
      } else {
        pr.pairs.emplace_back(open.back(), i);
        open.pop_back();
      }
    }
  }
  pr.p = static_cast<int>(lone_r.size());
  pr.q = static_cast<int>(open.size());
  pr.unpaired = lone_r;
  pr.unpaired.insert(pr.unpaired.end(), open.begin(), open.end());
  return pr;
}

int count_r_pairs(std::span<const int> w, int r) { return static_cast<int>(r_pairing(w, r).pairs.size()); }

Word s_op(std::span<const int> w, int r) {
  RPairing pr = r_pairing(w, r);
  return rewrite_unpaired(w, pr, pr.q);
}

std::optional<Word> e_op(std::span<const int> w, int r) {
  RPairing pr = r_pairing(w, r);
  if (pr.q == 0) return std::nullopt;
  return rewrite_unpaired(w, pr, pr.p + 1);
}

std::optional<Word> f_op(std::span<const int> w, int r) {
  RPairing pr = r_pairing(w, r);
  if (pr.p == 0) return std::nullopt;
  return rewrite_unpaired(w, pr, pr.p - 1);
}

Tableau s_op(const Tableau& t, int r) { return refill(t, s_op(row_reading_word(t), r)); }

std::optional<Tableau> e_op(const Tableau& t, int r) {
  auto w = e_op(row_reading_word(t), r);
  if (!w) return std::nullopt;
  return refill(t, *w);
}

std::optional<Tableau> f_op(const Tableau& t, int r) {
  auto w = f_op(row_reading_word(t), r);
  if (!w) return std::nullopt;
  return refill(t, *w);
}

Word plactic_act(const Permutation& w, std::span<const int> u) {
  for (int x : u)
    if (x > w.size()) throw std::invalid_argument("letter exceeds permutation size");
  Word out(u.begin(), u.end());
  auto word = w.reduced_word();
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = s_op(out, *it);
  return out;
}

Tableau plactic_act(const Permutation& w, const Tableau& t) { return refill(t, plactic_act(w, row_reading_word(t))); }

std::optional<LatticeViolation> lattice_violation(std::span<const int> w, std::span<const int> mu) {
  std::vector<int> count;
  for (std::size_t k = w.size(); k-- > 0;) {
    int x = w[k];
    if (x < 1) throw std::invalid_argument("letters must be positive");
    if (static_cast<int>(count.size()) < x + 1) count.resize(x + 1, 0);
    ++count[x];
    if (x >= 2 && mu_at(mu, x) + count[x] > mu_at(mu, x - 1) + count[x - 1]) return LatticeViolation{k, x};
  }
  return std::nullopt;
}

bool is_mu_lattice(std::span<const int> w, std::span<const int> mu) {
  if (!is_partition(mu)) throw std::invalid_argument("mu must be a partition");
  return !lattice_violation(w, mu);
}

Word lattice_involution(std::span<const int> w, std::span<const int> mu) {
  auto v = lattice_violation(w, mu);
  if (!v) return Word(w.begin(), w.end());
  int r = v->letter - 1;
  Word out(w.begin(), w.end());
  int times = mu_at(mu, r) - mu_at(mu, r + 1) + 1;
  for (int k = 0; k < times; ++k) {
    auto next = e_op(out, r);
    if (!next) throw std::logic_error("lattice involution: raising operator undefined");
    out = *next;
  }
  return s_op(out, r);
}

bool same_r_string(std::span<const int> a, std::span<const int> b, int r) {
  if (a.size() != b.size()) return false;
  RPairing pa = r_pairing(a, r);
  RPairing pb = r_pairing(b, r);
  if (pa.pairs != pb.pairs || pa.unpaired != pb.unpaired) return false;
  std::vector<bool> free(a.size(), false);
  for (std::size_t i : pa.unpaired) free[i] = true;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!free[i] && a[i] != b[i]) return false;
  return true;
}

}  // namespace qlr
