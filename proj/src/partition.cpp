#include "qlr/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qlr {

namespace {

void trim(std::vector<int>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

void partitions_rec(int n, int max_part, int max_parts, std::vector<int>& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(cur);
    return;
  }
  if (max_parts == 0) return;
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(n - p, p, max_parts - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (!is_partition(parts_)) throw std::invalid_argument("not a partition: " + to_string(parts_));
  trim(parts_);
}

int Partition::size() const { return sum(parts_); }

std::vector<int> Partition::padded(std::size_t n) const {
  if (n < parts_.size()) throw std::invalid_argument("partition longer than requested padding");
  std::vector<int> v = parts_;
  v.resize(n, 0);
  return v;
}

bool Partition::contains(const Partition& inner) const {
  if (inner.length() > length()) return false;
  for (int i = 0; i < inner.length(); ++i)
    if (inner.parts_[i] > parts_[i]) return false;
  return true;
}

std::string to_string(std::span<const int> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

std::string to_string(const Partition& p) { return to_string(std::span<const int>(p.parts())); }

bool is_partition(std::span<const int> v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0) return false;
    if (i + 1 < v.size() && v[i] < v[i + 1]) return false;
  }
  return true;
}

int sum(std::span<const int> v) { return std::accumulate(v.begin(), v.end(), 0); }

Partition conjugate(const Partition& p) {
  std::vector<int> c(p.empty() ? 0 : p[0], 0);
  for (int part : p.parts())
    for (int j = 0; j < part; ++j) ++c[j];
  return Partition(c);
}

bool dominance_geq(std::span<const int> a, std::span<const int> b) {
  if (sum(a) != sum(b)) throw std::invalid_argument("dominance requires equal totals");
  std::size_t n = std::max(a.size(), b.size());
  long sa = 0, sb = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sa += i < a.size() ? a[i] : 0;
    sb += i < b.size() ? b[i] : 0;
    if (sa < sb) return false;
  }
  return true;
}

bool composition_dominates(std::span<const int> a, std::span<const int> b) {
  return dominance_geq(dominant_sort(a).first, dominant_sort(b).first);
}

int n_stat(const Partition& mu) {
  int s = 0;
  for (int i = 0; i < mu.length(); ++i) s += i * mu[i];
  return s;
}

std::vector<Partition> partitions_of(int n, int max_parts) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  partitions_rec(n, n, max_parts < 0 ? n : max_parts, cur, out);
  return out;
}

std::vector<Composition> weak_compositions(int n, int k) {
  std::vector<Composition> out;
  if (k == 0) {
    if (n == 0) out.push_back({});
    return out;
  }
  Composition cur(k, 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == k - 1) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      cur[pos] = x;
      self(self, pos + 1, left - x);
    }
  };
  rec(rec, 0, n);
  return out;
}

std::vector<Composition> compositions_of(int n, int k) {
  std::vector<Composition> out;
  Composition cur;
  auto rec = [&](auto&& self, int left) -> void {
    if (left == 0) {
      if (k < 0 || static_cast<int>(cur.size()) == k) out.push_back(cur);
      return;
    }
    if (k >= 0 && static_cast<int>(cur.size()) >= k) return;
    for (int x = 1; x <= left; ++x) {
      cur.push_back(x);
      self(self, left - x);
      cur.pop_back();
    }
  };
  rec(rec, n);
  return out;
}

Permutation::Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
  std::vector<bool> seen(w_.size() + 1, false);
  for (int x : w_) {
    if (x < 1 || x > static_cast<int>(w_.size()) || seen[x]) throw std::invalid_argument("not a permutation");
    seen[x] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(v);
}

Permutation Permutation::simple(int n, int r) {
  if (r < 1 || r >= n) throw std::invalid_argument("simple reflection out of range");
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::swap(v[r - 1], v[r]);
  return Permutation(v);
}

Permutation Permutation::inverse() const {
  std::vector<int> v(w_.size());
  for (std::size_t i = 0; i < w_.size(); ++i) v[w_[i] - 1] = static_cast<int>(i) + 1;
  return Permutation(v);
}

Permutation Permutation::operator*(const Permutation& b) const {
  if (b.size() != size()) throw std::invalid_argument("permutation sizes differ");
  std::vector<int> v(w_.size());
  for (std::size_t i = 0; i < w_.size(); ++i) v[i] = w_[b.w_[i] - 1];
  return Permutation(v);
}

int Permutation::inversions() const {
  int c = 0;
  for (std::size_t i = 0; i < w_.size(); ++i)
    for (std::size_t j = i + 1; j < w_.size(); ++j)
      if (w_[i] > w_[j]) ++c;
  return c;
}

Weight Permutation::act(std::span<const int> v) const {
  if (static_cast<int>(v.size()) != size()) throw std::invalid_argument("weight length differs from permutation size");
  Weight out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[w_[k] - 1] = v[k];
  return out;
}

std::vector<int> Permutation::reduced_word() const {
  std::vector<int> cur = w_;
  std::vector<int> word;
  for (;;) {
    std::size_t i = 0;
    while (i + 1 < cur.size() && cur[i] < cur[i + 1]) ++i;
    if (i + 1 >= cur.size()) break;
    std::swap(cur[i], cur[i + 1]);
    word.push_back(static_cast<int>(i) + 1);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::pair<Weight, Permutation> dominant_sort(std::span<const int> a) {
  std::vector<int> idx(a.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int x, int y) { return a[x] > a[y]; });
  Weight sorted(a.size());
  std::vector<int> w(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    sorted[k] = a[idx[k]];
    w[k] = idx[k] + 1;
  }
  return {sorted, Permutation(w)};
}

std::vector<std::pair<int, int>> roots_of(std::span<const int> eta) {
  std::vector<int> block_of;
  for (std::size_t b = 0; b < eta.size(); ++b) {
    if (eta[b] <= 0) throw std::invalid_argument("eta must have positive parts");
    for (int k = 0; k < eta[b]; ++k) block_of.push_back(static_cast<int>(b));
  }
  std::vector<std::pair<int, int>> roots;
  int n = static_cast<int>(block_of.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (block_of[i] < block_of[j]) roots.emplace_back(i + 1, j + 1);
  return roots;
}

RectSequence::RectSequence(Composition eta, Weight gamma, int first_letter)
    : eta_(std::move(eta)), gamma_(std::move(gamma)), first_(first_letter) {
  for (int e : eta_)
    if (e <= 0) throw std::invalid_argument("eta must have positive parts");
  if (sum(eta_) != static_cast<int>(gamma_.size())) throw std::invalid_argument("eta does not sum to the length of gamma");
}

RectSequence RectSequence::from_blocks(const std::vector<Weight>& blocks) {
  Composition eta;
  Weight gamma;
  for (const auto& b : blocks) {
    eta.push_back(static_cast<int>(b.size()));
    gamma.insert(gamma.end(), b.begin(), b.end());
  }
  return RectSequence(eta, gamma);
}

int RectSequence::offset(int i) const {
  int o = 0;
  for (int k = 0; k < i; ++k) o += eta_[k];
  return o;
}

Weight RectSequence::block(int i) const {
  int o = offset(i);
  return Weight(gamma_.begin() + o, gamma_.begin() + o + eta_[i]);
}

std::pair<int, int> RectSequence::interval(int i) const {
  int o = offset(i);
  return {first_ + o, first_ + o + eta_[i] - 1};
}

RectSequence RectSequence::tail() const {
  if (eta_.empty()) throw std::logic_error("tail of empty sequence");
  return RectSequence(Composition(eta_.begin() + 1, eta_.end()), Weight(gamma_.begin() + eta_[0], gamma_.end()),
                      first_ + eta_[0]);
}

bool RectSequence::blocks_are_partitions() const {
  for (int i = 0; i < blocks(); ++i)
    if (!is_partition(block(i))) return false;
  return true;
}

std::optional<NormalizedIndex> normalize_index(std::span<const int> lambda, std::span<const int> gamma,
                                               std::span<const int> eta) {
  if (lambda.size() != gamma.size()) throw std::invalid_argument("lambda and gamma lengths differ");
  if (sum(eta) != static_cast<int>(gamma.size())) throw std::invalid_argument("eta does not sum to rank");
  if (sum(lambda) != sum(gamma)) return std::nullopt;
  for (std::size_t i = 0; i + 1 < lambda.size(); ++i)
    if (lambda[i] < lambda[i + 1]) return std::nullopt;

  NormalizedIndex out;
  out.lambda.assign(lambda.begin(), lambda.end());
  out.gamma.assign(gamma.begin(), gamma.end());
  std::size_t o = 0;
  for (int e : eta) {
    std::vector<int> shifted(e);
    for (int k = 0; k < e; ++k) shifted[k] = gamma[o + k] + (e - 1 - k);
    auto [sorted, w] = dominant_sort(shifted);
    for (int k = 0; k + 1 < e; ++k)
      if (sorted[k] == sorted[k + 1]) return std::nullopt;
    out.sign *= w.sign();
    for (int k = 0; k < e; ++k) out.gamma[o + k] = sorted[k] - (e - 1 - k);
    o += e;
  }
  int lo = 0;
  for (int x : out.lambda) lo = std::min(lo, x);
  for (int x : out.gamma) lo = std::min(lo, x);
  for (int& x : out.lambda) x -= lo;
  for (int& x : out.gamma) x -= lo;
  return out;
}

Weight dual_weight(std::span<const int> v) {
  Weight out(v.rbegin(), v.rend());
  for (int& x : out) x = -x;
  return out;
}

std::pair<Weight, RectSequence> box_complement(std::span<const int> lambda, const RectSequence& r, int m) {
  if (static_cast<int>(lambda.size()) != r.rank()) throw std::invalid_argument("lambda length differs from rank");
  int need = 0;
  for (int x : lambda) need = std::max(need, x);
  for (int x : r.gamma()) need = std::max(need, x);
  if (m < 0) m = need;
  if (m < need) throw std::invalid_argument("box width smaller than the largest part");
  Weight lt = dual_weight(lambda);
  for (int& x : lt) x += m;
  std::vector<Weight> blocks;
  for (int i = r.blocks() - 1; i >= 0; --i) {
    Weight b = dual_weight(r.block(i));
    for (int& x : b) x += m;
    blocks.push_back(b);
  }
  return {lt, RectSequence::from_blocks(blocks)};
}

}  // namespace qlr
