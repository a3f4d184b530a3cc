#include "qlr/kpoly.hpp"

#include <algorithm>
#include <stdexcept>

#include "qlr/catabolism.hpp"
#include "qlr/charge.hpp"
#include "qlr/lr.hpp"
#include "qlr/tableau.hpp"

namespace qlr {

namespace {

void check_index(const KIndex& k) {
  if (k.lambda.size() != k.gamma.size()) throw std::invalid_argument("lambda and gamma lengths differ");
  if (sum(k.eta) != static_cast<int>(k.gamma.size())) throw std::invalid_argument("eta does not sum to the rank");
  for (int e : k.eta)
    if (e <= 0) throw std::invalid_argument("eta must have positive parts");
}

Weight plus_rho(std::span<const int> v) {
  Weight out(v.begin(), v.end());
  const int n = static_cast<int>(v.size());
  for (int i = 0; i < n; ++i) out[i] += n - 1 - i;
  return out;
}

std::vector<std::vector<int>> combinations(int n, int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == m) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i <= n - (m - static_cast<int>(cur.size())); ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

class KostantCounter {
 public:
  KostantCounter(std::span<const int> eta) : roots_(roots_of(eta)), n_(sum(eta)) {
    last_block_start_ = n_ - (eta.empty() ? 0 : eta.back());
  }

  QPoly count(const Weight& v) { return go(0, v); }

 private:
  QPoly go(std::size_t k, const Weight& v) {
    int partial = 0;
    for (int l = 0; l < n_; ++l) {
      partial += v[l];
      if (partial < 0) return QPoly();
    }
    if (partial != 0) return QPoly();
    for (int l = last_block_start_; l < n_; ++l)
      if (v[l] > 0) return QPoly();
    if (k == roots_.size()) {
      for (int x : v)
        if (x != 0) return QPoly();
      return QPoly(1);
    }
    const int i = roots_[k].first - 1;
    const int j = roots_[k].second - 1;
    for (int l = 0; l < i; ++l)
      if (v[l] != 0) return QPoly();
    if (v[i] < 0) return QPoly();

    auto key = std::make_pair(k, v);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    const bool last_in_group = k + 1 == roots_.size() || roots_[k + 1].first - 1 != i;
    QPoly total;
    for (int m = last_in_group ? v[i] : 0; m <= v[i]; ++m) {
      Weight next = v;
      next[i] -= m;
      next[j] += m;
      total += go(k + 1, next).shifted(m);
    }
    memo_.emplace(key, total);
    return total;
  }

  std::vector<std::pair<int, int>> roots_;
  int n_;
  int last_block_start_;
  std::map<std::pair<std::size_t, Weight>, QPoly> memo_;
};

}  // namespace

std::string to_string(const KIndex& k) {
  return "lambda=" + to_string(k.lambda) + " gamma=" + to_string(k.gamma) + " eta=" + to_string(k.eta);
}

std::string to_string(Status s) { return s == Status::Proven ? "PROVEN" : "CONJECTURAL"; }

BottResult bott_pi(std::span<const int> alpha) {
  Weight v = plus_rho(alpha);
  auto [sorted, w] = dominant_sort(v);
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
    if (sorted[i] == sorted[i + 1]) return {0, {}};
  const int n = static_cast<int>(v.size());
  for (int i = 0; i < n; ++i) sorted[i] -= n - 1 - i;
  return {w.sign(), sorted};
}

std::vector<CosetTerm> coset_reps(std::span<const int> lambda, int m) {
  const int n = static_cast<int>(lambda.size());
  if (m < 0 || m > n) throw std::invalid_argument("block size out of range");
  Weight v = plus_rho(lambda);
  std::vector<CosetTerm> out;
  for (const auto& s : combinations(n, m)) {
    std::vector<bool> in(n, false);
    for (int x : s) in[x] = true;
    CosetTerm t;
    int inversions = 0, outside_seen = 0;
    for (int p = 0; p < n; ++p) {
      if (in[p]) {
        inversions += outside_seen;
        t.alpha.push_back(v[p]);
      } else {
        ++outside_seen;
        t.beta.push_back(v[p]);
      }
    }
    for (int k = 0; k < m; ++k) t.alpha[k] -= n - 1 - k;
    for (int k = 0; k < n - m; ++k) t.beta[k] -= n - m - 1 - k;
    t.sign = inversions % 2 == 0 ? 1 : -1;
    out.push_back(std::move(t));
  }
  return out;
}

QPoly kostant_q(std::span<const int> v, std::span<const int> eta) {
  if (sum(eta) != static_cast<int>(v.size())) throw std::invalid_argument("eta does not sum to the rank");
  KostantCounter counter(eta);
  return counter.count(Weight(v.begin(), v.end()));
}

QPoly k_via_kostant(const KIndex& k) {
  check_index(k);
  if (sum(k.lambda) != sum(k.gamma)) return QPoly();
  const int n = static_cast<int>(k.lambda.size());
  Weight lr = plus_rho(k.lambda);
  Weight gr = plus_rho(k.gamma);
  KostantCounter counter(k.eta);
  QPoly total;
  for (const auto& w : all_permutations(n)) {
    Weight v = w.act(lr);
    for (int i = 0; i < n; ++i) v[i] -= gr[i];
    total += counter.count(v) * w.sign();
  }
  return total;
}

QPoly MorrisEngine::compute(const KIndex& k) {
  check_index(k);
  auto norm = normalize_index(k.lambda, k.gamma, k.eta);
  if (!norm) return QPoly();
  return compute_normalized(norm->lambda, norm->gamma, k.eta) * norm->sign;
}

std::size_t MorrisEngine::memo_size() const {
  std::lock_guard<std::mutex> g(lock_);
  return memo_.size();
}

QPoly MorrisEngine::compute_normalized(std::span<const int> lambda, std::span<const int> gamma,
                                       std::span<const int> eta) {
  KIndex key{Weight(lambda.begin(), lambda.end()), Weight(gamma.begin(), gamma.end()),
             Composition(eta.begin(), eta.end())};
  {
    std::lock_guard<std::mutex> g(lock_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  const int n = static_cast<int>(gamma.size());
  const int t = static_cast<int>(eta.size());
  QPoly result;
  if (!is_partition(lambda) || sum(lambda) != sum(gamma)) {
    // zero
  } else if (t == 0) {
    result = QPoly(n == 0 ? 1 : 0);
  } else if (t == 1) {
    result = QPoly(std::equal(lambda.begin(), lambda.end(), gamma.begin()) ? 1 : 0);
  } else {
    const int m = eta[0];
    Partition r1(Weight(gamma.begin(), gamma.begin() + m));
    Weight gamma_rest(gamma.begin() + m, gamma.end());
    Composition eta_rest(eta.begin() + 1, eta.end());
    for (const auto& term : coset_reps(lambda, m)) {
      if (!is_partition(term.alpha)) continue;
      Partition alpha(term.alpha);
      if (!alpha.contains(r1)) continue;
      Partition beta(term.beta);
      std::map<Partition, std::int64_t> coeff;
      for (const auto& [nu, c] : skew_schur_expansion(alpha, r1))
        for (const auto& [sigma, d] : schur_product(beta, nu, n - m)) coeff[sigma] += c * d;
      const int shift = alpha.size() - r1.size();
      for (const auto& [sigma, c] : coeff) {
        if (c == 0) continue;
        QPoly sub = compute_normalized(sigma.padded(n - m), gamma_rest, eta_rest);
        result += sub.shifted(shift) * (c * term.sign);
      }
    }
  }
  std::lock_guard<std::mutex> g(lock_);
  memo_.emplace(std::move(key), result);
  return result;
}

QPoly k_via_morris(const KIndex& k) {
  MorrisEngine engine;
  return engine.compute(k);
}

std::map<Weight, QPoly> series_character(std::span<const int> gamma, std::span<const int> eta, SeriesBound bound) {
  if (bound.weighted < 0 && bound.degree < 0) throw std::invalid_argument("series expansion needs a bound");
  if (sum(eta) != static_cast<int>(gamma.size())) throw std::invalid_argument("eta does not sum to the rank");
  const auto roots = roots_of(eta);
  std::map<Weight, QPoly> out;
  Weight cur(gamma.begin(), gamma.end());
  auto rec = [&](auto&& self, std::size_t k, int deg, int weighted) -> void {
    if (k == roots.size()) {
      BottResult b = bott_pi(cur);
      if (b.sign != 0) out[b.lambda].add_term(deg, b.sign);
      return;
    }
    const int i = roots[k].first - 1;
    const int j = roots[k].second - 1;
    const int step = j - i;
    int used = 0;
    for (;;) {
      self(self, k + 1, deg + used, weighted + step * used);
      if (bound.weighted >= 0 && weighted + step * (used + 1) > bound.weighted) break;
      if (bound.degree >= 0 && deg + used + 1 > bound.degree) break;
      ++used;
      ++cur[i];
      --cur[j];
    }
    cur[i] -= used;
    cur[j] += used;
  };
  rec(rec, 0, 0, 0);
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

int series_weighted_bound(std::span<const int> lambda, std::span<const int> gamma) {
  const int n = static_cast<int>(lambda.size());
  int b = 0;
  for (int i = 0; i < n; ++i) b += (n - 1 - i) * (lambda[i] - gamma[i]);
  return b;
}

QPoly k_via_series(const KIndex& k, std::optional<int> degree_bound) {
  check_index(k);
  if (sum(k.lambda) != sum(k.gamma) || !std::is_sorted(k.lambda.rbegin(), k.lambda.rend())) return QPoly();
  SeriesBound bound;
  if (degree_bound) {
    bound.degree = *degree_bound;
  } else {
    bound.weighted = series_weighted_bound(k.lambda, k.gamma);
    if (bound.weighted < 0) return QPoly();
  }
  auto chars = series_character(k.gamma, k.eta, bound);
  auto it = chars.find(k.lambda);
  return it == chars.end() ? QPoly() : it->second;
}

Status charge_status(std::span<const int> gamma, std::span<const int> eta) {
  const bool hook = std::all_of(eta.begin() + (eta.empty() ? 0 : 1), eta.end(), [](int e) { return e == 1; });
  const bool two = eta.size() <= 2;
  const bool columns =
      std::all_of(gamma.begin(), gamma.end(), [](int g) { return g == 1; }) && is_partition(eta);
  return hook || two || columns ? Status::Proven : Status::Conjectural;
}

ChargeResult k_via_charge(const KIndex& k) {
  check_index(k);
  if (!std::is_sorted(k.gamma.rbegin(), k.gamma.rend()))
    throw std::invalid_argument("the charge engine needs a dominant gamma");
  ChargeResult res;
  res.status = charge_status(k.gamma, k.eta);
  if (sum(k.lambda) != sum(k.gamma) || !std::is_sorted(k.lambda.rbegin(), k.lambda.rend())) return res;
  int lo = 0;
  for (int x : k.lambda) lo = std::min(lo, x);
  for (int x : k.gamma) lo = std::min(lo, x);
  Weight lambda = k.lambda, gamma = k.gamma;
  for (int& x : lambda) x -= lo;
  for (int& x : gamma) x -= lo;
  for (const auto& t : enumerate_ct(Partition(lambda), RectSequence(k.eta, gamma))) res.poly.add_term(charge(t), 1);
  return res;
}

std::int64_t k_at_one(const KIndex& k) {
  check_index(k);
  auto norm = normalize_index(k.lambda, k.gamma, k.eta);
  if (!norm) return 0;
  const int n = static_cast<int>(k.gamma.size());
  RectSequence r(k.eta, norm->gamma);
  std::map<Partition, std::int64_t> prod{{Partition(), 1}};
  for (int i = 0; i < r.blocks(); ++i) {
    Partition block(r.block(i));
    std::map<Partition, std::int64_t> next;
    for (const auto& [nu, c] : prod)
      for (const auto& [sigma, d] : schur_product(nu, block, n)) next[sigma] += c * d;
    prod = std::move(next);
  }
  auto it = prod.find(Partition(norm->lambda));
  return it == prod.end() ? 0 : it->second * norm->sign;
}

QPoly two_part_formula(const KIndex& k) {
  check_index(k);
  if (k.eta.size() != 2) throw std::invalid_argument("two-part formula needs exactly two blocks");
  if (!is_partition(k.gamma) || !is_partition(k.lambda)) throw std::invalid_argument("two-part formula needs dominant data");
  if (sum(k.lambda) != sum(k.gamma)) return QPoly();
  const int m = k.eta[0];
  Partition r1(Weight(k.gamma.begin(), k.gamma.begin() + m));
  Partition r2(Weight(k.gamma.begin() + m, k.gamma.end()));
  Partition alpha(Weight(k.lambda.begin(), k.lambda.begin() + m));
  Partition beta(Weight(k.lambda.begin() + m, k.lambda.end()));
  if (!alpha.contains(r1)) return QPoly();
  std::int64_t c = lr_skew_straight(r2, alpha, r1, beta);
  return QPoly::monomial(alpha.size() - r1.size(), c);
}

QPoly cocharge_kostka(const Partition& lambda, std::span<const int> mu) {
  QPoly p;
  for (const auto& t : enumerate_cst(lambda, mu)) p.add_term(cocharge(t), 1);
  return p;
}

QPoly charge_kostka(const Partition& lambda, std::span<const int> mu) {
  QPoly p;
  for (const auto& t : enumerate_cst(lambda, mu)) p.add_term(charge(t), 1);
  return p;
}

QPoly lascoux_standard_sum(const Partition& lambda, const Partition& mu) {
  QPoly p;
  const int n = lambda.size();
  if (mu.size() != n) return p;
  for (const auto& s : enumerate_cst(lambda, std::vector<int>(n, 1)))
    if (dominance_geq(cattype(s).parts(), mu.parts())) p.add_term(cocharge(s), 1);
  return p;
}

KIndex column_index(std::span<const int> lambda, std::span<const int> eta) {
  const int n = sum(eta);
  Weight l(lambda.begin(), lambda.end());
  if (static_cast<int>(l.size()) > n) throw std::invalid_argument("lambda longer than the rank");
  l.resize(n, 0);
  return KIndex{l, Weight(n, 1), Composition(eta.begin(), eta.end())};
}

}  // namespace qlr
