#include "qlr/involution.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "qlr/catabolism.hpp"
#include "qlr/charge.hpp"
#include "qlr/crystal.hpp"

namespace qlr {

Weight xi_of(const Permutation& w, std::span<const int> lambda) {
  const int n = static_cast<int>(lambda.size());
  if (w.size() != n) throw std::invalid_argument("permutation size differs from rank");
  Weight xi(n);
  for (int i = 0; i < n; ++i) {
    int src = w(i + 1) - 1;
    xi[i] = lambda[src] + (n - 1 - src) - (n - 1 - i);
  }
  return xi;
}

SignedTripleMap::SignedTripleMap(Weight lambda, RectSequence r) : lambda_(std::move(lambda)), r_(std::move(r)) {
  n_ = r_.rank();
  if (static_cast<int>(lambda_.size()) != n_) throw std::invalid_argument("lambda length differs from rank");
  if (!is_partition(lambda_) || !is_partition(r_.gamma())) throw std::invalid_argument("signed triples need dominant data");
  if (r_.blocks() < 1 || r_.first_letter() != 1) throw std::invalid_argument("bad rectangle sequence");
  m_ = r_.eta()[0];
}

int SignedTripleMap::weight(const SignedTriple& x) const {
  Weight xi = xi_of(x.w, lambda_);
  int a = 0;
  for (int k = 0; k < m_; ++k) a += xi[k] - r_.gamma()[k];
  return a + charge(x.t);
}

bool SignedTripleMap::in_s(const SignedTriple& x) const {
  if (r_.blocks() == 1) return x.t.empty();
  return is_r_catabolizable(x.t, r_.tail());
}

std::vector<SignedTriple> SignedTripleMap::enumerate_all() const {
  const auto& g = r_.gamma();
  Composition t_content(n_, 0);
  for (int k = m_; k < n_; ++k) t_content[k] = g[k];
  const int size = sum(t_content);
  std::map<Partition, std::vector<Tableau>> ts;
  for (const auto& sh : partitions_of(size, n_)) {
    auto v = enumerate_cst(sh, t_content);
    if (!v.empty()) ts.emplace(sh, std::move(v));
  }
  std::vector<SignedTriple> out;
  for (const auto& w : all_permutations(n_)) {
    Weight xi = xi_of(w, lambda_);
    Composition u_content;
    for (int k = m_; k < n_; ++k) u_content.push_back(xi[k]);
    for (int k = 0; k < m_; ++k) u_content.push_back(xi[k] - g[k]);
    bool ok = true;
    for (int x : u_content) ok = ok && x >= 0;
    if (!ok || sum(u_content) != size) continue;
    for (const auto& [sh, tlist] : ts) {
      auto ulist = enumerate_cst(sh, u_content);
      for (const auto& t : tlist)
        for (const auto& u : ulist) out.push_back({w, t, u});
    }
  }
  return out;
}

std::vector<Word> SignedTripleMap::u_words(const SignedTriple& x) const {
  auto labelled = column_rsk_inverse({x.t, x.u}, n_);
  std::vector<Word> u(n_);
  for (int k = 0; k < n_ - m_; ++k) u[m_ + k] = labelled[k];
  for (int k = 0; k < m_; ++k) u[k] = labelled[n_ - m_ + k];
  return u;
}

std::vector<Word> SignedTripleMap::v_words(const SignedTriple& x) const {
  std::vector<Word> v = u_words(x);
  for (int i = 0; i < m_; ++i) v[i].insert(v[i].begin(), r_.gamma()[i], i + 1);
  return v;
}

PhiImage SignedTripleMap::phi(const SignedTriple& x) const {
  auto pq = column_rsk(v_words(x));
  return {x.w, pq.p, pq.q};
}

std::optional<SignedTriple> SignedTripleMap::phi_inverse(const PhiImage& y) const {
  if (y.w.size() != n_) return std::nullopt;
  Composition qc = content(y.q);
  qc.resize(std::max<std::size_t>(qc.size(), n_), 0);
  Weight xi = xi_of(y.w, lambda_);
  if (Weight(qc.begin(), qc.end()) != xi) return std::nullopt;
  std::vector<Word> v = column_rsk_inverse({y.p, y.q}, n_);
  std::vector<Word> labelled;
  for (int k = m_; k < n_; ++k) labelled.push_back(v[k]);
  for (int i = 0; i < m_; ++i) {
    const int g = r_.gamma()[i];
    Word& word = v[i];
    if (static_cast<int>(word.size()) < g) return std::nullopt;
    for (int k = 0; k < g; ++k)
      if (word[k] != i + 1) return std::nullopt;
    Word rest(word.begin() + g, word.end());
    for (int x : rest)
      if (x <= m_) return std::nullopt;
    labelled.push_back(rest);
  }
  for (int k = 0; k < n_ - m_; ++k)
    for (int x : labelled[k])
      if (x <= m_) return std::nullopt;
  auto tu = column_rsk(labelled);
  return SignedTriple{y.w, tu.p, tu.q};
}

ThetaPrimeResult theta_prime(const PhiImage& y) {
  Word q = row_reading_word(y.q);
  auto bad = lattice_violation(q, {});
  if (!bad) return {y, true, 0};
  const int r = bad->letter - 1;
  PhiImage z{y.w * Permutation::simple(y.w.size(), r), y.p, refill(y.q, lattice_involution(q, {}))};
  return {z, false, r};
}

bool InvolutionReport::ok() const {
  return phi_injective && phi_contents_ok && charge_crank_ok && involutive && sign_reversing && weight_preserving &&
         fixed_points_match_ct && sum_matches_morris() && fixed_matches_charge();
}

std::string InvolutionReport::summary() const {
  std::string s = "triples=" + std::to_string(triples) + " in_S=" + std::to_string(triples_in_s) +
                  " fixed=" + std::to_string(fixed_points) + " escapes=" + std::to_string(stability_escapes);
  s += " sum_S=" + to_string(signed_sum_s) + " morris=" + to_string(morris) + " charge=" + to_string(charge);
  return s;
}

InvolutionReport verify_involution(std::span<const int> lambda, const RectSequence& r) {
  InvolutionReport rep;
  Weight lam(lambda.begin(), lambda.end());
  SignedTripleMap map(lam, r);
  KIndex index{lam, r.gamma(), r.eta()};
  rep.morris = k_via_morris(index);
  rep.charge = k_via_charge(index).poly;

  auto all = map.enumerate_all();
  rep.triples = static_cast<std::int64_t>(all.size());
  std::map<PhiImage, std::size_t> images;
  std::vector<PhiImage> phis;
  phis.reserve(all.size());
  for (std::size_t k = 0; k < all.size(); ++k) {
    const auto& x = all[k];
    PhiImage y = map.phi(x);
    Composition pc = content(y.p);
    pc.resize(std::max<std::size_t>(pc.size(), r.gamma().size()), 0);
    Composition qc = content(y.q);
    qc.resize(std::max<std::size_t>(qc.size(), r.gamma().size()), 0);
    if (Weight(pc.begin(), pc.end()) != r.gamma() || Weight(qc.begin(), qc.end()) != xi_of(x.w, lam))
      rep.phi_contents_ok = false;
    if (charge(y.p) != map.weight(x)) rep.charge_crank_ok = false;
    if (!images.emplace(y, k).second) rep.phi_injective = false;
    phis.push_back(std::move(y));
  }

  std::set<Tableau> fixed_ps;
  for (std::size_t k = 0; k < all.size(); ++k) {
    const auto& x = all[k];
    const bool in_s = map.in_s(x);
    const int wt = map.weight(x);
    rep.signed_sum_all.add_term(wt, map.sign(x));
    if (in_s) {
      ++rep.triples_in_s;
      rep.signed_sum_s.add_term(wt, map.sign(x));
    }
    ThetaPrimeResult z = theta_prime(phis[k]);
    if (z.fixed) {
      if (x.w != Permutation::identity(x.w.size())) rep.involutive = false;
      if (in_s) {
        ++rep.fixed_points;
        rep.fixed_sum.add_term(wt, 1);
        fixed_ps.insert(phis[k].p);
      }
      continue;
    }
    auto it = images.find(z.image);
    if (it == images.end()) {
      rep.involutive = false;
      continue;
    }
    const auto& x2 = all[it->second];
    ThetaPrimeResult back = theta_prime(z.image);
    if (back.fixed || back.image != phis[k]) rep.involutive = false;
    if (map.sign(x2) != -map.sign(x)) rep.sign_reversing = false;
    if (map.weight(x2) != wt) rep.weight_preserving = false;
    if (in_s && !map.in_s(x2)) ++rep.stability_escapes;
  }

  auto ct = enumerate_ct(Partition(lam), r);
  rep.fixed_points_match_ct = std::set<Tableau>(ct.begin(), ct.end()) == fixed_ps &&
                              static_cast<std::int64_t>(ct.size()) == rep.fixed_points;
  return rep;
}

}  // namespace qlr
