#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qlr/insertion.hpp"
#include "qlr/kpoly.hpp"
#include "qlr/partition.hpp"
#include "qlr/qpoly.hpp"
#include "qlr/tableau.hpp"

namespace qlr {

// (w, T, U): T has content (0^m, gamma-hat), U has content
// (beta(w), alpha(w) - R_1) and the same shape as T.
struct SignedTriple {
  Permutation w;
  Tableau t;
  Tableau u;
  bool operator==(const SignedTriple&) const = default;
  auto operator<=>(const SignedTriple&) const = default;
};

struct PhiImage {
  Permutation w;
  Tableau p;
  Tableau q;
  bool operator==(const PhiImage&) const = default;
  auto operator<=>(const PhiImage&) const = default;
};

// xi(w) = w^{-1}(lambda + rho) - rho.
Weight xi_of(const Permutation& w, std::span<const int> lambda);

class SignedTripleMap {
 public:
  // Dominant gamma and a partition lambda of the same rank.
  SignedTripleMap(Weight lambda, RectSequence r);

  int sign(const SignedTriple& x) const { return x.w.sign(); }
  // |alpha(w)| - |R_1| + charge(T).
  int weight(const SignedTriple& x) const;
  bool in_s(const SignedTriple& x) const;

  // All triples; those in S have T catabolizable for the tail sequence.
  std::vector<SignedTriple> enumerate_all() const;

  PhiImage phi(const SignedTriple& x) const;
  std::optional<SignedTriple> phi_inverse(const PhiImage& y) const;
  // Intermediate words of phi: u^1..u^n and v^1..v^n.
  std::vector<Word> u_words(const SignedTriple& x) const;
  std::vector<Word> v_words(const SignedTriple& x) const;

  const Weight& lambda() const { return lambda_; }
  const RectSequence& rects() const { return r_; }

 private:
  Weight lambda_;
  RectSequence r_;
  int n_ = 0;
  int m_ = 0;
};

struct ThetaPrimeResult {
  PhiImage image;
  bool fixed = false;
  int r = 0;  // reflection index used when not fixed
};
ThetaPrimeResult theta_prime(const PhiImage& y);

struct InvolutionReport {
  std::int64_t triples = 0;        // |S'|
  std::int64_t triples_in_s = 0;   // |S|
  std::int64_t fixed_points = 0;   // fixed points inside S
  std::int64_t stability_escapes = 0;  // x in S with theta(x) outside S
  bool phi_injective = true;
  bool phi_contents_ok = true;
  bool charge_crank_ok = true;
  bool involutive = true;
  bool sign_reversing = true;
  bool weight_preserving = true;
  bool fixed_points_match_ct = true;
  QPoly signed_sum_s;
  QPoly signed_sum_all;
  QPoly fixed_sum;
  QPoly morris;
  QPoly charge;
  bool sum_matches_morris() const { return signed_sum_s == morris; }
  bool fixed_matches_charge() const { return fixed_sum == charge; }
  bool ok() const;
  std::string summary() const;
};

InvolutionReport verify_involution(std::span<const int> lambda, const RectSequence& r);

}  // namespace qlr
