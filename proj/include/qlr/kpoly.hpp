#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qlr/partition.hpp"
#include "qlr/qpoly.hpp"

namespace qlr {

// Index (lambda, gamma, eta) of a generalized Kostka polynomial.
struct KIndex {
  Weight lambda;
  Weight gamma;
  Composition eta;
  bool operator==(const KIndex&) const = default;
  auto operator<=>(const KIndex&) const = default;
};

std::string to_string(const KIndex& k);

// pi(x^alpha) = sign * s_lambda, or zero when alpha + rho has a repeat.
struct BottResult {
  int sign = 0;
  Weight lambda;
};
BottResult bott_pi(std::span<const int> alpha);

// Minimal coset representatives of S_n / (S_m x S_{n-m}) applied to lambda + rho.
struct CosetTerm {
  int sign = 1;
  Weight alpha;  // first m parts of w^{-1}(lambda + rho) - rho
  Weight beta;   // remaining parts
};
std::vector<CosetTerm> coset_reps(std::span<const int> lambda, int m);

// q-analogue of the Kostant partition function restricted to the roots of eta.
QPoly kostant_q(std::span<const int> v, std::span<const int> eta);

// Alternating sum over S_n of the restricted Kostant partition function.
QPoly k_via_kostant(const KIndex& k);

// Morris-type recurrence on the first block; memoized per engine instance.
class MorrisEngine {
 public:
  QPoly compute(const KIndex& k);
  // Index already normalized: every block is a partition, lambda dominant.
  QPoly compute_normalized(std::span<const int> lambda, std::span<const int> gamma, std::span<const int> eta);
  std::size_t memo_size() const;

 private:
  mutable std::mutex lock_;
  std::map<KIndex, QPoly> memo_;
};
QPoly k_via_morris(const KIndex& k);

// Truncated expansion of x^gamma prod_{roots} 1/(1 - q x_i/x_j) followed by
// Bott's rule. A negative bound uses the weighted bound for the target.
struct SeriesBound {
  int weighted = -1;  // sum m(i,j) (j - i) <= weighted
  int degree = -1;    // sum m(i,j) <= degree
};
std::map<Weight, QPoly> series_character(std::span<const int> gamma, std::span<const int> eta, SeriesBound bound);
int series_weighted_bound(std::span<const int> lambda, std::span<const int> gamma);
QPoly k_via_series(const KIndex& k, std::optional<int> degree_bound = std::nullopt);

enum class Status { Proven, Conjectural };
std::string to_string(Status s);

struct ChargeResult {
  QPoly poly;
  Status status = Status::Conjectural;
};
// Charge generating function over R-catabolizable tableaux; needs dominant gamma.
ChargeResult k_via_charge(const KIndex& k);
Status charge_status(std::span<const int> gamma, std::span<const int> eta);

// <s_lambda, prod s_{R_i}> in rank n.
std::int64_t k_at_one(const KIndex& k);

// q^{|alpha| - |R_1|} LR^{R_2}_{alpha / R_1, beta} for two blocks.
QPoly two_part_formula(const KIndex& k);

// Sum of q^cocharge over column-strict tableaux of shape lambda, content mu.
QPoly cocharge_kostka(const Partition& lambda, std::span<const int> mu);
// Kostka-Foulkes polynomial as the charge generating function.
QPoly charge_kostka(const Partition& lambda, std::span<const int> mu);
// Sum of q^cocharge over standard S of shape lambda with cattype(S) >= mu.
QPoly lascoux_standard_sum(const Partition& lambda, const Partition& mu);

// Single-column rectangles (1^{eta_i}) with gamma = (1^n).
KIndex column_index(std::span<const int> lambda, std::span<const int> eta);

}  // namespace qlr
