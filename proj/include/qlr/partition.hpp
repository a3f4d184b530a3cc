#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qlr {

// A weight is an integer vector of fixed length; a composition is a weight
// with nonnegative entries.
using Weight = std::vector<int>;
using Composition = std::vector<int>;

class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  // Throws std::invalid_argument unless weakly decreasing and nonnegative.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  std::vector<int> padded(std::size_t n) const;
  bool contains(const Partition& inner) const;

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

std::string to_string(const Partition& p);
std::string to_string(std::span<const int> v);

bool is_partition(std::span<const int> v);
int sum(std::span<const int> v);
Partition conjugate(const Partition& p);

// Dominance on vectors of equal total; shorter vectors are padded with zeros.
bool dominance_geq(std::span<const int> a, std::span<const int> b);
// Dominance of the sorted rearrangements.
bool composition_dominates(std::span<const int> a, std::span<const int> b);

// n(mu) = sum (i-1) mu_i.
int n_stat(const Partition& mu);

// Partitions of n with at most max_parts parts, in reverse lexicographic order.
std::vector<Partition> partitions_of(int n, int max_parts = -1);
// Compositions of n with exactly k positive parts (k = -1: any number).
std::vector<Composition> compositions_of(int n, int k = -1);
// All weak compositions of n into exactly k parts.
std::vector<Composition> weak_compositions(int n, int k);

class Permutation {
 public:
  Permutation() = default;
  // One-line notation with values 1..n.
  explicit Permutation(std::vector<int> one_line);
  static Permutation identity(int n);
  static Permutation simple(int n, int r);

  int size() const { return static_cast<int>(w_.size()); }
  int operator()(int i) const { return w_[i - 1]; }
  const std::vector<int>& one_line() const { return w_; }

  Permutation inverse() const;
  // (a * b)(i) = a(b(i)).
  Permutation operator*(const Permutation& b) const;
  int inversions() const;
  int sign() const { return inversions() % 2 == 0 ? 1 : -1; }
  // (w . v)_i = v_{w^{-1}(i)}.
  Weight act(std::span<const int> v) const;
  // w = s_{i_1} ... s_{i_p} with p = inversions().
  std::vector<int> reduced_word() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> w_;
};

std::vector<Permutation> all_permutations(int n);

// Returns (a+, w) with w shortest such that w . a+ = a.
std::pair<Weight, Permutation> dominant_sort(std::span<const int> a);

// Pairs (i, j), 1-based, with i <= eta_1 + ... + eta_r < j for some r.
std::vector<std::pair<int, int>> roots_of(std::span<const int> eta);

class RectSequence {
 public:
  RectSequence() = default;
  RectSequence(Composition eta, Weight gamma, int first_letter = 1);
  // Each block given explicitly; eta_i is the block length.
  static RectSequence from_blocks(const std::vector<Weight>& blocks);

  const Composition& eta() const { return eta_; }
  const Weight& gamma() const { return gamma_; }
  int first_letter() const { return first_; }
  int blocks() const { return static_cast<int>(eta_.size()); }
  int rank() const { return static_cast<int>(gamma_.size()); }
  int offset(int i) const;
  Weight block(int i) const;
  // Letters of block i, inclusive.
  std::pair<int, int> interval(int i) const;
  // Drops the first block, keeping absolute letters.
  RectSequence tail() const;
  bool blocks_are_partitions() const;
  bool is_dominant() const { return is_partition(gamma_); }

  bool operator==(const RectSequence&) const = default;

 private:
  Composition eta_;
  Weight gamma_;
  int first_ = 1;
};

struct NormalizedIndex {
  int sign = 1;
  Weight lambda;
  Weight gamma;
};

// Straightens gamma within each block and shifts so every entry is >= 0.
// Returns nullopt when the index is zero.
std::optional<NormalizedIndex> normalize_index(std::span<const int> lambda, std::span<const int> gamma,
                                               std::span<const int> eta);

// Complement in a box of width m (m < 0: smallest legal width).
std::pair<Weight, RectSequence> box_complement(std::span<const int> lambda, const RectSequence& r, int m = -1);

// lambda* = (-lambda_n, ..., -lambda_1).
Weight dual_weight(std::span<const int> v);

}  // namespace qlr
