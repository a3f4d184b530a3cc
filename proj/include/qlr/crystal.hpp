#pragma once

#include <optional>
#include <span>
#include <vector>

#include "qlr/partition.hpp"
#include "qlr/tableau.hpp"

namespace qlr {

// Each r+1 opens and each r closes; matched letters are r-paired.
struct RPairing {
  int r = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (position of r+1, position of r)
  std::vector<std::size_t> unpaired;                       // r^p (r+1)^q, left to right
  int p = 0;
  int q = 0;
};

RPairing r_pairing(std::span<const int> w, int r);
int count_r_pairs(std::span<const int> w, int r);

Word s_op(std::span<const int> w, int r);
std::optional<Word> e_op(std::span<const int> w, int r);
std::optional<Word> f_op(std::span<const int> w, int r);

Tableau s_op(const Tableau& t, int r);
std::optional<Tableau> e_op(const Tableau& t, int r);
std::optional<Tableau> f_op(const Tableau& t, int r);

// Applies s_{i_1} ... s_{i_p} along a reduced word of w (rightmost first).
Word plactic_act(const Permutation& w, std::span<const int> u);
Tableau plactic_act(const Permutation& w, const Tableau& t);

// Final subwords plus mu have partition content.
bool is_mu_lattice(std::span<const int> w, std::span<const int> mu);
// Rightmost position where the lattice condition first fails, with the
// offending letter r+1.
struct LatticeViolation {
  std::size_t position = 0;
  int letter = 0;
};
std::optional<LatticeViolation> lattice_violation(std::span<const int> w, std::span<const int> mu);
// u -> s_r e_r^{mu_r - mu_{r+1} + 1} u at the rightmost violation r+1;
// lattice words are fixed.
Word lattice_involution(std::span<const int> w, std::span<const int> mu);

// Same r-pairs and differing only on the unpaired r/r+1 letters.
bool same_r_string(std::span<const int> a, std::span<const int> b, int r);

}  // namespace qlr
