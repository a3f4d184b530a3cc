#pragma once

#include <span>
#include <vector>

#include "qlr/tableau.hpp"

namespace qlr {

// Charge of a word containing each of 1..k exactly once.
int charge_standard(std::span<const int> w);

struct StandardSubword {
  std::vector<std::size_t> positions;  // increasing
  Word letters;
};

// Left circular reading: start at the rightmost 1, then look left for 2,
// 3, ... wrapping around; extract and repeat. Needs partition content.
std::vector<StandardSubword> circular_decompose(std::span<const int> w);

// General content is conjugated to partition content by the plactic action.
int charge(std::span<const int> w);
int charge(const Tableau& t);
// n(mu) - charge; needs partition content.
int cocharge(std::span<const int> w);
int cocharge(const Tableau& t);

}  // namespace qlr
