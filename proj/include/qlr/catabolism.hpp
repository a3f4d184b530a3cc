#pragma once

#include <optional>
#include <span>
#include <vector>

#include "qlr/partition.hpp"
#include "qlr/tableau.hpp"

namespace qlr {

// Shape R_i with row j filled by the j-th letter of the block alphabet A_i.
Tableau yamanouchi_block(const RectSequence& r, int i);

// H_{eta_1}(S - Y_1) when S restricted to A_1 equals Y_1.
std::optional<Tableau> cat_r1(const Tableau& s, const RectSequence& r);
bool is_r_catabolizable(const Tableau& s, const RectSequence& r);
// Tableaux of shape lambda and content gamma that are R-catabolizable.
std::vector<Tableau> enumerate_ct(const Partition& lambda, const RectSequence& r);

// Standard tableaux only.
int d1(const Tableau& s);
Tableau cat_op(const Tableau& s);
Partition cattype(const Tableau& s);

// The tableau lives on letters a, a+1, ...; Z_m is a .. a+m-1 in row one.
bool contains_z(const Tableau& s, int a, int m);
Tableau cat_m(const Tableau& s, int a, int m);
Tableau ccat_m(const Tableau& s, int a, int m);
bool is_mu_catabolizable(const Tableau& s, const Partition& mu);
bool is_mu_column_catabolizable(const Tableau& s, const Partition& mu);

}  // namespace qlr
