#pragma once

#include <string>
#include <vector>

#include "qlr/involution.hpp"
#include "qlr/partition.hpp"
#include "qlr/tableau.hpp"

namespace fixtures {

inline std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (const auto& p : parts) s += p;
  return s;
}

// Crystal operators with r = 2 on a 25-letter word.
inline const std::string kCrystalWord = join({"1", "24312", "2", "3342", "3", "34", "3313123422", "3"});
inline const std::string kCrystalS2 = join({"1", "24312", "2", "2342", "2", "24", "3313123422", "3"});
inline const std::string kCrystalE2 = join({"1", "24312", "2", "2342", "3", "34", "3313123422", "3"});
inline const std::string kCrystalF2 = join({"1", "24312", "3", "3342", "3", "34", "3313123422", "3"});

// Catabolizable tableaux for lambda = (5,3,1,0,0), R = ((3,2),(2,1),(1)).
inline const qlr::Weight kCtLambda{5, 3, 1, 0, 0};
inline const qlr::RectSequence kCtRects({2, 2, 1}, {3, 2, 2, 1, 1});
inline const std::vector<qlr::Tableau> kCtTableaux{
    qlr::Tableau({{1, 1, 1, 3, 4}, {2, 2, 5}, {3}}),
    qlr::Tableau({{1, 1, 1, 3, 3}, {2, 2, 4}, {5}}),
    qlr::Tableau({{1, 1, 1, 4, 5}, {2, 2, 3}, {3}}),
    qlr::Tableau({{1, 1, 1, 3, 5}, {2, 2, 4}, {3}}),
};
inline const std::vector<int> kCtCharges{3, 4, 4, 4};

// Signed triple with n = 8, eta = (2,2,2,1,1), gamma = (3^8).
struct TripleFixture {
  qlr::SignedTripleMap map{{6, 5, 5, 5, 2, 1, 0, 0}, qlr::RectSequence({2, 2, 2, 1, 1}, qlr::Weight(8, 3))};
  qlr::Permutation w{{3, 2, 1, 5, 4, 6, 7, 8}};
  qlr::Tableau t{{{3, 3, 3, 5, 6, 7, 7, 7}, {4, 4, 4, 6, 8, 8}, {5, 5, 8}, {6}}};
  qlr::Tableau u{{{1, 1, 1, 1, 1, 1, 1, 1}, {2, 3, 3, 3, 3, 3}, {3, 8, 8}, {4}}};
  qlr::Tableau p{{{1, 1, 1, 5, 5, 6, 7, 7}, {2, 2, 2, 6, 6, 7}, {3, 3, 3, 8, 8}, {4, 4, 4}, {5}, {8}}};
  qlr::Tableau q{{{1, 1, 1, 2, 2, 3, 3, 3}, {2, 2, 2, 3, 3, 5}, {3, 3, 3, 5, 5}, {4, 5, 5}, {5}, {6}}};
  qlr::Tableau q_prime{{{1, 1, 1, 2, 2, 2, 2, 3}, {2, 2, 2, 3, 3, 5}, {3, 3, 3, 5, 5}, {4, 5, 5}, {5}, {6}}};
  qlr::Permutation w_prime{{3, 1, 2, 5, 4, 6, 7, 8}};
  qlr::Weight xi{3, 5, 8, 1, 6, 1, 0, 0};
  std::vector<std::string> u_words{"", "56", "33356777", "4", "445688", "8", "", ""};
  // Two-row states (offset, top, bottom) while moving from v to v'.
  std::vector<qlr::TwoRow> slides{{3, {2, 2, 2, 5, 6}, {3, 3, 3, 5, 6, 7, 7, 7}},
                                  {2, {2, 2, 2, 5, 6, 7}, {3, 3, 3, 5, 6, 7, 7}},
                                  {1, {2, 2, 2, 5, 6, 7, 7}, {3, 3, 3, 5, 6, 7}}};
  std::string v2_prime = "2225677";
  std::string v3_prime = "333567";
};

// Standard tableau with cattype (4,2,2,1).
inline const qlr::Tableau kCattypeTableau({{1, 2, 3, 4, 7}, {5, 6, 9}, {8}});

// Cyclage edge at the corner in row 2, column 3.
inline const qlr::Tableau kCyclageUpper({{1, 1, 1, 2, 3}, {2, 3, 4}, {4}});
inline const qlr::Tableau kCyclageMiddle({{1, 1, 1, 2, 3}, {3, 4}, {4}});
inline const qlr::Tableau kCyclageLower({{1, 1, 1, 2, 2}, {3, 3}, {4, 4}});

}  // namespace fixtures
