#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qlr/insertion.hpp"
#include "qlr/partition.hpp"
#include "qlr/tableau.hpp"

namespace qlr {

// upper = P(a U) covers lower = P(U a) with a > 1. Cells refer to the
// partition-content representative when the content is not a partition.
struct CyclageEdge {
  Tableau upper;
  Tableau lower;
  Cell start;  // corner of upper emptied by reverse column insertion
  int letter = 0;
  Tableau middle;
  Cell end;  // cell added when the letter is row inserted into middle
};

std::vector<CyclageEdge> cyclage_covers(const Tableau& t);
// Cocharge of the partition-content representative.
int cyclage_grade(const Tableau& t);
std::optional<CyclageEdge> cocyclage(const Tableau& s, Cell corner);
// Start cell strictly below row r (1-based).
bool row_restricted(const CyclageEdge& e, int r);
// End cell strictly right of column c (1-based).
bool col_restricted(const CyclageEdge& e, int c);

// One step of an embedding chain between compositions of equal length.
// Either a rearrangement or a move of one unit from part 1 to part 2.
std::vector<Composition> canonical_chain(std::span<const int> alpha, std::span<const int> beta);
Tableau theta_along_chain(const Tableau& t, const std::vector<Composition>& chain);
// Embedding T(alpha) -> T(beta) for alpha dominating beta.
Tableau theta_embed(std::span<const int> alpha, std::span<const int> beta, const Tableau& t);
Tableau theta_mu(const Partition& mu, const Tableau& t);

struct CyclagePoset {
  Composition alpha;
  std::vector<Tableau> vertices;  // sorted by (cocharge, reading word)
  std::vector<int> grade;         // cocharge of the partition-content representative
  std::vector<std::pair<int, int>> edges;  // (upper, lower)
};

CyclagePoset cyclage_poset(std::span<const int> alpha);
std::string to_dot(const CyclagePoset& poset);

}  // namespace qlr
