#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "qlr/catabolism.hpp"
#include "qlr/charge.hpp"
#include "qlr/cyclage.hpp"
#include "qlr/insertion.hpp"
#include "qlr/lr.hpp"
#include "qlr/verify/checks.hpp"

using namespace qlr;

TEST_CASE("reference cyclage edge") {
  const auto edges = cyclage_covers(fixtures::kCyclageUpper);
  auto it = std::find_if(edges.begin(), edges.end(), [](const CyclageEdge& e) { return e.start == Cell{1, 2}; });
  REQUIRE(it != edges.end());
  CHECK(it->letter == 2);
  CHECK(it->middle == fixtures::kCyclageMiddle);
  CHECK(it->lower == fixtures::kCyclageLower);
  CHECK(it->upper == fixtures::kCyclageUpper);
  CHECK(cyclage_grade(it->upper) == cyclage_grade(it->lower) + 1);
  // Upper is P(a U) and lower is P(U a) for the same U.
  Word u = row_reading_word(it->middle);
  Word au{it->letter};
  au.insert(au.end(), u.begin(), u.end());
  u.push_back(it->letter);
  CHECK(schensted_p(au) == it->upper);
  CHECK(schensted_p(u) == it->lower);
}

TEST_CASE("small posets") {
  auto two = cyclage_poset(std::vector<int>{1, 1});
  REQUIRE(two.vertices.size() == 2);
  CHECK(two.edges.size() == 1);
  CHECK(two.grade == std::vector<int>{0, 1});
  CHECK(two.vertices[0] == Tableau({{1, 2}}));
  CHECK(two.edges[0] == std::pair<int, int>{1, 0});
  for (int n = 1; n <= 4; ++n) {
    auto one = cyclage_poset(std::vector<int>{n});
    CHECK(one.vertices.size() == 1);
    CHECK(one.edges.empty());
  }
}

TEST_CASE("poset vertices are all tableaux of the content") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& mu : partitions_of(n)) {
      auto poset = cyclage_poset(mu.parts());
      std::int64_t expected = 0;
      for (const auto& lambda : partitions_of(n)) expected += kostka_number(lambda, mu.parts());
      CHECK(static_cast<std::int64_t>(poset.vertices.size()) == expected);
      for (std::size_t i = 0; i < poset.vertices.size(); ++i)
        CHECK(poset.grade[i] == cocharge(poset.vertices[i]));
    }
}

TEST_CASE("theta embeddings") {
  CHECK(theta_mu(Partition{2, 1}, Tableau({{1, 1, 2}})) == Tableau({{1, 2, 3}}));
  const Tableau t({{1, 1, 2}, {2}});
  CHECK(theta_embed(std::vector<int>{2, 2}, std::vector<int>{2, 2}, t) == t);
  auto chain = canonical_chain(std::vector<int>{2, 1, 0}, std::vector<int>{1, 1, 1});
  REQUIRE(chain.size() >= 2);
  CHECK(chain.front() == Composition{2, 1, 0});
  CHECK(chain.back() == Composition{1, 1, 1});
}

TEST_CASE("dot output") {
  auto dot = to_dot(cyclage_poset(std::vector<int>{1, 1}));
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("v1 -> v0") != std::string::npos);
}

TEST_CASE("cyclage checks at small size") {
  CHECK(check_cyclage_posets(4).pass());
  CHECK(check_cyc_image(4).pass());
  CHECK(check_theta_lemmas(4).pass());
  CHECK(check_theta_embeddings(4, 7).pass());
}
