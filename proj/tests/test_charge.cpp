#include <doctest.h>

#include "qlr/charge.hpp"
#include "qlr/crystal.hpp"
#include "qlr/insertion.hpp"
#include "qlr/verify/checks.hpp"

using namespace qlr;

namespace {

// Charge of a standard word straight from the index rule.
int standard_charge_oracle(const Word& w) {
  const int n = static_cast<int>(w.size());
  std::vector<int> pos(n + 1);
  for (int i = 0; i < n; ++i) pos[w[i]] = i;
  int index = 0, total = 0;
  for (int k = 2; k <= n; ++k) {
    if (pos[k] > pos[k - 1]) ++index;
    total += index;
  }
  return total;
}

}  // namespace

TEST_CASE("charge of standard words") {
  CHECK(charge_standard(parse_word("43215")) == 1);
  CHECK(charge_standard(parse_word("34125")) == 7);
  CHECK(charge_standard(parse_word("54321")) == 0);
  CHECK(charge_standard(parse_word("12345")) == 10);
  CHECK_THROWS(charge_standard(parse_word("1123")));
  for (const auto& w : all_permutations(5)) CHECK(charge_standard(w.one_line()) == standard_charge_oracle(w.one_line()));
}

TEST_CASE("circular decomposition") {
  auto parts = circular_decompose(parse_word("4323411255"));
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].positions == std::vector<std::size_t>{0, 1, 2, 6, 9});
  CHECK(word_to_string(parts[0].letters) == "43215");
  CHECK(word_to_string(parts[1].letters) == "34125");
  auto ones = circular_decompose(parse_word("11"));
  REQUIRE(ones.size() == 2);
  CHECK(word_to_string(ones[0].letters) == "1");
  CHECK(circular_decompose(parse_word("3142")).size() == 1);
  CHECK_THROWS(circular_decompose(parse_word("22")));
}

TEST_CASE("charge and cocharge values") {
  CHECK(charge(parse_word("4323411255")) == 8);
  CHECK(cocharge(parse_word("4323411255")) == 12);
  CHECK(charge(Word{}) == 0);
  CHECK(charge(parse_word("2211")) == 0);
  CHECK(charge(parse_word("1122")) == 2);
  CHECK(cocharge(parse_word("1122")) == 0);
  CHECK(cocharge(parse_word("2211")) == 2);
  CHECK_THROWS(cocharge(parse_word("22")));
  // Tableau charge reads rows bottom to top.
  CHECK(charge(Tableau({{1, 1}, {2, 2}})) == 0);
}

TEST_CASE("charge of general content goes through the plactic action") {
  // Content (1,2) is conjugated to (2,1).
  CHECK(charge(parse_word("122")) == charge(parse_word("112")));
  CHECK(charge(parse_word("3")) == 0);
}

TEST_CASE("charge axioms at small size") { CHECK(check_charge_axioms(5, 3).pass()); }
