#include <doctest.h>

#include <algorithm>
#include <set>

#include "qlr/kpoly.hpp"
#include "qlr/partition.hpp"

using namespace qlr;

namespace {

// p(n) from Euler's pentagonal recurrence.
std::vector<long> partition_numbers(int n) {
  std::vector<long> p(n + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      const long sign = k % 2 ? 1 : -1;
      p[m] += sign * p[m - g1];
      if (g2 <= m) p[m] += sign * p[m - g2];
    }
  return p;
}

long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("partition validation and basic statistics") {
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
  Partition p{4, 2, 1, 0, 0};
  CHECK(p.length() == 3);
  CHECK(p.size() == 7);
  CHECK(p.padded(5) == std::vector<int>{4, 2, 1, 0, 0});
  CHECK(p.contains(Partition{3, 2}));
  CHECK_FALSE(p.contains(Partition{3, 3}));
  CHECK(conjugate(p) == Partition{3, 2, 1, 1});
  CHECK(conjugate(conjugate(p)) == p);
  CHECK(n_stat(Partition{2, 2, 2, 2, 2}) == 20);
  CHECK(n_stat(Partition{3}) == 0);
}

TEST_CASE("partition counts match the pentagonal recurrence") {
  auto p = partition_numbers(12);
  for (int n = 0; n <= 12; ++n) {
    auto parts = partitions_of(n);
    CHECK(static_cast<long>(parts.size()) == p[n]);
    std::set<Partition> distinct(parts.begin(), parts.end());
    CHECK(distinct.size() == parts.size());
    for (const auto& q : parts) CHECK(q.size() == n);
  }
  CHECK(partitions_of(5, 2).size() == 3);  // 5, 41, 32
}

TEST_CASE("composition counts") {
  for (int n = 1; n <= 8; ++n) {
    CHECK(compositions_of(n).size() == static_cast<std::size_t>(1) << (n - 1));
    for (int k = 1; k <= n; ++k) CHECK(static_cast<long>(compositions_of(n, k).size()) == binomial(n - 1, k - 1));
  }
  for (int n = 0; n <= 5; ++n)
    for (int k = 1; k <= 4; ++k) CHECK(static_cast<long>(weak_compositions(n, k).size()) == binomial(n + k - 1, k - 1));
}

TEST_CASE("dominance order") {
  CHECK(dominance_geq(std::vector<int>{3, 1}, std::vector<int>{2, 2}));
  CHECK_FALSE(dominance_geq(std::vector<int>{2, 2}, std::vector<int>{3, 1}));
  CHECK(dominance_geq(std::vector<int>{2, 2}, std::vector<int>{2, 1, 1}));
  // (3,1,1,1) and (2,2,2) are incomparable.
  CHECK_FALSE(dominance_geq(std::vector<int>{3, 1, 1, 1}, std::vector<int>{2, 2, 2}));
  CHECK_FALSE(dominance_geq(std::vector<int>{2, 2, 2}, std::vector<int>{3, 1, 1, 1}));
  CHECK_THROWS(dominance_geq(std::vector<int>{2}, std::vector<int>{1}));
  CHECK(composition_dominates(std::vector<int>{1, 3}, std::vector<int>{2, 2}));
}

TEST_CASE("permutations act on weights") {
  for (int n = 1; n <= 5; ++n) {
    auto perms = all_permutations(n);
    long fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    CHECK(static_cast<long>(perms.size()) == fact);
    for (const auto& w : perms) {
      // The reduced word multiplies back to w and has length inv(w).
      Permutation prod = Permutation::identity(n);
      auto word = w.reduced_word();
      CHECK(static_cast<int>(word.size()) == w.inversions());
      for (int r : word) prod = prod * Permutation::simple(n, r);
      CHECK(prod == w);
      CHECK((w * w.inverse()) == Permutation::identity(n));
    }
  }
  Permutation w({2, 3, 1});
  // (w . v)_i = v_{w^{-1}(i)}
  CHECK(w.act(std::vector<int>{10, 20, 30}) == std::vector<int>{30, 10, 20});
  CHECK(w.sign() == 1);
  CHECK(Permutation::simple(3, 1).sign() == -1);
}

TEST_CASE("dominant sort returns the shortest permutation") {
  for (const auto& a : weak_compositions(4, 3)) {
    auto [plus, w] = dominant_sort(a);
    CHECK(is_partition(plus));
    CHECK(w.act(plus) == a);
    for (const auto& v : all_permutations(3))
      if (v.act(plus) == a) CHECK(v.inversions() >= w.inversions());
  }
}

TEST_CASE("roots of a block composition") {
  auto roots = roots_of(std::vector<int>{2, 1});
  CHECK(roots == std::vector<std::pair<int, int>>{{1, 3}, {2, 3}});
  CHECK(roots_of(std::vector<int>{3}).empty());
  CHECK(roots_of(std::vector<int>{1, 1, 1}).size() == 3);
}

TEST_CASE("rectangle sequences") {
  RectSequence r({2, 2, 1}, {3, 2, 2, 1, 1});
  CHECK(r.blocks() == 3);
  CHECK(r.block(0) == Weight{3, 2});
  CHECK(r.block(1) == Weight{2, 1});
  CHECK(r.block(2) == Weight{1});
  CHECK(r.interval(1) == std::pair<int, int>{3, 4});
  CHECK(r.tail().interval(0) == std::pair<int, int>{3, 4});
  CHECK(r.tail().first_letter() == 3);
  CHECK(r.is_dominant());
  auto again = RectSequence::from_blocks({{3, 2}, {2, 1}, {1}});
  CHECK(again == r);
  CHECK_THROWS(RectSequence({2, 2}, {1, 1, 1}));
}

TEST_CASE("normalization straightens blocks and shifts") {
  // Block (0,2) straightens to -(1,1); block (1,1) already straight.
  auto n1 = normalize_index(std::vector<int>{1, 1}, std::vector<int>{0, 2}, std::vector<int>{2});
  REQUIRE(n1);
  CHECK(n1->sign == -1);
  CHECK(n1->gamma == Weight{1, 1});
  // (0,1) within one block has a repeat after adding rho.
  CHECK_FALSE(normalize_index(std::vector<int>{1, 0}, std::vector<int>{0, 1}, std::vector<int>{2}));
  auto n2 = normalize_index(std::vector<int>{3, -3}, std::vector<int>{0, 0}, std::vector<int>{1, 1});
  REQUIRE(n2);
  CHECK(n2->lambda == Weight{6, 0});
  CHECK(n2->gamma == Weight{3, 3});
}

TEST_CASE("Bott straightening") {
  auto a = bott_pi(std::vector<int>{1, 1});
  CHECK(a.sign == 1);
  CHECK(a.lambda == Weight{1, 1});
  CHECK(bott_pi(std::vector<int>{0, 1}).sign == 0);
  auto b = bott_pi(std::vector<int>{0, 2});
  CHECK(b.sign == -1);
  CHECK(b.lambda == Weight{1, 1});
}

TEST_CASE("box complement and duals") {
  CHECK(dual_weight(std::vector<int>{3, 1, 0}) == Weight{0, -1, -3});
  RectSequence r({2, 1}, {2, 1, 1});
  auto [lt, rt] = box_complement(std::vector<int>{3, 1, 0}, r, 3);
  CHECK(lt == Weight{3, 2, 0});
  CHECK(rt.eta() == Composition{1, 2});
  CHECK(rt.gamma() == Weight{2, 2, 1});
  CHECK_THROWS(box_complement(std::vector<int>{3, 1, 0}, r, 2));
}
