#include <doctest.h>

#include <map>

#include "fixtures.hpp"
#include "qlr/crystal.hpp"
#include "qlr/insertion.hpp"

using namespace qlr;

namespace {

std::vector<Word> words_of(int len, int letters) {
  std::vector<Word> out{{}};
  for (int k = 0; k < len; ++k) {
    std::vector<Word> next;
    for (const auto& w : out)
      for (int a = 1; a <= letters; ++a) {
        next.push_back(w);
        next.back().push_back(a);
      }
    out = std::move(next);
  }
  return out;
}

std::vector<Word> words_upto(int max_len, int letters) {
  std::vector<Word> out;
  for (int len = 0; len <= max_len; ++len)
    for (auto& w : words_of(len, letters)) out.push_back(w);
  return out;
}

// Direct check of the lattice condition on every final subword.
bool lattice_brute(const Word& w, const std::vector<int>& mu, int letters) {
  std::vector<int> c(letters + 1, 0);
  for (std::size_t i = 0; i < mu.size(); ++i) c[i] = mu[i];
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    ++c[*it - 1];
    for (int k = 0; k + 1 <= letters; ++k)
      if (c[k] < c[k + 1]) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("crystal operators on the reference word") {
  const Word u = parse_word(fixtures::kCrystalWord);
  REQUIRE(u.size() == 25);
  auto pairing = r_pairing(u, 2);
  // Unpaired letters: 2 at positions 2 and 7, 3 at 8, 12, 13, 15 and 25 (1-based).
  CHECK(pairing.unpaired == std::vector<std::size_t>{1, 6, 7, 11, 12, 14, 24});
  CHECK(pairing.p == 2);
  CHECK(pairing.q == 5);
  CHECK(word_to_string(s_op(u, 2)) == fixtures::kCrystalS2);
  CHECK(word_to_string(*e_op(u, 2)) == fixtures::kCrystalE2);
  CHECK(word_to_string(*f_op(u, 2)) == fixtures::kCrystalF2);
}

TEST_CASE("undefined raising and lowering return nothing") {
  CHECK_FALSE(e_op(Word{2, 1}, 1).has_value());
  CHECK_FALSE(f_op(Word{2, 1}, 1).has_value());
  CHECK_FALSE(e_op(Word{1, 1}, 1).has_value());
  CHECK(e_op(Word{1, 1, 2}, 1) == Word{1, 1, 1});
  CHECK(f_op(Word{1}, 1) == Word{2});
  CHECK(e_op(Word{2}, 1) == Word{1});
}

TEST_CASE("e and f are partial inverses and preserve pairs") {
  for (const auto& u : words_upto(6, 3))
    for (int r = 1; r <= 2; ++r) {
      const int pairs = count_r_pairs(u, r);
      CHECK(count_r_pairs(s_op(u, r), r) == pairs);
      CHECK(s_op(s_op(u, r), r) == u);
      if (auto e = e_op(u, r)) {
        CHECK(f_op(*e, r) == u);
        CHECK(count_r_pairs(*e, r) == pairs);
        CHECK(same_r_string(u, *e, r));
      }
      if (auto f = f_op(u, r)) {
        CHECK(e_op(*f, r) == u);
        CHECK(count_r_pairs(*f, r) == pairs);
      }
    }
}

TEST_CASE("crystal operators commute with Knuth classes") {
  for (int len = 1; len <= 6; ++len) {
    std::map<Tableau, std::vector<Word>> classes;
    for (const auto& w : words_of(len, 3)) classes[schensted_p(w)].push_back(w);
    for (const auto& [p, members] : classes)
      for (int r = 1; r <= 2; ++r) {
        auto e0 = e_op(members.front(), r);
        Tableau s0 = schensted_p(s_op(members.front(), r));
        for (const auto& w : members) {
          auto e = e_op(w, r);
          CHECK(e.has_value() == e0.has_value());
          if (e && e0) CHECK(schensted_p(*e) == schensted_p(*e0));
          CHECK(schensted_p(s_op(w, r)) == s0);
        }
      }
  }
}

TEST_CASE("plactic action respects the braid relations") {
  // s_1 s_2 s_1 and s_2 s_1 s_2 act identically.
  for (const auto& u : words_upto(6, 3)) {
    Word a = s_op(s_op(s_op(u, 1), 2), 1);
    Word b = s_op(s_op(s_op(u, 2), 1), 2);
    CHECK(a == b);
  }
  // Another factorization gives the same action as the built-in reduced word.
  for (const auto& u : words_of(5, 4)) {
    Word v = u;
    for (int r : {3, 1, 2}) v = s_op(v, r);  // w = s_2 s_1 s_3 applied rightmost first
    CHECK(v == plactic_act(Permutation::simple(4, 2) * Permutation::simple(4, 1) * Permutation::simple(4, 3), u));
  }
}

TEST_CASE("plactic action permutes content") {
  for (const auto& u : words_of(5, 3))
    for (const auto& w : all_permutations(3)) {
      Composition c = content(u);
      c.resize(3, 0);
      Composition d = content(plactic_act(w, u));
      d.resize(3, 0);
      CHECK(d == w.act(c));
    }
}

TEST_CASE("lattice property") {
  CHECK(is_mu_lattice(Word{2, 1, 1}, {}));
  CHECK_FALSE(is_mu_lattice(Word{1, 2}, {}));
  CHECK(is_mu_lattice(Word{1, 2}, std::vector<int>{1}));
  for (const auto& u : words_upto(6, 3)) {
    CHECK(is_mu_lattice(u, {}) == lattice_brute(u, {}, 3));
    CHECK(is_mu_lattice(u, std::vector<int>{1}) == lattice_brute(u, {1}, 3));
    CHECK(is_mu_lattice(u, std::vector<int>{2, 1}) == lattice_brute(u, {2, 1}, 3));
  }
}

TEST_CASE("lattice property is a Knuth class invariant") {
  for (int len = 1; len <= 6; ++len) {
    std::map<Tableau, std::vector<Word>> classes;
    for (const auto& w : words_of(len, 3)) classes[schensted_p(w)].push_back(w);
    for (const auto& [p, members] : classes) {
      const bool first = is_mu_lattice(members.front(), {});
      for (const auto& w : members) CHECK(is_mu_lattice(w, {}) == first);
    }
  }
}

TEST_CASE("lattice involution") {
  for (const auto& u : words_upto(6, 3)) {
    Word v = lattice_involution(u, {});
    if (is_mu_lattice(u, {})) {
      CHECK(v == u);
      continue;
    }
    auto bad = lattice_violation(u, {});
    REQUIRE(bad);
    const int r = bad->letter - 1;
    CHECK(lattice_involution(v, {}) == u);
    auto bad2 = lattice_violation(v, {});
    REQUIRE(bad2);
    CHECK(bad2->letter == bad->letter);
    CHECK(same_r_string(u, v, r));
  }
}
