#include "qlr/verify/checks.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "qlr/catabolism.hpp"
#include "qlr/charge.hpp"
#include "qlr/crystal.hpp"
#include "qlr/cyclage.hpp"
#include "qlr/insertion.hpp"
#include "qlr/kpoly.hpp"

namespace qlr {

namespace {

template <class F>
void expect_lazy(Report& r, bool ok, F&& describe) {
  ++r.checks;
  if (!ok) r.fail(describe());
}

std::vector<Word> all_words(int len, int letters) {
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

std::vector<Word> increasing_words(int len, int letters) {
  std::vector<Word> out;
  Word w;
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(w.size()) == len) {
      out.push_back(w);
      return;
    }
    for (int a = from; a <= letters; ++a) {
      w.push_back(a);
      self(self, a);
      w.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

Word concat(std::span<const int> a, std::span<const int> b) {
  Word w(a.begin(), a.end());
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

std::string seq_to_string(const std::vector<Word>& v) {
  std::string s;
  for (const auto& w : v) s += (s.empty() ? "" : "|") + word_to_string(w);
  return s;
}

std::string shape_string(const Partition& p) { return to_string(p); }

template <class Fn>
Report timed(const std::string& name, const std::string& range, Fn&& body) {
  Report r;
  r.name = name;
  r.range = range;
  Stopwatch sw;
  body(r);
  r.elapsed_ms = sw.ms();
  return r;
}

}  // namespace

std::vector<std::vector<Word>> increasing_word_sequences(int num_words, int max_total, int letters) {
  std::vector<std::vector<Word>> by_len;
  for (int l = 0; l <= max_total; ++l) by_len.push_back(increasing_words(l, letters));
  std::vector<std::vector<Word>> out;
  std::vector<Word> cur;
  auto rec = [&](auto&& self, int left) -> void {
    if (static_cast<int>(cur.size()) == num_words) {
      out.push_back(cur);
      return;
    }
    for (int l = 0; l <= left; ++l)
      for (const auto& w : by_len[l]) {
        cur.push_back(w);
        self(self, left - l);
        cur.pop_back();
      }
  };
  rec(rec, max_total);
  return out;
}

Report check_charge_axioms(int max_len, int max_letter) {
  return timed("charge_axioms", "length<=" + std::to_string(max_len) + " letters<=" + std::to_string(max_letter),
               [&](Report& r) {
                 const auto perms = all_permutations(max_letter);
                 expect_lazy(r, charge(Word{}) == 0, [] { return std::string("charge of the empty word"); });
                 for (int len = 1; len <= max_len; ++len)
                   for (const auto& u : all_words(len, max_letter)) {
                     const int cu = charge(u);
                     for (const auto& w : perms) {
                       Word v = plactic_act(w, u);
                       expect_lazy(r, charge(v) == cu, [&] { return "plactic invariance " + word_to_string(u); });
                     }

                     Composition c = content(u);
                     const bool partition_content = is_partition(c);
                     // A word of partition content ending in all of its 1s.
                     if (partition_content) {
                       const int ones = c[0];
                       bool tail_ones = std::all_of(u.end() - ones, u.end(), [](int x) { return x == 1; });
                       if (tail_ones) {
                         Word v(u.begin(), u.end() - ones);
                         for (int& x : v) x -= 1;
                         expect_lazy(r, cu == charge(v), [&] { return "trailing ones " + word_to_string(u); });
                       }
                       if (u[0] > 1) {
                         Word rotated(u.begin() + 1, u.end());
                         rotated.push_back(u[0]);
                         expect_lazy(r, charge(rotated) == cu + 1,
                                     [&] { return "cyclage rotation " + word_to_string(u); });
                       }
                     }

                     for (std::size_t i = 0; i + 2 < u.size(); ++i) {
                       const int a = u[i], b = u[i + 1], c3 = u[i + 2];
                       std::vector<Word> moves;
                       if ((a <= c3 && c3 < b) || (b <= c3 && c3 < a)) {
                         moves.push_back(u);
                         std::swap(moves.back()[i], moves.back()[i + 1]);
                       }
                       if ((b < a && a <= c3) || (c3 < a && a <= b)) {
                         moves.push_back(u);
                         std::swap(moves.back()[i + 1], moves.back()[i + 2]);
                       }
                       for (const auto& v : moves) {
                         expect_lazy(r, charge(v) == cu, [&] { return "Knuth move " + word_to_string(u); });
                         expect_lazy(r, schensted_p(v) == schensted_p(u),
                                     [&] { return "Knuth move changes P " + word_to_string(u); });
                       }
                     }
                   }
               });
}

Report check_overlap_lemma(int max_total) {
  return timed("overlap_lemma", "total<=" + std::to_string(max_total), [&](Report& r) {
    for (int k = 2; k <= 3; ++k)
      for (const auto& v : increasing_word_sequences(k, max_total, 3)) {
        Word q = row_reading_word(column_rsk(v).q);
        for (int i = 1; i < k; ++i)
          expect_lazy(r, overlap(v[i], v[i - 1]) == count_r_pairs(q, i),
                      [&] { return "overlap " + seq_to_string(v) + " r=" + std::to_string(i); });
      }
  });
}

Report check_two_row_dual(int max_total) {
  return timed("two_row_dual", "total<=" + std::to_string(max_total), [&](Report& r) {
    const int letters = 3;
    // Pairs (a, b) of increasing words grouped by P(b a).
    std::map<Tableau, std::vector<std::pair<Word, Word>>> by_p;
    for (const auto& ab : increasing_word_sequences(2, max_total, letters))
      by_p[schensted_p(concat(ab[1], ab[0]))].push_back({ab[0], ab[1]});

    for (int k = 2; k <= 3; ++k)
      for (const auto& v : increasing_word_sequences(k, max_total, letters)) {
        const TableauPair pq = column_rsk(v);
        const Word qw = row_reading_word(pq.q);
        for (int rr = 1; rr < k; ++rr) {
          const Tableau target = schensted_p(concat(v[rr], v[rr - 1]));
          // String members reached by raising and lowering Q.
          std::vector<Tableau> string{pq.q};
          for (auto t = e_op(pq.q, rr); t; t = e_op(*t, rr)) string.push_back(*t);
          for (auto t = f_op(pq.q, rr); t; t = f_op(*t, rr)) string.push_back(*t);
          for (const auto& q2 : string) {
            auto v2 = column_rsk_inverse({pq.p, q2}, k);
            bool ok = true;
            for (int i = 0; i < k; ++i)
              if (i != rr - 1 && i != rr) ok = ok && v2[i] == v[i];
            ok = ok && schensted_p(concat(v2[rr], v2[rr - 1])) == target;
            expect_lazy(r, ok, [&] { return "string to words " + seq_to_string(v) + " r=" + std::to_string(rr); });
          }
          for (const auto& [a, b] : by_p.at(target)) {
            std::vector<Word> v2 = v;
            v2[rr - 1] = a;
            v2[rr] = b;
            const TableauPair pq2 = column_rsk(v2);
            bool ok = pq2.p == pq.p && same_r_string(qw, row_reading_word(pq2.q), rr) &&
                      pq2.q.shape() == pq.q.shape();
            expect_lazy(r, ok, [&] { return "words to string " + seq_to_string(v) + " r=" + std::to_string(rr); });
          }
        }
      }
  });
}

Report check_fitting(int max_total) {
  return timed("fitting", "total<=" + std::to_string(max_total), [&](Report& r) {
    for (int k = 1; k <= 3; ++k)
      for (const auto& u : increasing_word_sequences(k, max_total, 3)) {
        const Word q = row_reading_word(column_rsk(u).q);
        for (int size = 0; size <= 2; ++size)
          for (const auto& mu : partitions_of(size, k)) {
            Tableau t(mu.padded(k), u);
            const bool fits = is_column_strict(t);
            expect_lazy(r, fits == is_mu_lattice(q, mu.parts()),
                        [&] { return "fitting " + seq_to_string(u) + " mu=" + shape_string(mu); });
          }
      }
  });
}

Report check_evacuation_theorem(int max_total) {
  return timed("evacuation_theorem", "total<=" + std::to_string(max_total), [&](Report& r) {
    for (int letters = 1; letters <= 3; ++letters)
      for (int k = 1; k <= 3; ++k)
        for (const auto& u : increasing_word_sequences(k, max_total, letters)) {
          std::vector<Word> v(k);
          for (int i = 0; i < k; ++i) {
            const Word& src = u[k - 1 - i];
            for (auto it = src.rbegin(); it != src.rend(); ++it) v[i].push_back(letters + 1 - *it);
          }
          const TableauPair a = column_rsk(u);
          const TableauPair b = column_rsk(v);
          const bool ok = b.p == evacuation(a.p, letters) && b.q == evacuation(a.q, k);
          expect_lazy(r, ok, [&] { return "evacuation " + seq_to_string(u) + " N=" + std::to_string(letters); });
        }
  });
}

Report check_cyclage_posets(int max_size) {
  return timed("cyclage_posets", "|alpha|<=" + std::to_string(max_size), [&](Report& r) {
    std::vector<Composition> contents;
    for (int n = 1; n <= max_size; ++n)
      for (auto& c : compositions_of(n)) contents.push_back(c);
    // A few contents with an interior zero.
    for (int n = 1; n <= std::min(max_size, 4); ++n)
      for (auto c : compositions_of(n))
        if (c.size() >= 2) {
          c.insert(c.begin() + 1, 0);
          contents.push_back(c);
        }

    for (const auto& alpha : contents) {
      const CyclagePoset poset = cyclage_poset(alpha);
      const std::string name = "alpha=" + to_string(alpha);
      std::vector<int> out_degree(poset.vertices.size(), 0);
      for (auto [u, l] : poset.edges) {
        ++out_degree[u];
        expect_lazy(r, poset.grade[u] == poset.grade[l] + 1, [&] { return "grade drop " + name; });
      }
      int sinks = 0;
      for (std::size_t v = 0; v < poset.vertices.size(); ++v) {
        if (out_degree[v] != 0) continue;
        ++sinks;
        expect_lazy(r, poset.vertices[v].num_rows() == 1 && poset.grade[v] == 0,
                    [&] { return "sink is not the one-row tableau " + name; });
      }
      expect_lazy(r, sinks == 1, [&] { return "sink count " + std::to_string(sinks) + " " + name; });

      if (is_partition(alpha)) {
        for (const auto& t : poset.vertices)
          for (const auto& e : cyclage_covers(t)) {
            auto back = cocyclage(e.lower, e.end);
            expect_lazy(r, back && back->upper == e.upper && back->start == e.start && back->letter == e.letter,
                        [&] { return "cocyclage round trip " + name; });
          }
      }
    }
  });
}

Report check_cyc_image(int max_n) {
  return timed("cyc_image", "n<=" + std::to_string(max_n), [&](Report& r) {
    for (int n = 1; n <= max_n; ++n) {
      const auto standard = standard_tableaux(n);
      std::map<Tableau, Partition> types;
      for (const auto& s : standard) types[s] = cattype(s);
      for (const auto& mu : partitions_of(n)) {
        std::set<Tableau> expected;
        for (const auto& [s, ty] : types)
          if (dominance_geq(ty.parts(), mu.parts())) expected.insert(s);
        std::set<Tableau> image;
        std::size_t sources = 0;
        for (const auto& t : all_tableaux_of_content(mu.parts())) {
          ++sources;
          Tableau s = theta_mu(mu, t);
          expect_lazy(r, s.shape() == t.shape() && cyclage_grade(s) == cyclage_grade(t),
                      [&] { return "theta_mu shape or grade " + to_string(t); });
          image.insert(s);
        }
        expect_lazy(r, image.size() == sources, [&] { return "theta_mu not injective mu=" + shape_string(mu); });
        expect_lazy(r, image == expected, [&] { return "image mismatch mu=" + shape_string(mu); });
      }
    }
  });
}

Report check_row_col_cat(int max_n) {
  return timed("row_col_cat", "n<=" + std::to_string(max_n), [&](Report& r) {
    for (int n = 1; n <= max_n; ++n) {
      const auto standard = standard_tableaux(n);
      const auto mus = partitions_of(n);
      for (const auto& s : standard) {
        const Partition ty = cattype(s);
        const Tableau st = transpose(s);
        expect_lazy(r, charge(s) == cocharge(st), [&] { return "charge vs transpose cocharge " + to_string(s); });
        const auto edges = cyclage_covers(s);
        for (const auto& mu : mus) {
          const bool row = is_mu_catabolizable(s, mu);
          const bool col = is_mu_column_catabolizable(s, mu);
          expect_lazy(r, row == col, [&] { return "row vs column " + to_string(s) + " mu=" + shape_string(mu); });
          expect_lazy(r, row == dominance_geq(ty.parts(), mu.parts()),
                      [&] { return "cattype " + to_string(s) + " mu=" + shape_string(mu); });

          Composition ones(n, 1);
          RectSequence columns(mu.parts(), ones);
          expect_lazy(r, is_r_catabolizable(s, columns) == is_mu_column_catabolizable(st, mu),
                      [&] { return "columns vs transpose " + to_string(s) + " mu=" + shape_string(mu); });

          for (const auto& e : edges) {
            if (row_restricted(e, 1) && row)
              expect_lazy(r, is_mu_catabolizable(e.lower, mu),
                          [&] { return "row cat lost along a cover " + to_string(s) + " mu=" + shape_string(mu); });
            if (col_restricted(e, mu[0]) && is_mu_column_catabolizable(e.lower, mu))
              expect_lazy(r, col,
                          [&] { return "column cat lost along a cover " + to_string(s) + " mu=" + shape_string(mu); });
          }
        }
      }
    }
  });
}

Report check_standard_cocharge(int max_n) {
  return timed("standard_cocharge", "n<=" + std::to_string(max_n), [&](Report& r) {
    for (int n = 1; n <= max_n; ++n)
      for (const auto& lambda : partitions_of(n))
        for (const auto& mu : partitions_of(n)) {
          expect_lazy(r, cocharge_kostka(lambda, mu.parts()) == lascoux_standard_sum(lambda, mu),
                      [&] { return "standard sum " + shape_string(lambda) + " " + shape_string(mu); });
          if (lambda.length() > mu.length()) continue;
          KIndex k{lambda.padded(mu.length()), mu.parts(), Composition(mu.length(), 1)};
          expect_lazy(r, charge_kostka(lambda, mu.parts()) == k_via_morris(k),
                      [&] { return "charge Kostka " + shape_string(lambda) + " " + shape_string(mu); });
        }
  });
}

Report check_theta_lemmas(int max_n) {
  return timed("theta_lemmas", "n<=" + std::to_string(max_n), [&](Report& r) {
    for (int n = 2; n <= max_n; ++n)
      for (const auto& mu : partitions_of(n)) {
        const int m = mu[0];
        if (mu.length() < 2) continue;
        Composition hat{0};
        for (int i = 1; i < mu.length(); ++i) hat.push_back(mu[i]);
        Composition hat_target(m, 0);
        hat_target.resize(n, 1);
        Word z(m);
        for (int k = 0; k < m; ++k) z[k] = k + 1;

        for (const auto& t : all_tableaux_of_content(mu.parts())) {
          if (static_cast<int>(t.rows[0].size()) != m) continue;
          const Tableau s = theta_mu(mu, t);
          expect_lazy(r, s.rows[0] == z, [&] { return "long first row " + to_string(t); });
          const Tableau below(rows_from(t, 1).rows);
          const Tableau expected = theta_embed(hat, hat_target, below);
          expect_lazy(r, Tableau(rows_from(s, 1).rows) == expected,
                      [&] { return "long first row remainder " + to_string(t); });
        }

        if (n > 5) continue;
        const auto xs = all_tableaux_of_content(hat_target);
        for (const auto& xp : all_tableaux_of_content(hat)) {
          const Tableau sp = schensted_p(concat(row_reading_word(xp), Word(m, 1)));
          const Tableau s_theta = theta_mu(mu, sp);
          const Tableau x_theta = theta_embed(hat, hat_target, xp);
          for (const auto& x : xs) {
            const Tableau s = schensted_p(concat(row_reading_word(x), z));
            expect_lazy(r, (x == x_theta) == (s_theta == s), [&] { return "north hat " + to_string(xp); });
          }
        }
      }
  });
}

namespace {

// Random chain from alpha to beta built from rearrangements and f_1 moves.
std::vector<Composition> random_chain(const Composition& alpha, const Composition& beta, std::mt19937& rng) {
  std::vector<Composition> chain{alpha};
  auto push = [&](const Composition& c) {
    if (chain.back() != c) chain.push_back(c);
  };
  auto shuffled_rest = [&](Composition g, std::size_t keep) {
    std::shuffle(g.begin() + keep, g.end(), rng);
    return g;
  };
  const Composition nu = dominant_sort(beta).first;
  Composition cur = alpha;
  for (;;) {
    Composition mu = dominant_sort(cur).first;
    if (mu == nu) break;
    std::vector<std::pair<std::size_t, std::size_t>> moves;
    for (std::size_t i = 0; i < mu.size(); ++i)
      for (std::size_t j = i + 1; j < mu.size(); ++j) {
        if (mu[i] < mu[j] + 2) continue;
        Composition next = mu;
        --next[i];
        ++next[j];
        if (dominance_geq(dominant_sort(next).first, nu)) moves.push_back({i, j});
      }
    auto [i, j] = moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng)];
    Composition g{mu[i], mu[j]};
    for (std::size_t k = 0; k < mu.size(); ++k)
      if (k != i && k != j) g.push_back(mu[k]);
    g = shuffled_rest(g, 2);
    push(g);
    g[0] -= 1;
    g[1] += 1;
    push(g);
    cur = shuffled_rest(g, 0);
    push(cur);
  }
  push(beta);
  return chain;
}

}  // namespace

Report check_theta_embeddings(int max_n, unsigned seed) {
  return timed("theta_embeddings", "n<=" + std::to_string(max_n), [&](Report& r) {
    std::mt19937 rng(seed);
    for (int n = 1; n <= max_n; ++n) {
      const auto comps = compositions_of(n);
      for (const auto& a0 : comps)
        for (const auto& b0 : comps) {
          if (!composition_dominates(a0, b0)) continue;
          const std::size_t len = std::max(a0.size(), b0.size());
          Composition a = a0, b = b0;
          a.resize(len, 0);
          b.resize(len, 0);
          const std::string name = to_string(a) + "->" + to_string(b);
          const auto canonical = canonical_chain(a, b);
          std::vector<std::vector<Composition>> others;
          for (int k = 0; k < 2; ++k) others.push_back(random_chain(a, b, rng));

          const auto sources = all_tableaux_of_content(a);
          std::map<Tableau, Tableau> image;
          for (const auto& t : sources) {
            const Tableau s = theta_along_chain(t, canonical);
            image[t] = s;
            expect_lazy(r, s.shape() == t.shape() && cyclage_grade(s) == cyclage_grade(t),
                        [&] { return "shape or grade " + name + " " + to_string(t); });
            for (const auto& c : others)
              expect_lazy(r, theta_along_chain(t, c) == s, [&] { return "chain dependence " + name; });
          }
          std::set<Tableau> distinct;
          for (const auto& [t, s] : image) distinct.insert(s);
          expect_lazy(r, distinct.size() == image.size(), [&] { return "not injective " + name; });

          for (const auto& t : sources)
            for (const auto& e : cyclage_covers(t)) {
              const auto targets = cyclage_covers(image[t]);
              const Tableau& low = image[e.lower];
              bool found = std::any_of(targets.begin(), targets.end(), [&](const auto& f) { return f.lower == low; });
              expect_lazy(r, found, [&] { return "edge not preserved " + name; });
            }
        }
    }
  });
}

Report check_stembridge(int max_n) {
  return timed("stembridge", "n<=" + std::to_string(max_n), [&](Report& r) {
    MorrisEngine engine;
    auto m_poly = [&](const Partition& lambda, int n, int m, int d) {
      const int rank = n - m;
      if (lambda.length() > rank) return QPoly{};
      Composition eta(m, 1);
      eta.insert(eta.end(), d, 2);
      eta.resize(eta.size() + (n - 2 * m - 2 * d), 1);
      Weight gamma(m, 2);
      gamma.resize(rank, 1);
      return engine.compute({lambda.padded(rank), gamma, eta});
    };
    for (int n = 1; n <= max_n; ++n)
      for (const auto& lambda : partitions_of(n)) {
        for (int m = 0; 2 * m <= n; ++m) {
          if (lambda.length() <= n - m) {
            Weight mu(m, 2);
            mu.resize(n - m, 1);
            expect_lazy(r, m_poly(lambda, n, m, 0) == charge_kostka(lambda, mu),
                        [&] { return "M^0 " + shape_string(lambda) + " m=" + std::to_string(m); });
          }
          for (int d = 0; 2 * m + 2 * d + 2 <= n; ++d) {
            QPoly lhs = m_poly(lambda, n, m, d + 1);
            QPoly rhs = m_poly(lambda, n, m, d) - m_poly(lambda, n, m + 1, d).shifted(n - 2 * m - d - 1);
            expect_lazy(r, lhs == rhs, [&] {
              return "recurrence " + shape_string(lambda) + " m=" + std::to_string(m) + " d=" + std::to_string(d);
            });
          }
        }
      }
  });
}

Report check_column_kostka(int max_n) {
  return timed("column_kostka", "n<=" + std::to_string(max_n), [&](Report& r) {
    for (int n = 1; n <= max_n; ++n)
      for (const auto& lambda : partitions_of(n))
        for (const auto& eta : compositions_of(n)) {
          KIndex k = column_index(lambda.padded(n), eta);
          Composition sorted = dominant_sort(eta).first;
          QPoly expected = cocharge_kostka(conjugate(lambda), sorted);
          expect_lazy(r, k_via_morris(k) == expected,
                      [&] { return "columns " + shape_string(lambda) + " eta=" + to_string(eta); });
          if (is_partition(eta))
            expect_lazy(r, k_via_charge(k).poly == expected,
                        [&] { return "columns charge " + shape_string(lambda) + " eta=" + to_string(eta); });
        }
  });
}

Report check_hook_catabolizable(int max_n, int max_size) {
  return timed("hook_catabolizable", "n<=" + std::to_string(max_n) + " size<=" + std::to_string(max_size),
               [&](Report& r) {
                 for (int n = 1; n <= max_n; ++n)
                   for (const auto& eta_p : partitions_of(n)) {
                     if (eta_p.length() > 1 && eta_p[1] > 1) continue;  // hooks only
                     const Composition& eta = eta_p.parts();
                     for (int size = 0; size <= max_size; ++size)
                       for (const auto& g : partitions_of(size, n)) {
                         RectSequence rs(eta, g.padded(n));
                         if (!rs.blocks_are_partitions()) continue;
                         const Tableau y1 = yamanouchi_block(rs, 0);
                         const int hi = rs.interval(0).second;
                         for (const auto& lambda : partitions_of(size, n))
                           for (const auto& s : enumerate_cst(lambda, rs.gamma())) {
                             bool restricted = restrict_letters(s, 1, hi) == y1;
                             expect_lazy(r, is_r_catabolizable(s, rs) == restricted,
                                         [&] { return "hook " + to_string(eta) + " " + to_string(s); });
                           }
                       }
                   }
               });
}

}  // namespace qlr
