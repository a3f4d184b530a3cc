// Prints one PASS/FAIL line per acceptance criterion and exits nonzero if
// any criterion fails.
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "fixtures.hpp"
#include "qlr/catabolism.hpp"
#include "qlr/charge.hpp"
#include "qlr/crystal.hpp"
#include "qlr/cyclage.hpp"
#include "qlr/involution.hpp"
#include "qlr/kpoly.hpp"
#include "qlr/verify/checks.hpp"
#include "qlr/verify/scans.hpp"

using namespace qlr;

namespace {

// Wall-clock budgets in milliseconds.
constexpr double kBudgetWorkedValues = 1000;
constexpr double kBudgetCatFixture = 1000;
constexpr double kBudgetCrossEngine = 10 * 60 * 1000;

// Index family shared by criteria 3 to 5.
constexpr int kFamilyMaxN = 4;
constexpr int kFamilyMaxSize = 8;

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& title, double budget_ms, const std::function<Outcome()>& body) {
  Stopwatch sw;
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double ms = sw.ms();
  if (budget_ms > 0 && ms > budget_ms) {
    o.pass = false;
    o.detail += " over budget " + std::to_string(static_cast<long>(budget_ms)) + " ms";
  }
  if (!o.pass) ++failures;
  std::printf("AC%-2d %s  %s  [%.0f ms]  %s\n", id, o.pass ? "PASS" : "FAIL", title.c_str(), ms, o.detail.c_str());
  std::fflush(stdout);
}

Outcome from_reports(std::initializer_list<Report> reports) {
  Outcome o;
  for (const auto& r : reports) {
    o.pass = o.pass && r.pass();
    o.detail += r.name + ":" + std::to_string(r.checks) + "/" + std::to_string(r.failure_count) + " ";
    if (!r.failures.empty()) o.detail += "first failure: " + r.failures.front() + " ";
    for (const auto& n : r.notes) o.detail += "(" + n + ") ";
  }
  return o;
}

Outcome worked_values() {
  struct Case {
    KIndex k;
    QPoly expected;
  };
  std::vector<Case> cases{
      {{{1, 1}, {0, 2}, {1, 1}}, QPoly::monomial(1) - QPoly(1)},
      {{{1, 0}, {0, 1}, {1, 1}}, QPoly::monomial(1)},
      {{{2, 1, 0}, {0, 2, 1}, {1, 1, 1}}, QPoly::monomial(3) + QPoly::monomial(2) - QPoly::monomial(1)},
  };
  for (int k = 0; k <= 5; ++k) cases.push_back({{{k, -k}, {0, 0}, {1, 1}}, QPoly::monomial(k)});
  Outcome o;
  for (const auto& c : cases) {
    const bool ok = k_via_kostant(c.k) == c.expected && k_via_morris(c.k) == c.expected &&
                    k_via_series(c.k) == c.expected;
    if (!ok) {
      o.pass = false;
      o.detail += "mismatch at " + to_string(c.k) + " ";
    }
  }
  o.detail += std::to_string(cases.size()) + " indices";
  return o;
}

Outcome cat_fixture() {
  const Partition lambda(fixtures::kCtLambda);
  const auto ct = enumerate_ct(lambda, fixtures::kCtRects);
  Outcome o;
  std::set<Tableau> got(ct.begin(), ct.end());
  std::set<Tableau> want(fixtures::kCtTableaux.begin(), fixtures::kCtTableaux.end());
  if (got != want || ct.size() != 4) {
    o.pass = false;
    o.detail += "CT set differs (" + std::to_string(ct.size()) + " tableaux) ";
  }
  for (std::size_t i = 0; i < fixtures::kCtTableaux.size(); ++i)
    if (charge(fixtures::kCtTableaux[i]) != fixtures::kCtCharges[i]) {
      o.pass = false;
      o.detail += "charge of tableau " + std::to_string(i + 1) + " ";
    }
  const KIndex k{fixtures::kCtLambda, fixtures::kCtRects.gamma(), fixtures::kCtRects.eta()};
  const QPoly expected = QPoly::monomial(3) + QPoly::monomial(4, 3);
  const QPoly a = k_via_kostant(k), b = k_via_morris(k), c = k_via_series(k), d = k_via_charge(k).poly;
  if (a != expected || b != expected || c != expected || d != expected) {
    o.pass = false;
    o.detail += "engines " + to_string(a) + " | " + to_string(b) + " | " + to_string(c) + " | " + to_string(d);
  } else {
    o.detail += "all engines " + to_string(expected);
  }
  return o;
}

struct FamilyStats {
  Report engines;
  Report at_one;
};

FamilyStats run_family() {
  FamilyStats s;
  s.engines.name = "engines";
  s.at_one.name = "q=1";
  MorrisEngine engine;
  std::int64_t proven = 0;
  const auto indices = dominant_indices_upto(kFamilyMaxN, kFamilyMaxSize);
  for (const auto& k : indices) {
    const QPoly b = engine.compute(k);
    s.engines.expect(k_via_kostant(k) == b, "kostant at " + to_string(k));
    s.engines.expect(k_via_series(k) == b, "series at " + to_string(k));
    if (charge_status(k.gamma, k.eta) == Status::Proven) {
      ++proven;
      s.engines.expect(k_via_charge(k).poly == b, "charge at " + to_string(k));
    }
    s.at_one.expect(b.at_one() == k_at_one(k), "q=1 at " + to_string(k));
  }
  s.engines.notes.push_back("indices=" + std::to_string(indices.size()) + " proven=" + std::to_string(proven));
  s.at_one.notes.push_back("indices=" + std::to_string(indices.size()));
  return s;
}

Outcome crystal_fixture() {
  const Word u = parse_word(fixtures::kCrystalWord);
  Outcome o;
  auto e = e_op(u, 2);
  auto f = f_op(u, 2);
  if (word_to_string(s_op(u, 2)) != fixtures::kCrystalS2) o = {false, "s_2 differs "};
  if (!e || word_to_string(*e) != fixtures::kCrystalE2) o = {false, o.detail + "e_2 differs "};
  if (!f || word_to_string(*f) != fixtures::kCrystalF2) o = {false, o.detail + "f_2 differs "};
  return o;
}

Outcome triple_fixture() {
  fixtures::TripleFixture fx;
  Outcome o;
  auto note = [&](bool ok, const std::string& what) {
    if (!ok) {
      o.pass = false;
      o.detail += what + " ";
    }
  };
  const SignedTriple x{fx.w, fx.t, fx.u};
  note(xi_of(fx.w, fx.map.lambda()) == fx.xi, "xi");
  const auto words = fx.map.u_words(x);
  for (std::size_t i = 0; i < words.size(); ++i) note(word_to_string(words[i]) == fx.u_words[i], "u" + std::to_string(i + 1));
  const PhiImage y = fx.map.phi(x);
  note(y.p == fx.p && y.q == fx.q, "P,Q");
  note(fx.map.phi_inverse(y) == x, "Phi inverse");
  const ThetaPrimeResult z = theta_prime(y);
  note(!z.fixed && z.r == 2 && z.image.w == fx.w_prime && z.image.p == fx.p && z.image.q == fx.q_prime, "theta'");
  const auto v2 = column_rsk_inverse({z.image.p, z.image.q}, 8);
  note(word_to_string(v2[1]) == fx.v2_prime && word_to_string(v2[2]) == fx.v3_prime, "v'");
  const auto v = fx.map.v_words(x);
  const auto slides = two_row_slides(max_overlap(v[1], v[2]), static_cast<int>(v2[1].size()));
  note(slides == fx.slides, "two-row states");
  // Charge of P against charge of T plus |alpha(w)| - |R_1|.
  const int alpha = fx.xi[0] + fx.xi[1];
  const int r1 = fx.map.rects().gamma()[0] + fx.map.rects().gamma()[1];
  note(charge(y.p) == charge(fx.t) + alpha - r1, "charge of P");
  if (o.pass) o.detail = "Phi, theta', slides and charge all match";
  return o;
}

Outcome cyclage_fixture() {
  Outcome o;
  const auto edges = cyclage_covers(fixtures::kCyclageUpper);
  bool found = false;
  for (const auto& e : edges)
    if (e.start == Cell{1, 2})
      found = e.letter == 2 && e.middle == fixtures::kCyclageMiddle && e.lower == fixtures::kCyclageLower &&
              row_restricted(e, 1);
  if (!found) o = {false, "cyclage example edge not reproduced "};
  if (cattype(fixtures::kCattypeTableau) != Partition{4, 2, 2, 1}) o = {false, o.detail + "cattype "};
  return o;
}

}  // namespace

int main() {
  criterion(1, "worked values, engines A B C", kBudgetWorkedValues, worked_values);
  criterion(2, "catabolizable fixture and four engines", kBudgetCatFixture, cat_fixture);

  FamilyStats family;
  criterion(3, "A = B = C (and D on proven cases), n<=4 |gamma|<=8", kBudgetCrossEngine, [&] {
    family = run_family();
    return from_reports({family.engines});
  });
  criterion(4, "q=1 value equals the LR product, same family", 0, [&] { return from_reports({family.at_one}); });
  criterion(5, "weight duality, box complement, reordering", 0, [&] {
    ScanOptions opts;
    opts.max_n = kFamilyMaxN;
    opts.max_size = kFamilyMaxSize;
    opts.threads = 1;
    return from_reports({check_dualities(opts)});
  });
  criterion(6, "charge axioms, length<=6 letters<=4", 0, [&] {
    Outcome o = from_reports({check_charge_axioms(6, 4)});
    const int c = charge(parse_word("4323411255"));
    if (c != 8) o = {false, o.detail + "worked example charge " + std::to_string(c)};
    return o;
  });
  criterion(7, "crystal and RSK lemmas, total length<=6", 0, [&] {
    Outcome o = from_reports({check_overlap_lemma(6), check_two_row_dual(6), check_fitting(6),
                              check_evacuation_theorem(6)});
    Outcome c = crystal_fixture();
    if (!c.pass) o = {false, o.detail + c.detail};
    return o;
  });
  criterion(8, "signed triple fixture", 0, triple_fixture);
  criterion(9, "involution harness, n<=5 |gamma|<=6", 0, [&] { return from_reports({check_involutions(5, 6, 1)}); });
  criterion(10, "cattype, cyclage and embedding theorems, n<=6", 0, [&] {
    Outcome o = from_reports({check_cyc_image(6), check_row_col_cat(6), check_standard_cocharge(6),
                              check_cyclage_posets(6)});
    Outcome c = cyclage_fixture();
    if (!c.pass) o = {false, o.detail + c.detail};
    return o;
  });
  criterion(11, "two-column recurrence, n<=6", 0, [&] { return from_reports({check_stembridge(6)}); });
  return failures == 0 ? 0 : 1;
}
