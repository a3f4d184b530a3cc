#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include "fixtures.hpp"
#include "qlr/verify/cache.hpp"
#include "qlr/verify/json_io.hpp"
#include "qlr/verify/report.hpp"
#include "qlr/verify/scans.hpp"

using namespace qlr;

namespace {

std::string temp_path(const std::string& stem) {
  auto p = std::filesystem::temp_directory_path() / (stem + "-" + std::to_string(std::rand()) + ".jsonl");
  std::filesystem::remove(p);
  return p.string();
}

}  // namespace

TEST_CASE("JSON round trips") {
  const QPoly p = QPoly::monomial(-2, 3) + QPoly(-1) + QPoly::monomial(5);
  CHECK(qpoly_from_json(to_json(p)) == p);
  CHECK(qpoly_from_json(to_json(QPoly())) == QPoly());

  const Tableau t({{1, 1, 2}, {3}});
  CHECK(tableau_from_json(to_json(t)) == t);

  CHECK(rects_from_json(to_json(fixtures::kCtRects)) == fixtures::kCtRects);

  const KIndex k{fixtures::kCtLambda, fixtures::kCtRects.gamma(), fixtures::kCtRects.eta()};
  CHECK(kindex_from_json(to_json(k)) == k);
  // Rectangle form.
  Json j = {{"lambda", fixtures::kCtLambda}, {"rects", {{3, 2}, {2, 1}, {1}}}};
  CHECK(kindex_from_json(j) == k);
}

TEST_CASE("result cache") {
  const std::string path = temp_path("qlr-cache");
  const KIndex k{fixtures::kCtLambda, fixtures::kCtRects.gamma(), fixtures::kCtRects.eta()};
  const QPoly v = QPoly::monomial(3) + QPoly::monomial(4, 3);
  {
    ResultCache cache(path);
    CHECK_FALSE(cache.get("morris", k));
    cache.put("morris", k, v);
    CHECK(cache.get("morris", k) == v);
    CHECK_FALSE(cache.get("kostant", k));
  }
  {
    ResultCache again(path);
    CHECK(again.size() == 1);
    CHECK(again.get("morris", k) == v);
    // Shifting every entry by a constant hits the same key.
    KIndex shifted = k;
    for (int& x : shifted.lambda) x += 2;
    for (int& x : shifted.gamma) x += 2;
    CHECK(again.get("morris", shifted) == v);
  }
  std::filesystem::remove(path);
}

TEST_CASE("a corrupted cache entry is caught by the cross-check") {
  const std::string path = temp_path("qlr-bad");
  const KIndex k{fixtures::kCtLambda, fixtures::kCtRects.gamma(), fixtures::kCtRects.eta()};
  ResultCache cache(path);
  cache.put("series", k, QPoly::monomial(3));
  ScanOptions opts;
  opts.cache = &cache;
  opts.threads = 1;
  Report bad = crosscheck_indices({k}, opts);
  CHECK_FALSE(bad.pass());
  ScanOptions clean;
  clean.threads = 1;
  CHECK(crosscheck_indices({k}, clean).pass());
  std::filesystem::remove(path);
}

TEST_CASE("report bookkeeping") {
  Report r;
  r.name = "demo";
  r.expect(true, "fine");
  r.expect(false, "broken");
  CHECK(r.checks == 2);
  CHECK(r.failure_count == 1);
  CHECK_FALSE(r.pass());
  Json j = r.to_json();
  CHECK(j["name"] == "demo");
  CHECK(j["checks"] == 2);
  Report other;
  other.expect(true, "ok");
  r.merge(other);
  CHECK(r.checks == 3);
}

TEST_CASE("index families") {
  auto idx = dominant_indices(2, 3);
  CHECK_FALSE(idx.empty());
  for (const auto& k : idx) {
    CHECK(k.lambda.size() == 2);
    CHECK(is_partition(k.gamma));
    CHECK(is_partition(k.lambda));
  }
  ScanOptions opts;
  opts.sample_seed = 11;
  opts.samples = 20;
  auto a = sampled_indices(opts);
  auto b = sampled_indices(opts);
  CHECK(a == b);
  CHECK(a.size() <= 20);
  ScanOptions none;
  CHECK(sampled_indices(none).empty());
}

TEST_CASE("cross-check on a small range") {
  ScanOptions opts;
  opts.max_n = 3;
  opts.max_size = 5;
  opts.threads = 2;
  CHECK(crosscheck(opts).pass());
  CHECK(scan_positivity(opts).pass());
  CHECK(scan_monotonicity_refine(opts).pass());
  CHECK(scan_monotonicity_rect(opts).pass());
}
