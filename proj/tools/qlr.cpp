#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>

#include "qlr/cyclage.hpp"
#include "qlr/kpoly.hpp"
#include "qlr/verify/cache.hpp"
#include "qlr/verify/checks.hpp"
#include "qlr/verify/json_io.hpp"
#include "qlr/verify/scans.hpp"

using namespace qlr;

namespace {

struct IndexArgs {
  std::vector<int> lambda, gamma, eta;
  std::string rects;
  std::string json;
};

KIndex read_index(const IndexArgs& a) {
  if (!a.json.empty()) return kindex_from_json(Json::parse(a.json));
  Json j{{"lambda", a.lambda}};
  if (!a.rects.empty()) {
    j["rects"] = Json::parse(a.rects);
  } else {
    j["gamma"] = a.gamma;
    j["eta"] = a.eta;
  }
  return kindex_from_json(j);
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << "\n"; }

int emit_report(std::ostream& out, const Report& r) {
  emit(out, r.to_json());
  return r.pass() ? 0 : 1;
}

std::unique_ptr<ResultCache> open_cache(const std::string& path) {
  return path.empty() ? nullptr : std::make_unique<ResultCache>(path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Kostka polynomials: engines, cross-checks and scans"};
  app.require_subcommand(1);

  std::string out_path;
  app.add_option("--out", out_path, "Write JSON lines (or DOT) to this file instead of stdout");

  IndexArgs idx;
  std::string engine = "all";
  int degree_bound = -1;
  std::string cache_path;
  auto* compute = app.add_subcommand("compute", "Compute K for one index");
  compute->add_option("--lambda", idx.lambda, "Comma separated weight")->delimiter(',');
  compute->add_option("--gamma", idx.gamma)->delimiter(',');
  compute->add_option("--eta", idx.eta)->delimiter(',');
  compute->add_option("--rects", idx.rects, "JSON list of blocks, e.g. [[3,2],[2,1],[1]]");
  compute->add_option("--json", idx.json, "JSON index object");
  compute->add_option("--engine", engine)->check(CLI::IsMember({"all", "kostant", "morris", "series", "charge"}));
  compute->add_option("--degree-bound", degree_bound, "q-degree bound for the series engine");
  compute->add_option("--cache", cache_path);

  ScanOptions scan_opts;
  unsigned seed = 0;
  auto add_scan_flags = [&](CLI::App* cmd) {
    cmd->add_option("--max-n", scan_opts.max_n);
    cmd->add_option("--max-size", scan_opts.max_size);
    cmd->add_option("--threads", scan_opts.threads);
    cmd->add_option("--cache", cache_path);
    cmd->add_option("--sample", seed, "Seed for extra random indices above --max-n");
    cmd->add_option("--samples", scan_opts.samples);
    cmd->add_option("--sample-max-n", scan_opts.sample_max_n);
  };
  auto* cross = app.add_subcommand("crosscheck", "Engine agreement, q=1 values and dualities");
  add_scan_flags(cross);

  std::string scan_kind;
  auto* scan = app.add_subcommand("scan", "Conjecture scans");
  scan->add_option("kind", scan_kind)
      ->required()
      ->check(CLI::IsMember({"positivity", "catabolizable", "monotonicity1", "monotonicity2"}));
  add_scan_flags(scan);

  std::vector<int> alpha;
  auto* dot = app.add_subcommand("dot", "Cyclage poset in Graphviz format");
  dot->add_option("--alpha", alpha)->required()->delimiter(',');

  std::string check_name;
  int check_n = 5;
  auto* check = app.add_subcommand("check", "Exhaustive theorem checks");
  check->add_option("name", check_name)
      ->required()
      ->check(CLI::IsMember({"cyc_image", "row_col_cat", "charge_axioms", "fitting", "ev_duality", "stembridge",
                             "overlap", "two_row_dual", "cyclage_posets", "standard_cocharge", "theta",
                             "column_kostka", "hook_cat", "involution"}));
  check->add_option("--n", check_n);

  CLI11_PARSE(app, argc, argv);

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      std::cerr << "cannot open " << out_path << "\n";
      return 2;
    }
  }
  std::ostream& out = out_path.empty() ? std::cout : file;
  if (cross->parsed() || scan->parsed()) {
    if (cross->count("--sample") || scan->count("--sample")) {
      scan_opts.sample_seed = seed;
      if (scan_opts.samples == 0) scan_opts.samples = 50;
    }
  }

  try {
    if (compute->parsed()) {
      const KIndex k = read_index(idx);
      auto cache = open_cache(cache_path);
      const std::vector<std::string> engines =
          engine == "all" ? std::vector<std::string>{"kostant", "morris", "series", "charge"}
                          : std::vector<std::string>{engine};
      for (const auto& e : engines) {
        Json j{{"index", to_json(k)}, {"engine", e}};
        std::optional<QPoly> value = cache ? cache->get(e, k) : std::nullopt;
        j["cached"] = value.has_value();
        if (e == "charge") {
          const ChargeResult res = k_via_charge(k);
          if (!value) value = res.poly;
          j["status"] = to_string(res.status);
        } else {
          if (!value) {
            if (e == "kostant") value = k_via_kostant(k);
            if (e == "morris") value = k_via_morris(k);
            if (e == "series")
              value = k_via_series(k, degree_bound >= 0 ? std::optional<int>(degree_bound) : std::nullopt);
          }
          j["status"] = "PROVEN";
        }
        if (cache && !j["cached"].get<bool>()) cache->put(e, k, *value);
        j["poly"] = to_json(*value);
        j["text"] = to_string(*value);
        emit(out, j);
      }
      return 0;
    }
    if (cross->parsed()) {
      auto cache = open_cache(cache_path);
      scan_opts.cache = cache.get();
      int status = emit_report(out, crosscheck(scan_opts));
      return emit_report(out, check_dualities(scan_opts)) | status;
    }
    if (scan->parsed()) {
      auto cache = open_cache(cache_path);
      scan_opts.cache = cache.get();
      if (scan_kind == "positivity") return emit_report(out, scan_positivity(scan_opts));
      if (scan_kind == "catabolizable") return emit_report(out, scan_catabolizable(scan_opts));
      if (scan_kind == "monotonicity1") return emit_report(out, scan_monotonicity_refine(scan_opts));
      return emit_report(out, scan_monotonicity_rect(scan_opts));
    }
    if (dot->parsed()) {
      out << to_dot(cyclage_poset(alpha));
      return 0;
    }
    if (check->parsed()) {
      const int n = check_n;
      if (check_name == "cyc_image") return emit_report(out, check_cyc_image(n));
      if (check_name == "row_col_cat") return emit_report(out, check_row_col_cat(n));
      if (check_name == "charge_axioms") return emit_report(out, check_charge_axioms(n, 4));
      if (check_name == "fitting") return emit_report(out, check_fitting(n));
      if (check_name == "ev_duality") return emit_report(out, check_evacuation_theorem(n));
      if (check_name == "stembridge") return emit_report(out, check_stembridge(n));
      if (check_name == "overlap") return emit_report(out, check_overlap_lemma(n));
      if (check_name == "two_row_dual") return emit_report(out, check_two_row_dual(n));
      if (check_name == "cyclage_posets") return emit_report(out, check_cyclage_posets(n));
      if (check_name == "standard_cocharge") return emit_report(out, check_standard_cocharge(n));
      if (check_name == "theta") {
        int status = emit_report(out, check_theta_lemmas(n));
        return emit_report(out, check_theta_embeddings(n, 1)) | status;
      }
      if (check_name == "column_kostka") return emit_report(out, check_column_kostka(n));
      if (check_name == "hook_cat") return emit_report(out, check_hook_catabolizable(n, n + 2));
      return emit_report(out, check_involutions(n, n + 1));
    }
  } catch (const std::exception& e) {
    emit(std::cerr, Json{{"error", e.what()}});
    return 2;
  }
  return 0;
}
