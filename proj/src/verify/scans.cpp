#include "qlr/verify/scans.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <random>
#include <set>
#include <thread>

#include "qlr/involution.hpp"

namespace qlr {

namespace {

int worker_count(int requested, std::size_t jobs) {
  int t = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
  t = std::max(1, t);
  return static_cast<int>(std::min<std::size_t>(t, std::max<std::size_t>(jobs, 1)));
}

// Runs fn on every item with one Report and one MorrisEngine per worker;
// reports are merged in worker order.
template <class Item, class Fn>
void parallel_each(const std::vector<Item>& items, int threads, Report& out, Fn fn) {
  const int t = worker_count(threads, items.size());
  std::vector<Report> parts(t);
  std::atomic<std::size_t> next{0};
  auto work = [&](int w) {
    MorrisEngine engine;
    for (std::size_t i = next++; i < items.size(); i = next++) {
      try {
        fn(items[i], parts[w], engine);
      } catch (const std::exception& e) {
        parts[w].fail(std::string("exception: ") + e.what());
      }
    }
  };
  if (t == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < t; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  for (const auto& p : parts) out.merge(p);
}

Report named(const std::string& name, const std::string& range) {
  Report r;
  r.name = name;
  r.range = range;
  return r;
}

std::string range_of(const ScanOptions& o) {
  std::string s = "n<=" + std::to_string(o.max_n) + " |gamma|<=" + std::to_string(o.max_size);
  if (o.sample_seed)
    s += " samples=" + std::to_string(o.samples) + " seed=" + std::to_string(*o.sample_seed) +
         " n<=" + std::to_string(o.sample_max_n);
  return s;
}

std::vector<KIndex> scan_family(const ScanOptions& o) {
  auto v = dominant_indices_upto(o.max_n, o.max_size);
  auto s = sampled_indices(o);
  v.insert(v.end(), s.begin(), s.end());
  return v;
}

QPoly cached(ResultCache* cache, const std::string& engine, const KIndex& k, auto&& compute) {
  if (cache) {
    if (auto hit = cache->get(engine, k)) return *hit;
  }
  QPoly v = compute();
  if (cache) cache->put(engine, k, v);
  return v;
}

std::vector<Weight> blocks_of(const KIndex& k) {
  RectSequence r(k.eta, k.gamma);
  std::vector<Weight> b;
  for (int i = 0; i < r.blocks(); ++i) b.push_back(r.block(i));
  return b;
}

KIndex from_blocks(const Weight& lambda, const std::vector<Weight>& blocks) {
  RectSequence r = RectSequence::from_blocks(blocks);
  return {lambda, r.gamma(), r.eta()};
}

// A block (k^a) with k > 0.
bool is_rectangle(const Weight& b) {
  return !b.empty() && b.front() > 0 && std::all_of(b.begin(), b.end(), [&](int x) { return x == b.front(); });
}

}  // namespace

std::vector<KIndex> dominant_indices(int n, int max_size) {
  std::vector<KIndex> out;
  const auto etas = compositions_of(n);
  for (int size = 0; size <= max_size; ++size) {
    const auto parts = partitions_of(size, n);
    for (const auto& eta : etas)
      for (const auto& g : parts)
        for (const auto& l : parts) out.push_back({l.padded(n), g.padded(n), eta});
  }
  return out;
}

std::vector<KIndex> dominant_indices_upto(int max_n, int max_size) {
  std::vector<KIndex> out;
  for (int n = 1; n <= max_n; ++n) {
    auto v = dominant_indices(n, max_size);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

std::vector<KIndex> sampled_indices(const ScanOptions& o) {
  std::vector<KIndex> out;
  if (!o.sample_seed || o.samples <= 0 || o.sample_max_n <= o.max_n) return out;
  std::mt19937 rng(*o.sample_seed);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (int s = 0; s < o.samples; ++s) {
    const int n = pick(o.max_n + 1, o.sample_max_n);
    const auto etas = compositions_of(n);
    const int size = pick(0, o.sample_max_size);
    const auto parts = partitions_of(size, n);
    const auto& eta = etas[pick(0, static_cast<int>(etas.size()) - 1)];
    const auto& g = parts[pick(0, static_cast<int>(parts.size()) - 1)];
    const auto& l = parts[pick(0, static_cast<int>(parts.size()) - 1)];
    out.push_back({l.padded(n), g.padded(n), eta});
  }
  return out;
}

Report crosscheck_indices(const std::vector<KIndex>& indices, const ScanOptions& o) {
  Report r = named("crosscheck", range_of(o));
  Stopwatch sw;
  std::atomic<std::int64_t> proven{0};
  parallel_each(indices, o.threads, r, [&](const KIndex& k, Report& rep, MorrisEngine& engine) {
    const std::string id = to_string(k);
    const QPoly a = cached(o.cache, "kostant", k, [&] { return k_via_kostant(k); });
    const QPoly b = cached(o.cache, "morris", k, [&] { return engine.compute(k); });
    const QPoly c = cached(o.cache, "series", k, [&] { return k_via_series(k); });
    rep.expect(a == b, "kostant " + to_string(a) + " != morris " + to_string(b) + " at " + id);
    rep.expect(c == b, "series " + to_string(c) + " != morris " + to_string(b) + " at " + id);
    if (charge_status(k.gamma, k.eta) == Status::Proven) {
      ++proven;
      const QPoly d = cached(o.cache, "charge", k, [&] { return k_via_charge(k).poly; });
      rep.expect(d == b, "charge " + to_string(d) + " != morris " + to_string(b) + " at " + id);
    }
    const std::int64_t lr_value = k_at_one(k);
    rep.expect(b.at_one() == lr_value,
               "q=1 value " + std::to_string(b.at_one()) + " != LR " + std::to_string(lr_value) + " at " + id);
    if (k.eta.size() == 2) {
      const QPoly t = two_part_formula(k);
      rep.expect(t == b, "two-block formula " + to_string(t) + " != morris at " + id);
    }
  });
  r.notes.push_back("indices=" + std::to_string(indices.size()) + " proven_charge_cases=" + std::to_string(proven));
  r.elapsed_ms = sw.ms();
  return r;
}

Report crosscheck(const ScanOptions& o) { return crosscheck_indices(scan_family(o), o); }

Report scan_positivity(const ScanOptions& o) {
  Report r = named("positivity", range_of(o));
  Stopwatch sw;
  parallel_each(scan_family(o), o.threads, r, [&](const KIndex& k, Report& rep, MorrisEngine& engine) {
    const QPoly b = cached(o.cache, "morris", k, [&] { return engine.compute(k); });
    rep.expect(b.nonnegative(), "negative coefficient " + to_string(b) + " at " + to_string(k));
  });
  r.elapsed_ms = sw.ms();
  return r;
}

Report scan_catabolizable(const ScanOptions& o) {
  Report r = named("catabolizable", range_of(o));
  Stopwatch sw;
  std::atomic<std::int64_t> conjectural{0};
  parallel_each(scan_family(o), o.threads, r, [&](const KIndex& k, Report& rep, MorrisEngine& engine) {
    const QPoly b = cached(o.cache, "morris", k, [&] { return engine.compute(k); });
    const ChargeResult d = k_via_charge(k);
    if (d.status == Status::Conjectural) ++conjectural;
    rep.expect(d.poly == b, "charge " + to_string(d.poly) + " != morris " + to_string(b) + " at " + to_string(k) +
                                " (" + to_string(d.status) + ")");
  });
  r.notes.push_back("conjectural_cases=" + std::to_string(conjectural));
  r.elapsed_ms = sw.ms();
  return r;
}

Report scan_monotonicity_refine(const ScanOptions& o) {
  Report r = named("monotonicity_refine", range_of(o));
  Stopwatch sw;
  parallel_each(scan_family(o), o.threads, r, [&](const KIndex& k, Report& rep, MorrisEngine& engine) {
    const QPoly base = engine.compute(k);
    for (std::size_t i = 0; i < k.eta.size(); ++i) {
      if (k.eta[i] < 2) continue;
      for (const auto& piece : compositions_of(k.eta[i])) {
        if (piece.size() < 2) continue;
        KIndex k2 = k;
        k2.eta.erase(k2.eta.begin() + i);
        k2.eta.insert(k2.eta.begin() + i, piece.begin(), piece.end());
        const QPoly finer = engine.compute(k2);
        rep.expect(base.leq(finer), to_string(base) + " not <= " + to_string(finer) + " refining " + to_string(k) +
                                        " to eta=" + to_string(k2.eta));
      }
    }
  });
  r.elapsed_ms = sw.ms();
  return r;
}

Report scan_monotonicity_rect(const ScanOptions& o) {
  Report r = named("monotonicity_rect", range_of(o));
  Stopwatch sw;
  parallel_each(scan_family(o), o.threads, r, [&](const KIndex& k, Report& rep, MorrisEngine& engine) {
    const auto blocks = blocks_of(k);
    const QPoly base = engine.compute(k);
    for (std::size_t i = 0; i < blocks.size(); ++i)
      for (std::size_t j = i + 2; j <= blocks.size(); ++j) {
        const int width = blocks[i].empty() ? 0 : blocks[i].front();
        bool run = true;
        Composition alpha;
        for (std::size_t x = i; x < j; ++x) {
          run = run && is_rectangle(blocks[x]) && blocks[x].front() == width;
          alpha.push_back(static_cast<int>(blocks[x].size()));
        }
        if (!run) break;
        const Composition alpha_sorted = dominant_sort(alpha).first;
        for (const auto& beta : compositions_of(sum(alpha), static_cast<int>(alpha.size()))) {
          const Composition beta_sorted = dominant_sort(beta).first;
          if (beta_sorted == alpha_sorted || !dominance_geq(alpha_sorted, beta_sorted)) continue;
          std::vector<Weight> b2(blocks.begin(), blocks.begin() + i);
          for (int h : beta) b2.push_back(Weight(h, width));
          b2.insert(b2.end(), blocks.begin() + j, blocks.end());
          const KIndex k2 = from_blocks(k.lambda, b2);
          const QPoly other = engine.compute(k2);
          rep.expect(base.leq(other), to_string(base) + " not <= " + to_string(other) + " from " + to_string(k) +
                                          " to eta=" + to_string(k2.eta));
        }
      }
  });
  r.elapsed_ms = sw.ms();
  return r;
}

Report check_dualities(const ScanOptions& o) {
  Report r = named("dualities", range_of(o));
  Stopwatch sw;
  parallel_each(scan_family(o), o.threads, r, [&](const KIndex& k, Report& rep, MorrisEngine& engine) {
    const std::string id = to_string(k);
    const QPoly b = engine.compute(k);

    Composition rev(k.eta.rbegin(), k.eta.rend());
    const KIndex dual{dual_weight(k.lambda), dual_weight(k.gamma), rev};
    rep.expect(engine.compute(dual) == b, "weight duality at " + id);
    if (k.lambda.size() <= 3) rep.expect(k_via_kostant(dual) == b, "weight duality (kostant) at " + id);

    const RectSequence rs(k.eta, k.gamma);
    for (int extra = 0; extra <= 1; ++extra) {
      int width = 0;
      for (int x : k.lambda) width = std::max(width, x);
      for (int x : k.gamma) width = std::max(width, x);
      auto [lt, rt] = box_complement(k.lambda, rs, width + extra);
      rep.expect(engine.compute({lt, rt.gamma(), rt.eta()}) == b,
                 "box complement width " + std::to_string(width + extra) + " at " + id);
    }

    const auto blocks = blocks_of(k);
    if (blocks.size() <= 4) {
      std::vector<int> order(blocks.size());
      for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
      std::set<std::vector<Weight>> seen{blocks};
      while (std::next_permutation(order.begin(), order.end())) {
        std::vector<Weight> b2;
        for (int i : order) b2.push_back(blocks[i]);
        if (!seen.insert(b2).second) continue;
        const KIndex k2 = from_blocks(k.lambda, b2);
        if (!is_partition(k2.gamma)) continue;
        rep.expect(engine.compute(k2) == b, "dominant reordering to eta=" + to_string(k2.eta) + " at " + id);
      }
    }
  });

  // Weight duality for non-dominant gamma, against the Kostant engine.
  std::vector<KIndex> general;
  for (int n = 1; n <= std::min(o.max_n, 3); ++n)
    for (int size = 0; size <= std::min(o.max_size, 4); ++size)
      for (const auto& g : weak_compositions(size, n))
        for (const auto& l : partitions_of(size, n))
          for (const auto& eta : compositions_of(n)) general.push_back({l.padded(n), g, eta});
  parallel_each(general, o.threads, r, [&](const KIndex& k, Report& rep, MorrisEngine& engine) {
    const QPoly a = k_via_kostant(k);
    Composition rev(k.eta.rbegin(), k.eta.rend());
    const KIndex dual{dual_weight(k.lambda), dual_weight(k.gamma), rev};
    rep.expect(k_via_kostant(dual) == a, "weight duality (non-dominant) at " + to_string(k));
    rep.expect(engine.compute(k) == a, "kostant vs morris (non-dominant) at " + to_string(k));
  });
  r.notes.push_back("non_dominant_indices=" + std::to_string(general.size()));
  r.elapsed_ms = sw.ms();
  return r;
}

Report check_involutions(int max_n, int max_size, int threads) {
  Report r = named("involution", "n<=" + std::to_string(max_n) + " |gamma|<=" + std::to_string(max_size));
  Stopwatch sw;
  std::atomic<std::int64_t> escapes{0}, escaping_indices{0}, triples{0};
  parallel_each(dominant_indices_upto(max_n, max_size), threads, r,
                [&](const KIndex& k, Report& rep, MorrisEngine&) {
                  const InvolutionReport inv = verify_involution(k.lambda, RectSequence(k.eta, k.gamma));
                  triples += inv.triples;
                  if (inv.stability_escapes > 0) {
                    escapes += inv.stability_escapes;
                    ++escaping_indices;
                  }
                  rep.expect(inv.ok(), "involution at " + to_string(k) + ": " + inv.summary());
                });
  r.notes.push_back("triples=" + std::to_string(triples));
  r.notes.push_back("stability_escapes=" + std::to_string(escapes) + " at " + std::to_string(escaping_indices) +
                    " indices");
  r.elapsed_ms = sw.ms();
  return r;
}

}  // namespace qlr
