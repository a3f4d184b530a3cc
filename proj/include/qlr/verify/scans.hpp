#pragma once

#include <optional>
#include <vector>

#include "qlr/kpoly.hpp"
#include "qlr/verify/cache.hpp"
#include "qlr/verify/report.hpp"

namespace qlr {

struct ScanOptions {
  int max_n = 4;
  int max_size = 8;
  int threads = 0;  // 0: hardware concurrency
  ResultCache* cache = nullptr;
  // Extra random indices beyond max_n, drawn only when a seed is given.
  std::optional<unsigned> sample_seed;
  int samples = 0;
  int sample_max_n = 6;
  int sample_max_size = 6;
};

// Indices of rank n with dominant gamma and lambda, |gamma| <= max_size,
// over every composition eta of n.
std::vector<KIndex> dominant_indices(int n, int max_size);
std::vector<KIndex> dominant_indices_upto(int max_n, int max_size);
std::vector<KIndex> sampled_indices(const ScanOptions& opts);

// Engines A, B, C agree; D agrees on proven cases; q = 1 matches the LR
// product; the two-block formula matches.
Report crosscheck(const ScanOptions& opts);
Report crosscheck_indices(const std::vector<KIndex>& indices, const ScanOptions& opts);

Report scan_positivity(const ScanOptions& opts);
Report scan_catabolizable(const ScanOptions& opts);
Report scan_monotonicity_refine(const ScanOptions& opts);
Report scan_monotonicity_rect(const ScanOptions& opts);

// Weight duality, box complement and block reordering.
Report check_dualities(const ScanOptions& opts);

// The sign-reversing involution on every dominant index in range.
Report check_involutions(int max_n, int max_size, int threads = 0);

}  // namespace qlr
